#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "adjunction.hpp"
#include "comma_linear.hpp"
#include "report.hpp"
#include "site.hpp"

namespace commacat {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Malformed payloads raise this; the CLI maps it to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, Prime p, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw InputError("matrix: expected " + std::to_string(rows) + " rows");
    Matrix m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError("matrix: row " + std::to_string(i) + " should have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number_integer()) throw InputError("matrix: non-integer entry");
            m.set(i, k, j[i][k].get<long long>());
        }
    }
    return m;
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("field \"") + key + "\": " + e.what());
    }
}

inline json to_json(const ChainComplex& x) {
    json d = json::object();
    for (int n = x.lo() + 1; n <= x.hi(); ++n) d[std::to_string(n)] = matrix_to_json(x.d(n));
    json dims = json::array();
    for (auto v : x.dims()) dims.push_back(v);
    return {{"p", x.prime().value()}, {"lo", x.lo()}, {"hi", x.hi()}, {"dims", dims}, {"d", d}};
}

inline ChainComplex complex_from_json(const json& j, std::optional<Prime> expect = std::nullopt) {
    auto pv = field<std::uint32_t>(j, "p");
    Prime p = [&] {
        try {
            return Prime(pv);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    if (expect && *expect != p) throw InputError("inconsistent prime: " + std::to_string(pv));
    int lo = field<int>(j, "lo");
    auto dims = field<std::vector<std::size_t>>(j, "dims");
    if (j.contains("hi") && field<int>(j, "hi") != lo + static_cast<int>(dims.size()) - 1)
        throw InputError("complex: hi does not match lo and dims");
    std::map<int, Matrix> d;
    if (j.contains("d")) {
        const auto& jd = j.at("d");
        if (!jd.is_object()) throw InputError("complex: \"d\" must be an object keyed by degree");
        for (auto it = jd.begin(); it != jd.end(); ++it) {
            int n;
            try {
                std::size_t pos = 0;
                n = std::stoi(it.key(), &pos);
                if (pos != it.key().size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw InputError("complex: degree key \"" + it.key() + "\" is not an integer");
            }
            auto dim = [&](int k) {
                return k < lo || k >= lo + static_cast<int>(dims.size()) ? std::size_t{0}
                                                                           : dims[static_cast<std::size_t>(k - lo)];
            };
            d.emplace(n, matrix_from_json(it.value(), p, dim(n - 1), dim(n)));
        }
    }
    try {
        return ChainComplex(p, lo, dims, d);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const ChainMap& f) {
    json c = json::object();
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (f.source().dim(n) && f.target().dim(n)) c[std::to_string(n)] = matrix_to_json(f[n]);
    return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", c}};
}

inline ChainMap map_from_json(const json& j, std::optional<Prime> expect = std::nullopt) {
    auto s = complex_from_json(field<json>(j, "source"), expect);
    auto t = complex_from_json(field<json>(j, "target"), s.prime());
    std::map<int, Matrix> comps;
    if (j.contains("components")) {
        const auto& jc = j.at("components");
        if (!jc.is_object()) throw InputError("map: \"components\" must be an object keyed by degree");
        for (auto it = jc.begin(); it != jc.end(); ++it) {
            int n;
            try {
                n = std::stoi(it.key());
            } catch (const std::exception&) {
                throw InputError("map: degree key \"" + it.key() + "\" is not an integer");
            }
            comps.emplace(n, matrix_from_json(it.value(), s.prime(), t.dim(n), s.dim(n)));
        }
    }
    try {
        return ChainMap(s, t, comps);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const ChainCommaObject& x) {
    return {{"f0", to_json(x.f0)}, {"f1", to_json(x.f1)}, {"pi", to_json(x.pi)}};
}

inline ChainCommaObject comma_object_from_json(const ChainComma& c, const json& j) {
    Prime p = c.m().prime();
    auto f0 = complex_from_json(field<json>(j, "f0"), p);
    auto f1 = complex_from_json(field<json>(j, "f1"), p);
    auto pi = map_from_json(field<json>(j, "pi"), p);
    try {
        return c.make_object(f0, f1, pi);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const ChainCommaMorphism& s) {
    return {{"src", to_json(s.src)}, {"tgt", to_json(s.tgt)}, {"s0", to_json(s.s0)}, {"s1", to_json(s.s1)}};
}

inline ChainCommaMorphism comma_morphism_from_json(const ChainComma& c, const json& j) {
    auto src = comma_object_from_json(c, field<json>(j, "src"));
    auto tgt = comma_object_from_json(c, field<json>(j, "tgt"));
    auto s0 = map_from_json(field<json>(j, "s0"), c.m().prime());
    auto s1 = map_from_json(field<json>(j, "s1"), c.m().prime());
    try {
        return c.make_morphism(src, tgt, s0, s1);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

// {"name": "identity", "p": 2} or {"name": "hom-tensor", "P": <complex>}.
inline ChainAdjunction adjunction_from_json(const json& j) {
    auto name = field<std::string>(j, "name");
    if (name == "identity") {
        try {
            return identity_adjunction(Prime(field<std::uint32_t>(j, "p")));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (name == "hom-tensor") return hom_tensor_adjunction(complex_from_json(field<json>(j, "P")));
    throw InputError("unknown adjunction instance \"" + name + "\"");
}

inline json to_json(const ClassFlags& f) {
    return {{"cof", f.is_cof}, {"fib", f.is_fib}, {"we", f.is_we}};
}

inline json to_json(const FiniteSite& s) {
    json order = json::array();
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if (s.leq[x][y]) order.push_back({s.names[x], s.names[y]});
    json cov = json::object();
    for (int x = 0; x < s.size(); ++x) {
        json fams = json::array();
        for (const auto& f : s.covers[x]) {
            json fam = json::array();
            for (int y : f) fam.push_back(s.names[y]);
            fams.push_back(fam);
        }
        cov[s.names[x]] = fams;
    }
    return {{"objects", s.names}, {"order", order}, {"coverage", cov}};
}

inline json to_json(const Report& r, const std::string& suite) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"status", c.ok() ? "pass" : "fail"},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"counterexamples", c.counterexamples}});
    return {{"schema_version", kSchemaVersion}, {"suite", suite}, {"ok", r.ok()}, {"checks", checks}};
}

}  // namespace commacat
