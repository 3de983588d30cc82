#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"

namespace commacat {

using Family = std::vector<int>;  // sorted, distinct members

inline Family normalize(Family f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

// A finite poset with binary meets and, for each object, its covering families.
struct FiniteSite {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq;         // leq[x][y]: x ≤ y
    std::vector<std::vector<Family>> covers;    // covers[x]: families of objects ≤ x

    int size() const { return static_cast<int>(names.size()); }

    std::optional<int> meet(int x, int y) const {
        std::optional<int> best;
        for (int z = 0; z < size(); ++z) {
            if (!leq[z][x] || !leq[z][y]) continue;
            if (!best || leq[*best][z]) best = z;
        }
        if (!best) return std::nullopt;
        for (int z = 0; z < size(); ++z)
            if (leq[z][x] && leq[z][y] && !leq[z][*best]) return std::nullopt;
        return best;
    }
    int meet_or_throw(int x, int y) const {
        auto m = meet(x, y);
        if (!m) throw std::invalid_argument("site: " + names[x] + " and " + names[y] + " have no meet");
        return *m;
    }
    std::optional<int> top() const {
        for (int x = 0; x < size(); ++x) {
            bool all = true;
            for (int y = 0; y < size(); ++y) all = all && leq[y][x];
            if (all) return x;
        }
        return std::nullopt;
    }
    bool is_cover(int x, const Family& f) const {
        auto n = normalize(f);
        return std::find(covers[x].begin(), covers[x].end(), n) != covers[x].end();
    }
    std::string family_name(const Family& f) const {
        std::string s = "{";
        for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + names[f[i]];
        return s + "}";
    }
    std::vector<int> below(int x) const {
        std::vector<int> out;
        for (int y = 0; y < size(); ++y)
            if (leq[y][x]) out.push_back(y);
        return out;
    }
};

// Every subset of `items` (in increasing bitmask order).
inline std::vector<Family> subsets(const std::vector<int>& items) {
    if (items.size() > 20) throw std::invalid_argument("site: too many objects to enumerate families");
    std::vector<Family> out;
    for (std::uint32_t mask = 0; mask < (1u << items.size()); ++mask) {
        Family f;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask >> i & 1u) f.push_back(items[i]);
        out.push_back(normalize(f));
    }
    return out;
}

// Open sets of a finite space as bitmasks over its points; S covers U when ∪S = U.
inline FiniteSite opens_site(const std::vector<std::uint32_t>& opens, const std::vector<std::string>& names) {
    FiniteSite s;
    s.names = names;
    int n = static_cast<int>(opens.size());
    s.leq.assign(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.leq[x][y] = (opens[x] & ~opens[y]) == 0;
    s.covers.resize(n);
    for (int x = 0; x < n; ++x)
        for (const auto& f : subsets(s.below(x))) {
            std::uint32_t u = 0;
            for (int y : f) u |= opens[y];
            if (u == opens[x]) s.covers[x].push_back(f);
        }
    return s;
}

// ∅ < {a} < X on the points {a, b}.
inline FiniteSite sierpinski_site() { return opens_site({0b00, 0b01, 0b11}, {"0", "a", "X"}); }
inline FiniteSite point_site() { return opens_site({0b0, 0b1}, {"0", "*"}); }

// A monotone map of sites; `map[x]` is the image of object x.
struct SiteMorphism {
    std::string name;
    FiniteSite src, tgt;
    std::vector<int> map;

    Family image(const Family& f) const {
        Family out;
        for (int x : f) out.push_back(map[x]);
        return normalize(out);
    }
};

inline Report verify_site_axioms(const FiniteSite& s) {
    Report rep;
    auto& po = rep.add("partial order with meets");
    auto& bnd = rep.add("families lie below");
    auto& iso = rep.add("identity families cover");
    auto& stab = rep.add("stability");
    auto& trans = rep.add("transitivity");
    int n = s.size();
    for (int x = 0; x < n; ++x) {
        po.expect(s.leq[x][x], "not reflexive at " + s.names[x]);
        for (int y = 0; y < n; ++y) {
            if (x != y) po.expect(!(s.leq[x][y] && s.leq[y][x]), "not antisymmetric: " + s.names[x] + ", " + s.names[y]);
            for (int z = 0; z < n; ++z)
                if (s.leq[x][y] && s.leq[y][z]) po.expect(s.leq[x][z], "not transitive: " + s.names[x] + " ≤ " + s.names[z]);
            po.expect(s.meet(x, y).has_value(), "no meet of " + s.names[x] + " and " + s.names[y]);
        }
    }
    if (!po.ok()) return rep;
    for (int x = 0; x < n; ++x) {
        for (const auto& f : s.covers[x])
            for (int y : f) bnd.expect(s.leq[y][x], s.family_name(f) + " does not lie below " + s.names[x]);
        iso.expect(s.is_cover(x, {x}), "{" + s.names[x] + "} does not cover it");
    }
    // σ*(S) = {s ∧ y} for y ≤ x.
    for (int x = 0; x < n; ++x)
        for (const auto& f : s.covers[x])
            for (int y : s.below(x)) {
                Family pb;
                for (int m : f) pb.push_back(s.meet_or_throw(m, y));
                stab.expect(s.is_cover(y, pb), "S = " + s.family_name(f) + " over " + s.names[x] + ", σ: " + s.names[y] +
                                                   " → " + s.names[x] + ", pullback " + s.family_name(normalize(pb)));
            }
    // Every choice of covers T_m of the members of S composes to a cover of x.
    for (int x = 0; x < n; ++x)
        for (const auto& f : s.covers[x]) {
            std::function<void(std::size_t, Family)> go = [&](std::size_t i, Family acc) {
                if (!trans.ok()) return;
                if (i == f.size()) {
                    trans.expect(s.is_cover(x, acc), "S = " + s.family_name(f) + " over " + s.names[x] +
                                                         " refined to " + s.family_name(normalize(acc)));
                    return;
                }
                for (const auto& t : s.covers[f[i]]) {
                    Family next = acc;
                    next.insert(next.end(), t.begin(), t.end());
                    go(i + 1, normalize(next));
                }
            };
            go(0, {});
        }
    return rep;
}

// Preserves binary meets, the top element and covering families.
inline Report verify_site_morphism(const SiteMorphism& f) {
    Report rep;
    auto& mono = rep.add(f.name + " monotone");
    auto& meets = rep.add(f.name + " preserves meets");
    auto& cov = rep.add(f.name + " preserves covers");
    const auto& a = f.src;
    const auto& b = f.tgt;
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y) {
            if (a.leq[x][y]) mono.expect(b.leq[f.map[x]][f.map[y]], a.names[x] + " ≤ " + a.names[y]);
            meets.expect(f.map[a.meet_or_throw(x, y)] == b.meet_or_throw(f.map[x], f.map[y]),
                         a.names[x] + " ∧ " + a.names[y]);
        }
    if (auto t = a.top()) meets.expect(b.top() && f.map[*t] == *b.top(), "top");
    for (int x = 0; x < a.size(); ++x)
        for (const auto& fam : a.covers[x])
            cov.expect(b.is_cover(f.map[x], f.image(fam)), a.family_name(fam) + " over " + a.names[x]);
    return rep;
}

// The comma poset of U: A → M: pairs (m, a) with m ≤ U(a), ordered and met
// componentwise; S covers (m, a) when both projections of S are covers.
struct CommaSite {
    FiniteSite site;
    std::vector<std::pair<int, int>> objects;  // (m, a)
    SiteMorphism pi0, pi1, iota;
};

inline CommaSite comma_site(const SiteMorphism& u) {
    const auto& a = u.src;
    const auto& m = u.tgt;
    CommaSite c;
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (m.leq[x][u.map[y]]) c.objects.emplace_back(x, y);
    int n = static_cast<int>(c.objects.size());
    auto& s = c.site;
    for (auto [x, y] : c.objects) s.names.push_back("(" + m.names[x] + "," + a.names[y] + ")");
    s.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s.leq[i][j] = m.leq[c.objects[i].first][c.objects[j].first] &&
                          a.leq[c.objects[i].second][c.objects[j].second];
    s.covers.resize(n);
    for (int i = 0; i < n; ++i)
        for (const auto& f : subsets(s.below(i))) {
            Family f0, f1;
            for (int j : f) {
                f0.push_back(c.objects[j].first);
                f1.push_back(c.objects[j].second);
            }
            if (m.is_cover(c.objects[i].first, f0) && a.is_cover(c.objects[i].second, f1)) s.covers[i].push_back(f);
        }
    auto index = [&](int x, int y) {
        for (int i = 0; i < n; ++i)
            if (c.objects[i] == std::make_pair(x, y)) return i;
        throw std::logic_error("comma site: missing object");
    };
    c.pi0 = {"Pi0", s, m, {}};
    c.pi1 = {"Pi1", s, a, {}};
    for (auto [x, y] : c.objects) {
        c.pi0.map.push_back(x);
        c.pi1.map.push_back(y);
    }
    c.iota = {"iota", a, s, {}};
    for (int y = 0; y < a.size(); ++y) c.iota.map.push_back(index(u.map[y], y));
    return c;
}

inline SiteMorphism identity_site_morphism(const FiniteSite& s) {
    SiteMorphism f{"Id", s, s, {}};
    for (int x = 0; x < s.size(); ++x) f.map.push_back(x);
    return f;
}

// Preimage along the inclusion of the point a into the Sierpiński space.
inline SiteMorphism point_preimage_morphism() {
    return {"U", point_site(), sierpinski_site(), {0, 2}};
}

// Sierpiński coverage with the pullback {0, a} of the cover {0, X} removed.
inline FiniteSite corrupted_sierpinski_site() {
    auto s = sierpinski_site();
    auto& c = s.covers[1];
    c.erase(std::remove(c.begin(), c.end(), Family{0, 1}), c.end());
    return s;
}

inline Report site_suite() {
    Report rep;
    auto sier = sierpinski_site();
    rep.merge(verify_site_axioms(sier), "sierpinski");
    for (const auto& u : {identity_site_morphism(sier), point_preimage_morphism()}) {
        auto c = comma_site(u);
        std::string tag = "comma of " + u.name;
        rep.merge(verify_site_morphism(u), tag + "/base");
        rep.merge(verify_site_axioms(c.site), tag);
        rep.merge(verify_site_morphism(c.iota), tag);
        rep.merge(verify_site_morphism(c.pi0), tag);
        rep.merge(verify_site_morphism(c.pi1), tag);
    }
    return rep;
}

}  // namespace commacat
