#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commacat/json_io.hpp"
#include "commacat/suites.hpp"

using namespace commacat;

namespace {

struct Options {
    std::uint64_t seed = 0;
    std::uint32_t prime = 2;
    std::string instance = "identity";
    std::string instance_file;
    std::uint32_t max_dim = 2;
    int max_window = 2;
    bool timing = false;
    std::string out;

    std::string kind = "comma-morphism";
    std::size_t count = 1;
    std::string structure;
    std::string cls;
    std::string input;
    std::string factor_kind = "cof-trivfib";
    bool trace = false;
    std::string strategy = "auto";
    std::string suite;
    std::size_t cases = 0;
    std::string demo;
    std::string variant = "linj";
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

GenBounds bounds(const Options& o) { return {o.max_dim, o.max_window, 0, 1}; }

ChainAdjunction make_adjunction(const Options& o) {
    if (!o.instance_file.empty()) {
        std::ifstream in(o.instance_file);
        if (!in) throw InputError("cannot open " + o.instance_file);
        try {
            return adjunction_from_json(json::parse(in));
        } catch (const json::parse_error& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
    }
    Prime p(o.prime);
    if (o.instance == "identity") return identity_adjunction(p);
    if (o.instance == "hom-tensor") return hom_tensor_adjunction(ChainComplex::disk(p, 0));
    throw UsageError("unknown instance \"" + o.instance + "\" (identity, hom-tensor)");
}

json read_input(const Options& o) {
    if (o.input.empty()) throw UsageError("--input is required");
    std::ifstream f;
    std::istream* in = &std::cin;
    if (o.input != "-") {
        f.open(o.input);
        if (!f) throw InputError("cannot open " + o.input);
        in = &f;
    }
    try {
        return json::parse(*in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

StructureId structure_of(const std::string& s) {
    try {
        return parse_structure(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const Options& o, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

int cmd_gen(const Options& o) {
    auto c = ChainComma(make_adjunction(o));
    Prime p = c.m().prime();
    auto b = bounds(o);
    json items = json::array();
    for (std::size_t i = 0; i < o.count; ++i) {
        Rng rng = Rng::for_case(o.seed, i);
        if (o.kind == "complex") {
            items.push_back(to_json(random_complex(rng, p, b)));
        } else if (o.kind == "map") {
            items.push_back(to_json(random_chain_map(rng, p, b)));
        } else if (o.kind == "comma-object") {
            items.push_back(to_json(random_comma_object(rng, c, b)));
        } else if (o.kind == "comma-morphism") {
            items.push_back(to_json(random_comma_morphism(rng, c, b)));
        } else if (o.kind == "in-class") {
            auto k = parse_class(o.cls);
            if (!k) throw UsageError("--class must be one of cof, fib, we, trivcof, trivfib");
            if (o.structure.empty()) throw UsageError("--structure is required for in-class");
            items.push_back(to_json(generate_in_class(rng, c, structure_of(o.structure), *k, b)));
        } else {
            throw UsageError("unknown --kind \"" + o.kind + "\"");
        }
    }
    emit(o, {{"schema_version", kSchemaVersion}, {"kind", o.kind}, {"seed", o.seed}, {"items", items}});
    return 0;
}

int cmd_classify(const Options& o) {
    auto c = ChainComma(make_adjunction(o));
    auto s = comma_morphism_from_json(c, read_input(o));
    json flags = json::object();
    bool agree = true;
    for (auto id : all_structures) {
        if (!o.structure.empty() && structure_of(o.structure) != id) continue;
        auto k = classify_comma(c, s, id);
        agree = agree && k == classify_via_dual(c, s, id);
        flags[std::string(to_string(id))] = to_json(k);
    }
    emit(o, {{"schema_version", kSchemaVersion}, {"flags", flags}, {"dual_route_agrees", agree}});
    return agree ? 0 : 1;
}

int cmd_factorize(const Options& o) {
    if (o.structure.empty()) throw UsageError("--structure is required");
    auto c = ChainComma(make_adjunction(o));
    auto s = comma_morphism_from_json(c, read_input(o));
    auto id = structure_of(o.structure);
    FactorKind k;
    try {
        k = parse_factor_kind(o.factor_kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto f = factorize_comma(c, s, id, k);
    std::string why;
    bool ok = factorization_in_classes(c, s, f, id, k, &why);
    json out{{"schema_version", kSchemaVersion}, {"l", to_json(f.l)}, {"r", to_json(f.r)}, {"verified", ok}};
    if (!ok) out["counterexample"] = why;
    if (o.trace) {
        json t{{"route_m", f.trace_m.route}, {"route_a", f.trace_a.route}};
        json objs = json::object(), facts = json::object();
        for (const auto& [n, x] : f.trace_m.objects) objs[n] = to_json(x);
        for (const auto& [n, x] : f.trace_a.objects) objs[n] = to_json(x);
        for (const auto& [n, v] : f.trace_m.facts) facts[n] = v;
        for (const auto& [n, v] : f.trace_a.facts) facts[n] = v;
        t["objects"] = objs;
        t["facts"] = facts;
        out["trace"] = t;
    }
    emit(o, out);
    return ok ? 0 : 1;
}

int cmd_lift(const Options& o) {
    if (o.structure.empty()) throw UsageError("--structure is required");
    auto c = ChainComma(make_adjunction(o));
    auto j = read_input(o);
    LiftingProblem<ChainComma> pr{comma_morphism_from_json(c, field<json>(j, "sigma")),
                                  comma_morphism_from_json(c, field<json>(j, "beta")),
                                  comma_morphism_from_json(c, field<json>(j, "top")),
                                  comma_morphism_from_json(c, field<json>(j, "bottom"))};
    auto id = structure_of(o.structure);
    LiftStrategy strat = LiftStrategy::Auto;
    if (o.strategy == "structural") strat = LiftStrategy::Structural;
    else if (o.strategy == "linear") strat = LiftStrategy::Linear;
    else if (o.strategy != "auto") throw UsageError("--strategy must be auto, structural or linear");
    auto l = lift_comma(c, pr, id, strat);
    bool guaranteed = classify_comma(c, pr.sigma, id).trivial_cof() && classify_comma(c, pr.beta, id).is_fib;
    json out{{"schema_version", kSchemaVersion}, {"guaranteed", guaranteed}};
    out["lift"] = l ? to_json(*l) : json(nullptr);
    bool ok = !guaranteed || l.has_value();
    if (!ok) out["counterexample"] = "no lift for a trivial cofibration against a fibration";
    emit(o, out);
    return ok ? 0 : 1;
}

int finish_report(const Options& o, const Report& r, const std::string& suite, double ms) {
    auto j = to_json(r, suite);
    j["seed"] = o.seed;
    if (o.timing) j["timing_ms"] = ms;
    emit(o, j);
    return r.ok() ? 0 : 1;
}

int cmd_check(const Options& o) {
    auto c = ChainComma(make_adjunction(o));
    SuiteRequest rq;
    rq.suite = o.suite;
    rq.seed = o.seed;
    if (o.cases) rq.cases = o.cases;
    rq.prime = c.m().prime().value();
    rq.bounds = bounds(o);
    if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
        throw UsageError("unknown suite \"" + o.suite + "\"");
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_suite(c, rq);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish_report(o, r, o.suite, ms);
}

int cmd_demo(const Options& o) {
    if (o.demo != "main-theorem") throw UsageError("unknown demo \"" + o.demo + "\" (main-theorem)");
    auto c = ChainComma(make_adjunction(o));
    auto v = structure_of(o.variant);
    if (!is_main_variant(v)) throw UsageError("--variant must be linj, lproj, rinj or rproj");
    MainTheoremConfig cfg;
    cfg.seed = o.seed;
    if (o.cases) cfg.samples = o.cases;
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_main_theorem(c, v, cfg);
    if (is_left_variant(v)) r.merge(quillen_segal_check(c, o.seed), "fibrant objects");
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish_report(o, r, "main-theorem/" + o.variant, ms);
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Comma categories of Quillen adjunctions over chain complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for every generator");
    app.add_option("--prime", o.prime, "Characteristic of the ground field");
    app.add_option("--instance", o.instance, "identity or hom-tensor (U = Hom(D1, -))");
    app.add_option("--instance-file", o.instance_file, "Adjunction instance as JSON");
    app.add_option("--max-dim", o.max_dim, "Largest dimension in one degree");
    app.add_option("--max-window", o.max_window, "Largest number of degrees");
    app.add_flag("--timing", o.timing, "Add wall-clock time to reports");
    app.add_option("--out", o.out, "Write JSON here instead of stdout");

    auto* gen = app.add_subcommand("gen", "Seeded random objects and morphisms");
    gen->add_option("--kind", o.kind, "complex, map, comma-object, comma-morphism, in-class");
    gen->add_option("--count", o.count, "Number of items");
    gen->add_option("--structure", o.structure, "Structure for in-class");
    gen->add_option("--class", o.cls, "cof, fib, we, trivcof, trivfib");

    auto* cls = app.add_subcommand("classify", "Flags of a comma morphism in every structure");
    cls->add_option("--input", o.input, "Comma morphism JSON ('-' for stdin)");
    cls->add_option("--structure", o.structure, "Restrict to one structure");

    auto* fac = app.add_subcommand("factorize", "Factor a comma morphism");
    fac->add_option("--input", o.input, "Comma morphism JSON");
    fac->add_option("--structure", o.structure, "Model structure");
    fac->add_option("--kind", o.factor_kind, "cof-trivfib or trivcof-fib");
    fac->add_flag("--trace", o.trace, "Include intermediate objects");

    auto* lift = app.add_subcommand("lift", "Solve a lifting problem");
    lift->add_option("--input", o.input, "JSON with sigma, beta, top, bottom");
    lift->add_option("--structure", o.structure, "Model structure");
    lift->add_option("--strategy", o.strategy, "auto, structural or linear");

    auto* check = app.add_subcommand("check", "Run a verification suite");
    check->add_option("--suite", o.suite, "axioms, adjunctions, monoidal, abelian, sites, class-equalities")
        ->required();
    check->add_option("--cases", o.cases, "Number of seeded cases");

    auto* demo = app.add_subcommand("demo", "Main theorem harness");
    demo->add_option("name", o.demo, "main-theorem")->required();
    demo->add_option("--variant", o.variant, "linj, lproj, rinj, rproj");
    demo->add_option("--cases", o.cases, "Samples per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*cls) return cmd_classify(o);
        if (*fac) return cmd_factorize(o);
        if (*lift) return cmd_lift(o);
        if (*check) return cmd_check(o);
        if (*demo) return cmd_demo(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
