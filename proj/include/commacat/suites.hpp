#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjoints.hpp"
#include "exact.hpp"
#include "homotopy.hpp"
#include "monoidal.hpp"
#include "random.hpp"
#include "report.hpp"
#include "site.hpp"

namespace commacat {

// ---- backend model axioms -----------------------------------------------------

struct BackendSuiteConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    std::vector<std::uint32_t> primes{2, 3};
    GenBounds bounds{3, 4, -1, 1};
};

template <class B>
bool is_retract_closed(const B& b, const typename B::Morphism& f, const typename B::Morphism& g) {
    using Mor = typename B::Morphism;
    auto cs = b.coproduct(b.source(f), b.source(g));
    auto ct = b.coproduct(b.target(f), b.target(g));
    auto zero = [&](const auto& x, const auto& y) { return ChainMap::zero(x, y); };
    std::optional<Mor> sum = b.comediate(cs, {b.compose(ct.legs[0], f), b.compose(ct.legs[1], g)});
    std::optional<Mor> ps = b.comediate(cs, {b.identity(b.source(f)), zero(b.source(g), b.source(f))});
    std::optional<Mor> pt = b.comediate(ct, {b.identity(b.target(f)), zero(b.target(g), b.target(f))});
    if (!sum || !ps || !pt) return false;
    if (!b.equal(b.compose(*ps, cs.legs[0]), b.identity(b.source(f)))) return false;
    if (!b.equal(b.compose(*pt, *sum), b.compose(f, *ps))) return false;
    auto big = b.classify(*sum);
    auto small = b.classify(f);
    return (!big.is_cof || small.is_cof) && (!big.is_fib || small.is_fib) && (!big.is_we || small.is_we);
}

inline Report backend_axioms_suite(const BackendSuiteConfig& cfg = {}) {
    Report rep;
    auto& fac = rep.add("factorizations recompose and classify");
    auto& tft = rep.add("2-out-of-3");
    auto& ret = rep.add("retract closure");
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i);
        Prime p(cfg.primes[i % cfg.primes.size()]);
        ChainBackend b(p);
        std::string tag = " #" + std::to_string(i);
        auto f = random_chain_map(rng, p, cfg.bounds);
        for (auto k : {FactorKind::CofThenTrivFib, FactorKind::TrivCofThenFib}) {
            auto fl = factorize_chain(f, k);
            auto cl = classify_map(fl.l), cr = classify_map(fl.r);
            fac.expect(compose(fl.r, fl.l) == f, "r∘l ≠ f" + tag);
            fac.expect(k == FactorKind::CofThenTrivFib ? cl.is_cof && cr.trivial_fib() : cl.trivial_cof() && cr.is_fib,
                       std::string(to_string(k)) + ": " + cl.str() + " then " + cr.str() + tag);
            int n = cl.is_we + cr.is_we + classify_map(f).is_we;
            tft.expect(n != 2, "factorization triple" + tag);
        }
        auto g = random_chain_map(rng, f.target(), random_complex(rng, p, cfg.bounds));
        int n = classify_map(f).is_we + classify_map(g).is_we + classify_map(compose(g, f)).is_we;
        tft.expect(n != 2, "composable pair" + tag);
        ret.expect(is_retract_closed(b, f, random_chain_map(rng, p, cfg.bounds)), "f ⊕ g" + tag);
        // A retract that is a we: f ⊕ id.
        ret.expect(is_retract_closed(b, f, ChainMap::identity(random_complex(rng, p, cfg.bounds))), "f ⊕ id" + tag);
    }
    return rep;
}

// ---- comma factorizations -------------------------------------------------------

struct FactorSuiteConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 200;
    GenBounds bounds{2, 3, 0, 1};
};

inline Report factorization_suite(const ChainComma& c, const FactorSuiteConfig& cfg = {}) {
    Report rep;
    auto& tw = rep.add("intermediate corner map is a we (LProj trivial cofibration first)");
    for (auto s : all_structures)
        for (auto k : {FactorKind::CofThenTrivFib, FactorKind::TrivCofThenFib}) {
            auto& chk = rep.add(std::string(to_string(s)) + " " + std::string(to_string(k)));
            for (std::size_t i = 0; i < cfg.samples; ++i) {
                Rng rng = Rng::for_case(cfg.seed, i);
                auto sig = random_comma_morphism(rng, c, cfg.bounds);
                auto f = factorize_comma(c, sig, s, k);
                std::string why;
                chk.expect(factorization_in_classes(c, sig, f, s, k, &why), why + " #" + std::to_string(i));
                if (s == StructureId::LProj && k == FactorKind::TrivCofThenFib) {
                    auto v = f.trace_m.get_fact("tau_we");
                    tw.expect(v.has_value() && *v, "#" + std::to_string(i));
                }
                for (const auto& [name, v] : f.trace_m.facts) tw.expect(v, name + " #" + std::to_string(i));
                for (const auto& [name, v] : f.trace_a.facts) tw.expect(v, name + " #" + std::to_string(i));
            }
        }
    return rep;
}

// ---- lifting ------------------------------------------------------------------

// A generic commuting square against σ and β: (top, bottom) drawn from the
// solution space of β∘top = bottom∘σ.
inline LiftingProblem<ChainComma> random_square(Rng& rng, const ChainComma& c, const ChainCommaMorphism& sigma,
                                                const ChainCommaMorphism& beta) {
    CommaHomSpace ht(c, sigma.src, beta.src);
    CommaHomSpace hb(c, sigma.tgt, beta.tgt);
    Prime p = c.m().prime();
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& t : ht.basis()) cols.push_back(entries(c.compose(beta, t)));
    for (const auto& b : hb.basis()) {
        auto v = entries(c.compose(b, sigma));
        for (auto& x : v) x = p.neg(x);
        cols.push_back(std::move(v));
    }
    std::vector<std::uint32_t> ct(ht.dim(), 0), cb(hb.dim(), 0);
    if (!cols.empty()) {
        std::size_t len = entries(zero_morphism(sigma.src, beta.tgt)).size();
        Matrix k = kernel_basis(columns_matrix(p, cols, len));
        for (std::size_t j = 0; j < k.cols(); ++j) {
            auto a = rng.below(p.value());
            for (std::size_t r = 0; r < ht.dim(); ++r) ct[r] = p.add(ct[r], p.mul(static_cast<std::uint32_t>(a), k(r, j)));
            for (std::size_t r = 0; r < hb.dim(); ++r)
                cb[r] = p.add(cb[r], p.mul(static_cast<std::uint32_t>(a), k(ht.dim() + r, j)));
        }
    }
    return {sigma, beta, ht.element(ct), hb.element(cb)};
}

// σ a trivial cofibration and β a fibration of s, both from factorizations.
inline LiftingProblem<ChainComma> random_lifting_problem(Rng& rng, const ChainComma& c, StructureId s,
                                                         const GenBounds& b) {
    auto sigma = factorize_comma(c, random_comma_morphism(rng, c, b), s, FactorKind::TrivCofThenFib).l;
    auto beta = factorize_comma(c, random_comma_morphism(rng, c, b), s, FactorKind::TrivCofThenFib).r;
    return random_square(rng, c, sigma, beta);
}

struct LiftSuiteConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    GenBounds bounds{2, 2, 0, 1};
};

inline Report lifting_suite(const ChainComma& c, StructureId s, LiftStrategy strategy,
                            const LiftSuiteConfig& cfg = {}) {
    Report rep;
    auto& chk = rep.add(std::string(to_string(s)) + (strategy == LiftStrategy::Linear ? " linear" : " structural") +
                        " lifts");
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i);
        auto pr = random_lifting_problem(rng, c, s, cfg.bounds);
        std::string tag = " #" + std::to_string(i);
        if (!chk.expect(classify_comma(c, pr.sigma, s).trivial_cof() && classify_comma(c, pr.beta, s).is_fib,
                        "generator produced a problem outside (cof∩we, fib)" + tag))
            continue;
        auto l = lift_comma(c, pr, s, strategy);
        chk.expect(l.has_value() && is_lift(c, pr, *l), "no lift" + tag);
    }
    return rep;
}

// ---- class equality -------------------------------------------------------------

struct ClassEqualityConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 300;
    GenBounds bounds{2, 3, 0, 1};
};

struct ClassEqualityStats {
    std::size_t members = 0, non_members = 0;
};

// fib ∩ we of LProj equals the level-wise trivial fibrations.
inline Report class_equality_suite(const ChainComma& c, const ClassEqualityConfig& cfg = {},
                                   ClassEqualityStats* stats = nullptr) {
    Report rep;
    auto& chk = rep.add("LProj trivial fibrations = level-wise trivial fibrations");
    ClassEqualityStats st;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i);
        auto sig = random_comma_morphism(rng, c, cfg.bounds);
        switch (i % 4) {
            case 1: sig = factorize_comma(c, sig, StructureId::LProj, FactorKind::CofThenTrivFib).r; break;
            case 2: sig = factorize_comma(c, sig, StructureId::Inj, FactorKind::CofThenTrivFib).r; break;
            case 3: sig = factorize_comma(c, sig, StructureId::LProj, FactorKind::TrivCofThenFib).r; break;
            default: break;
        }
        auto k = classify_comma(c, sig, StructureId::LProj);
        bool lhs = k.trivial_fib();
        bool rhs = classify_map(sig.s0).trivial_fib() && classify_map(sig.s1).trivial_fib();
        ++(lhs ? st.members : st.non_members);
        chk.expect(lhs == rhs, "LProj " + k.str() + " vs level-wise " + std::to_string(rhs) + " #" + std::to_string(i));
    }
    if (stats) *stats = st;
    return rep;
}

// ---- in-class generation ------------------------------------------------------------

enum class MorphismClass { Cof, Fib, We, TrivCof, TrivFib };

inline std::optional<MorphismClass> parse_class(const std::string& s) {
    if (s == "cof") return MorphismClass::Cof;
    if (s == "fib") return MorphismClass::Fib;
    if (s == "we") return MorphismClass::We;
    if (s == "trivcof") return MorphismClass::TrivCof;
    if (s == "trivfib") return MorphismClass::TrivFib;
    return std::nullopt;
}

inline bool in_class(const ClassFlags& f, MorphismClass k) {
    switch (k) {
        case MorphismClass::Cof: return f.is_cof;
        case MorphismClass::Fib: return f.is_fib;
        case MorphismClass::We: return f.is_we;
        case MorphismClass::TrivCof: return f.trivial_cof();
        case MorphismClass::TrivFib: return f.trivial_fib();
    }
    return false;
}

// Members by construction from factorization legs (weak equivalences as the
// trivial-fibration leg), re-verified by the classifier.
inline ChainCommaMorphism generate_in_class(Rng& rng, const ChainComma& c, StructureId s, MorphismClass k,
                                           const GenBounds& b) {
    auto sig = random_comma_morphism(rng, c, b);
    ChainCommaMorphism out = sig;
    switch (k) {
        case MorphismClass::Cof: out = factorize_comma(c, sig, s, FactorKind::CofThenTrivFib).l; break;
        case MorphismClass::TrivFib:
        case MorphismClass::We: out = factorize_comma(c, sig, s, FactorKind::CofThenTrivFib).r; break;
        case MorphismClass::TrivCof: out = factorize_comma(c, sig, s, FactorKind::TrivCofThenFib).l; break;
        case MorphismClass::Fib: out = factorize_comma(c, sig, s, FactorKind::TrivCofThenFib).r; break;
    }
    if (!in_class(classify_comma(c, out, s), k)) throw std::logic_error("in-class generation: classifier disagrees");
    return out;
}

// ---- suite registry -------------------------------------------------------------------

struct SuiteRequest {
    std::string suite;
    std::uint64_t seed = 0;
    std::optional<std::size_t> cases;
    std::uint32_t prime = 2;
    GenBounds bounds{2, 2, 0, 1};
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v{"axioms", "adjunctions", "monoidal", "abelian", "sites", "class-equalities"};
    return v;
}

// Runs one named suite on the comma category c; throws invalid_argument for an
// unknown suite or an instance that does not support it.
inline Report run_suite(const ChainComma& c, const SuiteRequest& rq) {
    auto n = [&](std::size_t dflt) { return rq.cases.value_or(dflt); };
    if (rq.suite == "axioms") {
        BackendSuiteConfig cfg;
        cfg.seed = rq.seed;
        cfg.samples = n(500);
        cfg.primes = {rq.prime};
        return backend_axioms_suite(cfg);
    }
    if (rq.suite == "adjunctions") {
        AdjunctionSuiteConfig cfg;
        cfg.seed = rq.seed;
        cfg.samples = n(10);
        cfg.bounds = rq.bounds;
        return verify_comma_adjunctions(c, cfg);
    }
    if (rq.suite == "monoidal") {
        MonoidalSuiteConfig cfg;
        cfg.seed = rq.seed;
        cfg.samples = n(50);
        cfg.bounds = rq.bounds;
        return monoidal_suite(MonoidalComma::of(c), cfg);
    }
    if (rq.suite == "abelian") {
        AbelianSuiteConfig cfg;
        cfg.seed = rq.seed;
        cfg.samples = n(100);
        cfg.bounds = rq.bounds;
        return abelian_suite(c, cfg);
    }
    if (rq.suite == "sites") return site_suite();
    if (rq.suite == "class-equalities") {
        ClassEqualityConfig cfg;
        cfg.seed = rq.seed;
        cfg.samples = n(300);
        cfg.bounds = rq.bounds;
        return class_equality_suite(c, cfg);
    }
    throw std::invalid_argument("unknown suite \"" + rq.suite + "\"");
}

}  // namespace commacat
