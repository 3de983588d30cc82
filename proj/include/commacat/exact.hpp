#pragma once

#include <string>
#include <vector>

#include "random.hpp"
#include "report.hpp"

namespace commacat {

inline ChainCommaMorphism zero_morphism(const ChainCommaObject& x, const ChainCommaObject& y) {
    return ChainCommaMorphism{x, y, ChainMap::zero(x.f0, y.f0), ChainMap::zero(x.f1, y.f1)};
}

inline ChainCommaObject zero_object(const ChainComma& c) { return c.terminal(); }

// ker σ = eq(σ, 0) and coker σ = coeq(σ, 0), computed level-wise by the comma limits.
inline ChainCommaMorphism comma_kernel(const ChainComma& c, const ChainCommaMorphism& s) {
    return c.equalizer(s, zero_morphism(s.src, s.tgt)).legs[0];
}
inline ChainCommaMorphism comma_cokernel(const ChainComma& c, const ChainCommaMorphism& s) {
    return c.coequalizer(s, zero_morphism(s.src, s.tgt)).legs[0];
}

// F ⊕ G → F × G with components (id, 0; 0, id).
inline ChainCommaMorphism canonical_sum_to_product(const ChainComma& c, const ChainCommaObject& f,
                                                   const ChainCommaObject& g) {
    auto cp = c.coproduct(f, g);
    auto pr = c.product(f, g);
    auto to_f = c.comediate(cp, {c.identity(f), zero_morphism(g, f)});
    auto to_g = c.comediate(cp, {zero_morphism(f, g), c.identity(g)});
    if (!to_f || !to_g) throw std::logic_error("coproduct does not admit the projections");
    auto h = c.mediate(pr, {*to_f, *to_g});
    if (!h) throw std::logic_error("product does not admit the canonical map");
    return *h;
}

inline ChainMap chain_sum_to_product(const ChainBackend& b, const ChainComplex& x, const ChainComplex& y) {
    auto cp = b.coproduct(x, y);
    auto pr = b.product(x, y);
    auto to_x = b.comediate(cp, {ChainMap::identity(x), ChainMap::zero(y, x)});
    auto to_y = b.comediate(cp, {ChainMap::zero(x, y), ChainMap::identity(y)});
    return *b.mediate(pr, {*to_x, *to_y});
}

// Rank of x ↦ post∘x over a basis of Hom(gen, X): full rank means post cancels on the left.
inline bool cancels_left(const ChainComma& c, const ChainCommaMorphism& post, const ChainCommaObject& gen) {
    CommaHomSpace hs(c, gen, post.src);
    if (hs.dim() == 0) return true;
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& b : hs.basis()) cols.push_back(entries(c.compose(post, b)));
    return rank(columns_matrix(c.m().prime(), cols, cols[0].size())) == hs.dim();
}

inline bool cancels_right(const ChainComma& c, const ChainCommaMorphism& pre, const ChainCommaObject& cogen) {
    CommaHomSpace hs(c, pre.tgt, cogen);
    if (hs.dim() == 0) return true;
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& b : hs.basis()) cols.push_back(entries(c.compose(b, pre)));
    return rank(columns_matrix(c.m().prime(), cols, cols[0].size())) == hs.dim();
}

// Disks D^n for n over a window; Hom(D^n, X) ≅ X_n.
inline std::vector<ChainComplex> disks_over(Prime p, int lo, int hi) {
    std::vector<ChainComplex> out;
    for (int n = lo; n <= hi; ++n) out.push_back(ChainComplex::disk(p, n));
    return out;
}

inline std::pair<int, int> window_of(const std::vector<ChainComplex>& xs) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& x : xs) {
        if (x.is_zero()) continue;
        lo = any ? std::min(lo, x.lo()) : x.lo();
        hi = any ? std::max(hi, x.hi()) : x.hi();
        any = true;
    }
    return {lo, hi};
}

// Mono by cancellation against F⁺(D^n) and L¹(D^n); these generate since
// Hom(F⁺ m, X) ≅ Hom(m, X⁰) and Hom(L¹ a, X) ≅ Hom(a, X¹).
inline bool is_comma_mono(const ChainComma& c, const ChainCommaMorphism& s) {
    Prime p = c.m().prime();
    auto [lo, hi] = window_of({s.src.f0, s.src.f1});
    for (const auto& d : disks_over(p, lo, hi + 1))
        if (!cancels_left(c, s, c.Fplus(d)) || !cancels_left(c, s, c.L1(d))) return false;
    return true;
}

// Epi by cancellation against R⁰(D^n) and ι(D^n), via Π⁰ ⊣ R⁰ and Π¹ ⊣ ι.
inline bool is_comma_epi(const ChainComma& c, const ChainCommaMorphism& s) {
    Prime p = c.m().prime();
    auto [lo, hi] = window_of({s.tgt.f0, s.tgt.f1});
    for (const auto& d : disks_over(p, lo, hi + 1))
        if (!cancels_right(c, s, c.R0(d)) || !cancels_right(c, s, c.iota(d))) return false;
    return true;
}

inline bool is_levelwise_mono(const ChainCommaMorphism& s) {
    return classify_map(s.s0).is_cof && classify_map(s.s1).is_cof;
}
inline bool is_levelwise_epi(const ChainCommaMorphism& s) {
    return classify_map(s.s0).is_fib && classify_map(s.s1).is_fib;
}

// e: E → X is an equalizer of (f, g) when the canonical comparison to the
// constructed one is an isomorphism.
inline bool is_comma_equalizer(const ChainComma& c, const ChainCommaMorphism& e, const ChainCommaMorphism& f,
                               const ChainCommaMorphism& g) {
    if (!c.equal(c.compose(f, e), c.compose(g, e))) return false;
    auto u = c.mediate(c.equalizer(f, g), {e});
    return u && c.inverse(*u).has_value();
}

inline bool is_chain_equalizer(const ChainBackend& b, const ChainMap& e, const ChainMap& f, const ChainMap& g) {
    if (!(compose(f, e) == compose(g, e))) return false;
    auto u = b.mediate(b.equalizer(f, g), {e});
    return u && inverse(*u).has_value();
}

struct AbelianSuiteConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    GenBounds bounds{2, 2, 0, 1};
};

inline Report abelian_suite(const ChainComma& c, const AbelianSuiteConfig& cfg = {}) {
    Report rep;
    auto& zero = rep.add("zero object");
    auto& bip = rep.add("biproduct");
    auto& mono = rep.add("mono iff level-wise mono");
    auto& epi = rep.add("epi iff level-wise epi");
    auto& kc = rep.add("ker coker roundtrip");
    auto& ck = rep.add("coker ker roundtrip");
    auto& eq = rep.add("equalizers created by the projections");

    auto z = zero_object(c);
    zero.expect(c.equal_objects(z, c.initial()), "initial ≠ terminal");
    zero.expect(z.f0.is_zero() && z.f1.is_zero() && z.pi.is_zero(), "not [0, 0, id]");

    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i);
        std::string tag = " #" + std::to_string(i);
        auto f = random_comma_object(rng, c, cfg.bounds);
        auto g = random_comma_object(rng, c, cfg.bounds);

        zero.expect(CommaHomSpace(c, z, f).dim() == 0 && CommaHomSpace(c, f, z).dim() == 0, "hom to/from 0" + tag);

        auto h = canonical_sum_to_product(c, f, g);
        bip.expect(c.inverse(h).has_value(), "canonical map not invertible" + tag);
        bip.expect(h.s0 == chain_sum_to_product(c.m(), f.f0, g.f0), "M component is not α_M" + tag);
        bip.expect(h.s1 == chain_sum_to_product(c.a(), f.f1, g.f1), "A component is not α_A" + tag);

        // Monos: cofibrations of Inj are level-wise monos, random maps usually are not.
        auto s = random_comma_morphism(rng, c, cfg.bounds);
        auto m = factorize_comma(c, s, StructureId::Inj, FactorKind::CofThenTrivFib).l;
        auto e = factorize_comma(c, s, StructureId::Proj, FactorKind::TrivCofThenFib).r;
        for (const auto& x : {s, m}) {
            bool lw = is_levelwise_mono(x), cm = is_comma_mono(c, x);
            mono.expect(lw == cm, "level-wise " + std::to_string(lw) + " vs cancellation " + std::to_string(cm) + tag);
        }
        for (const auto& x : {s, e}) {
            bool lw = is_levelwise_epi(x), cm = is_comma_epi(c, x);
            epi.expect(lw == cm, "level-wise " + std::to_string(lw) + " vs cancellation " + std::to_string(cm) + tag);
        }

        // ker(coker m) ≅ m over the target
        {
            auto q = comma_cokernel(c, m);
            auto k = c.equalizer(q, zero_morphism(q.src, q.tgt));
            auto u = c.mediate(k, {m});
            kc.expect(u && c.inverse(*u).has_value() && c.equal(c.compose(k.legs[0], *u), m), "ker coker" + tag);
        }
        {
            auto k = comma_kernel(c, e);
            auto q = c.coequalizer(k, zero_morphism(k.src, k.tgt));
            auto u = c.comediate(q, {e});
            ck.expect(u && c.inverse(*u).has_value() && c.equal(c.compose(*u, q.legs[0]), e), "coker ker" + tag);
        }

        // Candidates over a parallel pair (a, b): the equalizer, the equalizer
        // precomposed with an iso, with a proper mono, and the zero map.
        auto y = random_comma_object(rng, c, cfg.bounds);
        CommaHomSpace hs(c, f, y);
        auto a = random_comma_hom(rng, hs);
        auto b = random_comma_hom(rng, hs);
        auto en = c.equalizer(a, b);
        std::vector<ChainCommaMorphism> cands{en.legs[0]};
        {
            auto u = random_iso_from(rng, en.apex.f0);
            auto [gu, iso] = iso_lift(c, en.apex, u);
            cands.push_back(c.compose(en.legs[0], *c.inverse(iso)));
        }
        {
            auto w = random_comma_hom(rng, CommaHomSpace(c, en.apex, random_comma_object(rng, c, cfg.bounds)));
            cands.push_back(c.compose(en.legs[0], comma_kernel(c, w)));
        }
        cands.push_back(zero_morphism(c.initial(), f));
        for (std::size_t j = 0; j < cands.size(); ++j) {
            const auto& cand = cands[j];
            bool comma_eq = is_comma_equalizer(c, cand, a, b);
            bool level_eq =
                is_chain_equalizer(c.m(), cand.s0, a.s0, b.s0) && is_chain_equalizer(c.a(), cand.s1, a.s1, b.s1);
            eq.expect(comma_eq == level_eq, "candidate " + std::to_string(j) + ": comma " + std::to_string(comma_eq) +
                                                " vs projections " + std::to_string(level_eq) + tag);
            if (j < 2) eq.expect(comma_eq, "constructed equalizer rejected" + tag);
        }
    }
    return rep;
}

}  // namespace commacat
