#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "random.hpp"
#include "report.hpp"

namespace commacat {

// Hom-set bijection τ: Hom(L x, y) → Hom(x, R y) for one sampled (x, y).
// Exhaustive when both sides have at most `limit` elements; otherwise 20
// sampled elements per side are round-tripped.
template <class LMor, class RMor>
struct BijectionData {
    std::string where;
    std::uint64_t left_size = 0, right_size = 0;
    std::function<std::optional<std::vector<LMor>>(std::uint64_t)> enumerate_left;
    std::function<std::optional<std::vector<RMor>>(std::uint64_t)> enumerate_right;
    std::function<LMor(Rng&)> sample_left;
    std::function<RMor(Rng&)> sample_right;
    std::function<RMor(const LMor&)> tau;
    std::function<LMor(const RMor&)> tau_inv;
    std::function<bool(const LMor&)> valid_left;
    std::function<bool(const RMor&)> valid_right;
};

struct BijectionOutcome {
    bool exhaustive = false;
    std::uint64_t left = 0, right = 0;
};

template <class LMor, class RMor>
BijectionOutcome check_bijection(Check& chk, const BijectionData<LMor, RMor>& d, Rng& rng,
                                 std::uint64_t limit = 1u << 16) {
    BijectionOutcome out{false, d.left_size, d.right_size};
    std::vector<LMor> ls;
    std::vector<RMor> rs;
    if (d.left_size <= limit && d.right_size <= limit) {
        ls = *d.enumerate_left(limit);
        rs = *d.enumerate_right(limit);
        out.exhaustive = true;
        chk.expect(ls.size() == rs.size(), d.where + ": hom-set sizes " + std::to_string(ls.size()) + " vs " +
                                               std::to_string(rs.size()));
        std::set<std::vector<std::uint32_t>> images;
        for (const auto& l : ls) images.insert(entries(d.tau(l)));
        chk.expect(images.size() == ls.size(), d.where + ": transpose not injective");
    } else {
        for (int i = 0; i < 20; ++i) {
            ls.push_back(d.sample_left(rng));
            rs.push_back(d.sample_right(rng));
        }
    }
    for (const auto& l : ls) {
        auto r = d.tau(l);
        chk.expect(d.valid_right(r), d.where + ": transpose is not a morphism");
        chk.expect(entries(d.tau_inv(r)) == entries(l), d.where + ": τ⁻¹τ ≠ id");
    }
    for (const auto& r : rs) {
        auto l = d.tau_inv(r);
        chk.expect(d.valid_left(l), d.where + ": inverse transpose is not a morphism");
        chk.expect(entries(d.tau(l)) == entries(r), d.where + ": ττ⁻¹ ≠ id");
    }
    return out;
}

struct AdjunctionSuiteConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 10;
    GenBounds bounds{2, 2, 0, 1};
    std::uint64_t limit = 1u << 16;
};

struct AdjunctionSuiteStats {
    std::size_t exhaustive = 0, sampled = 0;
};

// Π¹ ⊣ ι, L¹ ⊣ Π¹, Π⁰ ⊣ R⁰, F⁺ ⊣ Π⁰: bijection and naturality in both
// slots, plus Π⁰ι = U, Π¹ι = Id, Π⁰R⁰ = Id, Π¹L¹ = Id.
inline Report verify_comma_adjunctions(const ChainComma& c, const AdjunctionSuiteConfig& cfg,
                                       AdjunctionSuiteStats* stats = nullptr) {
    Report rep;
    const auto& m = c.m();
    const auto& a = c.a();
    Prime p = m.prime();
    AdjunctionSuiteStats st;
    auto chain_valid = [](const ChainMap&) { return true; };
    auto comma_valid = [&](const ChainCommaMorphism& s) { return c.commutes(s); };
    auto tally = [&](const BijectionOutcome& o) { ++(o.exhaustive ? st.exhaustive : st.sampled); };

    auto& b1 = rep.add("Pi1 -| iota");
    auto& b2 = rep.add("L1 -| Pi1");
    auto& b3 = rep.add("Pi0 -| R0");
    auto& b4 = rep.add("Fplus -| Pi0");
    auto& nat = rep.add("naturality of the transposes");
    auto& ids = rep.add("factorization identities");

    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i);
        auto f = random_comma_object(rng, c, cfg.bounds);
        auto g = random_comma_object(rng, c, cfg.bounds);
        auto pa = random_complex(rng, p, cfg.bounds);
        auto mx = random_complex(rng, p, cfg.bounds);
        std::string tag = " #" + std::to_string(i);

        {  // Π¹ ⊣ ι at (F, P): Hom_A(F¹, P) ≅ Hom(F, ιP)
            ChainHomSpace hl(f.f1, pa);
            CommaHomSpace hr(c, f, c.iota(pa));
            BijectionData<ChainMap, ChainCommaMorphism> d;
            d.where = "Pi1-|iota" + tag;
            d.left_size = hl.size(cfg.limit + 1);
            d.right_size = hr.size(cfg.limit + 1);
            d.enumerate_left = [&](std::uint64_t l) { return hl.enumerate(l); };
            d.enumerate_right = [&](std::uint64_t l) { return hr.enumerate(l); };
            d.sample_left = [&](Rng& r) { return random_chain_map(r, f.f1, pa); };
            d.sample_right = [&](Rng& r) { return random_comma_hom(r, hr); };
            d.tau = [&](const ChainMap& h) { return ChainCommaMorphism{f, c.iota(pa), compose(c.U(h), f.pi), h}; };
            d.tau_inv = [](const ChainCommaMorphism& s) { return s.s1; };
            d.valid_left = chain_valid;
            d.valid_right = comma_valid;
            tally(check_bijection(b1, d, rng, cfg.limit));
            // naturality in F: τ(h ∘ Π¹σ) = τ(h) ∘ σ for σ: G → F
            auto sig = random_comma_hom(rng, CommaHomSpace(c, g, f));
            auto h = random_chain_map(rng, f.f1, pa);
            nat.expect(c.equal(ChainCommaMorphism{g, c.iota(pa), compose(c.U(compose(h, sig.s1)), g.pi),
                                                  compose(h, sig.s1)},
                               c.compose(d.tau(h), sig)),
                       "Pi1-|iota in F" + tag);
        }
        {  // L¹ ⊣ Π¹ at (P, F): Hom(L¹P, F) ≅ Hom_A(P, F¹)
            CommaHomSpace hl(c, c.L1(pa), f);
            ChainHomSpace hr(pa, f.f1);
            BijectionData<ChainCommaMorphism, ChainMap> d;
            d.where = "L1-|Pi1" + tag;
            d.left_size = hl.size(cfg.limit + 1);
            d.right_size = hr.size(cfg.limit + 1);
            d.enumerate_left = [&](std::uint64_t l) { return hl.enumerate(l); };
            d.enumerate_right = [&](std::uint64_t l) { return hr.enumerate(l); };
            d.sample_left = [&](Rng& r) { return random_comma_hom(r, hl); };
            d.sample_right = [&](Rng& r) { return random_chain_map(r, pa, f.f1); };
            d.tau = [](const ChainCommaMorphism& s) { return s.s1; };
            d.tau_inv = [&](const ChainMap& h) {
                return ChainCommaMorphism{c.L1(pa), f, m.from_initial(f.f0), h};
            };
            d.valid_left = comma_valid;
            d.valid_right = chain_valid;
            tally(check_bijection(b2, d, rng, cfg.limit));
            // naturality in F: τ(σ ∘ s) = Π¹σ ∘ τ(s) for σ: F → G
            auto sig = random_comma_hom(rng, CommaHomSpace(c, f, g));
            auto s = random_comma_hom(rng, hl);
            nat.expect(compose(sig.s1, s.s1) == c.compose(sig, s).s1, "L1-|Pi1 in F" + tag);
        }
        {  // Π⁰ ⊣ R⁰ at (F, m): Hom_M(F⁰, m) ≅ Hom(F, R⁰m)
            ChainHomSpace hl(f.f0, mx);
            CommaHomSpace hr(c, f, c.R0(mx));
            BijectionData<ChainMap, ChainCommaMorphism> d;
            d.where = "Pi0-|R0" + tag;
            d.left_size = hl.size(cfg.limit + 1);
            d.right_size = hr.size(cfg.limit + 1);
            d.enumerate_left = [&](std::uint64_t l) { return hl.enumerate(l); };
            d.enumerate_right = [&](std::uint64_t l) { return hr.enumerate(l); };
            d.sample_left = [&](Rng& r) { return random_chain_map(r, f.f0, mx); };
            d.sample_right = [&](Rng& r) { return random_comma_hom(r, hr); };
            d.tau = [&](const ChainMap& h) { return ChainCommaMorphism{f, c.R0(mx), h, a.to_terminal(f.f1)}; };
            d.tau_inv = [](const ChainCommaMorphism& s) { return s.s0; };
            d.valid_left = chain_valid;
            d.valid_right = comma_valid;
            tally(check_bijection(b3, d, rng, cfg.limit));
            auto u = random_chain_map(rng, mx, random_complex(rng, p, cfg.bounds));
            auto h = random_chain_map(rng, f.f0, mx);
            nat.expect(c.equal(c.compose(c.R0(u), d.tau(h)),
                               ChainCommaMorphism{f, c.R0(u.target()), compose(u, h), a.to_terminal(f.f1)}),
                       "Pi0-|R0 in m" + tag);
        }
        {  // F⁺ ⊣ Π⁰ at (m, G): Hom(F⁺m, G) ≅ Hom_M(m, G⁰)
            CommaHomSpace hl(c, c.Fplus(mx), g);
            ChainHomSpace hr(mx, g.f0);
            BijectionData<ChainCommaMorphism, ChainMap> d;
            d.where = "Fplus-|Pi0" + tag;
            d.left_size = hl.size(cfg.limit + 1);
            d.right_size = hr.size(cfg.limit + 1);
            d.enumerate_left = [&](std::uint64_t l) { return hl.enumerate(l); };
            d.enumerate_right = [&](std::uint64_t l) { return hr.enumerate(l); };
            d.sample_left = [&](Rng& r) { return random_comma_hom(r, hl); };
            d.sample_right = [&](Rng& r) { return random_chain_map(r, mx, g.f0); };
            d.tau = [](const ChainCommaMorphism& s) { return s.s0; };
            d.tau_inv = [&](const ChainMap& h) {
                return ChainCommaMorphism{c.Fplus(mx), g, h, c.phi(compose(g.pi, h), g.f1)};
            };
            d.valid_left = comma_valid;
            d.valid_right = chain_valid;
            tally(check_bijection(b4, d, rng, cfg.limit));
            auto u = random_chain_map(rng, random_complex(rng, p, cfg.bounds), mx);
            auto h = random_chain_map(rng, mx, g.f0);
            nat.expect(c.equal(c.compose(d.tau_inv(h), c.Fplus(u)),
                               ChainCommaMorphism{c.Fplus(u.source()), g, compose(h, u),
                                                  c.phi(compose(g.pi, compose(h, u)), g.f1)}),
                       "Fplus-|Pi0 in m" + tag);
        }
        // Π⁰ι = U, Π¹ι = Id, Π⁰R⁰ = Id, Π¹L¹ = Id on objects and morphisms
        auto fa = random_chain_map(rng, pa, random_complex(rng, p, cfg.bounds));
        auto fm = random_chain_map(rng, mx, random_complex(rng, p, cfg.bounds));
        ids.expect(ChainComma::Pi0(c.iota(pa)) == c.U(pa) && ChainComma::Pi0(c.iota(fa)) == c.U(fa), "Pi0 iota = U" + tag);
        ids.expect(ChainComma::Pi1(c.iota(pa)) == pa && ChainComma::Pi1(c.iota(fa)) == fa, "Pi1 iota = Id" + tag);
        ids.expect(ChainComma::Pi0(c.R0(mx)) == mx && ChainComma::Pi0(c.R0(fm)) == fm, "Pi0 R0 = Id" + tag);
        ids.expect(ChainComma::Pi1(c.L1(pa)) == pa && ChainComma::Pi1(c.L1(fa)) == fa, "Pi1 L1 = Id" + tag);
    }
    if (stats) *stats = st;
    return rep;
}

// ehk_left ⊣ ehk for a square H, K of adjunctions between two comma categories.
inline Report verify_ehk_adjunction(const ChainComma& c, const ChainComma& c2,
                                    const AdjunctionSquare<ChainBackend, ChainBackend, ChainBackend, ChainBackend>& sq,
                                    const AdjunctionSuiteConfig& cfg, AdjunctionSuiteStats* stats = nullptr) {
    Report rep;
    auto& bij = rep.add("ehk_left -| ehk");
    auto& sqr = rep.add("ehk preserves comma squares");
    AdjunctionSuiteStats st;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i);
        auto x = random_comma_object(rng, c2, cfg.bounds);
        auto f = random_comma_object(rng, c, cfg.bounds);
        auto lx = ehk_left(c, c2, sq, x);
        auto ef = ehk(c, c2, sq, f);
        CommaHomSpace hl(c, lx, f);
        CommaHomSpace hr(c2, x, ef);
        BijectionData<ChainCommaMorphism, ChainCommaMorphism> d;
        d.where = "ehk #" + std::to_string(i);
        d.left_size = hl.size(cfg.limit + 1);
        d.right_size = hr.size(cfg.limit + 1);
        d.enumerate_left = [&](std::uint64_t l) { return hl.enumerate(l); };
        d.enumerate_right = [&](std::uint64_t l) { return hr.enumerate(l); };
        d.sample_left = [&](Rng& r) { return random_comma_hom(r, hl); };
        d.sample_right = [&](Rng& r) { return random_comma_hom(r, hr); };
        d.tau = [&](const ChainCommaMorphism& s) {
            return ChainCommaMorphism{x, ef, sq.k.phi_inv(s.s0, x.f0), sq.h.phi_inv(s.s1, x.f1)};
        };
        d.tau_inv = [&](const ChainCommaMorphism& s) {
            return ChainCommaMorphism{lx, f, sq.k.phi(s.s0, f.f0), sq.h.phi(s.s1, f.f1)};
        };
        d.valid_left = [&](const ChainCommaMorphism& s) { return c.commutes(s); };
        d.valid_right = [&](const ChainCommaMorphism& s) { return c2.commutes(s); };
        auto o = check_bijection(bij, d, rng, cfg.limit);
        ++(o.exhaustive ? st.exhaustive : st.sampled);
        auto s = random_comma_hom(rng, CommaHomSpace(c, f, random_comma_object(rng, c, cfg.bounds)));
        sqr.expect(c2.commutes(ChainCommaMorphism{ehk(c, c2, sq, s.src), ehk(c, c2, sq, s.tgt),
                                                  sq.k.u_mor(s.s0), sq.h.u_mor(s.s1)}),
                   d.where);
    }
    if (stats) *stats = st;
    return rep;
}

}  // namespace commacat
