#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "adjoints.hpp"

namespace commacat {

// Laxity data of U and the colaxity of F, for the pointwise tensor on M↓U.
struct LaxStructure {
    std::function<ChainMap(const ChainComplex&, const ChainComplex&)> psi;  // U a ⊗ U b → U(a ⊗ b)
    ChainMap psi_unit;                                                      // S0 → U(S0)
    std::function<ChainMap(const ChainComplex&, const ChainComplex&)> colax;  // F(m ⊗ m') → F m ⊗ F m'
};

// Only the identity adjunction carries lax data here; Hom(P, -) would need a
// coalgebra structure on P.
inline std::optional<LaxStructure> lax_structure(const ChainAdjunction& adj) {
    if (adj.name != "identity") return std::nullopt;
    Prime p = adj.m.prime();
    auto id2 = [](const ChainComplex& a, const ChainComplex& b) { return ChainMap::identity(tensor_chain(a, b)); };
    return LaxStructure{id2, ChainMap::identity(ChainComplex::sphere(p, 0)), id2};
}

class MonoidalComma {
public:
    MonoidalComma(const ChainComma& c, LaxStructure lax) : c_(c), lax_(std::move(lax)) {}

    static MonoidalComma of(const ChainComma& c) {
        auto lax = lax_structure(c.adj());
        if (!lax) throw std::invalid_argument("adjunction '" + c.adj().name + "' has no lax monoidal structure");
        return MonoidalComma(c, *lax);
    }

    const ChainComma& comma() const { return c_; }
    const LaxStructure& lax() const { return lax_; }

    // F⊗G = [F⁰⊗G⁰, F¹⊗G¹, ψ ∘ (π_F ⊗ π_G)]
    ChainCommaObject tensor(const ChainCommaObject& f, const ChainCommaObject& g) const {
        return c_.make_object(tensor_chain(f.f0, g.f0), tensor_chain(f.f1, g.f1),
                              compose(lax_.psi(f.f1, g.f1), tensor_maps(f.pi, g.pi)));
    }
    ChainCommaMorphism tensor(const ChainCommaMorphism& s, const ChainCommaMorphism& t) const {
        return c_.make_morphism(tensor(s.src, t.src), tensor(s.tgt, t.tgt), tensor_maps(s.s0, t.s0),
                                tensor_maps(s.s1, t.s1));
    }
    ChainCommaObject unit() const {
        Prime p = c_.m().prime();
        return c_.make_object(ChainComplex::sphere(p, 0), ChainComplex::sphere(p, 0), lax_.psi_unit);
    }

    ChainCommaMorphism associator(const ChainCommaObject& f, const ChainCommaObject& g,
                                  const ChainCommaObject& h) const {
        return c_.make_morphism(tensor(tensor(f, g), h), tensor(f, tensor(g, h)), commacat::associator(f.f0, g.f0, h.f0),
                                commacat::associator(f.f1, g.f1, h.f1));
    }
    ChainCommaMorphism left_unitor(const ChainCommaObject& f) const {
        return c_.make_morphism(tensor(unit(), f), f, commacat::left_unitor(f.f0), commacat::left_unitor(f.f1));
    }
    ChainCommaMorphism right_unitor(const ChainCommaObject& f) const {
        return c_.make_morphism(tensor(f, unit()), f, commacat::right_unitor(f.f0), commacat::right_unitor(f.f1));
    }
    ChainCommaMorphism braiding(const ChainCommaObject& f, const ChainCommaObject& g) const {
        return c_.make_morphism(tensor(f, g), tensor(g, f), commacat::braiding(f.f0, g.f0),
                                commacat::braiding(f.f1, g.f1));
    }

    // ι(a) ⊗ ι(b) → ι(a ⊗ b), components [ψ, id].
    ChainCommaMorphism iota_laxity(const ChainComplex& a, const ChainComplex& b) const {
        return c_.make_morphism(tensor(c_.iota(a), c_.iota(b)), c_.iota(tensor_chain(a, b)), lax_.psi(a, b),
                                ChainMap::identity(tensor_chain(a, b)));
    }
    // F⁺(m ⊗ m') → F⁺m ⊗ F⁺m', components [id, ψ̃].
    ChainCommaMorphism fplus_colaxity(const ChainComplex& m, const ChainComplex& m2) const {
        return c_.make_morphism(c_.Fplus(tensor_chain(m, m2)), tensor(c_.Fplus(m), c_.Fplus(m2)),
                                ChainMap::identity(tensor_chain(m, m2)), lax_.colax(m, m2));
    }

    // ---- internal hom ----

    struct HomData {
        ChainCommaObject object;  // [P, HOM(F¹,G¹), p¹]
        ConeOf<ChainBackend> cone;  // legs[0]: P → HOM(F⁰,G⁰), legs[1] = p¹
    };

    // P = HOM(F⁰,G⁰) ×_{HOM(F⁰,U G¹)} U HOM(F¹,G¹), the second leg being
    // HOM(π_F, U G¹) ∘ δ̄ with δ = U(ev) ∘ ψ.
    HomData hom_r_data(const ChainCommaObject& f, const ChainCommaObject& g) const {
        auto h1 = hom_chain(f.f1, g.f1);
        auto uh1 = c_.U(h1);
        auto delta = compose(c_.U(evaluation(f.f1, g.f1)), lax_.psi(h1, f.f1));
        auto delta_bar = curry(delta, uh1, c_.U(f.f1));
        auto leg0 = hom_post(f.f0, g.pi);
        auto leg1 = compose(hom_pre(f.pi, c_.U(g.f1)), delta_bar);
        auto cone = c_.m().pullback(leg0, leg1);
        return {c_.make_object(cone.apex, h1, cone.legs[1]), cone};
    }
    ChainCommaObject hom_r(const ChainCommaObject& f, const ChainCommaObject& g) const {
        return hom_r_data(f, g).object;
    }
    // The chain tensor is symmetric, so the left hom is the same object; its
    // transposes go through the braiding.
    ChainCommaObject hom_l(const ChainCommaObject& f, const ChainCommaObject& g) const { return hom_r(f, g); }

    // σ: E ⊗ F → G  ↦  [θ, σ̄¹]: E → hom_r(F, G)
    ChainCommaMorphism transpose(const ChainCommaMorphism& s, const ChainCommaObject& e,
                                 const ChainCommaObject& f) const {
        const auto& g = s.tgt;
        auto hd = hom_r_data(f, g);
        auto s0bar = curry(s.s0, e.f0, f.f0);
        auto s1bar = curry(s.s1, e.f1, f.f1);
        auto theta = c_.m().mediate(hd.cone, {s0bar, compose(c_.U(s1bar), e.pi)});
        if (!theta) throw std::logic_error("hom transpose: components do not meet in the pullback");
        return c_.make_morphism(e, hd.object, *theta, s1bar);
    }
    // τ: E → hom_r(F, G)  ↦  E ⊗ F → G
    ChainCommaMorphism untranspose(const ChainCommaMorphism& t, const ChainCommaObject& f,
                                   const ChainCommaObject& g) const {
        auto hd = hom_r_data(f, g);
        auto s0 = uncurry(compose(hd.cone.legs[0], t.s0), f.f0, g.f0);
        auto s1 = uncurry(t.s1, f.f1, g.f1);
        return c_.make_morphism(tensor(t.src, f), g, s0, s1);
    }
    // σ: F ⊗ E → G  ↦  E → hom_l(F, G)
    ChainCommaMorphism transpose_l(const ChainCommaMorphism& s, const ChainCommaObject& f,
                                   const ChainCommaObject& e) const {
        return transpose(c_.compose(s, braiding(e, f)), e, f);
    }

    // ---- pushout products ----

    // σ □ θ out of (B⊗C) ∪_{A⊗C} (A⊗D), computed in the comma category.
    ChainCommaMorphism pushout_product(const ChainCommaMorphism& s, const ChainCommaMorphism& t) const {
        auto po = c_.pushout(tensor(s, c_.identity(t.src)), tensor(c_.identity(s.src), t));
        auto k = c_.comediate(po, {tensor(c_.identity(s.tgt), t), tensor(s, c_.identity(t.tgt))});
        if (!k) throw std::logic_error("pushout product: no induced map");
        return *k;
    }

    // The same map assembled from the two backend pushout products; π of the
    // source is induced through the M-pushout into U of the A-pushout.
    ChainCommaMorphism pushout_product_componentwise(const ChainCommaMorphism& s, const ChainCommaMorphism& t) const {
        const auto& m = c_.m();
        auto c0 = chain_pushout_product(s.s0, t.s0);
        auto c1 = chain_pushout_product(s.s1, t.s1);
        auto bc = tensor(s.tgt, t.src);
        auto ad = tensor(s.src, t.tgt);
        auto pi = m.comediate(c0.cocone, {compose(c_.U(c1.cocone.legs[0]), bc.pi), compose(c_.U(c1.cocone.legs[1]), ad.pi)});
        if (!pi) throw std::logic_error("pushout product: π does not descend");
        auto src = c_.make_object(c0.cocone.apex, c1.cocone.apex, *pi);
        return c_.make_morphism(src, tensor(s.tgt, t.tgt), c0.corner, c1.corner);
    }

    struct ChainPushoutProduct {
        CoconeOf<ChainBackend> cocone;  // legs[0]: B⊗C, legs[1]: A⊗D
        ChainMap corner;
    };
    static ChainPushoutProduct chain_pushout_product(const ChainMap& f, const ChainMap& g) {
        ChainBackend b(f.prime());
        auto ida = ChainMap::identity(f.source()), idb = ChainMap::identity(f.target());
        auto idc = ChainMap::identity(g.source()), idd = ChainMap::identity(g.target());
        auto po = b.pushout(tensor_maps(f, idc), tensor_maps(ida, g));
        auto k = b.comediate(po, {tensor_maps(idb, g), tensor_maps(f, idd)});
        if (!k) throw std::logic_error("pushout product: no induced map");
        return {po, *k};
    }

private:
    ChainComma c_;
    LaxStructure lax_;
};

struct MonoidalSuiteConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 50;
    GenBounds bounds{2, 2, 0, 1};
    std::uint64_t limit = 1u << 16;
};

// Coherence, monoidal functors, internal hom, pushout products and the
// monoidal model axioms for Inj and LInj on seeded samples.
inline Report monoidal_suite(const MonoidalComma& mc, const MonoidalSuiteConfig& cfg) {
    Report rep;
    const auto& c = mc.comma();
    Prime p = c.m().prime();
    const auto& b = cfg.bounds;
    auto& coh = rep.add("pentagon and triangle");
    auto& unit = rep.add("unit laws");
    auto& fun = rep.add("monoidal functors iota, Pi0, Pi1, Fplus");
    auto& hom = rep.add("hom-tensor adjunction");
    auto& pp = rep.add("pushout product: component formula = comma pushout corner");
    auto& kpp = rep.add("Pi0, Pi1 commute with pushout products");
    auto& ax = rep.add("pushout-product axiom (inj, linj)");
    auto& ua = rep.add("unit axiom");
    auto& sg = rep.add("sign regression");
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i);
        std::string tag = " #" + std::to_string(i);
        auto f = random_comma_object(rng, c, b);
        auto g = random_comma_object(rng, c, b);
        auto h = random_comma_object(rng, c, b);
        auto k = random_comma_object(rng, c, b);

        auto id = [&](const ChainCommaObject& x) { return c.identity(x); };
        auto lhs = c.compose(mc.associator(f, g, mc.tensor(h, k)), mc.associator(mc.tensor(f, g), h, k));
        auto rhs = c.compose(mc.tensor(id(f), mc.associator(g, h, k)),
                             c.compose(mc.associator(f, mc.tensor(g, h), k), mc.tensor(mc.associator(f, g, h), id(k))));
        coh.expect(c.equal(lhs, rhs), "pentagon" + tag);
        coh.expect(c.equal(c.compose(mc.tensor(id(f), mc.left_unitor(g)), mc.associator(f, mc.unit(), g)),
                           mc.tensor(mc.right_unitor(f), id(g))),
                   "triangle" + tag);
        coh.expect(c.equal(c.compose(mc.braiding(g, f), mc.braiding(f, g)), id(mc.tensor(f, g))), "braiding" + tag);

        unit.expect(c.inverse(mc.left_unitor(f)).has_value() && c.inverse(mc.right_unitor(f)).has_value(),
                    "unitors invertible" + tag);

        auto pa = random_complex(rng, p, b), pb = random_complex(rng, p, b);
        auto lax = mc.iota_laxity(pa, pb);
        fun.expect(c.commutes(lax), "iota laxity square" + tag);
        auto fa = random_chain_map(rng, pa, random_complex(rng, p, b));
        auto fb = random_chain_map(rng, pb, random_complex(rng, p, b));
        fun.expect(c.equal(c.compose(c.iota(tensor_maps(fa, fb)), lax),
                           c.compose(mc.iota_laxity(fa.target(), fb.target()), mc.tensor(c.iota(fa), c.iota(fb)))),
                   "iota laxity natural" + tag);
        auto fg = mc.tensor(f, g);
        fun.expect(fg.f0 == tensor_chain(f.f0, g.f0) && fg.f1 == tensor_chain(f.f1, g.f1), "Pi0/Pi1 strong on objects" + tag);
        auto s1 = random_comma_hom(rng, CommaHomSpace(c, f, h));
        auto s2 = random_comma_hom(rng, CommaHomSpace(c, g, k));
        auto st = mc.tensor(s1, s2);
        fun.expect(st.s0 == tensor_maps(s1.s0, s2.s0) && st.s1 == tensor_maps(s1.s1, s2.s1),
                   "Pi0/Pi1 strong on morphisms" + tag);
        auto colax = mc.fplus_colaxity(pa, pb);
        fun.expect(c.inverse(colax).has_value(), "Fplus colaxity invertible" + tag);

        // Hom(E ⊗ F, G) ≅ Hom(E, hom_r(F, G))
        {
            CommaHomSpace hl(c, mc.tensor(f, g), h);
            CommaHomSpace hr(c, f, mc.hom_r(g, h));
            BijectionData<ChainCommaMorphism, ChainCommaMorphism> d;
            d.where = "hom-tensor" + tag;
            d.left_size = hl.size(cfg.limit + 1);
            d.right_size = hr.size(cfg.limit + 1);
            d.enumerate_left = [&](std::uint64_t l) { return hl.enumerate(l); };
            d.enumerate_right = [&](std::uint64_t l) { return hr.enumerate(l); };
            d.sample_left = [&](Rng& r) { return random_comma_hom(r, hl); };
            d.sample_right = [&](Rng& r) { return random_comma_hom(r, hr); };
            d.tau = [&](const ChainCommaMorphism& x) { return mc.transpose(x, f, g); };
            d.tau_inv = [&](const ChainCommaMorphism& x) { return mc.untranspose(x, g, h); };
            d.valid_left = [&](const ChainCommaMorphism& x) { return c.commutes(x); };
            d.valid_right = [&](const ChainCommaMorphism& x) { return c.commutes(x); };
            check_bijection(hom, d, rng, cfg.limit);
            // naturality in E along E' → E
            auto e2 = random_comma_object(rng, c, b);
            auto u = random_comma_hom(rng, CommaHomSpace(c, e2, f));
            auto x = random_comma_hom(rng, hl);
            hom.expect(c.equal(mc.transpose(c.compose(x, mc.tensor(u, id(g))), e2, g), c.compose(mc.transpose(x, f, g), u)),
                       "naturality in E" + tag);
        }

        // pushout products of cofibrations, trivial on one side or not
        auto raw1 = random_comma_morphism(rng, c, b);
        auto raw2 = random_comma_morphism(rng, c, b);
        for (auto sid : {StructureId::Inj, StructureId::LInj}) {
            auto cof1 = factorize_comma(c, raw1, sid, FactorKind::CofThenTrivFib).l;
            auto cof2 = factorize_comma(c, raw2, sid, FactorKind::CofThenTrivFib).l;
            auto tcof2 = factorize_comma(c, raw2, sid, FactorKind::TrivCofThenFib).l;
            std::string w = std::string(to_string(sid)) + tag;
            auto a = mc.pushout_product(cof1, cof2);
            auto a2 = mc.pushout_product(cof1, tcof2);
            auto a3 = mc.pushout_product(tcof2, cof1);
            ax.expect(classify_comma(c, a, sid).is_cof, "cof □ cof is cof, " + w);
            ax.expect(classify_comma(c, a2, sid).trivial_cof(), "cof □ trivcof is trivial, " + w);
            ax.expect(classify_comma(c, a3, sid).trivial_cof(), "trivcof □ cof is trivial, " + w);
            if (sid == StructureId::Inj) {
                pp.expect(c.equal(a, mc.pushout_product_componentwise(cof1, cof2)), "pair" + tag);
                auto k0 = MonoidalComma::chain_pushout_product(cof1.s0, cof2.s0);
                auto k1 = MonoidalComma::chain_pushout_product(cof1.s1, cof2.s1);
                kpp.expect(a.s0 == k0.corner && a.s1 == k1.corner, "K(f□g) = K(f)□K(g)" + tag);
            }
            // unit axiom: the unit is cofibrant, so Q(I) = I and λ_X is a we for cofibrant X
            auto x = cof1.tgt;
            if (is_cofibrant(c, x, sid))
                ua.expect(classify_comma(c, mc.left_unitor(x), sid).is_we, "λ is a we, " + w);
            ua.expect(is_cofibrant(c, mc.unit(), sid), "unit cofibrant, " + w);
        }

        // tensors and homs of random complexes must be complexes, structure maps chain maps
        try {
            auto x = random_complex(rng, p, b), y = random_complex(rng, p, b), z = random_complex(rng, p, b);
            auto t = tensor_chain(x, y);
            auto hm = hom_chain(x, y);
            auto br = commacat::braiding(x, y);
            sg.expect(compose(commacat::braiding(y, x), br) == ChainMap::identity(t), "braiding involutive" + tag);
            auto as = commacat::associator(x, y, z);
            sg.expect(as.source().total_dim() == as.target().total_dim(), "associator" + tag);
            sg.expect(uncurry(curry(evaluation(x, y), hm, x), x, y) == evaluation(x, y), "curry/uncurry" + tag);
        } catch (const std::exception& e) {
            sg.expect(false, std::string(e.what()) + tag);
        }
    }
    // tiny instances with known counts
    auto i0 = c.iota(ChainComplex::sphere(p, 0));
    hom.expect(CommaHomSpace(c, mc.tensor(i0, i0), i0).size() == p.value() &&
                   CommaHomSpace(c, i0, mc.hom_r(i0, i0)).size() == p.value(),
               "|Hom(ιS0⊗ιS0, ιS0)| = |Hom(ιS0, hom_r(ιS0, ιS0))| = p");
    unit.expect(c.equal_objects(mc.tensor(i0, i0), i0), "ι(S0) ⊗ ι(S0) = ι(S0)");
    return rep;
}

}  // namespace commacat
