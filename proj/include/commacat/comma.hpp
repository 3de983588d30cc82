#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adjunction.hpp"
#include "backend.hpp"
#include "core.hpp"

namespace commacat {

// M↓U for F ⊣ U, U: A → M. Objects [F⁰, F¹, π: F⁰ → U F¹], morphisms
// [σ⁰, σ¹] with π_G σ⁰ = U(σ¹) π_F.
template <ModelBackend BM, ModelBackend BA>
class Comma {
public:
    using Adj = Adjunction<BM, BA>;
    using MObj = typename BM::Object;
    using MMor = typename BM::Morphism;
    using AObj = typename BA::Object;
    using AMor = typename BA::Morphism;

    struct Object {
        MObj f0;
        AObj f1;
        MMor pi;
    };
    struct Morphism {
        Object src;
        Object tgt;
        MMor s0;
        AMor s1;
    };

    explicit Comma(Adj adj) : adj_(std::move(adj)) {}

    const Adj& adj() const { return adj_; }
    const BM& m() const { return adj_.m; }
    const BA& a() const { return adj_.a; }
    MObj U(const AObj& y) const { return adj_.u_obj(y); }
    MMor U(const AMor& g) const { return adj_.u_mor(g); }
    AObj F(const MObj& x) const { return adj_.f_obj(x); }
    AMor F(const MMor& f) const { return adj_.f_mor(f); }
    AMor phi(const MMor& f, const AObj& y) const { return adj_.phi(f, y); }
    MMor phi_inv(const AMor& g, const MObj& x) const { return adj_.phi_inv(g, x); }

    Object make_object(MObj f0, AObj f1, MMor pi) const {
        if (!m().equal_objects(m().source(pi), f0) || !m().equal_objects(m().target(pi), U(f1))) {
            throw std::invalid_argument("structure map does not run F0 → U(F1)");
        }
        return Object{std::move(f0), std::move(f1), std::move(pi)};
    }

    bool commutes(const Morphism& s) const {
        return m().equal(m().compose(s.tgt.pi, s.s0), m().compose(U(s.s1), s.src.pi));
    }
    // The adjoint square φ(π_G) F(σ⁰) = σ¹ φ(π_F) in A.
    bool transposed_commutes(const Morphism& s) const {
        return a().equal(a().compose(phi(s.tgt.pi, s.tgt.f1), F(s.s0)), a().compose(s.s1, phi(s.src.pi, s.src.f1)));
    }

    Morphism make_morphism(Object src, Object tgt, MMor s0, AMor s1) const {
        if (!m().equal_objects(m().source(s0), src.f0) || !m().equal_objects(m().target(s0), tgt.f0) ||
            !a().equal_objects(a().source(s1), src.f1) || !a().equal_objects(a().target(s1), tgt.f1)) {
            throw std::invalid_argument("comma morphism components have wrong endpoints");
        }
        Morphism s{std::move(src), std::move(tgt), std::move(s0), std::move(s1)};
        if (!commutes(s)) throw std::invalid_argument("comma morphism square does not commute");
        return s;
    }

    Object source(const Morphism& s) const { return s.src; }
    Object target(const Morphism& s) const { return s.tgt; }
    Morphism identity(const Object& x) const { return Morphism{x, x, m().identity(x.f0), a().identity(x.f1)}; }
    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (!equal_objects(f.tgt, g.src)) throw std::invalid_argument("comma compose: endpoints do not match");
        return Morphism{f.src, g.tgt, m().compose(g.s0, f.s0), a().compose(g.s1, f.s1)};
    }
    bool equal_objects(const Object& x, const Object& y) const {
        return m().equal_objects(x.f0, y.f0) && a().equal_objects(x.f1, y.f1) && m().equal(x.pi, y.pi);
    }
    bool equal(const Morphism& f, const Morphism& g) const {
        return equal_objects(f.src, g.src) && equal_objects(f.tgt, g.tgt) && m().equal(f.s0, g.s0) &&
               a().equal(f.s1, g.s1);
    }
    std::optional<Morphism> inverse(const Morphism& s) const {
        auto i0 = m().inverse(s.s0);
        auto i1 = a().inverse(s.s1);
        if (!i0 || !i1) return std::nullopt;
        return Morphism{s.tgt, s.src, *i0, *i1};
    }

    // ---- canonical functors ----
    Object iota(const AObj& p) const { return Object{U(p), p, m().identity(U(p))}; }
    Morphism iota(const AMor& f) const { return Morphism{iota(a().source(f)), iota(a().target(f)), U(f), f}; }
    Object L1(const AObj& p) const { return Object{m().initial(), p, m().from_initial(U(p))}; }
    Morphism L1(const AMor& f) const {
        return Morphism{L1(a().source(f)), L1(a().target(f)), m().identity(m().initial()), f};
    }
    Object R0(const MObj& x) const { return Object{x, a().terminal(), m().compose(terminal_iso(), m().to_terminal(x))}; }
    Morphism R0(const MMor& f) const {
        return Morphism{R0(m().source(f)), R0(m().target(f)), f, a().identity(a().terminal())};
    }
    Object Fplus(const MObj& x) const { return Object{x, F(x), adj_.unit(x)}; }
    Morphism Fplus(const MMor& f) const { return Morphism{Fplus(m().source(f)), Fplus(m().target(f)), f, F(f)}; }
    static const MObj& Pi0(const Object& x) { return x.f0; }
    static const AObj& Pi1(const Object& x) { return x.f1; }
    static const MMor& Pi0(const Morphism& s) { return s.s0; }
    static const AMor& Pi1(const Morphism& s) { return s.s1; }
    static const MMor& PiArr(const Object& x) { return x.pi; }

    // ---- limits and colimits, level-wise ----
    Object terminal() const { return Object{m().terminal(), a().terminal(), terminal_iso()}; }
    Object initial() const { return Object{m().initial(), a().initial(), m().from_initial(U(a().initial()))}; }
    Morphism to_terminal(const Object& x) const {
        return Morphism{x, terminal(), m().to_terminal(x.f0), a().to_terminal(x.f1)};
    }
    Morphism from_initial(const Object& x) const {
        return Morphism{initial(), x, m().from_initial(x.f0), a().from_initial(x.f1)};
    }

    using CommaCone = Cone<Object, Morphism>;
    using CommaCocone = Cocone<Object, Morphism>;

    CommaCone product(const Object& x, const Object& y) const {
        auto c0 = m().product(x.f0, y.f0);
        auto c1 = a().product(x.f1, y.f1);
        return assemble_cone(c0, c1, {x, y}, {m().compose(x.pi, c0.legs[0]), m().compose(y.pi, c0.legs[1])});
    }
    CommaCocone coproduct(const Object& x, const Object& y) const {
        auto c0 = m().coproduct(x.f0, y.f0);
        auto c1 = a().coproduct(x.f1, y.f1);
        return assemble_cocone(c0, c1, {x, y},
                               {a().compose(c1.legs[0], phi(x.pi, x.f1)), a().compose(c1.legs[1], phi(y.pi, y.f1))});
    }
    CommaCone pullback(const Morphism& f, const Morphism& g) const {
        if (!equal_objects(f.tgt, g.tgt)) throw std::invalid_argument("comma pullback: not a cospan");
        auto c0 = m().pullback(f.s0, g.s0);
        auto c1 = a().pullback(f.s1, g.s1);
        return assemble_cone(c0, c1, {f.src, g.src},
                             {m().compose(f.src.pi, c0.legs[0]), m().compose(g.src.pi, c0.legs[1])});
    }
    CommaCocone pushout(const Morphism& f, const Morphism& g) const {
        if (!equal_objects(f.src, g.src)) throw std::invalid_argument("comma pushout: not a span");
        auto c0 = m().pushout(f.s0, g.s0);
        auto c1 = a().pushout(f.s1, g.s1);
        return assemble_cocone(
            c0, c1, {f.tgt, g.tgt},
            {a().compose(c1.legs[0], phi(f.tgt.pi, f.tgt.f1)), a().compose(c1.legs[1], phi(g.tgt.pi, g.tgt.f1))});
    }
    CommaCone equalizer(const Morphism& f, const Morphism& g) const {
        auto c0 = m().equalizer(f.s0, g.s0);
        auto c1 = a().equalizer(f.s1, g.s1);
        return assemble_cone(c0, c1, {f.src}, {m().compose(f.src.pi, c0.legs[0])});
    }
    CommaCocone coequalizer(const Morphism& f, const Morphism& g) const {
        auto c0 = m().coequalizer(f.s0, g.s0);
        auto c1 = a().coequalizer(f.s1, g.s1);
        return assemble_cocone(c0, c1, {f.tgt}, {a().compose(c1.legs[0], phi(f.tgt.pi, f.tgt.f1))});
    }

    std::optional<Morphism> mediate(const CommaCone& cone, const std::vector<Morphism>& maps) const {
        if (maps.empty() || maps.size() != cone.legs.size()) throw std::invalid_argument("comma mediate: arity");
        ConeOf<BM> c0{cone.apex.f0, {}};
        ConeOf<BA> c1{cone.apex.f1, {}};
        std::vector<MMor> m0;
        std::vector<AMor> m1;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            c0.legs.push_back(cone.legs[i].s0);
            c1.legs.push_back(cone.legs[i].s1);
            m0.push_back(maps[i].s0);
            m1.push_back(maps[i].s1);
        }
        auto h0 = m().mediate(c0, m0);
        auto h1 = a().mediate(c1, m1);
        if (!h0 || !h1) return std::nullopt;
        Morphism h{maps[0].src, cone.apex, *h0, *h1};
        if (!commutes(h)) return std::nullopt;
        return h;
    }
    std::optional<Morphism> comediate(const CommaCocone& cocone, const std::vector<Morphism>& maps) const {
        if (maps.empty() || maps.size() != cocone.legs.size()) throw std::invalid_argument("comma comediate: arity");
        CoconeOf<BM> c0{cocone.apex.f0, {}};
        CoconeOf<BA> c1{cocone.apex.f1, {}};
        std::vector<MMor> m0;
        std::vector<AMor> m1;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            c0.legs.push_back(cocone.legs[i].s0);
            c1.legs.push_back(cocone.legs[i].s1);
            m0.push_back(maps[i].s0);
            m1.push_back(maps[i].s1);
        }
        auto h0 = m().comediate(c0, m0);
        auto h1 = a().comediate(c1, m1);
        if (!h0 || !h1) return std::nullopt;
        Morphism h{cocone.apex, maps[0].tgt, *h0, *h1};
        if (!commutes(h)) return std::nullopt;
        return h;
    }

    // ---- corner maps ----
    // δ: F⁰ → Q = U(F¹) ×_{U(G¹)} G⁰; legs[0]: Q → U F¹, legs[1]: Q → G⁰.
    struct PullbackCorner {
        ConeOf<BM> cone;
        MMor delta;
    };
    // κ: R = F¹ ∪^{F(F⁰)} F(G⁰) → G¹; legs[0]: F¹ → R, legs[1]: F G⁰ → R.
    struct PushoutCorner {
        CoconeOf<BA> cocone;
        AMor kappa;
    };

    PullbackCorner pullback_corner(const Morphism& s) const {
        auto cone = m().pullback(U(s.s1), s.tgt.pi);
        auto d = m().mediate(cone, {s.src.pi, s.s0});
        if (!d) throw std::logic_error("pullback corner: square does not commute");
        return {cone, *d};
    }
    PushoutCorner pushout_corner(const Morphism& s) const {
        auto cocone = a().pushout(phi(s.src.pi, s.src.f1), F(s.s0));
        auto k = a().comediate(cocone, {s.s1, phi(s.tgt.pi, s.tgt.f1)});
        if (!k) throw std::logic_error("pushout corner: square does not commute");
        return {cocone, *k};
    }

private:
    // U(*_A) is terminal in M; the comparison *_M → U(*_A).
    MMor terminal_iso() const {
        auto ut = U(a().terminal());
        auto t = m().terminal();
        if (!m().equal_objects(ut, t)) throw std::logic_error("U(*) is not presented as the terminal object");
        return m().identity(t);
    }

    // π of a limit: mediate into the U-image of the A-cone (U preserves limits).
    CommaCone assemble_cone(const ConeOf<BM>& c0, const ConeOf<BA>& c1, const std::vector<Object>& vertices,
                            const std::vector<MMor>& to_u) const {
        ConeOf<BM> ucone{U(c1.apex), {}};
        for (const auto& l : c1.legs) ucone.legs.push_back(U(l));
        auto pi = m().mediate(ucone, to_u);
        if (!pi) throw std::logic_error("comma limit: U-image of the cone is not universal");
        Object apex{c0.apex, c1.apex, *pi};
        CommaCone out{apex, {}};
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out.legs.push_back(Morphism{apex, vertices[i], c0.legs[i], c1.legs[i]});
        return out;
    }
    // π of a colimit: φ⁻¹ of the map out of the F-image of the M-cocone.
    CommaCocone assemble_cocone(const CoconeOf<BM>& c0, const CoconeOf<BA>& c1, const std::vector<Object>& vertices,
                                const std::vector<AMor>& from_f) const {
        CoconeOf<BA> fcocone{F(c0.apex), {}};
        for (const auto& l : c0.legs) fcocone.legs.push_back(F(l));
        auto k = a().comediate(fcocone, from_f);
        if (!k) throw std::logic_error("comma colimit: F-image of the cocone is not universal");
        Object apex{c0.apex, c1.apex, phi_inv(*k, c0.apex)};
        CommaCocone out{apex, {}};
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out.legs.push_back(Morphism{vertices[i], apex, c0.legs[i], c1.legs[i]});
        return out;
    }

    Adj adj_;
};

// ---- classification ----------------------------------------------------------

// Flags of σ in structure s, straight from the class definitions.
template <ModelBackend BM, ModelBackend BA>
ClassFlags classify_comma(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Morphism& s, StructureId id) {
    const auto k0 = c.m().classify(s.s0);
    const auto k1 = c.a().classify(s.s1);
    auto delta = [&] { return c.m().classify(c.pullback_corner(s).delta); };
    auto kappa = [&] { return c.a().classify(c.pushout_corner(s).kappa); };
    auto is_iso_m = [&](const auto& f) { return c.m().inverse(f).has_value(); };
    auto is_iso_a = [&](const auto& f) { return c.a().inverse(f).has_value(); };
    ClassFlags out;
    switch (id) {
        case StructureId::Inj:
            out.is_cof = k0.is_cof && k1.is_cof;
            out.is_fib = k1.is_fib && delta().is_fib;
            out.is_we = k0.is_we && k1.is_we;
            break;
        case StructureId::Proj:
            out.is_cof = k0.is_cof && kappa().is_cof;
            out.is_fib = k0.is_fib && k1.is_fib;
            out.is_we = k0.is_we && k1.is_we;
            break;
        case StructureId::LInj:
            out.is_cof = k0.is_cof && k1.is_cof;
            out.is_fib = k1.is_fib && delta().trivial_fib();
            out.is_we = k1.is_we;
            break;
        case StructureId::LProj:
            out.is_cof = k0.is_cof && kappa().is_cof;
            out.is_fib = k0.is_fib && k1.is_fib && delta().is_we;
            out.is_we = k1.is_we;
            break;
        case StructureId::RInj:
            out.is_cof = k0.is_cof && k1.is_cof && kappa().is_we;
            out.is_fib = k1.is_fib && delta().is_fib;
            out.is_we = k0.is_we;
            break;
        case StructureId::RProj:
            out.is_cof = k0.is_cof && kappa().trivial_cof();
            out.is_fib = k0.is_fib && k1.is_fib;
            out.is_we = k0.is_we;
            break;
        case StructureId::Strong0:
            out.is_cof = k0.is_cof && is_iso_a(c.pushout_corner(s).kappa);
            out.is_fib = k0.is_fib;
            out.is_we = k0.is_we;
            break;
        case StructureId::Strong1:
            out.is_cof = k1.is_cof;
            out.is_fib = k1.is_fib && is_iso_m(c.pullback_corner(s).delta);
            out.is_we = k1.is_we;
            break;
    }
    return out;
}

// ---- duality: (M↓U)^op ≅ A^op↓F^op ------------------------------------------

template <ModelBackend BM, ModelBackend BA>
using DualComma = Comma<Opposite<BA>, Opposite<BM>>;

template <ModelBackend BM, ModelBackend BA>
DualComma<BM, BA> dual_comma(const Comma<BM, BA>& c) {
    return DualComma<BM, BA>(dual_adjunction(c.adj()));
}

template <ModelBackend BM, ModelBackend BA>
typename DualComma<BM, BA>::Object to_dual(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Object& x) {
    using OA = OpMorphism<typename BA::Morphism>;
    return {x.f1, x.f0, OA{c.phi(x.pi, x.f1)}};
}

// σ: F → G becomes σ': G' → F' with σ'⁰ = σ¹ and σ'¹ = σ⁰ reversed.
template <ModelBackend BM, ModelBackend BA>
typename DualComma<BM, BA>::Morphism to_dual(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Morphism& s) {
    using OA = OpMorphism<typename BA::Morphism>;
    using OM = OpMorphism<typename BM::Morphism>;
    return {to_dual(c, s.tgt), to_dual(c, s.src), OA{s.s1}, OM{s.s0}};
}

template <ModelBackend BM, ModelBackend BA>
typename Comma<BM, BA>::Object from_dual(const Comma<BM, BA>& c, const typename DualComma<BM, BA>::Object& x) {
    return {x.f1, x.f0, c.phi_inv(x.pi.base, x.f1)};
}

template <ModelBackend BM, ModelBackend BA>
typename Comma<BM, BA>::Morphism from_dual(const Comma<BM, BA>& c, const typename DualComma<BM, BA>::Morphism& s) {
    return {from_dual(c, s.tgt), from_dual(c, s.src), s.s1.base, s.s0.base};
}

// Second route: classify σ' in the dual structure and swap cof/fib back.
template <ModelBackend BM, ModelBackend BA>
ClassFlags classify_via_dual(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Morphism& s, StructureId id) {
    auto d = dual_comma(c);
    return swap_cof_fib(classify_comma(d, to_dual(c, s), dual_structure(id)));
}

// ---- fibrancy, Quillen–Segal objects, isofibration ----------------------------

template <ModelBackend BM, ModelBackend BA>
bool is_fibrant(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Object& x, StructureId id) {
    return classify_comma(c, c.to_terminal(x), id).is_fib;
}

template <ModelBackend BM, ModelBackend BA>
bool is_cofibrant(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Object& x, StructureId id) {
    return classify_comma(c, c.from_initial(x), id).is_cof;
}

template <ModelBackend BM, ModelBackend BA>
bool is_quillen_segal(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Object& x) {
    return c.m().classify(x.pi).is_we;
}

// G_u = [cod u, F¹, π_F u⁻¹] with the isomorphism [u, id]: F → G_u.
template <ModelBackend BM, ModelBackend BA>
std::pair<typename Comma<BM, BA>::Object, typename Comma<BM, BA>::Morphism> iso_lift(
    const Comma<BM, BA>& c, const typename Comma<BM, BA>::Object& x, const typename BM::Morphism& u) {
    if (!c.m().equal_objects(c.m().source(u), x.f0)) throw std::invalid_argument("iso_lift: u does not start at F0");
    auto inv = c.m().inverse(u);
    if (!inv) throw std::invalid_argument("iso_lift: u is not invertible");
    auto g = c.make_object(c.m().target(u), x.f1, c.m().compose(x.pi, *inv));
    return {g, c.make_morphism(x, g, u, c.a().identity(x.f1))};
}

// ---- E(H, K) ------------------------------------------------------------------

// A square of right adjoints U'∘H = K∘U with H: A → A', K: M → M'.
// Each side is an Adjunction whose "U" is the right adjoint.
template <ModelBackend BM, ModelBackend BA, ModelBackend BM2, ModelBackend BA2>
struct AdjunctionSquare {
    Adjunction<BA2, BA> h;  // H: A → A', H_* its left adjoint
    Adjunction<BM2, BM> k;  // K: M → M', K_* its left adjoint
};

template <ModelBackend BM, ModelBackend BA, ModelBackend BM2, ModelBackend BA2>
typename Comma<BM2, BA2>::Object ehk(const Comma<BM, BA>&, const Comma<BM2, BA2>& c2,
                                     const AdjunctionSquare<BM, BA, BM2, BA2>& sq,
                                     const typename Comma<BM, BA>::Object& x) {
    return c2.make_object(sq.k.u_obj(x.f0), sq.h.u_obj(x.f1), sq.k.u_mor(x.pi));
}

template <ModelBackend BM, ModelBackend BA, ModelBackend BM2, ModelBackend BA2>
typename Comma<BM2, BA2>::Morphism ehk(const Comma<BM, BA>& c, const Comma<BM2, BA2>& c2,
                                       const AdjunctionSquare<BM, BA, BM2, BA2>& sq,
                                       const typename Comma<BM, BA>::Morphism& s) {
    return c2.make_morphism(ehk(c, c2, sq, s.src), ehk(c, c2, sq, s.tgt), sq.k.u_mor(s.s0), sq.h.u_mor(s.s1));
}

// [X] ↦ [K_* X⁰, H_* X¹, α_*], α = U'(η^H_{X¹}) ∘ π_X, α_* = ε^K ∘ K_*(α).
template <ModelBackend BM, ModelBackend BA, ModelBackend BM2, ModelBackend BA2>
typename Comma<BM, BA>::Object ehk_left(const Comma<BM, BA>& c, const Comma<BM2, BA2>& c2,
                                        const AdjunctionSquare<BM, BA, BM2, BA2>& sq,
                                        const typename Comma<BM2, BA2>::Object& x) {
    auto hx1 = sq.h.f_obj(x.f1);
    auto alpha = c2.m().compose(c2.U(sq.h.unit(x.f1)), x.pi);
    auto target = sq.k.u_obj(c.U(hx1));
    if (!c2.m().equal_objects(c2.m().target(alpha), target)) {
        throw std::invalid_argument("E(H,K): the square U'H = KU does not commute at this object");
    }
    auto alpha_star = sq.k.phi(alpha, c.U(hx1));
    return c.make_object(sq.k.f_obj(x.f0), hx1, alpha_star);
}

template <ModelBackend BM, ModelBackend BA, ModelBackend BM2, ModelBackend BA2>
typename Comma<BM, BA>::Morphism ehk_left(const Comma<BM, BA>& c, const Comma<BM2, BA2>& c2,
                                          const AdjunctionSquare<BM, BA, BM2, BA2>& sq,
                                          const typename Comma<BM2, BA2>::Morphism& s) {
    return c.make_morphism(ehk_left(c, c2, sq, s.src), ehk_left(c, c2, sq, s.tgt), sq.k.f_mor(s.s0),
                           sq.h.f_mor(s.s1));
}

}  // namespace commacat
