#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjoints.hpp"

namespace commacat {

// What the harness needs to know about a model category.
template <class Obj, class Mor>
struct CategoryData {
    std::string name;
    std::function<bool(const Obj&, const Obj&)> equal_objects;
    std::function<bool(const Mor&, const Mor&)> equal;
    std::function<Obj(const Mor&)> source;
    std::function<Obj(const Mor&)> target;
    std::function<Mor(const Mor&, const Mor&)> compose;  // (g, f) ↦ g∘f
    std::function<Mor(const Obj&)> identity;
    std::function<bool(const Mor&)> is_we;
    std::function<bool(const Obj&)> is_fibrant;
};

// A functor between two of the categories at hand.
template <class SO, class SM, class TO, class TM>
struct FunctorData {
    std::string name;
    std::function<TO(const SO&)> obj;
    std::function<TM(const SM&)> mor;
};

template <class AO, class AM, class BO, class BM, class CO, class CM>
FunctorData<AO, AM, CO, CM> then(const FunctorData<AO, AM, BO, BM>& f, const FunctorData<BO, BM, CO, CM>& g) {
    return {g.name + "∘" + f.name, [f, g](const AO& x) { return g.obj(f.obj(x)); },
            [f, g](const AM& x) { return g.mor(f.mor(x)); }};
}

template <class O, class M>
FunctorData<O, M, O, M> identity_functor(const std::string& name) {
    return {"Id_" + name, [](const O& x) { return x; }, [](const M& x) { return x; }};
}

// τ: S ⇒ T with components τ_X: S(X) → T(X).
template <class SO, class SM, class TO, class TM>
struct TwoMorphism {
    FunctorData<SO, SM, TO, TM> source;
    FunctorData<SO, SM, TO, TM> target;
    std::function<TM(const SO&)> component;
};

// Components land where they should and the naturality squares commute.
template <class SO, class SM, class TO, class TM>
void check_two_morphism(Check& chk, const TwoMorphism<SO, SM, TO, TM>& t, const CategoryData<TO, TM>& tgt,
                        const std::vector<SO>& objects, const std::vector<SM>& morphisms,
                        const std::function<SO(const SM&)>& src_of, const std::function<SO(const SM&)>& tgt_of) {
    for (const auto& x : objects) {
        auto c = t.component(x);
        chk.expect(tgt.equal_objects(tgt.source(c), t.source.obj(x)) && tgt.equal_objects(tgt.target(c), t.target.obj(x)),
                   "component endpoints of " + t.source.name + " ⇒ " + t.target.name);
    }
    for (const auto& f : morphisms) {
        auto lhs = tgt.compose(t.target.mor(f), t.component(src_of(f)));
        auto rhs = tgt.compose(t.component(tgt_of(f)), t.source.mor(f));
        chk.expect(tgt.equal(lhs, rhs), "naturality of " + t.source.name + " ⇒ " + t.target.name);
    }
}

struct HomotopyResult {
    bool ok = true;
    std::size_t checked = 0;
    std::string first_failure;
};

// τ_C is a weak equivalence at every sampled fibrant C.
template <class SO, class SM, class TO, class TM>
HomotopyResult is_right_homotopy(const TwoMorphism<SO, SM, TO, TM>& t, const CategoryData<SO, SM>& src,
                                 const CategoryData<TO, TM>& tgt, const std::vector<SO>& fibrant_samples) {
    HomotopyResult r;
    for (std::size_t i = 0; i < fibrant_samples.size(); ++i) {
        if (!src.is_fibrant(fibrant_samples[i]))
            throw std::invalid_argument("right homotopy check: sample " + std::to_string(i) + " is not fibrant");
        ++r.checked;
        if (!tgt.is_we(t.component(fibrant_samples[i])) && r.ok) {
            r.ok = false;
            r.first_failure = "component at fibrant sample " + std::to_string(i) + " is not a weak equivalence";
        }
    }
    return r;
}

// H∘G = Id_C exactly and τ: Id_D ⇒ G∘H a right homotopy.
template <class CO, class CM, class DO, class DM>
Report verify_weak_retraction(const FunctorData<CO, CM, DO, DM>& g, const FunctorData<DO, DM, CO, CM>& h,
                              const TwoMorphism<DO, DM, DO, DM>& tau, const CategoryData<CO, CM>& cc,
                              const CategoryData<DO, DM>& dc, const std::vector<CO>& c_objects,
                              const std::vector<CM>& c_morphisms, const std::vector<DO>& d_objects,
                              const std::vector<DM>& d_morphisms, const std::vector<DO>& d_fibrant) {
    Report rep;
    auto& ret = rep.add("retraction " + h.name + "∘" + g.name + " = Id");
    for (const auto& x : c_objects) ret.expect(cc.equal_objects(h.obj(g.obj(x)), x), "on objects");
    for (const auto& f : c_morphisms) ret.expect(cc.equal(h.mor(g.mor(f)), f), "on morphisms");
    auto& rel = rep.add("τG = id");
    for (const auto& x : c_objects) rel.expect(dc.equal(tau.component(g.obj(x)), dc.identity(g.obj(x))), "at G(x)");
    auto& nat = rep.add("τ natural");
    check_two_morphism<DO, DM, DO, DM>(nat, tau, dc, d_objects, d_morphisms, dc.source, dc.target);
    auto& ho = rep.add("τ right homotopy");
    auto r = is_right_homotopy(tau, dc, dc, d_fibrant);
    ho.cases += r.checked;
    if (!r.ok) ho.expect(false, r.first_failure);
    return rep;
}

// G∘H = Id_D exactly and τ: Id_C ⇒ H∘G a right homotopy.
template <class CO, class CM, class DO, class DM>
Report verify_weak_section(const FunctorData<CO, CM, DO, DM>& g, const FunctorData<DO, DM, CO, CM>& h,
                           const TwoMorphism<CO, CM, CO, CM>& tau, const CategoryData<CO, CM>& cc,
                           const CategoryData<DO, DM>& dc, const std::vector<CO>& c_objects,
                           const std::vector<CM>& c_morphisms, const std::vector<DO>& d_objects,
                           const std::vector<DM>& d_morphisms, const std::vector<CO>& c_fibrant) {
    Report rep;
    auto& sec = rep.add("section " + g.name + "∘" + h.name + " = Id");
    for (const auto& x : d_objects) sec.expect(dc.equal_objects(g.obj(h.obj(x)), x), "on objects");
    for (const auto& f : d_morphisms) sec.expect(dc.equal(g.mor(h.mor(f)), f), "on morphisms");
    auto& rel = rep.add("Gτ = id");
    for (const auto& x : c_objects) rel.expect(dc.equal(g.mor(tau.component(x)), dc.identity(g.obj(x))), "G(τ_x)");
    auto& nat = rep.add("τ natural");
    check_two_morphism<CO, CM, CO, CM>(nat, tau, cc, c_objects, c_morphisms, cc.source, cc.target);
    auto& ho = rep.add("τ right homotopy");
    auto r = is_right_homotopy(tau, cc, cc, c_fibrant);
    ho.cases += r.checked;
    if (!r.ok) ho.expect(false, r.first_failure);
    return rep;
}

// A square K∘Φ⁰ = Φ¹∘G of functors C → A → B and C → D → B.
template <class CO, class CM, class DO, class DM, class AO, class AM, class BO, class BM>
struct FunctorSquare {
    FunctorData<CO, CM, DO, DM> g;
    FunctorData<AO, AM, BO, BM> k;
    FunctorData<CO, CM, AO, AM> phi0;
    FunctorData<DO, DM, BO, BM> phi1;
};

// Case 1: G has a weakly invertible retraction (H, τ); T = Φ⁰∘H, h = Φ¹τ: Φ¹ ⇒ K∘T.
template <class CO, class CM, class DO, class DM, class AO, class AM, class BO, class BM>
std::pair<FunctorData<DO, DM, AO, AM>, TwoMorphism<DO, DM, BO, BM>> htpy_lift_retraction(
    const FunctorSquare<CO, CM, DO, DM, AO, AM, BO, BM>& sq, const FunctorData<DO, DM, CO, CM>& h,
    const TwoMorphism<DO, DM, DO, DM>& tau) {
    auto t = then(h, sq.phi0);
    TwoMorphism<DO, DM, BO, BM> hh{sq.phi1, then(t, sq.k),
                                   [phi1 = sq.phi1, tau](const DO& x) { return phi1.mor(tau.component(x)); }};
    return {t, hh};
}

// Case 2: K has a weakly invertible section (H, τ); T = H∘Φ¹, h = τΦ⁰: Φ⁰ ⇒ T∘G.
template <class CO, class CM, class DO, class DM, class AO, class AM, class BO, class BM>
std::pair<FunctorData<DO, DM, AO, AM>, TwoMorphism<CO, CM, AO, AM>> htpy_lift_section(
    const FunctorSquare<CO, CM, DO, DM, AO, AM, BO, BM>& sq, const FunctorData<BO, BM, AO, AM>& h,
    const TwoMorphism<AO, AM, AO, AM>& tau) {
    auto t = then(sq.phi1, h);
    TwoMorphism<CO, CM, AO, AM> hh{sq.phi0, then(sq.g, t),
                                   [phi0 = sq.phi0, tau](const CO& x) { return tau.component(phi0.obj(x)); }};
    return {t, hh};
}

// ---- the chain instance ------------------------------------------------------

using ChainFunctorAA = FunctorData<ChainComplex, ChainMap, ChainComplex, ChainMap>;
using ChainFunctorAC = FunctorData<ChainComplex, ChainMap, ChainCommaObject, ChainCommaMorphism>;
using ChainFunctorCA = FunctorData<ChainCommaObject, ChainCommaMorphism, ChainComplex, ChainMap>;
using ChainFunctorCC = FunctorData<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism>;

inline CategoryData<ChainComplex, ChainMap> chain_category(const std::string& name) {
    return {name,
            [](const ChainComplex& x, const ChainComplex& y) { return x == y; },
            [](const ChainMap& f, const ChainMap& g) { return f == g; },
            [](const ChainMap& f) { return f.source(); },
            [](const ChainMap& f) { return f.target(); },
            [](const ChainMap& g, const ChainMap& f) { return compose(g, f); },
            [](const ChainComplex& x) { return ChainMap::identity(x); },
            [](const ChainMap& f) { return classify_map(f).is_we; },
            [](const ChainComplex&) { return true; }};
}

inline CategoryData<ChainCommaObject, ChainCommaMorphism> comma_category(const ChainComma& c, StructureId s) {
    return {std::string("comma/") + std::string(to_string(s)),
            [c](const ChainCommaObject& x, const ChainCommaObject& y) { return c.equal_objects(x, y); },
            [c](const ChainCommaMorphism& f, const ChainCommaMorphism& g) { return c.equal(f, g); },
            [](const ChainCommaMorphism& f) { return f.src; },
            [](const ChainCommaMorphism& f) { return f.tgt; },
            [c](const ChainCommaMorphism& g, const ChainCommaMorphism& f) { return c.compose(g, f); },
            [c](const ChainCommaObject& x) { return c.identity(x); },
            [c, s](const ChainCommaMorphism& f) { return classify_comma(c, f, s).is_we; },
            [c, s](const ChainCommaObject& x) { return is_fibrant(c, x, s); }};
}

struct CanonicalFunctors {
    ChainFunctorAC iota;
    ChainFunctorCA pi0, pi1;
    ChainFunctorAC r0;  // M → comma
    ChainFunctorAA u;
    TwoMorphism<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism> eta_iota_pi1;
    TwoMorphism<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism> eta_r0_pi0;
};

inline CanonicalFunctors canonical_functors(const ChainComma& c) {
    CanonicalFunctors f;
    f.iota = {"ι", [c](const ChainComplex& p) { return c.iota(p); }, [c](const ChainMap& g) { return c.iota(g); }};
    f.pi0 = {"Π⁰", [](const ChainCommaObject& x) { return x.f0; }, [](const ChainCommaMorphism& s) { return s.s0; }};
    f.pi1 = {"Π¹", [](const ChainCommaObject& x) { return x.f1; }, [](const ChainCommaMorphism& s) { return s.s1; }};
    f.r0 = {"R⁰", [c](const ChainComplex& m) { return c.R0(m); }, [c](const ChainMap& g) { return c.R0(g); }};
    f.u = {"U", [c](const ChainComplex& y) { return c.U(y); }, [c](const ChainMap& g) { return c.U(g); }};
    auto id = identity_functor<ChainCommaObject, ChainCommaMorphism>("comma");
    // [π_F, id]: F → ιΠ¹F
    f.eta_iota_pi1 = {id, then(f.pi1, f.iota), [c](const ChainCommaObject& x) {
                          return ChainCommaMorphism{x, c.iota(x.f1), x.pi, ChainMap::identity(x.f1)};
                      }};
    // [id, !]: F → R⁰Π⁰F
    f.eta_r0_pi0 = {id, then(f.pi0, f.r0), [c](const ChainCommaObject& x) {
                        return ChainCommaMorphism{x, c.R0(x.f0), ChainMap::identity(x.f0), c.a().to_terminal(x.f1)};
                    }};
    return f;
}

// Fibrant objects by construction: the middle object of F → * factored as a
// trivial cofibration followed by a fibration.
inline ChainCommaObject fibrant_replacement(const ChainComma& c, const ChainCommaObject& x, StructureId s) {
    return factorize_comma(c, c.to_terminal(x), s, FactorKind::TrivCofThenFib).l.tgt;
}

// ---- the main theorem, checked on one adjunction ----------------------------

struct MainTheoremConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 20;   // objects, morphisms and fibrant objects per check
    std::size_t isos = 50;
    GenBounds bounds{2, 2, 0, 1};
};

inline bool is_main_variant(StructureId s) {
    return s == StructureId::LInj || s == StructureId::LProj || s == StructureId::RInj || s == StructureId::RProj;
}
inline bool is_left_variant(StructureId s) { return s == StructureId::LInj || s == StructureId::LProj; }

// Samples of l (cofibrations or trivial cofibrations) and r (fibrations or
// trivial fibrations) obtained by factoring random morphisms.
struct ClassSamples {
    std::vector<ChainCommaMorphism> cof, trivcof, fib, trivfib;
};

inline ClassSamples comma_class_samples(const ChainComma& c, StructureId s, Rng& rng, std::size_t n,
                                        const GenBounds& b) {
    ClassSamples out;
    for (std::size_t i = 0; i < n; ++i) {
        auto f = random_comma_morphism(rng, c, b);
        auto x = factorize_comma(c, f, s, FactorKind::CofThenTrivFib);
        auto y = factorize_comma(c, f, s, FactorKind::TrivCofThenFib);
        out.cof.push_back(x.l);
        out.trivfib.push_back(x.r);
        out.trivcof.push_back(y.l);
        out.fib.push_back(y.r);
    }
    return out;
}

// Objects whose map to * is a fibration by construction.
inline std::vector<ChainCommaObject> fibrant_pool(const ChainComma& c, StructureId s, Rng& rng, std::size_t n,
                                                  const GenBounds& b) {
    std::vector<ChainCommaObject> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(fibrant_replacement(c, random_comma_object(rng, c, b), s));
    return out;
}

inline std::vector<ChainCommaObject> cofibrant_pool(const ChainComma& c, StructureId s, Rng& rng, std::size_t n,
                                                    const GenBounds& b) {
    std::vector<ChainCommaObject> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto x = random_comma_object(rng, c, b);
        out.push_back(factorize_comma(c, c.from_initial(x), s, FactorKind::CofThenTrivFib).l.tgt);
    }
    return out;
}

// Fibrant objects of LInj have π a trivial fibration, of LProj a weak equivalence.
inline Report quillen_segal_check(const ChainComma& c, std::uint64_t seed, std::size_t n = 100,
                                  const GenBounds& b = {2, 2, 0, 1}) {
    Report rep;
    for (StructureId s : {StructureId::LInj, StructureId::LProj}) {
        auto& chk = rep.add(std::string("fibrant objects of ") + std::string(to_string(s)));
        for (std::size_t i = 0; i < n; ++i) {
            Rng rng = Rng::for_case(seed, i);
            auto x = fibrant_replacement(c, random_comma_object(rng, c, b), s);
            std::string tag = " #" + std::to_string(i);
            if (!chk.expect(is_fibrant(c, x, s), "constructed object is not fibrant" + tag)) continue;
            auto k = classify_map(x.pi);
            chk.expect(s == StructureId::LInj ? k.trivial_fib() : k.is_we, "π is " + k.str() + tag);
        }
    }
    return rep;
}

// σ as a retract of σ ⊕ τ: in/pr on the source and target sides.
struct RetractDiagram {
    ChainCommaMorphism sum, in_src, pr_src, in_tgt, pr_tgt;
};

inline std::optional<RetractDiagram> sum_retract(const ChainComma& c, const ChainCommaMorphism& s,
                                                 const ChainCommaMorphism& t) {
    auto zero = [&](const ChainCommaObject& x, const ChainCommaObject& y) {
        return ChainCommaMorphism{x, y, ChainMap::zero(x.f0, y.f0), ChainMap::zero(x.f1, y.f1)};
    };
    auto a = c.coproduct(s.src, t.src);
    auto b = c.coproduct(s.tgt, t.tgt);
    auto h = c.comediate(a, {c.compose(b.legs[0], s), c.compose(b.legs[1], t)});
    auto pa = c.comediate(a, {c.identity(s.src), zero(t.src, s.src)});
    auto pb = c.comediate(b, {c.identity(s.tgt), zero(t.tgt, s.tgt)});
    if (!h || !pa || !pb) return std::nullopt;
    return RetractDiagram{*h, a.legs[0], *pa, b.legs[0], *pb};
}

// For one adjunction and one of LInj, LProj, RInj, RProj: the functors
// ι and Π⁰ have the shape the theorem asks for, the homotopy data is a
// weakly invertible retraction or section, the induced adjunctions are
// Quillen equivalences, and E(H, K) respects the structure.
inline Report verify_main_theorem(const ChainComma& c, StructureId s, const MainTheoremConfig& cfg = {}) {
    if (!is_main_variant(s))
        throw std::invalid_argument("main theorem: variant must be LInj, LProj, RInj or RProj, got " +
                                    std::string(to_string(s)));
    Report rep;
    Prime p = c.m().prime();
    const bool left = is_left_variant(s);
    auto fn = canonical_functors(c);
    auto cat_a = chain_category("A");
    auto cat_m = chain_category("M");
    auto cat_c = comma_category(c, s);
    Rng rng = Rng::for_case(cfg.seed, 0);

    std::vector<ChainComplex> a_objs, m_objs;
    std::vector<ChainMap> a_mors, m_mors;
    std::vector<ChainCommaObject> c_objs;
    std::vector<ChainCommaMorphism> c_mors;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        a_objs.push_back(random_complex(rng, p, cfg.bounds));
        m_objs.push_back(random_complex(rng, p, cfg.bounds));
        a_mors.push_back(random_chain_map(rng, p, cfg.bounds));
        m_mors.push_back(random_chain_map(rng, p, cfg.bounds));
        c_objs.push_back(random_comma_object(rng, c, cfg.bounds));
        c_mors.push_back(random_comma_morphism(rng, c, cfg.bounds));
    }
    auto fibrant = fibrant_pool(c, s, rng, cfg.samples, cfg.bounds);

    {
        auto& chk = rep.add("U = Pi0 iota");
        for (const auto& y : a_objs) chk.expect(fn.pi0.obj(fn.iota.obj(y)) == c.U(y), "objects");
        for (const auto& g : a_mors) chk.expect(fn.pi0.mor(fn.iota.mor(g)) == c.U(g), "morphisms");
    }
    {
        auto& chk = rep.add("iota injective on objects");
        for (std::size_t i = 0; i < a_objs.size(); ++i)
            for (std::size_t j = 0; j < a_objs.size(); ++j)
                if (c.equal_objects(c.iota(a_objs[i]), c.iota(a_objs[j])))
                    chk.expect(a_objs[i] == a_objs[j], "ι identifies distinct objects");
                else
                    chk.expect(!(a_objs[i] == a_objs[j]), "ι separates equal objects");
    }
    {
        auto& chk = rep.add("Pi0 isofibration");
        for (std::size_t i = 0; i < cfg.isos; ++i) {
            auto x = random_comma_object(rng, c, cfg.bounds);
            auto u = random_iso_from(rng, x.f0);
            auto [g, sig] = iso_lift(c, x, u);
            std::string tag = " #" + std::to_string(i);
            chk.expect(c.commutes(sig) && c.inverse(sig).has_value(), "lift is not an isomorphism" + tag);
            chk.expect(sig.s0 == u && c.equal_objects(sig.src, x), "lift does not lie over u" + tag);
        }
    }

    if (left) {
        rep.merge(verify_weak_retraction(fn.iota, fn.pi1, fn.eta_iota_pi1, cat_a, cat_c, a_objs, a_mors, c_objs,
                                         c_mors, fibrant),
                  "iota retraction");
        // Square ι: A → comma, K = U, Φ⁰ = Id_A, Φ¹ = Π⁰; the lift is T = Π¹, h = π.
        FunctorSquare<ChainComplex, ChainMap, ChainCommaObject, ChainCommaMorphism, ChainComplex, ChainMap,
                      ChainComplex, ChainMap>
            sq{fn.iota, fn.u, identity_functor<ChainComplex, ChainMap>("A"), fn.pi0};
        auto [t, h] = htpy_lift_retraction(sq, fn.pi1, fn.eta_iota_pi1);
        auto& chk = rep.add("homotopy lift along iota");
        for (const auto& y : a_objs) chk.expect(t.obj(sq.g.obj(y)) == sq.phi0.obj(y), "T G = Phi0 on objects");
        for (const auto& g : a_mors) chk.expect(t.mor(sq.g.mor(g)) == sq.phi0.mor(g), "T G = Phi0 on morphisms");
        for (const auto& x : c_objs) chk.expect(h.component(x) == x.pi, "h is the structure map");
        check_two_morphism<ChainCommaObject, ChainCommaMorphism, ChainComplex, ChainMap>(
            chk, h, cat_m, c_objs, c_mors, cat_c.source, cat_c.target);
        auto r = is_right_homotopy(h, cat_c, cat_m, fibrant);
        chk.expect(r.ok, "h: " + r.first_failure);
    } else {
        rep.merge(verify_weak_section(fn.pi0, fn.r0, fn.eta_r0_pi0, cat_c, cat_m, c_objs, c_mors, m_objs, m_mors,
                                      fibrant),
                  "Pi0 section");
        // Square G = U: A → M, K = Π⁰, Φ⁰ = ι, Φ¹ = Id_M; the lift is T = R⁰.
        FunctorSquare<ChainComplex, ChainMap, ChainComplex, ChainMap, ChainCommaObject, ChainCommaMorphism,
                      ChainComplex, ChainMap>
            sq{fn.u, fn.pi0, fn.iota, identity_functor<ChainComplex, ChainMap>("M")};
        auto [t, h] = htpy_lift_section(sq, fn.r0, fn.eta_r0_pi0);
        auto& chk = rep.add("homotopy lift along Pi0");
        for (const auto& x : m_objs) chk.expect(sq.k.obj(t.obj(x)) == sq.phi1.obj(x), "K T = Phi1 on objects");
        for (const auto& g : m_mors) chk.expect(sq.k.mor(t.mor(g)) == sq.phi1.mor(g), "K T = Phi1 on morphisms");
        check_two_morphism<ChainComplex, ChainMap, ChainCommaObject, ChainCommaMorphism>(
            chk, h, cat_c, a_objs, a_mors, cat_a.source, cat_a.target);
        auto r = is_right_homotopy(h, cat_a, cat_c, a_objs);
        chk.expect(r.ok, "h: " + r.first_failure);
    }

    auto cls = comma_class_samples(c, s, rng, cfg.samples, cfg.bounds);
    {
        auto& chk = rep.add("Quillen adjunctions");
        for (const auto& g : a_mors) {
            auto fib = factorize_chain(g, FactorKind::TrivCofThenFib).r;
            auto tfib = factorize_chain(g, FactorKind::CofThenTrivFib).r;
            chk.expect(classify_comma(c, c.iota(fib), s).is_fib, "ι(fibration)");
            chk.expect(classify_comma(c, c.iota(tfib), s).trivial_fib(), "ι(trivial fibration)");
        }
        for (const auto& f : m_mors) {
            auto cof = factorize_chain(f, FactorKind::CofThenTrivFib).l;
            auto tcof = factorize_chain(f, FactorKind::TrivCofThenFib).l;
            chk.expect(classify_comma(c, c.Fplus(cof), s).is_cof, "F+(cofibration)");
            chk.expect(classify_comma(c, c.Fplus(tcof), s).trivial_cof(), "F+(trivial cofibration)");
        }
        for (const auto& f : cls.fib) chk.expect(classify_map(f.s0).is_fib, "Pi0(fibration)");
        for (const auto& f : cls.trivfib) chk.expect(classify_map(f.s0).trivial_fib(), "Pi0(trivial fibration)");
        for (const auto& f : cls.cof) chk.expect(classify_map(f.s1).is_cof, "Pi1(cofibration)");
        for (const auto& f : cls.trivcof) chk.expect(classify_map(f.s1).trivial_cof(), "Pi1(trivial cofibration)");
    }
    {
        // x → R y is a weak equivalence iff its transpose is, for x cofibrant and y fibrant.
        auto& chk = rep.add("derived unit criterion");
        if (left) {
            auto cof = cofibrant_pool(c, s, rng, cfg.samples, cfg.bounds);
            for (std::size_t i = 0; i < cof.size(); ++i) {
                CommaHomSpace hs(c, cof[i], c.iota(a_objs[i]));
                for (int k = 0; k < 4; ++k) {
                    auto sig = random_comma_hom(rng, hs);
                    chk.expect(classify_comma(c, sig, s).is_we == classify_map(sig.s1).is_we,
                               "Pi1 -| iota #" + std::to_string(i));
                }
            }
        } else {
            for (std::size_t i = 0; i < fibrant.size(); ++i) {
                const auto& g = fibrant[i];
                for (int k = 0; k < 4; ++k) {
                    auto h = random_chain_map(rng, m_objs[i], g.f0);
                    ChainCommaMorphism t{c.Fplus(m_objs[i]), g, h, c.phi(compose(g.pi, h), g.f1)};
                    chk.expect(c.commutes(t), "transpose is not a comma morphism");
                    chk.expect(classify_map(h).is_we == classify_comma(c, t, s).is_we,
                               "Fplus -| Pi0 #" + std::to_string(i));
                }
            }
        }
    }
    {
        // The identity square gives E(H, K) = Id; it must commute with factorization.
        auto& chk = rep.add("E(H,K) for the identity square");
        AdjunctionSquare<ChainBackend, ChainBackend, ChainBackend, ChainBackend> sq{identity_adjunction(p),
                                                                                    identity_adjunction(p)};
        for (const auto& f : c_mors) {
            auto e = ehk(c, c, sq, f);
            for (auto k : {FactorKind::CofThenTrivFib, FactorKind::TrivCofThenFib}) {
                auto a = factorize_comma(c, f, s, k);
                auto b = factorize_comma(c, e, s, k);
                chk.expect(c.equal(ehk(c, c, sq, a.l), b.l) && c.equal(ehk(c, c, sq, a.r), b.r),
                           "factorization changes under E");
            }
            chk.expect(classify_comma(c, e, s) == classify_comma(c, f, s), "classes change under E");
        }
        if (c.adj().name == "identity") {
            // H = K = Hom(D1, -) with its left adjoint; U' H = K U holds on the nose.
            auto d1 = ChainComplex::disk(p, 0);
            auto ht = hom_tensor_adjunction(d1);
            AdjunctionSquare<ChainBackend, ChainBackend, ChainBackend, ChainBackend> sq2{ht, ht};
            auto& q = rep.add("E(H,K) Quillen");
            if (left) {
                for (const auto& f : cls.cof)
                    q.expect(classify_comma(c, ehk_left(c, c, sq2, f), s).is_cof, "E_*(cofibration)");
                for (const auto& f : cls.trivcof)
                    q.expect(classify_comma(c, ehk_left(c, c, sq2, f), s).trivial_cof(), "E_*(trivial cofibration)");
            } else {
                for (const auto& f : cls.fib) q.expect(classify_comma(c, ehk(c, c, sq2, f), s).is_fib, "E(fibration)");
                for (const auto& f : cls.trivfib)
                    q.expect(classify_comma(c, ehk(c, c, sq2, f), s).trivial_fib(), "E(trivial fibration)");
            }
        }
    }
    {
        auto& tft = rep.add("2-out-of-3 for weak equivalences");
        auto we = [&](const ChainCommaMorphism& f) { return classify_comma(c, f, s).is_we; };
        auto two_of_three = [&](const ChainCommaMorphism& f, const ChainCommaMorphism& g, const std::string& tag) {
            int n = we(f) + we(g) + we(c.compose(g, f));
            tft.expect(n != 2, tag);
        };
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            auto a = factorize_comma(c, c_mors[i], s, i % 2 ? FactorKind::TrivCofThenFib : FactorKind::CofThenTrivFib);
            two_of_three(a.l, a.r, "factorization #" + std::to_string(i));
            auto y = random_comma_object(rng, c, cfg.bounds);
            auto z = random_comma_object(rng, c, cfg.bounds);
            auto f = random_comma_hom(rng, CommaHomSpace(c, c_objs[i], y));
            auto g = random_comma_hom(rng, CommaHomSpace(c, y, z));
            two_of_three(f, g, "random pair #" + std::to_string(i));
        }
        auto& ret = rep.add("retract closure");
        for (std::size_t i = 0; i + 1 < c_mors.size(); ++i) {
            auto d = sum_retract(c, c_mors[i], c_mors[i + 1]);
            if (!ret.expect(d.has_value(), "no coproduct map")) continue;
            ret.expect(c.equal(c.compose(d->pr_src, d->in_src), c.identity(c_mors[i].src)) &&
                           c.equal(c.compose(d->pr_tgt, d->in_tgt), c.identity(c_mors[i].tgt)) &&
                           c.equal(c.compose(d->sum, d->in_src), c.compose(d->in_tgt, c_mors[i])) &&
                           c.equal(c.compose(d->pr_tgt, d->sum), c.compose(c_mors[i], d->pr_src)),
                       "not a retract diagram");
            auto big = classify_comma(c, d->sum, s);
            auto small = classify_comma(c, c_mors[i], s);
            ret.expect((!big.is_we || small.is_we) && (!big.is_cof || small.is_cof) && (!big.is_fib || small.is_fib),
                       "retract of " + big.str() + " is " + small.str());
        }
    }
    return rep;
}

}  // namespace commacat
