#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "comma.hpp"

namespace commacat {

// Intermediate objects of a factorization, keyed by the names used in the
// constructions (E¹, Q⁰, m⁰, R¹, E¹′, Q⁰′, ...), plus checked facts.
template <class Obj>
struct FactorTrace {
    std::string route;
    std::vector<std::pair<std::string, Obj>> objects;
    std::vector<std::pair<std::string, bool>> facts;

    void add(const std::string& name, const Obj& x) { objects.emplace_back(name, x); }
    void fact(const std::string& name, bool v) { facts.emplace_back(name, v); }
    std::optional<bool> get_fact(const std::string& name) const {
        for (const auto& [n, v] : facts)
            if (n == name) return v;
        return std::nullopt;
    }
};

template <class C>
struct CommaFactorization {
    typename C::Morphism l;
    typename C::Morphism r;
    FactorTrace<typename C::MObj> trace_m;
    FactorTrace<typename C::AObj> trace_a;
};

namespace detail {

template <class C>
typename C::Morphism raw(const typename C::Object& s, const typename C::Object& t, const typename C::MMor& s0,
                         const typename C::AMor& s1) {
    return typename C::Morphism{s, t, s0, s1};
}

}  // namespace detail

// Pushout skeleton: factor σ⁰ = r⁰l⁰ through m⁰ (kind k0), push out to
// R¹ = F¹ ∪^{F F⁰} F m⁰, factor the induced ζ: R¹ → G¹ = b∘a (kind k1).
// E = [m⁰, E¹, φ⁻¹(a i_m)], l = [l⁰, a i_F], r = [r⁰, b].
// With skip_second the A-step is omitted (E¹ = R¹, strong structure).
template <class C>
CommaFactorization<C> pushout_skeleton(const C& c, const typename C::Morphism& s, FactorKind k0, FactorKind k1,
                                       bool skip_second = false) {
    const auto& m = c.m();
    const auto& a = c.a();
    CommaFactorization<C> out{s, s, {}, {}};
    auto f0 = m.factorize(s.s0, k0);
    auto m0 = m.target(f0.l);
    auto po = a.pushout(c.phi(s.src.pi, s.src.f1), c.F(f0.l));
    const auto& i_f = po.legs[0];
    const auto& i_m = po.legs[1];
    auto zeta = a.comediate(po, {s.s1, a.compose(c.phi(s.tgt.pi, s.tgt.f1), c.F(f0.r))});
    if (!zeta) throw std::logic_error("pushout skeleton: induced map does not exist");
    out.trace_m.add("m0", m0);
    out.trace_a.add("R1", po.apex);
    typename C::AMor first = a.identity(po.apex), second = *zeta;
    if (!skip_second) {
        auto f1 = a.factorize(*zeta, k1);
        first = f1.l;
        second = f1.r;
        out.trace_a.add("E1", a.target(f1.l));
    }
    typename C::Object e{m0, a.target(first), c.phi_inv(a.compose(first, i_m), m0)};
    out.l = detail::raw<C>(s.src, e, f0.l, a.compose(first, i_f));
    out.r = detail::raw<C>(e, s.tgt, f0.r, second);
    return out;
}

// Pullback skeleton: factor σ¹ = r¹l¹ through E¹ (kind k1), pull back to
// Q⁰ = U E¹ ×_{U G¹} G⁰, factor δ = (U(l¹)π_F, σ⁰) = b∘a (kind k0).
// E = [m⁰, E¹, p_u b], l = [a, l¹], r = [p_g b, r¹].
// With skip_second the M-step is omitted (m⁰ = Q⁰, strong structure).
template <class C>
CommaFactorization<C> pullback_skeleton(const C& c, const typename C::Morphism& s, FactorKind k1, FactorKind k0,
                                        bool skip_second = false) {
    const auto& m = c.m();
    const auto& a = c.a();
    CommaFactorization<C> out{s, s, {}, {}};
    auto f1 = a.factorize(s.s1, k1);
    auto e1 = a.target(f1.l);
    auto pb = m.pullback(c.U(f1.r), s.tgt.pi);
    const auto& p_u = pb.legs[0];
    const auto& p_g = pb.legs[1];
    auto delta = m.mediate(pb, {m.compose(c.U(f1.l), s.src.pi), s.s0});
    if (!delta) throw std::logic_error("pullback skeleton: induced map does not exist");
    out.trace_a.add("E1", e1);
    out.trace_m.add("Q0", pb.apex);
    typename C::MMor first = *delta, second = m.identity(pb.apex);
    if (!skip_second) {
        auto f0 = m.factorize(*delta, k0);
        first = f0.l;
        second = f0.r;
        out.trace_m.add("m0", m.target(f0.l));
    }
    typename C::Object e{m.target(first), e1, m.compose(p_u, second)};
    out.l = detail::raw<C>(s.src, e, first, f1.l);
    out.r = detail::raw<C>(e, s.tgt, m.compose(p_g, second), f1.r);
    return out;
}

// Left projective trivial cofibration followed by a left projective fibration.
template <class C>
CommaFactorization<C> lproj_trivcof_fib(const C& c, const typename C::Morphism& s) {
    const auto& m = c.m();
    const auto& a = c.a();
    CommaFactorization<C> out{s, s, {}, {}};
    out.trace_m.route = out.trace_a.route = "lproj-trivcof-fib";
    // σ¹ = r¹ l¹ through E¹
    auto f1 = a.factorize(s.s1, FactorKind::TrivCofThenFib);
    auto e1 = a.target(f1.l);
    // Q⁰ = U E¹ ×_{U G¹} G⁰ and δ: F⁰ → Q⁰
    auto pb = m.pullback(c.U(f1.r), s.tgt.pi);
    const auto& q_u = pb.legs[0];
    const auto& q_g = pb.legs[1];
    auto delta = m.mediate(pb, {m.compose(c.U(f1.l), s.src.pi), s.s0});
    if (!delta) throw std::logic_error("lproj factorization: δ does not exist");
    // δ = b_δ a_δ through m⁰
    auto fd = m.factorize(*delta, FactorKind::CofThenTrivFib);
    auto m0 = m.target(fd.l);
    // R¹ = F¹ ∪^{F F⁰} F m⁰
    auto po = a.pushout(c.phi(s.src.pi, s.src.f1), c.F(fd.l));
    const auto& j_f = po.legs[0];
    const auto& j_m = po.legs[1];
    auto w = a.comediate(po, {f1.l, c.phi(m.compose(q_u, fd.r), e1)});
    if (!w) throw std::logic_error("lproj factorization: R1 → E1 does not exist");
    // R¹ → E¹′ → E¹
    auto fw = a.factorize(*w, FactorKind::CofThenTrivFib);
    auto e1p = a.target(fw.l);
    auto pi_e = c.phi_inv(a.compose(fw.l, j_m), m0);
    typename C::Object e{m0, e1p, pi_e};
    out.l = detail::raw<C>(s.src, e, fd.l, a.compose(fw.l, j_f));
    out.r = detail::raw<C>(e, s.tgt, m.compose(q_g, fd.r), a.compose(f1.r, fw.r));
    // The corner of r: τ: m⁰ → Q⁰′ = U E¹′ ×_{U G¹} G⁰ must be a weak equivalence.
    auto corner = c.pullback_corner(out.r);
    out.trace_a.add("E1", e1);
    out.trace_m.add("Q0", pb.apex);
    out.trace_m.add("m0", m0);
    out.trace_a.add("R1", po.apex);
    out.trace_a.add("E1'", e1p);
    out.trace_m.add("Q0'", corner.cone.apex);
    out.trace_m.fact("tau_we", m.classify(corner.delta).is_we);
    return out;
}

// Right injective cofibration followed by a right injective trivial
// fibration, written out in the base (the mirror image of the construction above).
template <class C>
CommaFactorization<C> rinj_cof_trivfib_direct(const C& c, const typename C::Morphism& s) {
    const auto& m = c.m();
    const auto& a = c.a();
    CommaFactorization<C> out{s, s, {}, {}};
    out.trace_m.route = out.trace_a.route = "rinj-cof-trivfib-direct";
    auto f0 = m.factorize(s.s0, FactorKind::CofThenTrivFib);
    auto e0 = m.target(f0.l);
    auto po = a.pushout(c.phi(s.src.pi, s.src.f1), c.F(f0.l));
    const auto& j1 = po.legs[0];
    const auto& j2 = po.legs[1];
    auto kappa = a.comediate(po, {s.s1, a.compose(c.phi(s.tgt.pi, s.tgt.f1), c.F(f0.r))});
    if (!kappa) throw std::logic_error("rinj factorization: κ does not exist");
    auto fk = a.factorize(*kappa, FactorKind::TrivCofThenFib);
    auto m1 = a.target(fk.l);
    auto pb = m.pullback(s.tgt.pi, c.U(fk.r));
    const auto& q_g = pb.legs[0];
    const auto& q_u = pb.legs[1];
    auto w = m.mediate(pb, {f0.r, c.phi_inv(a.compose(fk.l, j2), e0)});
    if (!w) throw std::logic_error("rinj factorization: E0 → Q0 does not exist");
    auto fw = m.factorize(*w, FactorKind::TrivCofThenFib);
    auto e0p = m.target(fw.l);
    typename C::Object e{e0p, m1, m.compose(q_u, fw.r)};
    out.l = detail::raw<C>(s.src, e, m.compose(fw.l, f0.l), a.compose(fk.l, j1));
    out.r = detail::raw<C>(e, s.tgt, m.compose(q_g, fw.r), fk.r);
    out.trace_m.add("E0", e0);
    out.trace_a.add("R1", po.apex);
    out.trace_a.add("m1", m1);
    out.trace_m.add("Q0", pb.apex);
    out.trace_m.add("E0'", e0p);
    return out;
}

// The left-hand structures (and Inj/Proj), computed in c itself.
template <class C>
CommaFactorization<C> factorize_left(const C& c, const typename C::Morphism& s, StructureId id, FactorKind k) {
    using K = FactorKind;
    CommaFactorization<C> r{s, s, {}, {}};
    switch (id) {
        case StructureId::Inj:
            r = pullback_skeleton(c, s, k, k);
            r.trace_m.route = "inj";
            break;
        case StructureId::Proj:
            r = pushout_skeleton(c, s, k, k);
            r.trace_m.route = "proj";
            break;
        case StructureId::LInj:
            r = pullback_skeleton(c, s, k, K::CofThenTrivFib);
            r.trace_m.route = "linj";
            break;
        case StructureId::LProj:
            if (k == K::TrivCofThenFib) return lproj_trivcof_fib(c, s);
            r = pushout_skeleton(c, s, K::CofThenTrivFib, K::CofThenTrivFib);
            r.trace_m.route = "lproj-via-proj";
            break;
        case StructureId::Strong0:
            r = pushout_skeleton(c, s, k, k, true);
            r.trace_m.route = "strong0";
            break;
        default:
            throw std::invalid_argument("factorize_left: not a left structure");
    }
    r.trace_a.route = r.trace_m.route;
    return r;
}

// Right structures written out directly in the base, for the duality check.
template <class C>
CommaFactorization<C> factorize_right_direct(const C& c, const typename C::Morphism& s, StructureId id,
                                             FactorKind k) {
    using K = FactorKind;
    CommaFactorization<C> r{s, s, {}, {}};
    switch (id) {
        case StructureId::RProj:
            r = k == K::CofThenTrivFib ? pushout_skeleton(c, s, K::CofThenTrivFib, K::TrivCofThenFib)
                                       : pushout_skeleton(c, s, K::TrivCofThenFib, K::TrivCofThenFib);
            break;
        case StructureId::RInj:
            if (k == K::CofThenTrivFib) return rinj_cof_trivfib_direct(c, s);
            r = pullback_skeleton(c, s, K::TrivCofThenFib, K::TrivCofThenFib);
            break;
        case StructureId::Strong1:
            r = pullback_skeleton(c, s, k, k, true);
            break;
        default:
            throw std::invalid_argument("factorize_right_direct: not a right structure");
    }
    r.trace_m.route = r.trace_a.route = std::string(to_string(id)) + "-direct";
    return r;
}

// Right structures: factor σ' in the dual comma category with the dual
// structure and the opposite kind, then reverse.
template <ModelBackend BM, ModelBackend BA>
CommaFactorization<Comma<BM, BA>> factorize_via_dual(const Comma<BM, BA>& c,
                                                     const typename Comma<BM, BA>::Morphism& s, StructureId id,
                                                     FactorKind k) {
    auto d = dual_comma(c);
    auto fd = factorize_left(d, to_dual(c, s), dual_structure(id), opposite_kind(k));
    CommaFactorization<Comma<BM, BA>> out{from_dual(c, fd.r), from_dual(c, fd.l), {}, {}};
    // M' = A^op and A' = M^op: the traces trade places.
    out.trace_m.route = out.trace_a.route = std::string(to_string(id)) + "-via-dual(" + fd.trace_m.route + ")";
    for (const auto& [n, x] : fd.trace_m.objects) out.trace_a.add(n + "^op", x);
    for (const auto& [n, x] : fd.trace_a.objects) out.trace_m.add(n + "^op", x);
    for (const auto& [n, v] : fd.trace_m.facts) out.trace_a.fact(n + "^op", v);
    for (const auto& [n, v] : fd.trace_a.facts) out.trace_m.fact(n + "^op", v);
    return out;
}

template <ModelBackend BM, ModelBackend BA>
CommaFactorization<Comma<BM, BA>> factorize_comma(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Morphism& s,
                                                  StructureId id, FactorKind k) {
    if (is_right_structure(id)) return factorize_via_dual(c, s, id, k);
    return factorize_left(c, s, id, k);
}

// Does (l, r) satisfy the contract for (s, kind)? Classified independently.
template <ModelBackend BM, ModelBackend BA>
bool factorization_in_classes(const Comma<BM, BA>& c, const typename Comma<BM, BA>::Morphism& s,
                              const CommaFactorization<Comma<BM, BA>>& f, StructureId id, FactorKind k,
                              std::string* why = nullptr) {
    auto fail = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    if (!c.commutes(f.l) || !c.commutes(f.r)) return fail("a factor is not a comma morphism");
    if (!c.equal(c.compose(f.r, f.l), s)) return fail("r∘l != σ");
    auto cl = classify_comma(c, f.l, id);
    auto cr = classify_comma(c, f.r, id);
    if (k == FactorKind::CofThenTrivFib) {
        if (!cl.is_cof) return fail("l not a cofibration: " + cl.str());
        if (!cr.trivial_fib()) return fail("r not a trivial fibration: " + cr.str());
    } else {
        if (!cl.trivial_cof()) return fail("l not a trivial cofibration: " + cl.str());
        if (!cr.is_fib) return fail("r not a fibration: " + cr.str());
    }
    return true;
}

// ---- lifting ------------------------------------------------------------------

template <class C>
struct LiftingProblem {
    typename C::Morphism sigma;   // A → B
    typename C::Morphism beta;    // X → Y
    typename C::Morphism top;     // A → X
    typename C::Morphism bottom;  // B → Y
};

template <class C>
bool square_commutes(const C& c, const LiftingProblem<C>& p) {
    return c.equal_objects(p.top.src, p.sigma.src) && c.equal_objects(p.top.tgt, p.beta.src) &&
           c.equal_objects(p.bottom.src, p.sigma.tgt) && c.equal_objects(p.bottom.tgt, p.beta.tgt) &&
           c.equal(c.compose(p.beta, p.top), c.compose(p.bottom, p.sigma));
}

template <class C>
bool is_lift(const C& c, const LiftingProblem<C>& p, const typename C::Morphism& s) {
    return c.commutes(s) && c.equal_objects(s.src, p.sigma.tgt) && c.equal_objects(s.tgt, p.beta.src) &&
           c.equal(c.compose(s, p.sigma), p.top) && c.equal(c.compose(p.beta, s), p.bottom);
}

// Lift σ¹ against β¹ in A, then σ⁰ against the pullback corner of β in M.
template <class C>
std::optional<typename C::Morphism> lift_pullback_corner(const C& c, const LiftingProblem<C>& p) {
    const auto& m = c.m();
    const auto& a = c.a();
    auto s1 = a.lift(p.sigma.s1, p.beta.s1, p.top.s1, p.bottom.s1);
    if (!s1) return std::nullopt;
    auto corner = c.pullback_corner(p.beta);
    auto zeta = m.mediate(corner.cone, {m.compose(c.U(*s1), p.sigma.tgt.pi), p.bottom.s0});
    if (!zeta) return std::nullopt;
    auto s0 = m.lift(p.sigma.s0, corner.delta, p.top.s0, *zeta);
    if (!s0) return std::nullopt;
    typename C::Morphism s{p.sigma.tgt, p.beta.src, *s0, *s1};
    if (!is_lift(c, p, s)) return std::nullopt;
    return s;
}

// Lift σ⁰ against β⁰ in M, then the pushout corner of σ against β¹ in A.
template <class C>
std::optional<typename C::Morphism> lift_pushout_corner(const C& c, const LiftingProblem<C>& p) {
    const auto& m = c.m();
    const auto& a = c.a();
    auto s0 = m.lift(p.sigma.s0, p.beta.s0, p.top.s0, p.bottom.s0);
    if (!s0) return std::nullopt;
    auto corner = c.pushout_corner(p.sigma);
    auto h = a.comediate(corner.cocone, {p.top.s1, a.compose(c.phi(p.beta.src.pi, p.beta.src.f1), c.F(*s0))});
    if (!h) return std::nullopt;
    auto s1 = a.lift(corner.kappa, p.beta.s1, *h, p.bottom.s1);
    if (!s1) return std::nullopt;
    typename C::Morphism s{p.sigma.tgt, p.beta.src, *s0, *s1};
    if (!is_lift(c, p, s)) return std::nullopt;
    return s;
}

// Strong structure: lift in M, then s¹ is forced through the pushout, whose
// corner κ is invertible.
template <class C>
std::optional<typename C::Morphism> lift_strong0(const C& c, const LiftingProblem<C>& p) {
    const auto& m = c.m();
    const auto& a = c.a();
    auto s0 = m.lift(p.sigma.s0, p.beta.s0, p.top.s0, p.bottom.s0);
    if (!s0) return std::nullopt;
    auto corner = c.pushout_corner(p.sigma);
    auto kinv = a.inverse(corner.kappa);
    if (!kinv) return std::nullopt;
    auto h = a.comediate(corner.cocone, {p.top.s1, a.compose(c.phi(p.beta.src.pi, p.beta.src.f1), c.F(*s0))});
    if (!h) return std::nullopt;
    typename C::Morphism s{p.sigma.tgt, p.beta.src, *s0, a.compose(*h, *kinv)};
    if (!is_lift(c, p, s)) return std::nullopt;
    return s;
}

template <ModelBackend BM, ModelBackend BA>
LiftingProblem<DualComma<BM, BA>> to_dual(const Comma<BM, BA>& c, const LiftingProblem<Comma<BM, BA>>& p) {
    return {to_dual(c, p.beta), to_dual(c, p.sigma), to_dual(c, p.bottom), to_dual(c, p.top)};
}

// Pullback-corner solver run on the dual problem.
template <ModelBackend BM, ModelBackend BA>
std::optional<typename Comma<BM, BA>::Morphism> lift_via_dual(const Comma<BM, BA>& c,
                                                              const LiftingProblem<Comma<BM, BA>>& p) {
    auto d = dual_comma(c);
    auto s = lift_pullback_corner(d, to_dual(c, p));
    if (!s) return std::nullopt;
    auto back = from_dual(c, *s);
    if (!is_lift(c, p, back)) return std::nullopt;
    return back;
}

enum class LiftStrategy { Auto, Structural, Linear };

// Structural solvers where the constructions provide one; the caller supplies
// the complete linear fallback (see linear_lift.hpp) for the rest.
template <ModelBackend BM, ModelBackend BA>
std::optional<typename Comma<BM, BA>::Morphism> lift_structural(const Comma<BM, BA>& c,
                                                                const LiftingProblem<Comma<BM, BA>>& p,
                                                                StructureId id) {
    switch (id) {
        case StructureId::Inj:
        case StructureId::LInj:
        case StructureId::Strong1:
            return lift_pullback_corner(c, p);
        case StructureId::Proj:
            return lift_pushout_corner(c, p);
        case StructureId::Strong0:
            return lift_strong0(c, p);
        case StructureId::RProj:
            return lift_via_dual(c, p);
        case StructureId::LProj:
        case StructureId::RInj:
            break;
    }
    throw std::invalid_argument("no structural lifting solver for " + std::string(to_string(id)));
}

inline bool has_structural_lift(StructureId id) { return id != StructureId::LProj && id != StructureId::RInj; }

}  // namespace commacat
