#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "backend.hpp"
#include "chain.hpp"
#include "report.hpp"
#include "tensor.hpp"

namespace commacat {

// F ⊣ U with U: A → M. Carries η, ε and φ explicitly.
//   phi(f: x → U y, y)      = the transpose F x → y
//   phi_inv(g: F x → y, x)  = the transpose x → U y
template <ModelBackend BM, ModelBackend BA>
struct Adjunction {
    using MBackend = BM;
    using ABackend = BA;
    using MObj = typename BM::Object;
    using MMor = typename BM::Morphism;
    using AObj = typename BA::Object;
    using AMor = typename BA::Morphism;

    std::string name;
    BM m;
    BA a;
    std::function<MObj(const AObj&)> u_obj;
    std::function<MMor(const AMor&)> u_mor;
    std::function<AObj(const MObj&)> f_obj;
    std::function<AMor(const MMor&)> f_mor;
    std::function<MMor(const MObj&)> unit;    // x → U F x
    std::function<AMor(const AObj&)> counit;  // F U y → y
    std::function<AMor(const MMor&, const AObj&)> phi;
    std::function<MMor(const AMor&, const MObj&)> phi_inv;
};

using ChainAdjunction = Adjunction<ChainBackend, ChainBackend>;

inline ChainAdjunction identity_adjunction(Prime p) {
    ChainAdjunction adj{"identity", ChainBackend(p), ChainBackend(p), {}, {}, {}, {}, {}, {}, {}, {}};
    adj.u_obj = [](const ChainComplex& y) { return y; };
    adj.u_mor = [](const ChainMap& g) { return g; };
    adj.f_obj = [](const ChainComplex& x) { return x; };
    adj.f_mor = [](const ChainMap& f) { return f; };
    adj.unit = [](const ChainComplex& x) { return ChainMap::identity(x); };
    adj.counit = [](const ChainComplex& y) { return ChainMap::identity(y); };
    adj.phi = [](const ChainMap& f, const ChainComplex&) { return f; };
    adj.phi_inv = [](const ChainMap& g, const ChainComplex&) { return g; };
    return adj;
}

// U = Hom(P, -), F = - ⊗ P.
inline ChainAdjunction hom_tensor_adjunction(const ChainComplex& pc) {
    Prime p = pc.prime();
    ChainAdjunction adj{"hom-tensor", ChainBackend(p), ChainBackend(p), {}, {}, {}, {}, {}, {}, {}, {}};
    adj.u_obj = [pc](const ChainComplex& y) { return hom_chain(pc, y); };
    adj.u_mor = [pc](const ChainMap& g) { return hom_post(pc, g); };
    adj.f_obj = [pc](const ChainComplex& x) { return tensor_chain(x, pc); };
    adj.f_mor = [pc](const ChainMap& f) { return tensor_maps(f, ChainMap::identity(pc)); };
    adj.unit = [pc](const ChainComplex& x) { return curry(ChainMap::identity(tensor_chain(x, pc)), x, pc); };
    adj.counit = [pc](const ChainComplex& y) { return evaluation(pc, y); };
    adj.phi = [pc](const ChainMap& f, const ChainComplex& y) { return uncurry(f, pc, y); };
    adj.phi_inv = [pc](const ChainMap& g, const ChainComplex& x) { return curry(g, x, pc); };
    return adj;
}

// The adjunction presenting the opposite of the comma category:
// M' = A^op, A' = M^op, U' = F^op, F' = U^op.
template <ModelBackend BM, ModelBackend BA>
Adjunction<Opposite<BA>, Opposite<BM>> dual_adjunction(const Adjunction<BM, BA>& adj) {
    using OA = OpMorphism<typename BA::Morphism>;
    using OM = OpMorphism<typename BM::Morphism>;
    Adjunction<Opposite<BA>, Opposite<BM>> d{
        adj.name + "^op", Opposite<BA>(adj.a), Opposite<BM>(adj.m), {}, {}, {}, {}, {}, {}, {}, {}};
    d.u_obj = adj.f_obj;
    d.u_mor = [f = adj.f_mor](const OM& g) { return OA{f(g.base)}; };
    d.f_obj = adj.u_obj;
    d.f_mor = [u = adj.u_mor](const OA& g) { return OM{u(g.base)}; };
    d.unit = [c = adj.counit](const typename BA::Object& x) { return OA{c(x)}; };
    d.counit = [u = adj.unit](const typename BM::Object& y) { return OM{u(y)}; };
    d.phi = [pi = adj.phi_inv](const OA& f, const typename BM::Object& y) { return OM{pi(f.base, y)}; };
    d.phi_inv = [ph = adj.phi](const OM& g, const typename BA::Object& x) { return OA{ph(g.base, x)}; };
    return d;
}

// Triangle identities, φ against ε∘F(-), both roundtrips, and U/F
// preserving the relevant classes, on the given samples.
template <ModelBackend BM, ModelBackend BA>
Report validate_adjunction(const Adjunction<BM, BA>& adj, const std::vector<typename BM::Object>& xs,
                           const std::vector<typename BA::Object>& ys,
                           const std::vector<typename BM::Morphism>& m_maps,
                           const std::vector<typename BA::Morphism>& a_maps) {
    Report rep;
    const auto& m = adj.m;
    const auto& a = adj.a;
    auto& tri = rep.add("triangle identities");
    for (const auto& x : xs) {
        auto fx = adj.f_obj(x);
        tri.expect(a.equal(a.compose(adj.counit(fx), adj.f_mor(adj.unit(x))), a.identity(fx)), "ε_F ∘ Fη at sample");
    }
    for (const auto& y : ys) {
        auto uy = adj.u_obj(y);
        tri.expect(m.equal(m.compose(adj.u_mor(adj.counit(y)), adj.unit(uy)), m.identity(uy)), "Uε ∘ η_U at sample");
    }
    auto& fn = rep.add("functoriality of U and F");
    for (const auto& x : xs) fn.expect(a.equal(adj.f_mor(m.identity(x)), a.identity(adj.f_obj(x))), "F(id)");
    for (const auto& y : ys) fn.expect(m.equal(adj.u_mor(a.identity(y)), m.identity(adj.u_obj(y))), "U(id)");
    auto& rt = rep.add("phi roundtrips");
    // x → U y maps are provided as m_maps whose targets are U of some y.
    for (const auto& y : ys) {
        auto uy = adj.u_obj(y);
        for (const auto& f : m_maps) {
            if (!m.equal_objects(m.target(f), uy)) continue;
            auto g = adj.phi(f, y);
            rt.expect(a.equal(g, a.compose(adj.counit(y), adj.f_mor(f))), "phi = ε∘F(f)");
            rt.expect(m.equal(adj.phi_inv(g, m.source(f)), f), "phi_inv∘phi");
        }
    }
    for (const auto& x : xs) {
        auto fx = adj.f_obj(x);
        for (const auto& g : a_maps) {
            if (!a.equal_objects(a.source(g), fx)) continue;
            auto f = adj.phi_inv(g, x);
            rt.expect(m.equal(f, m.compose(adj.u_mor(g), adj.unit(x))), "phi_inv = U(g)∘η");
            rt.expect(a.equal(adj.phi(f, a.target(g)), g), "phi∘phi_inv");
        }
    }
    auto& q = rep.add("U right Quillen, F left Quillen");
    for (const auto& g : a_maps) {
        auto c = a.classify(g);
        auto uc = m.classify(adj.u_mor(g));
        if (c.is_fib) q.expect(uc.is_fib, "U preserves fibrations");
        if (c.trivial_fib()) q.expect(uc.trivial_fib(), "U preserves trivial fibrations");
    }
    for (const auto& f : m_maps) {
        auto c = m.classify(f);
        auto fc = a.classify(adj.f_mor(f));
        if (c.is_cof) q.expect(fc.is_cof, "F preserves cofibrations");
        if (c.trivial_cof()) q.expect(fc.trivial_cof(), "F preserves trivial cofibrations");
    }
    return rep;
}

}  // namespace commacat
