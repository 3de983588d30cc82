#pragma once

// Independent recomputation of comma classification: corners are rebuilt
// degree by degree from kernels and cokernels of explicit block matrices,
// and weak equivalences are decided by acyclicity of the mapping cone.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "commacat/comma_linear.hpp"

namespace oracle {

using commacat::ChainComma;
using commacat::ChainCommaMorphism;
using commacat::ChainComplex;
using commacat::ChainMap;
using commacat::ClassFlags;
using commacat::Matrix;
using commacat::Prime;
using commacat::StructureId;

struct Graded {
    std::map<int, std::size_t> dim;
    std::map<int, Matrix> d;  // d[n]: n → n-1

    std::size_t at(int n) const {
        auto it = dim.find(n);
        return it == dim.end() ? 0 : it->second;
    }
};

struct GMap {
    Prime p;
    int lo, hi;  // degrees outside are zero on both sides
    Graded s, t;
    std::map<int, Matrix> f;

    Matrix d_src(int n) const { return get(s.d, n, s.at(n - 1), s.at(n)); }
    Matrix d_tgt(int n) const { return get(t.d, n, t.at(n - 1), t.at(n)); }
    Matrix comp(int n) const { return get(f, n, t.at(n), s.at(n)); }

private:
    Matrix get(const std::map<int, Matrix>& m, int n, std::size_t r, std::size_t c) const {
        auto it = m.find(n);
        return it == m.end() ? Matrix(p, r, c) : it->second;
    }
};

inline Graded graded(const ChainComplex& x) {
    Graded g;
    if (x.is_zero()) return g;
    for (int n = x.lo(); n <= x.hi(); ++n) g.dim[n] = x.dim(n);
    for (int n = x.lo() + 1; n <= x.hi(); ++n) g.d.emplace(n, x.d(n));
    return g;
}

// Smallest window containing every nonzero complex (empty as lo > hi).
inline std::pair<int, int> span(const std::vector<ChainComplex>& xs) {
    int lo = 0, hi = -1;
    bool first = true;
    for (const auto& x : xs) {
        if (x.is_zero()) continue;
        lo = first ? x.lo() : std::min(lo, x.lo());
        hi = first ? x.hi() : std::max(hi, x.hi());
        first = false;
    }
    return {lo, hi};
}

inline GMap gmap(const ChainMap& m, int lo, int hi) {
    GMap g{m.prime(), lo, hi, graded(m.source()), graded(m.target()), {}};
    for (int n = lo; n <= hi; ++n) g.f.emplace(n, m[n]);
    return g;
}

inline bool cone_acyclic(const GMap& g) {
    // cone_n = S_{n-1} ⊕ T_n, d(x, y) = (−dx, f x + dy)
    auto cdim = [&](int n) { return g.s.at(n - 1) + g.t.at(n); };
    auto cd = [&](int n) {
        Matrix m(g.p, cdim(n - 1), cdim(n));
        Matrix ds = g.d_src(n - 1);
        for (std::size_t i = 0; i < ds.rows(); ++i)
            for (std::size_t j = 0; j < ds.cols(); ++j) m.set(i, j, -static_cast<long long>(ds(i, j)));
        m.set_block(g.s.at(n - 2), 0, g.comp(n - 1));
        m.set_block(g.s.at(n - 2), g.s.at(n - 1), g.d_tgt(n));
        return m;
    };
    for (int n = g.lo - 1; n <= g.hi + 2; ++n)
        if (commacat::rank(cd(n)) + commacat::rank(cd(n + 1)) != cdim(n)) return false;
    return true;
}

inline ClassFlags flags(const GMap& g) {
    ClassFlags k{true, true, cone_acyclic(g)};
    for (int n = g.lo; n <= g.hi; ++n) {
        auto r = commacat::rank(g.comp(n));
        if (r != g.s.at(n)) k.is_cof = false;
        if (r != g.t.at(n)) k.is_fib = false;
    }
    return k;
}
inline bool iso(const ClassFlags& k) { return k.is_cof && k.is_fib; }

inline Matrix hcat(const Matrix& a, const Matrix& b) { return commacat::hstack(a, b); }
inline Matrix vcat(const Matrix& a, const Matrix& b) { return commacat::vstack(a, b); }

// X with X·a = b, for a of full row rank.
inline Matrix right_divide(const Matrix& b, const Matrix& a) {
    auto x = commacat::solve(a.transpose(), b.transpose());
    if (!x) throw std::logic_error("oracle: map does not factor through the quotient");
    return x->transpose();
}
inline Matrix left_divide(const Matrix& a, const Matrix& b) {
    auto x = commacat::solve(a, b);
    if (!x) throw std::logic_error("oracle: map does not factor through the subspace");
    return *x;
}

// δ: F⁰ → Q, Q_n = ker [U(σ¹)_n, −(π_G)_n] ⊆ U(F¹)_n ⊕ G⁰_n.
inline GMap pullback_corner(const ChainComma& c, const ChainCommaMorphism& s) {
    Prime p = c.m().prime();
    auto uf1 = c.U(s.src.f1);
    auto ug1 = c.U(s.tgt.f1);
    auto us1 = c.U(s.s1);
    auto [lo, hi] = span({s.src.f0, uf1, ug1, s.tgt.f0});
    GMap g{p, lo, hi, graded(s.src.f0), {}, {}};
    std::map<int, Matrix> basis;
    for (int n = lo - 1; n <= hi + 1; ++n) {
        Matrix gpi = s.tgt.pi[n];
        Matrix neg(p, gpi.rows(), gpi.cols());
        for (std::size_t i = 0; i < gpi.rows(); ++i)
            for (std::size_t j = 0; j < gpi.cols(); ++j) neg.set(i, j, -static_cast<long long>(gpi(i, j)));
        Matrix k = commacat::kernel_basis(hcat(us1[n], neg));
        basis.emplace(n, k);
        g.t.dim[n] = k.cols();
    }
    for (int n = lo; n <= hi + 1; ++n) {
        Matrix amb = commacat::direct_sum(uf1.d(n), s.tgt.f0.d(n));
        g.t.d.emplace(n, left_divide(basis.at(n - 1), amb * basis.at(n)));
    }
    for (int n = lo; n <= hi; ++n) g.f.emplace(n, left_divide(basis.at(n), vcat(s.src.pi[n], s.s0[n])));
    return g;
}

// κ: R → G¹, R_n = (F¹_n ⊕ F(G⁰)_n) / im [φ(π_F)_n; −F(σ⁰)_n].
inline GMap pushout_corner(const ChainComma& c, const ChainCommaMorphism& s) {
    Prime p = c.m().prime();
    auto ff0 = c.F(s.src.f0);
    auto fg0 = c.F(s.tgt.f0);
    auto phif = c.phi(s.src.pi, s.src.f1);
    auto phig = c.phi(s.tgt.pi, s.tgt.f1);
    auto fs0 = c.F(s.s0);
    auto [lo, hi] = span({ff0, fg0, s.src.f1, s.tgt.f1});
    GMap g{p, lo, hi, {}, graded(s.tgt.f1), {}};
    std::map<int, Matrix> proj;
    for (int n = lo - 1; n <= hi + 1; ++n) {
        Matrix m = fs0[n];
        Matrix neg(p, m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) neg.set(i, j, -static_cast<long long>(m(i, j)));
        Matrix q = commacat::cokernel_projection(vcat(phif[n], neg));
        proj.emplace(n, q);
        g.s.dim[n] = q.rows();
    }
    for (int n = lo; n <= hi + 1; ++n) {
        Matrix amb = commacat::direct_sum(s.src.f1.d(n), fg0.d(n));
        g.s.d.emplace(n, right_divide(proj.at(n - 1) * amb, proj.at(n)));
    }
    for (int n = lo; n <= hi; ++n) g.f.emplace(n, right_divide(hcat(s.s1[n], phig[n]), proj.at(n)));
    return g;
}

inline ClassFlags classify(const ChainComma& c, const ChainCommaMorphism& s, StructureId id) {
    auto window = [](const ChainMap& m) {
        int lo = m.lo(), hi = m.hi();
        return gmap(m, lo, hi);
    };
    auto k0 = flags(window(s.s0));
    auto k1 = flags(window(s.s1));
    auto delta = [&] { return flags(pullback_corner(c, s)); };
    auto kappa = [&] { return flags(pushout_corner(c, s)); };
    bool lcof = k0.is_cof && k1.is_cof, lfib = k0.is_fib && k1.is_fib, lwe = k0.is_we && k1.is_we;
    switch (id) {
        case StructureId::Inj: return {lcof, k1.is_fib && delta().is_fib, lwe};
        case StructureId::Proj: return {k0.is_cof && kappa().is_cof, lfib, lwe};
        case StructureId::LInj: return {lcof, k1.is_fib && delta().trivial_fib(), k1.is_we};
        case StructureId::LProj: return {k0.is_cof && kappa().is_cof, lfib && delta().is_we, k1.is_we};
        case StructureId::RInj: return {lcof && kappa().is_we, k1.is_fib && delta().is_fib, k0.is_we};
        case StructureId::RProj: return {k0.is_cof && kappa().trivial_cof(), lfib, k0.is_we};
        case StructureId::Strong0: return {k0.is_cof && iso(kappa()), k0.is_fib, k0.is_we};
        case StructureId::Strong1: return {k1.is_cof, k1.is_fib && iso(delta()), k1.is_we};
    }
    throw std::invalid_argument("oracle: unknown structure");
}

}  // namespace oracle
