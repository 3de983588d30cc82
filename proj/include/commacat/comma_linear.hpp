#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "factor.hpp"

namespace commacat {

using ChainComma = Comma<ChainBackend, ChainBackend>;
using ChainCommaObject = ChainComma::Object;
using ChainCommaMorphism = ChainComma::Morphism;

// Entries of all components, degree by degree over the union window.
inline void append_entries(std::vector<std::uint32_t>& out, const GradedMap& g) {
    const auto& s = g.source();
    const auto& t = g.target();
    for (int n = g.lo(); n <= g.hi(); ++n) {
        std::size_t r = t.dim(n), c = s.dim(n);
        if (!r || !c) continue;
        Matrix m = g[n];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) out.push_back(m(i, j));
    }
}

inline std::vector<std::uint32_t> entries(const ChainMap& f) {
    std::vector<std::uint32_t> v;
    append_entries(v, f.graded());
    return v;
}

inline std::vector<std::uint32_t> entries(const ChainCommaMorphism& s) {
    std::vector<std::uint32_t> v;
    append_entries(v, s.s0.graded());
    append_entries(v, s.s1.graded());
    return v;
}

// Columns are the given vectors (all of the same length).
inline Matrix columns_matrix(Prime p, const std::vector<std::vector<std::uint32_t>>& cols, std::size_t len) {
    Matrix m(p, len, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < len; ++i) m.set(i, j, cols[j][i]);
    return m;
}

inline ChainMap combine(const ChainComplex& s, const ChainComplex& t, const std::vector<ChainMap>& basis,
                        const Matrix& coeffs, std::size_t col, std::size_t offset = 0) {
    GradedMap acc = ChainMap::zero(s, t).graded();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto c = coeffs(offset + k, col);
        if (c) acc = linear_combination(acc, 1, basis[k].graded(), c);
    }
    return ChainMap(acc);
}

// p^k, saturating at `cap`.
inline std::uint64_t power_capped(Prime p, std::size_t k, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n > cap / p.value()) return cap;
        n *= p.value();
    }
    return n;
}

// All coefficient vectors of F_p^k mapped through `make`, or nothing past `limit`.
template <class T, class Make>
std::optional<std::vector<T>> enumerate_span(Prime p, std::size_t k, std::uint64_t limit, Make make) {
    std::uint64_t total = power_capped(p, k, limit + 1);
    if (total > limit) return std::nullopt;
    std::vector<T> out;
    out.reserve(total);
    std::vector<std::uint32_t> digits(k, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(make(digits));
        for (std::size_t j = 0; j < k; ++j) {
            if (++digits[j] < p.value()) break;
            digits[j] = 0;
        }
    }
    return out;
}

// Hom(S, T) in the chain backend as an F_p-vector space.
class ChainHomSpace {
public:
    ChainHomSpace(ChainComplex s, ChainComplex t) : s_(std::move(s)), t_(std::move(t)), basis_(chain_hom_basis(s_, t_)) {}

    const std::vector<ChainMap>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    ChainMap element(const std::vector<std::uint32_t>& coeffs) const {
        GradedMap acc = ChainMap::zero(s_, t_).graded();
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (coeffs.at(k)) acc = linear_combination(acc, 1, basis_[k].graded(), coeffs[k]);
        return ChainMap(acc);
    }
    std::uint64_t size(std::uint64_t cap = UINT64_MAX) const { return power_capped(s_.prime(), dim(), cap); }
    std::optional<std::vector<ChainMap>> enumerate(std::uint64_t limit = 1u << 16) const {
        return enumerate_span<ChainMap>(s_.prime(), dim(), limit, [&](const auto& c) { return element(c); });
    }

private:
    ChainComplex s_, t_;
    std::vector<ChainMap> basis_;
};

// A basis of the F_p-vector space Hom(F, G) in the comma category.
class CommaHomSpace {
public:
    CommaHomSpace(const ChainComma& c, ChainCommaObject f, ChainCommaObject g) : f_(std::move(f)), g_(std::move(g)) {
        b0_ = chain_hom_basis(f_.f0, g_.f0);
        b1_ = chain_hom_basis(f_.f1, g_.f1);
        Prime p = c.m().prime();
        // π_G σ⁰ − U(σ¹) π_F = 0
        std::vector<std::vector<std::uint32_t>> cols;
        for (const auto& e : b0_) cols.push_back(entries(compose(g_.pi, e)));
        for (const auto& b : b1_) {
            auto v = entries(compose(c.U(b), f_.pi));
            for (auto& x : v) x = p.neg(x);
            cols.push_back(std::move(v));
        }
        std::size_t len = entries(ChainMap::zero(f_.f0, c.U(g_.f1))).size();
        Matrix k = kernel_basis(columns_matrix(p, cols, len));
        for (std::size_t j = 0; j < k.cols(); ++j)
            basis_.push_back(ChainCommaMorphism{f_, g_, combine(f_.f0, g_.f0, b0_, k, j),
                                                combine(f_.f1, g_.f1, b1_, k, j, b0_.size())});
    }

    const std::vector<ChainCommaMorphism>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    const ChainCommaObject& source() const { return f_; }
    const ChainCommaObject& target() const { return g_; }

    ChainCommaMorphism element(const std::vector<std::uint32_t>& coeffs) const {
        Prime p = f_.f0.prime();
        GradedMap a0 = ChainMap::zero(f_.f0, g_.f0).graded();
        GradedMap a1 = ChainMap::zero(f_.f1, g_.f1).graded();
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            auto c = p.reduce(coeffs.at(k));
            if (!c) continue;
            a0 = linear_combination(a0, 1, basis_[k].s0.graded(), c);
            a1 = linear_combination(a1, 1, basis_[k].s1.graded(), c);
        }
        return ChainCommaMorphism{f_, g_, ChainMap(a0), ChainMap(a1)};
    }

    std::uint64_t size(std::uint64_t cap = UINT64_MAX) const { return power_capped(f_.f0.prime(), dim(), cap); }
    // Every element, or nothing when there are more than `limit`.
    std::optional<std::vector<ChainCommaMorphism>> enumerate(std::uint64_t limit = 1u << 16) const {
        return enumerate_span<ChainCommaMorphism>(f_.f0.prime(), dim(), limit,
                                                  [&](const auto& c) { return element(c); });
    }

private:
    ChainCommaObject f_, g_;
    std::vector<ChainMap> b0_, b1_;
    std::vector<ChainCommaMorphism> basis_;
};

// The lifting problem as one linear system in the coordinates of s⁰ and s¹
// with respect to bases of the chain-map spaces; complete for this instance.
inline std::optional<ChainCommaMorphism> lift_linear(const ChainComma& c, const LiftingProblem<ChainComma>& pr) {
    const auto& b = pr.sigma.tgt;
    const auto& x = pr.beta.src;
    Prime p = c.m().prime();
    auto e0 = chain_hom_basis(b.f0, x.f0);
    auto e1 = chain_hom_basis(b.f1, x.f1);
    std::vector<std::vector<std::uint32_t>> cols;
    auto column = [&](const ChainMap* m0, const ChainMap* m1) {
        std::vector<std::uint32_t> v;
        // blocks: s⁰σ⁰, β⁰s⁰, s¹σ¹, β¹s¹, π_X s⁰ − U(s¹) π_B
        auto z = [&](const ChainComplex& s, const ChainComplex& t) { return ChainMap::zero(s, t).graded(); };
        append_entries(v, m0 ? compose(*m0, pr.sigma.s0).graded() : z(pr.sigma.src.f0, x.f0));
        append_entries(v, m0 ? compose(pr.beta.s0, *m0).graded() : z(b.f0, pr.beta.tgt.f0));
        append_entries(v, m1 ? compose(*m1, pr.sigma.s1).graded() : z(pr.sigma.src.f1, x.f1));
        append_entries(v, m1 ? compose(pr.beta.s1, *m1).graded() : z(b.f1, pr.beta.tgt.f1));
        if (m0) {
            append_entries(v, compose(x.pi, *m0).graded());
        } else {
            std::vector<std::uint32_t> w;
            append_entries(w, compose(c.U(*m1), b.pi).graded());
            for (auto& y : w) y = p.neg(y);
            v.insert(v.end(), w.begin(), w.end());
        }
        return v;
    };
    for (const auto& e : e0) cols.push_back(column(&e, nullptr));
    for (const auto& e : e1) cols.push_back(column(nullptr, &e));
    std::vector<std::uint32_t> rhs;
    append_entries(rhs, pr.top.s0.graded());
    append_entries(rhs, pr.bottom.s0.graded());
    append_entries(rhs, pr.top.s1.graded());
    append_entries(rhs, pr.bottom.s1.graded());
    append_entries(rhs, ChainMap::zero(b.f0, c.U(x.f1)).graded());
    Matrix a = columns_matrix(p, cols, rhs.size());
    Matrix r = columns_matrix(p, {rhs}, rhs.size());
    std::optional<Matrix> sol;
    if (cols.empty()) {
        bool zero = true;
        for (auto v : rhs) zero = zero && v == 0;
        if (zero) sol = Matrix(p, 0, 1);
    } else {
        sol = solve(a, r);
    }
    if (!sol) return std::nullopt;
    ChainCommaMorphism s{b, x, combine(b.f0, x.f0, e0, *sol, 0), combine(b.f1, x.f1, e1, *sol, 0, e0.size())};
    if (!is_lift(c, pr, s)) throw std::logic_error("linear lift: solution fails verification");
    return s;
}

// Structural solver where one exists (Auto/Structural), the linear system otherwise.
inline std::optional<ChainCommaMorphism> lift_comma(const ChainComma& c, const LiftingProblem<ChainComma>& pr,
                                                    StructureId id, LiftStrategy strategy = LiftStrategy::Auto) {
    if (!c.commutes(pr.sigma) || !c.commutes(pr.beta) || !c.commutes(pr.top) || !c.commutes(pr.bottom))
        throw std::invalid_argument("lifting problem: not comma morphisms");
    if (!square_commutes(c, pr)) throw std::invalid_argument("lifting problem: square does not commute");
    if (strategy == LiftStrategy::Linear) return lift_linear(c, pr);
    if (!has_structural_lift(id)) {
        if (strategy == LiftStrategy::Structural)
            throw std::invalid_argument("no structural lifting solver for " + std::string(to_string(id)));
        return lift_linear(c, pr);
    }
    return lift_structural(c, pr, id);
}

}  // namespace commacat
