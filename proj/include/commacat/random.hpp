#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "comma_linear.hpp"

namespace commacat {

// std::mt19937_64 has a fully specified output sequence; bounded draws use
// our own rejection reduction since std distributions vary across libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do x = g_();
        while (x >= limit);
        return x % n;
    }
    // Uniform in [lo, hi].
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
    bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return below(den) < num; }

    // Independent stream for case i of a run seeded with `seed`.
    static Rng for_case(std::uint64_t seed, std::uint64_t i) {
        std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        return Rng(s);
    }

private:
    explicit Rng(std::seed_seq& s) : g_(s) {}
    std::mt19937_64 g_;
};

struct GenBounds {
    std::uint32_t max_dim = 3;
    int max_window = 4;
    int min_lo = -1;
    int max_lo = 1;
};

inline Matrix random_matrix(Rng& rng, Prime p, std::size_t rows, std::size_t cols) {
    Matrix m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<long long>(rng.below(p.value())));
    return m;
}

// Random combination of the columns of k (k.rows() × r).
inline Matrix random_in_span(Rng& rng, const Matrix& k, std::size_t count) {
    return k * random_matrix(rng, k.prime(), k.cols(), count);
}

// d_n is drawn from maps landing in ker d_{n-1}, so d∘d = 0 by construction.
inline ChainComplex random_complex(Rng& rng, Prime p, const GenBounds& b = {}) {
    if (b.max_dim == 0 || b.max_window <= 0) return ChainComplex::zero(p);
    int len = static_cast<int>(rng.range(1, b.max_window));
    int lo = static_cast<int>(rng.range(b.min_lo, b.max_lo));
    std::vector<std::size_t> dims;
    for (int i = 0; i < len; ++i) dims.push_back(rng.below(b.max_dim + 1));
    std::map<int, Matrix> diffs;
    Matrix prev(p, 0, dims[0]);  // d_lo
    for (int i = 1; i < len; ++i) {
        Matrix k = kernel_basis(prev);
        Matrix d = random_in_span(rng, k, dims[i]);
        diffs.emplace(lo + i, d);
        prev = d;
    }
    return ChainComplex(p, lo, dims, diffs);
}

inline ChainMap random_chain_map(Rng& rng, const ChainComplex& s, const ChainComplex& t) {
    auto basis = chain_hom_basis(s, t);
    GradedMap acc = ChainMap::zero(s, t).graded();
    for (const auto& b : basis) {
        auto c = rng.below(s.prime().value());
        if (c) acc = linear_combination(acc, 1, b.graded(), static_cast<long long>(c));
    }
    return ChainMap(acc);
}

inline ChainMap random_chain_map(Rng& rng, Prime p, const GenBounds& b = {}) {
    auto s = random_complex(rng, p, b);
    auto t = random_complex(rng, p, b);
    return random_chain_map(rng, s, t);
}

// Random element of an arbitrary finite list of generators' span.
inline ChainCommaMorphism random_comma_hom(Rng& rng, const CommaHomSpace& h) {
    std::vector<std::uint32_t> c(h.dim());
    for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(h.source().f0.prime().value()));
    return h.element(c);
}

inline ChainCommaObject random_comma_object(Rng& rng, const ChainComma& c, const GenBounds& b = {}) {
    Prime p = c.m().prime();
    auto f0 = random_complex(rng, p, b);
    auto f1 = random_complex(rng, p, b);
    return c.make_object(f0, f1, random_chain_map(rng, f0, c.U(f1)));
}

// Mixture of shapes so that all flag combinations occur: random homs between
// random objects, images of random chain maps under ι, F⁺, L¹ and R⁰, and
// maps into coproducts.
inline ChainCommaMorphism random_comma_morphism(Rng& rng, const ChainComma& c, const GenBounds& b = {}) {
    Prime p = c.m().prime();
    switch (rng.below(6)) {
        case 0: return c.iota(random_chain_map(rng, p, b));
        case 1: return c.Fplus(random_chain_map(rng, p, b));
        case 2: {
            auto f = random_comma_object(rng, c, b);
            auto g = random_comma_object(rng, c, b);
            auto cp = c.coproduct(f, g);
            auto h = random_comma_hom(rng, CommaHomSpace(c, cp.apex, cp.apex));
            return c.compose(h, cp.legs[0]);
        }
        case 3: {
            auto x = random_comma_object(rng, c, b);
            auto f = random_chain_map(rng, x.f0, random_complex(rng, p, b));
            // x → R⁰(target) has to factor through the terminal; take the A-side zero.
            auto r = c.R0(f.target());
            return c.make_morphism(x, r, f, c.a().to_terminal(x.f1));
        }
        default: {
            auto f = random_comma_object(rng, c, b);
            auto g = random_comma_object(rng, c, b);
            return random_comma_hom(rng, CommaHomSpace(c, f, g));
        }
    }
}

// An isomorphism out of X: conjugate the differentials by random invertible
// matrices g_n, which then form the components of an isomorphism X → X'.
inline ChainMap random_iso_from(Rng& rng, const ChainComplex& x) {
    Prime p = x.prime();
    if (x.is_zero()) return ChainMap::identity(x);
    std::map<int, Matrix> g, ginv;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        for (;;) {
            Matrix m = random_matrix(rng, p, x.dim(n), x.dim(n));
            auto inv = inverse(m);
            if (inv) {
                g.emplace(n, m);
                ginv.emplace(n, *inv);
                break;
            }
        }
    }
    std::map<int, Matrix> d;
    for (int n = x.lo() + 1; n <= x.hi(); ++n) d.emplace(n, g.at(n - 1) * x.d(n) * ginv.at(n));
    ChainComplex y(p, x.lo(), x.dims(), d);
    return ChainMap(x, y, g);
}

}  // namespace commacat
