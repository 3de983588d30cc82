#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "chain.hpp"

namespace commacat {

// Layout conventions (kron is left factor outer, row-major):
//   (X⊗Y)_n = ⊕_{i+j=n} X_i ⊗ Y_j, summands in ascending i, x⊗y at x·dim Y_j + y.
//   Hom(X,Y)_n = ⊕_i Hom(X_i, Y_{i+n}), ascending i, entry (r, c) at r·dim X_i + c.

namespace detail {

inline int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace detail

class TensorLayout {
public:
    TensorLayout(const ChainComplex& x, const ChainComplex& y) : x_(x), y_(y) {
        if (x.is_zero() || y.is_zero()) return;
        lo_ = x.lo() + y.lo();
        hi_ = x.hi() + y.hi();
        for (int n = lo_; n <= hi_; ++n) {
            std::map<int, std::size_t> offs;
            std::size_t off = 0;
            for (int i = x.lo(); i <= x.hi(); ++i) {
                int j = n - i;
                offs[i] = off;
                off += x.dim(i) * y.dim(j);
            }
            offsets_.push_back(offs);
            dims_.push_back(off);
        }
    }
    bool empty() const { return hi_ < lo_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t dim(int n) const { return n < lo_ || n > hi_ ? 0 : dims_[static_cast<std::size_t>(n - lo_)]; }
    std::size_t offset(int n, int i) const { return offsets_[static_cast<std::size_t>(n - lo_)].at(i); }
    std::size_t index(int i, int j, std::size_t a, std::size_t b) const {
        return offset(i + j, i) + a * y_.dim(j) + b;
    }
    const std::vector<std::size_t>& dims() const { return dims_; }

private:
    ChainComplex x_, y_;
    int lo_ = 0, hi_ = -1;
    std::vector<std::map<int, std::size_t>> offsets_;
    std::vector<std::size_t> dims_;
};

inline ChainComplex tensor_chain(const ChainComplex& x, const ChainComplex& y) {
    if (x.prime() != y.prime()) throw std::invalid_argument("tensor: prime mismatch");
    Prime p = x.prime();
    TensorLayout t(x, y);
    if (t.empty()) return ChainComplex::zero(p);
    std::map<int, Matrix> d;
    for (int n = t.lo() + 1; n <= t.hi(); ++n) {
        Matrix m(p, t.dim(n - 1), t.dim(n));
        for (int i = x.lo(); i <= x.hi(); ++i) {
            int j = n - i;
            if (!x.dim(i) || !y.dim(j)) continue;
            std::size_t col = t.offset(n, i);
            if (x.dim(i - 1)) m.set_block(t.offset(n - 1, i - 1), col, kron(x.d(i), Matrix::identity(p, y.dim(j))));
            if (y.dim(j - 1)) {
                m.set_block(t.offset(n - 1, i), col,
                            kron(Matrix::identity(p, x.dim(i)), y.d(j)).scaled(detail::sign(i)));
            }
        }
        d.emplace(n, m);
    }
    return ChainComplex(p, t.lo(), t.dims(), d);
}

// f ⊗ g, no signs since both have degree 0.
inline ChainMap tensor_maps(const ChainMap& f, const ChainMap& g) {
    Prime p = f.prime();
    auto s = tensor_chain(f.source(), g.source());
    auto t = tensor_chain(f.target(), g.target());
    TensorLayout ls(f.source(), g.source()), lt(f.target(), g.target());
    std::map<int, Matrix> c;
    for (int n = ls.lo(); n <= ls.hi() && !lt.empty(); ++n) {
        Matrix m(p, lt.dim(n), ls.dim(n));
        for (int i = f.source().lo(); i <= f.source().hi(); ++i) {
            int j = n - i;
            Matrix blk = kron(f[i], g[j]);
            if (blk.empty() || blk.is_zero()) continue;
            m.set_block(lt.offset(n, i), ls.offset(n, i), blk);
        }
        c.emplace(n, m);
    }
    return ChainMap(s, t, c);
}

class HomLayout {
public:
    HomLayout(const ChainComplex& x, const ChainComplex& y) : x_(x), y_(y) {
        if (x.is_zero() || y.is_zero()) return;
        lo_ = y.lo() - x.hi();
        hi_ = y.hi() - x.lo();
        for (int n = lo_; n <= hi_; ++n) {
            std::map<int, std::size_t> offs;
            std::size_t off = 0;
            for (int i = x.lo(); i <= x.hi(); ++i) {
                offs[i] = off;
                off += y.dim(i + n) * x.dim(i);
            }
            offsets_.push_back(offs);
            dims_.push_back(off);
        }
    }
    bool empty() const { return hi_ < lo_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t dim(int n) const { return n < lo_ || n > hi_ ? 0 : dims_[static_cast<std::size_t>(n - lo_)]; }
    std::size_t offset(int n, int i) const { return offsets_[static_cast<std::size_t>(n - lo_)].at(i); }
    const std::vector<std::size_t>& dims() const { return dims_; }

    // Degree-0 elements of Hom(X,Y) as graded maps, and back.
    GradedMap unflatten(const Matrix& v, std::size_t col = 0) const {
        std::map<int, Matrix> c;
        for (int i = x_.lo(); i <= x_.hi() && !empty(); ++i) {
            Matrix m(x_.prime(), y_.dim(i), x_.dim(i));
            std::size_t o = offset(0, i);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t k = 0; k < m.cols(); ++k) m.set(r, k, v(o + r * m.cols() + k, col));
            c.emplace(i, m);
        }
        return GradedMap(x_, y_, c);
    }
    Matrix flatten(const GradedMap& f) const {
        Matrix v(x_.prime(), dim(0), 1);
        for (int i = x_.lo(); i <= x_.hi() && !empty(); ++i) {
            Matrix m = f[i];
            std::size_t o = offset(0, i);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t k = 0; k < m.cols(); ++k) v.set(o + r * m.cols() + k, 0, m(r, k));
        }
        return v;
    }

private:
    ChainComplex x_, y_;
    int lo_ = 0, hi_ = -1;
    std::vector<std::map<int, std::size_t>> offsets_;
    std::vector<std::size_t> dims_;
};

// D(f)_i = d_Y f_i - (-1)^n f_{i-1} d_X
inline ChainComplex hom_chain(const ChainComplex& x, const ChainComplex& y) {
    if (x.prime() != y.prime()) throw std::invalid_argument("hom: prime mismatch");
    Prime p = x.prime();
    HomLayout h(x, y);
    if (h.empty()) return ChainComplex::zero(p);
    std::map<int, Matrix> d;
    for (int n = h.lo() + 1; n <= h.hi(); ++n) {
        Matrix m(p, h.dim(n - 1), h.dim(n));
        for (int i = x.lo(); i <= x.hi(); ++i) {
            std::size_t xi = x.dim(i);
            if (y.dim(i + n) && y.dim(i + n - 1) && xi)
                m.set_block(h.offset(n - 1, i), h.offset(n, i), kron(y.d(i + n), Matrix::identity(p, xi)));
            // f_i d_X_{i+1} lands in block i+1 of degree n-1
            if (x.dim(i + 1) && xi && y.dim(i + n)) {
                m.set_block(h.offset(n - 1, i + 1), h.offset(n, i),
                            kron(Matrix::identity(p, y.dim(i + n)), x.d(i + 1).transpose()).scaled(-detail::sign(n)));
            }
        }
        d.emplace(n, m);
    }
    return ChainComplex(p, h.lo(), h.dims(), d);
}

// Hom(X, g): Hom(X,Y) → Hom(X,Y')
inline ChainMap hom_post(const ChainComplex& x, const ChainMap& g) {
    Prime p = g.prime();
    HomLayout hs(x, g.source()), ht(x, g.target());
    auto s = hom_chain(x, g.source());
    auto t = hom_chain(x, g.target());
    std::map<int, Matrix> c;
    for (int n = hs.lo(); n <= hs.hi() && !ht.empty(); ++n) {
        Matrix m(p, ht.dim(n), hs.dim(n));
        for (int i = x.lo(); i <= x.hi(); ++i) {
            Matrix blk = kron(g[i + n], Matrix::identity(p, x.dim(i)));
            if (blk.empty()) continue;
            m.set_block(ht.offset(n, i), hs.offset(n, i), blk);
        }
        c.emplace(n, m);
    }
    return ChainMap(s, t, c);
}

// Hom(f, Y): Hom(X,Y) → Hom(X',Y) for f: X' → X
inline ChainMap hom_pre(const ChainMap& f, const ChainComplex& y) {
    Prime p = f.prime();
    const auto& x = f.target();
    const auto& xp = f.source();
    HomLayout hs(x, y), ht(xp, y);
    auto s = hom_chain(x, y);
    auto t = hom_chain(xp, y);
    std::map<int, Matrix> c;
    if (!hs.empty() && !ht.empty()) {
        for (int n = std::min(hs.lo(), ht.lo()); n <= std::max(hs.hi(), ht.hi()); ++n) {
            Matrix m(p, ht.dim(n), hs.dim(n));
            if (m.empty()) continue;
            for (int i = std::min(x.lo(), xp.lo()); i <= std::max(x.hi(), xp.hi()); ++i) {
                Matrix blk = kron(Matrix::identity(p, y.dim(i + n)), f[i].transpose());
                if (blk.empty() || blk.is_zero()) continue;
                m.set_block(ht.offset(n, i), hs.offset(n, i), blk);
            }
            c.emplace(n, m);
        }
    }
    return ChainMap(s, t, c);
}

// ev: Hom(X,Y) ⊗ X → Y, F ⊗ x ↦ F(x)
inline ChainMap evaluation(const ChainComplex& x, const ChainComplex& y) {
    Prime p = x.prime();
    auto h = hom_chain(x, y);
    HomLayout hl(x, y);
    TensorLayout tl(h, x);
    auto src = tensor_chain(h, x);
    std::map<int, Matrix> c;
    for (int m = tl.lo(); m <= tl.hi() && !tl.empty(); ++m) {
        Matrix e(p, y.dim(m), tl.dim(m));
        if (e.empty()) continue;
        for (int i = x.lo(); i <= x.hi(); ++i) {
            int k = m - i;
            if (!h.dim(k) || !x.dim(i)) continue;
            std::size_t blk = hl.offset(k, i);
            for (std::size_t r = 0; r < y.dim(m); ++r)
                for (std::size_t cc = 0; cc < x.dim(i); ++cc)
                    e.set(r, tl.index(k, i, blk + r * x.dim(i) + cc, cc), 1);
        }
        c.emplace(m, e);
    }
    return ChainMap(src, y, c);
}

// ḡ: B → Hom(X,Y), ḡ(b)(x) = g(b ⊗ x)
inline ChainMap curry(const ChainMap& g, const ChainComplex& b, const ChainComplex& x) {
    Prime p = g.prime();
    const auto& y = g.target();
    if (g.source() != tensor_chain(b, x)) throw std::invalid_argument("curry: source is not B ⊗ X");
    TensorLayout tl(b, x);
    HomLayout hl(x, y);
    auto h = hom_chain(x, y);
    std::map<int, Matrix> c;
    for (int k = b.lo(); k <= b.hi() && !hl.empty(); ++k) {
        Matrix m(p, h.dim(k), b.dim(k));
        if (m.empty()) continue;
        for (int i = x.lo(); i <= x.hi(); ++i) {
            Matrix gi = g[k + i];
            std::size_t blk = hl.offset(k, i);
            for (std::size_t bb = 0; bb < b.dim(k); ++bb)
                for (std::size_t cc = 0; cc < x.dim(i); ++cc) {
                    std::size_t col = tl.index(k, i, bb, cc);
                    for (std::size_t r = 0; r < y.dim(k + i); ++r) m.set(blk + r * x.dim(i) + cc, bb, gi(r, col));
                }
        }
        c.emplace(k, m);
    }
    return ChainMap(b, h, c);
}

// ev ∘ (f ⊗ id_X)
inline ChainMap uncurry(const ChainMap& f, const ChainComplex& x, const ChainComplex& y) {
    return compose(evaluation(x, y), tensor_maps(f, ChainMap::identity(x)));
}

// Degree-0 cycles of Hom(X,Y) are exactly the chain maps.
inline ChainMap chain_map_from_hom(const ChainComplex& x, const ChainComplex& y, const Matrix& v) {
    return ChainMap(HomLayout(x, y).unflatten(v));
}
inline Matrix hom_from_chain_map(const ChainMap& f) {
    return HomLayout(f.source(), f.target()).flatten(f.graded());
}

// Structure isomorphisms of the symmetric monoidal structure.
inline ChainMap tensor_permutation(const ChainComplex& src, const ChainComplex& tgt,
                                   const std::map<int, std::vector<std::pair<std::size_t, long long>>>& perm) {
    Prime p = src.prime();
    std::map<int, Matrix> c;
    for (const auto& [n, v] : perm) {
        Matrix m(p, tgt.dim(n), src.dim(n));
        for (std::size_t col = 0; col < v.size(); ++col) m.set(v[col].first, col, v[col].second);
        c.emplace(n, m);
    }
    return ChainMap(src, tgt, c);
}

// (X⊗Y)⊗Z → X⊗(Y⊗Z)
inline ChainMap associator(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z) {
    auto xy = tensor_chain(x, y), yz = tensor_chain(y, z);
    auto src = tensor_chain(xy, z), tgt = tensor_chain(x, yz);
    TensorLayout lxy(x, y), lyz(y, z), ls(xy, z), lt(x, yz);
    std::map<int, std::vector<std::pair<std::size_t, long long>>> perm;
    for (int n = src.lo(); n <= src.hi() && !src.is_zero(); ++n) perm[n].resize(src.dim(n));
    for (int i = x.lo(); i <= x.hi(); ++i)
        for (int j = y.lo(); j <= y.hi(); ++j)
            for (int k = z.lo(); k <= z.hi(); ++k)
                for (std::size_t a = 0; a < x.dim(i); ++a)
                    for (std::size_t b = 0; b < y.dim(j); ++b)
                        for (std::size_t c = 0; c < z.dim(k); ++c) {
                            std::size_t s = ls.index(i + j, k, lxy.index(i, j, a, b), c);
                            std::size_t t = lt.index(i, j + k, a, lyz.index(j, k, b, c));
                            perm[i + j + k][s] = {t, 1};
                        }
    return tensor_permutation(src, tgt, perm);
}

// S0 ⊗ X → X and X ⊗ S0 → X: identity matrices in the layout.
inline ChainMap left_unitor(const ChainComplex& x) {
    auto s = tensor_chain(ChainComplex::sphere(x.prime(), 0), x);
    std::map<int, Matrix> c;
    for (int n = x.lo(); n <= x.hi(); ++n) c.emplace(n, Matrix::identity(x.prime(), x.dim(n)));
    return ChainMap(s, x, c);
}
inline ChainMap right_unitor(const ChainComplex& x) {
    auto s = tensor_chain(x, ChainComplex::sphere(x.prime(), 0));
    std::map<int, Matrix> c;
    for (int n = x.lo(); n <= x.hi(); ++n) c.emplace(n, Matrix::identity(x.prime(), x.dim(n)));
    return ChainMap(s, x, c);
}

// X⊗Y → Y⊗X, x⊗y ↦ (-1)^{|x||y|} y⊗x
inline ChainMap braiding(const ChainComplex& x, const ChainComplex& y) {
    auto src = tensor_chain(x, y), tgt = tensor_chain(y, x);
    TensorLayout ls(x, y), lt(y, x);
    std::map<int, std::vector<std::pair<std::size_t, long long>>> perm;
    for (int n = src.lo(); n <= src.hi() && !src.is_zero(); ++n) perm[n].resize(src.dim(n));
    for (int i = x.lo(); i <= x.hi(); ++i)
        for (int j = y.lo(); j <= y.hi(); ++j)
            for (std::size_t a = 0; a < x.dim(i); ++a)
                for (std::size_t b = 0; b < y.dim(j); ++b)
                    perm[i + j][ls.index(i, j, a, b)] = {lt.index(j, i, b, a), detail::sign(i * j)};
    return tensor_permutation(src, tgt, perm);
}

}  // namespace commacat
