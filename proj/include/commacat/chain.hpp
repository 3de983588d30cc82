#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "backend.hpp"
#include "core.hpp"
#include "linalg.hpp"

namespace commacat {

// Finitely supported chain complex; d_n: C_n → C_{n-1}. The stored window is
// trimmed so that both ends have positive dimension (empty for the zero complex).
class ChainComplex {
public:
    ChainComplex(Prime p, int lo, std::vector<std::size_t> dims, const std::map<int, Matrix>& diffs = {})
        : rep_(build(p, lo, std::move(dims), diffs)) {}

    static ChainComplex zero(Prime p) { return ChainComplex(p, 0, {}); }
    static ChainComplex sphere(Prime p, int n) { return ChainComplex(p, n, {1}); }
    // F_p →[1] F_p in degrees n, n-1.
    static ChainComplex disk(Prime p, int n) {
        return ChainComplex(p, n - 1, {1, 1}, {{n, Matrix::identity(p, 1)}});
    }

    Prime prime() const { return rep_->p; }
    int lo() const { return rep_->lo; }
    int hi() const { return rep_->lo + static_cast<int>(rep_->dims.size()) - 1; }
    bool is_zero() const { return rep_->dims.empty(); }

    std::size_t dim(int n) const {
        if (n < lo() || n > hi()) return 0;
        return rep_->dims[static_cast<std::size_t>(n - lo())];
    }
    Matrix d(int n) const {
        if (n <= lo() || n > hi()) return Matrix(prime(), dim(n - 1), dim(n));
        return rep_->diffs[static_cast<std::size_t>(n - lo() - 1)];
    }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (auto x : rep_->dims) s += x;
        return s;
    }
    const std::vector<std::size_t>& dims() const { return rep_->dims; }

    bool operator==(const ChainComplex& o) const {
        if (rep_ == o.rep_) return true;
        if (prime() != o.prime() || lo() != o.lo() || rep_->dims != o.rep_->dims) return false;
        for (std::size_t k = 0; k < rep_->diffs.size(); ++k)
            if (rep_->diffs[k] != o.rep_->diffs[k]) return false;
        return true;
    }
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "C(p=" + std::to_string(prime().value()) + ";";
        for (int n = lo(); n <= hi(); ++n) s += " " + std::to_string(n) + ":" + std::to_string(dim(n));
        return s + ")";
    }

private:
    struct Rep {
        Prime p;
        int lo;
        std::vector<std::size_t> dims;
        std::vector<Matrix> diffs;  // diffs[k] = d_{lo+k+1}
    };

    static std::shared_ptr<const Rep> build(Prime p, int lo, std::vector<std::size_t> dims,
                                            const std::map<int, Matrix>& diffs) {
        const int hi = lo + static_cast<int>(dims.size()) - 1;
        auto dim_at = [&](int n) -> std::size_t {
            return (n < lo || n > hi) ? 0 : dims[static_cast<std::size_t>(n - lo)];
        };
        for (const auto& [n, m] : diffs) {
            if (m.prime() != p) throw std::invalid_argument("differential prime mismatch");
            if (m.rows() != dim_at(n - 1) || m.cols() != dim_at(n)) {
                throw std::invalid_argument("differential d_" + std::to_string(n) + " has shape " + m.shape());
            }
        }
        auto get = [&](int n) {
            auto it = diffs.find(n);
            return it == diffs.end() ? Matrix(p, dim_at(n - 1), dim_at(n)) : it->second;
        };
        for (int n = lo + 2; n <= hi; ++n) {
            if (!(get(n - 1) * get(n)).is_zero()) {
                throw std::invalid_argument("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
            }
        }
        std::size_t a = 0, b = dims.size();
        while (a < b && dims[a] == 0) ++a;
        while (b > a && dims[b - 1] == 0) --b;
        auto rep = std::make_shared<Rep>(Rep{p, a < b ? lo + static_cast<int>(a) : 0, {}, {}});
        for (std::size_t k = a; k < b; ++k) rep->dims.push_back(dims[k]);
        for (std::size_t k = a + 1; k < b; ++k) rep->diffs.push_back(get(lo + static_cast<int>(k)));
        return rep;
    }

    std::shared_ptr<const Rep> rep_;
};

// Degree-0 graded linear map; no compatibility with differentials assumed.
class GradedMap {
public:
    GradedMap(ChainComplex source, ChainComplex target, const std::map<int, Matrix>& comps = {})
        : src_(std::move(source)), tgt_(std::move(target)) {
        if (src_.prime() != tgt_.prime()) throw std::invalid_argument("graded map prime mismatch");
        window();
        for (int n = lo_; n <= hi_; ++n) comps_.emplace_back(src_.prime(), tgt_.dim(n), src_.dim(n));
        for (const auto& [n, m] : comps) {
            if (m.rows() != tgt_.dim(n) || m.cols() != src_.dim(n) || m.prime() != src_.prime()) {
                throw std::invalid_argument("component " + std::to_string(n) + " has shape " + m.shape());
            }
            if (m.empty()) continue;
            comps_[static_cast<std::size_t>(n - lo_)] = m;
        }
    }

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }
    Prime prime() const { return src_.prime(); }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    Matrix operator[](int n) const {
        if (n < lo_ || n > hi_) return Matrix(prime(), tgt_.dim(n), src_.dim(n));
        return comps_[static_cast<std::size_t>(n - lo_)];
    }
    void set(int n, Matrix m) {
        if (n < lo_ || n > hi_) {
            if (!m.empty()) throw std::invalid_argument("component outside support");
            return;
        }
        if (m.rows() != tgt_.dim(n) || m.cols() != src_.dim(n)) throw std::invalid_argument("component shape");
        comps_[static_cast<std::size_t>(n - lo_)] = std::move(m);
    }

    bool is_chain_map() const {
        for (int n = lo_; n <= hi_ + 1; ++n) {
            if ((*this)[n - 1] * src_.d(n) != tgt_.d(n) * (*this)[n]) return false;
        }
        return true;
    }

    bool operator==(const GradedMap& o) const {
        if (src_ != o.src_ || tgt_ != o.tgt_) return false;
        for (int n = lo_; n <= hi_; ++n)
            if ((*this)[n] != o[n]) return false;
        return true;
    }

private:
    void window() {
        if (src_.is_zero() && tgt_.is_zero()) {
            lo_ = 0;
            hi_ = -1;
        } else if (src_.is_zero()) {
            lo_ = tgt_.lo();
            hi_ = tgt_.hi();
        } else if (tgt_.is_zero()) {
            lo_ = src_.lo();
            hi_ = src_.hi();
        } else {
            lo_ = std::min(src_.lo(), tgt_.lo());
            hi_ = std::max(src_.hi(), tgt_.hi());
        }
    }

    ChainComplex src_, tgt_;
    int lo_ = 0, hi_ = -1;
    std::vector<Matrix> comps_;
};

class ChainMap {
public:
    explicit ChainMap(GradedMap g) : g_(std::move(g)) {
        if (!g_.is_chain_map()) throw std::invalid_argument("components do not commute with the differentials");
    }
    ChainMap(ChainComplex source, ChainComplex target, const std::map<int, Matrix>& comps)
        : ChainMap(GradedMap(std::move(source), std::move(target), comps)) {}

    static ChainMap identity(const ChainComplex& x) {
        std::map<int, Matrix> c;
        for (int n = x.lo(); n <= x.hi(); ++n) c.emplace(n, Matrix::identity(x.prime(), x.dim(n)));
        return ChainMap(x, x, c);
    }
    static ChainMap zero(const ChainComplex& x, const ChainComplex& y) { return ChainMap(x, y, {}); }

    const ChainComplex& source() const { return g_.source(); }
    const ChainComplex& target() const { return g_.target(); }
    Prime prime() const { return g_.prime(); }
    Matrix operator[](int n) const { return g_[n]; }
    const GradedMap& graded() const { return g_; }
    int lo() const { return g_.lo(); }
    int hi() const { return g_.hi(); }

    bool operator==(const ChainMap& o) const { return g_ == o.g_; }
    bool operator!=(const ChainMap& o) const { return !(*this == o); }

    bool is_zero() const {
        for (int n = lo(); n <= hi(); ++n)
            if (!g_[n].is_zero()) return false;
        return true;
    }

private:
    GradedMap g_;
};

// g ∘ f
inline GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.target() != g.source()) throw std::invalid_argument("compose: endpoints do not match");
    std::map<int, Matrix> c;
    int lo = std::min(f.lo(), g.lo()), hi = std::max(f.hi(), g.hi());
    for (int n = lo; n <= hi; ++n) c.emplace(n, g[n] * f[n]);
    return GradedMap(f.source(), g.target(), c);
}

inline ChainMap compose(const ChainMap& g, const ChainMap& f) { return ChainMap(compose(g.graded(), f.graded())); }

inline GradedMap linear_combination(const GradedMap& a, long long ca, const GradedMap& b, long long cb) {
    if (a.source() != b.source() || a.target() != b.target()) throw std::invalid_argument("sum: endpoints differ");
    std::map<int, Matrix> c;
    for (int n = std::min(a.lo(), b.lo()); n <= std::max(a.hi(), b.hi()); ++n)
        c.emplace(n, a[n].scaled(ca) + b[n].scaled(cb));
    return GradedMap(a.source(), a.target(), c);
}

inline ChainMap operator+(const ChainMap& a, const ChainMap& b) {
    return ChainMap(linear_combination(a.graded(), 1, b.graded(), 1));
}
inline ChainMap operator-(const ChainMap& a, const ChainMap& b) {
    return ChainMap(linear_combination(a.graded(), 1, b.graded(), -1));
}
inline ChainMap scaled(const ChainMap& a, long long c) {
    return ChainMap(linear_combination(a.graded(), c, a.graded(), 0));
}

// Homology with chosen cycle representatives: H_n = Z_n / B_n, where the
// representatives complete a basis of B_n to one of Z_n.
class Homology {
public:
    explicit Homology(const ChainComplex& x) : x_(x) {
        for (int n = x.lo(); n <= x.hi(); ++n) {
            Matrix z = kernel_basis(x.d(n));
            Matrix b = image_basis(x.d(n + 1));
            Matrix bz = hstack(b, z);
            auto piv = rref(bz).pivots;
            std::vector<std::size_t> pick;
            for (auto c : piv)
                if (c >= b.cols()) pick.push_back(c - b.cols());
            Matrix reps(x.prime(), x.dim(n), pick.size());
            for (std::size_t t = 0; t < pick.size(); ++t) reps.set_block(0, t, z.column(pick[t]));
            levels_.push_back({b, reps, hstack(b, reps)});
        }
    }

    std::size_t dim(int n) const {
        if (n < x_.lo() || n > x_.hi()) return 0;
        return level(n).reps.cols();
    }
    // Columns are cycle representatives of a basis of H_n.
    Matrix reps(int n) const {
        if (n < x_.lo() || n > x_.hi()) return Matrix(x_.prime(), x_.dim(n), 0);
        return level(n).reps;
    }
    // Homology coordinates of cycles given as columns.
    Matrix classes(int n, const Matrix& cycles) const {
        if (n < x_.lo() || n > x_.hi()) return Matrix(x_.prime(), 0, cycles.cols());
        const auto& lv = level(n);
        auto sol = solve(lv.basis, cycles);
        if (!sol) throw std::invalid_argument("classes: input columns are not cycles");
        return sol->block(lv.bounds.cols(), 0, lv.reps.cols(), cycles.cols());
    }

private:
    struct Level {
        Matrix bounds, reps, basis;
    };
    const Level& level(int n) const { return levels_[static_cast<std::size_t>(n - x_.lo())]; }

    ChainComplex x_;
    std::vector<Level> levels_;
};

inline std::map<int, std::size_t> homology(const ChainComplex& x) {
    Homology h(x);
    std::map<int, std::size_t> out;
    for (int n = x.lo(); n <= x.hi(); ++n) out[n] = h.dim(n);
    return out;
}

// H_n(f) in the chosen bases.
inline Matrix induced_on_homology(const ChainMap& f, const Homology& hx, const Homology& hy, int n) {
    return hy.classes(n, f[n] * hx.reps(n));
}

inline bool is_quasi_iso(const ChainMap& f) {
    Homology hx(f.source()), hy(f.target());
    for (int n = f.lo(); n <= f.hi(); ++n) {
        if (hx.dim(n) != hy.dim(n)) return false;
        if (rank(induced_on_homology(f, hx, hy, n)) != hx.dim(n)) return false;
    }
    return true;
}

inline ClassFlags classify_map(const ChainMap& f) {
    ClassFlags c{true, true, false};
    for (int n = f.lo(); n <= f.hi(); ++n) {
        Matrix m = f[n];
        std::size_t r = rank(m);
        if (r != m.cols()) c.is_cof = false;
        if (r != m.rows()) c.is_fib = false;
    }
    c.is_we = is_quasi_iso(f);
    return c;
}

inline std::optional<ChainMap> inverse(const ChainMap& f) {
    std::map<int, Matrix> c;
    for (int n = f.lo(); n <= f.hi(); ++n) {
        auto inv = inverse(f[n]);
        if (!inv) return std::nullopt;
        c.emplace(n, *inv);
    }
    return ChainMap(f.target(), f.source(), c);
}

// ---- direct sums, kernels, cokernels -------------------------------------

struct Biproduct {
    ChainComplex sum;
    ChainMap in1, in2, pr1, pr2;
};

inline Biproduct direct_sum(const ChainComplex& x, const ChainComplex& y) {
    Prime p = x.prime();
    if (y.prime() != p) throw std::invalid_argument("direct sum: prime mismatch");
    if (x.is_zero() || y.is_zero()) {
        const ChainComplex& s = x.is_zero() ? y : x;
        auto id = ChainMap::identity(s);
        auto zx = ChainMap::zero(x, s), zy = ChainMap::zero(y, s);
        auto ox = ChainMap::zero(s, x), oy = ChainMap::zero(s, y);
        return x.is_zero() ? Biproduct{s, zx, id, ox, id} : Biproduct{s, id, zy, id, oy};
    }
    int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
    std::vector<std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = lo; n <= hi; ++n) dims.push_back(x.dim(n) + y.dim(n));
    for (int n = lo + 1; n <= hi; ++n) d.emplace(n, direct_sum(x.d(n), y.d(n)));
    ChainComplex s(p, lo, dims, d);
    std::map<int, Matrix> i1, i2, p1, p2;
    for (int n = lo; n <= hi; ++n) {
        Matrix a = Matrix(p, s.dim(n), x.dim(n)), b = Matrix(p, s.dim(n), y.dim(n));
        a.set_block(0, 0, Matrix::identity(p, x.dim(n)));
        b.set_block(x.dim(n), 0, Matrix::identity(p, y.dim(n)));
        i1.emplace(n, a);
        i2.emplace(n, b);
        p1.emplace(n, a.transpose());
        p2.emplace(n, b.transpose());
    }
    return {s, ChainMap(x, s, i1), ChainMap(y, s, i2), ChainMap(s, x, p1), ChainMap(s, y, p2)};
}

// Subcomplex ker(h) ↪ source(h).
inline std::pair<ChainComplex, ChainMap> kernel(const ChainMap& h) {
    const auto& s = h.source();
    Prime p = s.prime();
    std::map<int, Matrix> basis;
    std::vector<std::size_t> dims;
    for (int n = s.lo(); n <= s.hi(); ++n) {
        Matrix k = kernel_basis(h[n]);
        dims.push_back(k.cols());
        basis.emplace(n, k);
    }
    auto b = [&](int n) { return n < s.lo() || n > s.hi() ? Matrix(p, s.dim(n), 0) : basis.at(n); };
    std::map<int, Matrix> d;
    for (int n = s.lo() + 1; n <= s.hi(); ++n) {
        auto x = solve(b(n - 1), s.d(n) * b(n));
        if (!x) throw std::logic_error("kernel not closed under the differential");
        d.emplace(n, *x);
    }
    ChainComplex k(p, s.lo(), dims, d);
    std::map<int, Matrix> inc;
    for (int n = k.lo(); n <= k.hi(); ++n) inc.emplace(n, b(n));
    return {k, ChainMap(k, s, inc)};
}

// Quotient target(h) ↠ coker(h).
inline std::pair<ChainComplex, ChainMap> cokernel(const ChainMap& h) {
    const auto& t = h.target();
    Prime p = t.prime();
    std::map<int, Matrix> proj;
    std::vector<std::size_t> dims;
    for (int n = t.lo(); n <= t.hi(); ++n) {
        Matrix q = cokernel_projection(h[n]);
        dims.push_back(q.rows());
        proj.emplace(n, q);
    }
    auto q = [&](int n) { return n < t.lo() || n > t.hi() ? Matrix(p, 0, t.dim(n)) : proj.at(n); };
    std::map<int, Matrix> d;
    for (int n = t.lo() + 1; n <= t.hi(); ++n) {
        Matrix qn = q(n);
        auto right_inv = solve(qn, Matrix::identity(p, qn.rows()));
        if (!right_inv) throw std::logic_error("cokernel projection not surjective");
        d.emplace(n, q(n - 1) * t.d(n) * *right_inv);
    }
    ChainComplex c(p, t.lo(), dims, d);
    std::map<int, Matrix> pr;
    for (int n = c.lo(); n <= c.hi(); ++n) pr.emplace(n, q(n));
    return {c, ChainMap(t, c, pr)};
}

// [f, g]: X ⊕ Y → Z
inline ChainMap copair(const Biproduct& s, const ChainMap& f, const ChainMap& g) {
    return compose(f, s.pr1) + compose(g, s.pr2);
}
// (f, g): Z → X ⊕ Y
inline ChainMap pair(const Biproduct& s, const ChainMap& f, const ChainMap& g) {
    return compose(s.in1, f) + compose(s.in2, g);
}

// ---- factorizations -------------------------------------------------------

// Mapping cylinder Cyl(f)_n = X_n ⊕ X_{n-1} ⊕ Y_n, d(x, x', y) = (dx + x', -dx', dy - f x').
inline Factorization<ChainMap> mapping_cylinder(const ChainMap& f) {
    const auto& x = f.source();
    const auto& y = f.target();
    Prime p = x.prime();
    if (x.is_zero()) return {ChainMap::zero(x, y), ChainMap::identity(y)};
    int lo = y.is_zero() ? x.lo() : std::min(x.lo(), y.lo());
    int hi = y.is_zero() ? x.hi() + 1 : std::max(x.hi() + 1, y.hi());
    auto dim = [&](int n) { return x.dim(n) + x.dim(n - 1) + y.dim(n); };
    std::vector<std::size_t> dims;
    std::map<int, Matrix> d, l, r;
    for (int n = lo; n <= hi; ++n) dims.push_back(dim(n));
    for (int n = lo + 1; n <= hi; ++n) {
        Matrix m(p, dim(n - 1), dim(n));
        std::size_t r0 = x.dim(n - 1), r1 = x.dim(n - 2);
        std::size_t c0 = x.dim(n), c1 = x.dim(n - 1);
        m.set_block(0, 0, x.d(n));
        m.set_block(0, c0, Matrix::identity(p, c1));
        m.set_block(r0, c0, -x.d(n - 1));
        m.set_block(r0 + r1, c0, -f[n - 1]);
        m.set_block(r0 + r1, c0 + c1, y.d(n));
        d.emplace(n, m);
    }
    ChainComplex cyl(p, lo, dims, d);
    for (int n = lo; n <= hi; ++n) {
        Matrix ln(p, dim(n), x.dim(n));
        ln.set_block(0, 0, Matrix::identity(p, x.dim(n)));
        Matrix rn(p, y.dim(n), dim(n));
        rn.set_block(0, 0, f[n]);
        rn.set_block(0, x.dim(n) + x.dim(n - 1), Matrix::identity(p, y.dim(n)));
        l.emplace(n, ln);
        r.emplace(n, rn);
    }
    return {ChainMap(x, cyl, l), ChainMap(cyl, y, r)};
}

// Mapping cocylinder X ×_Y Y^I, (Y^I)_n = Y_n ⊕ Y_n ⊕ Y_{n+1}; presented as
// X_n ⊕ Y_n ⊕ Y_{n+1} with d(x, b, h) = (dx, db, f x - b - dh).
inline Factorization<ChainMap> mapping_cocylinder(const ChainMap& f) {
    const auto& x = f.source();
    const auto& y = f.target();
    Prime p = x.prime();
    if (y.is_zero()) return {ChainMap::identity(x), ChainMap::zero(x, y)};
    int lo = x.is_zero() ? y.lo() - 1 : std::min(x.lo(), y.lo() - 1);
    int hi = x.is_zero() ? y.hi() : std::max(x.hi(), y.hi());
    auto dim = [&](int n) { return x.dim(n) + y.dim(n) + y.dim(n + 1); };
    std::vector<std::size_t> dims;
    std::map<int, Matrix> d, l, r;
    for (int n = lo; n <= hi; ++n) dims.push_back(dim(n));
    for (int n = lo + 1; n <= hi; ++n) {
        Matrix m(p, dim(n - 1), dim(n));
        std::size_t r0 = x.dim(n - 1), r1 = y.dim(n - 1);
        std::size_t c0 = x.dim(n), c1 = y.dim(n);
        m.set_block(0, 0, x.d(n));
        m.set_block(r0, c0, y.d(n));
        m.set_block(r0 + r1, 0, f[n]);
        m.set_block(r0 + r1, c0, -Matrix::identity(p, c1));
        m.set_block(r0 + r1, c0 + c1, -y.d(n + 1));
        d.emplace(n, m);
    }
    ChainComplex path(p, lo, dims, d);
    for (int n = lo; n <= hi; ++n) {
        Matrix ln(p, dim(n), x.dim(n));
        ln.set_block(0, 0, Matrix::identity(p, x.dim(n)));
        ln.set_block(x.dim(n), 0, f[n]);
        Matrix rn(p, y.dim(n), dim(n));
        rn.set_block(0, x.dim(n), Matrix::identity(p, y.dim(n)));
        l.emplace(n, ln);
        r.emplace(n, rn);
    }
    return {ChainMap(x, path, l), ChainMap(path, y, r)};
}

inline Factorization<ChainMap> factorize_chain(const ChainMap& f, FactorKind kind) {
    return kind == FactorKind::CofThenTrivFib ? mapping_cylinder(f) : mapping_cocylinder(f);
}

// ---- linear systems in the components of an unknown map -------------------

// Unknown graded map S → T; variable index of entry (r, c) of the degree-n
// component is offset(n) + r * dim S_n + c.
class MapUnknowns {
public:
    MapUnknowns(ChainComplex s, ChainComplex t, std::size_t first = 0) : s_(std::move(s)), t_(std::move(t)) {
        lo_ = std::max(s_.lo(), t_.lo());
        hi_ = std::min(s_.hi(), t_.hi());
        std::size_t off = first;
        for (int n = lo_; n <= hi_; ++n) {
            offsets_.push_back(off);
            off += s_.dim(n) * t_.dim(n);
        }
        first_ = first;
        end_ = off;
    }
    bool has(int n) const { return n >= lo_ && n <= hi_ && !s_.is_zero() && !t_.is_zero(); }
    std::size_t offset(int n) const { return offsets_[static_cast<std::size_t>(n - lo_)]; }
    std::size_t begin() const { return first_; }
    std::size_t end() const { return end_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const ChainComplex& source() const { return s_; }
    const ChainComplex& target() const { return t_; }

    GradedMap read(const Matrix& x, std::size_t col = 0) const {
        std::map<int, Matrix> c;
        Prime p = s_.prime();
        for (int n = lo_; n <= hi_; ++n) {
            if (!has(n)) continue;
            Matrix m(p, t_.dim(n), s_.dim(n));
            std::size_t o = offset(n);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t cc = 0; cc < m.cols(); ++cc) m.set(r, cc, x(o + r * m.cols() + cc, col));
            c.emplace(n, m);
        }
        return GradedMap(s_, t_, c);
    }

private:
    ChainComplex s_, t_;
    int lo_ = 0, hi_ = -1;
    std::size_t first_ = 0, end_ = 0;
    std::vector<std::size_t> offsets_;
};

// Accumulates sparse equations row by row, then solves densely.
class LinearSystem {
public:
    LinearSystem(Prime p, std::size_t vars) : p_(p), vars_(vars) {}

    std::size_t new_rows(std::size_t k) {
        std::size_t r = rows_.size();
        rows_.resize(r + k);
        rhs_.resize(r + k, 0);
        return r;
    }
    void add(std::size_t row, std::size_t var, std::uint32_t coef) {
        if (coef % p_.value()) rows_[row].emplace_back(var, coef % p_.value());
    }
    void add_rhs(std::size_t row, std::uint32_t v) { rhs_[row] = p_.add(rhs_[row], v % p_.value()); }

    // Constraint A·S (S the unknown T_n ← S_n block at `u`) contributes
    // coefficient A[i][k] to equation (i, c) for variable (k, c).
    void add_left(std::size_t row0, const MapUnknowns& u, int n, const Matrix& a, std::uint32_t sign = 1) {
        if (!u.has(n)) return;
        std::size_t cols = u.source().dim(n);
        std::size_t off = u.offset(n);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                std::uint32_t v = p_.mul(a(i, k), sign);
                if (!v) continue;
                for (std::size_t c = 0; c < cols; ++c) add(row0 + i * cols + c, off + k * cols + c, v);
            }
    }
    // Constraint S·B contributes B[k][c] to equation (i, c) for variable (i, k);
    // the equation block has `cols` = B.cols() columns.
    void add_right(std::size_t row0, const MapUnknowns& u, int n, const Matrix& b, std::uint32_t sign = 1) {
        if (!u.has(n)) return;
        std::size_t rows = u.target().dim(n);
        std::size_t inner = u.source().dim(n);
        std::size_t off = u.offset(n);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < inner; ++k)
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    std::uint32_t v = p_.mul(b(k, c), sign);
                    if (v) add(row0 + i * b.cols() + c, off + i * inner + k, v);
                }
    }
    void add_rhs_matrix(std::size_t row0, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t c = 0; c < m.cols(); ++c) add_rhs(row0 + i * m.cols() + c, m(i, c));
    }

    std::size_t equations() const { return rows_.size(); }

    Matrix matrix() const {
        Matrix a(p_, rows_.size(), vars_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (auto [v, c] : rows_[r]) a.add_to(r, v, c);
        return a;
    }
    Matrix rhs() const {
        Matrix b(p_, rhs_.size(), 1);
        for (std::size_t r = 0; r < rhs_.size(); ++r) b.set(r, 0, rhs_[r]);
        return b;
    }
    std::optional<Matrix> solve() const {
        if (vars_ == 0) {
            for (auto v : rhs_)
                if (v) return std::nullopt;
            return Matrix(p_, 0, 1);
        }
        return commacat::solve(matrix(), rhs());
    }
    Matrix nullspace() const { return kernel_basis(matrix()); }

private:
    Prime p_;
    std::size_t vars_;
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> rows_;
    std::vector<std::uint32_t> rhs_;
};

// Chain condition d^T_n S_n - S_{n-1} d^S_n = 0 for every n.
inline void add_chain_condition(LinearSystem& sys, const MapUnknowns& u) {
    const auto& s = u.source();
    const auto& t = u.target();
    Prime p = s.prime();
    if (s.is_zero() || t.is_zero()) return;
    for (int n = u.lo(); n <= u.hi() + 1; ++n) {
        std::size_t rows = t.dim(n - 1), cols = s.dim(n);
        if (rows == 0 || cols == 0) continue;
        std::size_t r0 = sys.new_rows(rows * cols);
        sys.add_left(r0, u, n, t.d(n));
        sys.add_right(r0, u, n - 1, s.d(n), p.neg(1));
    }
}

// A basis of the space of chain maps S → T.
inline std::vector<ChainMap> chain_hom_basis(const ChainComplex& s, const ChainComplex& t) {
    MapUnknowns u(s, t);
    LinearSystem sys(s.prime(), u.end());
    add_chain_condition(sys, u);
    Matrix k = sys.nullspace();
    std::vector<ChainMap> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.emplace_back(u.read(k, j));
    return out;
}

inline std::size_t chain_hom_dim(const ChainComplex& s, const ChainComplex& t) {
    MapUnknowns u(s, t);
    LinearSystem sys(s.prime(), u.end());
    add_chain_condition(sys, u);
    return u.end() - (sys.equations() ? rank(sys.matrix()) : 0);
}

// s with s∘i = top and p∘s = bottom, from one linear system in all entries of s.
inline std::optional<ChainMap> solve_lift_chain(const ChainMap& i, const ChainMap& p, const ChainMap& top,
                                                const ChainMap& bottom) {
    if (top.source() != i.source() || top.target() != p.source() || bottom.source() != i.target() ||
        bottom.target() != p.target()) {
        throw std::invalid_argument("lifting square: endpoints do not match");
    }
    if (compose(p, top) != compose(bottom, i)) throw std::invalid_argument("lifting square does not commute");
    const auto& a = i.source();
    const auto& b = i.target();
    const auto& x = p.source();
    Prime pr = a.prime();
    MapUnknowns u(b, x);
    LinearSystem sys(pr, u.end());
    add_chain_condition(sys, u);
    // s_n i_n = top_n
    for (int n = std::min(a.lo(), x.lo()); n <= std::max(a.hi(), x.hi()); ++n) {
        std::size_t rows = x.dim(n), cols = a.dim(n);
        if (!rows || !cols) continue;
        std::size_t r0 = sys.new_rows(rows * cols);
        sys.add_right(r0, u, n, i[n]);
        sys.add_rhs_matrix(r0, top[n]);
    }
    // p_n s_n = bottom_n
    const auto& y = p.target();
    for (int n = std::min(b.lo(), y.lo()); n <= std::max(b.hi(), y.hi()); ++n) {
        std::size_t rows = y.dim(n), cols = b.dim(n);
        if (!rows || !cols) continue;
        std::size_t r0 = sys.new_rows(rows * cols);
        sys.add_left(r0, u, n, p[n]);
        sys.add_rhs_matrix(r0, bottom[n]);
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    return ChainMap(u.read(*sol));
}

// ---- the backend ----------------------------------------------------------

class ChainBackend {
public:
    using Object = ChainComplex;
    using Morphism = ChainMap;

    explicit ChainBackend(Prime p) : p_(p) {}
    Prime prime() const { return p_; }

    Object source(const Morphism& f) const { return f.source(); }
    Object target(const Morphism& f) const { return f.target(); }
    Morphism identity(const Object& x) const { return ChainMap::identity(x); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return commacat::compose(g, f); }
    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
    bool equal_objects(const Object& x, const Object& y) const { return x == y; }

    ClassFlags classify(const Morphism& f) const { return classify_map(f); }
    Factorization<Morphism> factorize(const Morphism& f, FactorKind k) const { return factorize_chain(f, k); }
    std::optional<Morphism> lift(const Morphism& i, const Morphism& p, const Morphism& top,
                                 const Morphism& bottom) const {
        return solve_lift_chain(i, p, top, bottom);
    }

    Object terminal() const { return ChainComplex::zero(p_); }
    Object initial() const { return ChainComplex::zero(p_); }
    Morphism to_terminal(const Object& x) const { return ChainMap::zero(x, terminal()); }
    Morphism from_initial(const Object& x) const { return ChainMap::zero(initial(), x); }

    ConeOf<ChainBackend> product(const Object& x, const Object& y) const {
        auto s = direct_sum(x, y);
        return {s.sum, {s.pr1, s.pr2}};
    }
    CoconeOf<ChainBackend> coproduct(const Object& x, const Object& y) const {
        auto s = direct_sum(x, y);
        return {s.sum, {s.in1, s.in2}};
    }
    // ker(f∘pr1 - g∘pr2) inside X ⊕ Y
    ConeOf<ChainBackend> pullback(const Morphism& f, const Morphism& g) const {
        if (f.target() != g.target()) throw std::invalid_argument("pullback: not a cospan");
        auto s = direct_sum(f.source(), g.source());
        auto [k, inc] = kernel(copair(s, f, scaled(g, -1)));
        return {k, {commacat::compose(s.pr1, inc), commacat::compose(s.pr2, inc)}};
    }
    // coker((f, -g)) from Z into X ⊕ Y
    CoconeOf<ChainBackend> pushout(const Morphism& f, const Morphism& g) const {
        if (f.source() != g.source()) throw std::invalid_argument("pushout: not a span");
        auto s = direct_sum(f.target(), g.target());
        auto [c, pr] = cokernel(pair(s, f, scaled(g, -1)));
        return {c, {commacat::compose(pr, s.in1), commacat::compose(pr, s.in2)}};
    }
    ConeOf<ChainBackend> equalizer(const Morphism& f, const Morphism& g) const {
        auto [k, inc] = kernel(f - g);
        return {k, {inc}};
    }
    CoconeOf<ChainBackend> coequalizer(const Morphism& f, const Morphism& g) const {
        auto [c, pr] = cokernel(f - g);
        return {c, {pr}};
    }

    // Legs of a limit cone are jointly injective, so a degreewise solve
    // gives the unique candidate; the ChainMap constructor re-checks it.
    std::optional<Morphism> mediate(const ConeOf<ChainBackend>& cone, const std::vector<Morphism>& maps) const {
        if (maps.size() != cone.legs.size() || maps.empty()) throw std::invalid_argument("mediate: arity");
        const auto& w = maps[0].source();
        std::map<int, Matrix> c;
        for (int n = std::min(w.lo(), cone.apex.lo()); n <= std::max(w.hi(), cone.apex.hi()); ++n) {
            if (!w.dim(n) || !cone.apex.dim(n)) continue;
            Matrix legs(p_, 0, cone.apex.dim(n)), rhs(p_, 0, w.dim(n));
            for (std::size_t k = 0; k < maps.size(); ++k) {
                legs = vstack(legs, cone.legs[k][n]);
                rhs = vstack(rhs, maps[k][n]);
            }
            auto h = commacat::solve(legs, rhs);
            if (!h) return std::nullopt;
            c.emplace(n, *h);
        }
        GradedMap g(w, cone.apex, c);
        for (std::size_t k = 0; k < maps.size(); ++k)
            if (commacat::compose(cone.legs[k].graded(), g) != maps[k].graded()) return std::nullopt;
        if (!g.is_chain_map()) return std::nullopt;
        return ChainMap(g);
    }
    std::optional<Morphism> comediate(const CoconeOf<ChainBackend>& cocone, const std::vector<Morphism>& maps) const {
        if (maps.size() != cocone.legs.size() || maps.empty()) throw std::invalid_argument("comediate: arity");
        const auto& w = maps[0].target();
        std::map<int, Matrix> c;
        for (int n = std::min(w.lo(), cocone.apex.lo()); n <= std::max(w.hi(), cocone.apex.hi()); ++n) {
            if (!w.dim(n) || !cocone.apex.dim(n)) continue;
            Matrix legs(p_, cocone.apex.dim(n), 0), rhs(p_, w.dim(n), 0);
            for (std::size_t k = 0; k < maps.size(); ++k) {
                legs = hstack(legs, cocone.legs[k][n]);
                rhs = hstack(rhs, maps[k][n]);
            }
            auto ht = commacat::solve(legs.transpose(), rhs.transpose());
            if (!ht) return std::nullopt;
            c.emplace(n, ht->transpose());
        }
        GradedMap g(cocone.apex, w, c);
        for (std::size_t k = 0; k < maps.size(); ++k)
            if (commacat::compose(g, cocone.legs[k].graded()) != maps[k].graded()) return std::nullopt;
        if (!g.is_chain_map()) return std::nullopt;
        return ChainMap(g);
    }

    std::optional<Morphism> inverse(const Morphism& f) const { return commacat::inverse(f); }

    // Additive structure used by the abelian checks.
    Morphism zero(const Object& x, const Object& y) const { return ChainMap::zero(x, y); }
    Morphism add(const Morphism& f, const Morphism& g) const { return f + g; }
    Morphism subtract(const Morphism& f, const Morphism& g) const { return f - g; }

private:
    Prime p_;
};

static_assert(ModelBackend<ChainBackend>);
static_assert(ModelBackend<Opposite<ChainBackend>>);

// Small complexes used throughout the examples. D1 carries its identity
// differential from degree 0 to degree -1, so that q: D1 → S0 is a chain map.
namespace named {
inline ChainComplex S0(Prime p) { return ChainComplex::sphere(p, 0); }
inline ChainComplex S1(Prime p) { return ChainComplex::sphere(p, 1); }
inline ChainComplex D1(Prime p) { return ChainComplex::disk(p, 0); }
inline ChainMap q(Prime p) { return ChainMap(D1(p), S0(p), {{0, Matrix::identity(p, 1)}}); }
}  // namespace named

// ---- finite (co)limits by shape --------------------------------------------

enum class LimitShape { Terminal, Product, Pullback, Equalizer };
enum class ColimitShape { Initial, Coproduct, Pushout, Coequalizer };

// objects: the factors of a product; maps: the cospan or parallel pair.
inline ConeOf<ChainBackend> finite_limit(const ChainBackend& b, LimitShape shape,
                                         const std::vector<ChainComplex>& objects,
                                         const std::vector<ChainMap>& maps) {
    switch (shape) {
        case LimitShape::Terminal:
            if (!objects.empty() || !maps.empty()) break;
            return {b.terminal(), {}};
        case LimitShape::Product:
            if (objects.size() != 2 || !maps.empty()) break;
            return b.product(objects[0], objects[1]);
        case LimitShape::Pullback:
            if (!objects.empty() || maps.size() != 2) break;
            return b.pullback(maps[0], maps[1]);
        case LimitShape::Equalizer:
            if (!objects.empty() || maps.size() != 2) break;
            return b.equalizer(maps[0], maps[1]);
    }
    throw std::invalid_argument("finite_limit: data does not match the shape");
}

inline CoconeOf<ChainBackend> finite_colimit(const ChainBackend& b, ColimitShape shape,
                                             const std::vector<ChainComplex>& objects,
                                             const std::vector<ChainMap>& maps) {
    switch (shape) {
        case ColimitShape::Initial:
            if (!objects.empty() || !maps.empty()) break;
            return {b.initial(), {}};
        case ColimitShape::Coproduct:
            if (objects.size() != 2 || !maps.empty()) break;
            return b.coproduct(objects[0], objects[1]);
        case ColimitShape::Pushout:
            if (!objects.empty() || maps.size() != 2) break;
            return b.pushout(maps[0], maps[1]);
        case ColimitShape::Coequalizer:
            if (!objects.empty() || maps.size() != 2) break;
            return b.coequalizer(maps[0], maps[1]);
    }
    throw std::invalid_argument("finite_colimit: data does not match the shape");
}

}  // namespace commacat
