#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace commacat {

class Prime {
public:
    explicit Prime(std::uint32_t p) : p_(p) {
        if (p < 2 || p > 65521 || !is_prime(p)) {
            throw std::invalid_argument("not a supported prime: " + std::to_string(p));
        }
    }

    std::uint32_t value() const { return p_; }

    std::uint32_t reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("zero has no inverse");
        std::uint32_t r = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1U) r = mul(r, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return r;
    }

    bool operator==(const Prime& o) const { return p_ == o.p_; }
    bool operator!=(const Prime& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

private:
    std::uint32_t p_;
};

// Dense row-major matrix over F_p. Shapes with zero rows or columns are valid.
class Matrix {
public:
    Matrix(Prime p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix zero(Prime p, std::size_t rows, std::size_t cols) { return Matrix(p, rows, cols); }

    static Matrix identity(Prime p, std::size_t n) {
        Matrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
        return m;
    }

    static Matrix scalar(Prime p, std::size_t n, long long c) {
        Matrix m(p, n, n);
        auto v = p.reduce(c);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = v;
        return m;
    }

    // Entries are reduced mod p; every row must have the same length.
    static Matrix from_rows(Prime p, const std::vector<std::vector<long long>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        Matrix m(p, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m.a_[i * c + j] = p.reduce(rows[i][j]);
        }
        return m;
    }

    static Matrix from_rows(Prime p, std::size_t rows, std::size_t cols,
                            const std::vector<std::vector<long long>>& data) {
        if (data.empty()) return Matrix(p, rows, cols);
        Matrix m = from_rows(p, data);
        if (m.rows_ != rows || m.cols_ != cols) throw std::invalid_argument("matrix shape mismatch");
        return m;
    }

    Prime prime() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
        return a_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, long long v) { a_[r * cols_ + c] = p_.reduce(v); }
    void add_to(std::size_t r, std::size_t c, std::uint32_t v) {
        auto& x = a_[r * cols_ + c];
        x = p_.add(x, v % p_.value());
    }
    const std::uint32_t* row_ptr(std::size_t r) const { return a_.data() + r * cols_; }
    std::uint32_t* row_ptr(std::size_t r) { return a_.data() + r * cols_; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
    }

    bool operator==(const Matrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = p_.add(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = p_.sub(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.a_) x = p_.neg(x);
        return r;
    }
    Matrix scaled(long long c) const {
        Matrix r(*this);
        auto k = p_.reduce(c);
        for (auto& x : r.a_) x = p_.mul(x, k);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (p_ != o.p_) throw std::invalid_argument("prime mismatch in product");
        if (cols_ != o.rows_) {
            throw std::invalid_argument("shape mismatch in product: " + shape() + " * " + o.shape());
        }
        Matrix r(p_, rows_, o.cols_);
        std::vector<std::uint64_t> acc(o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t v = a_[i * cols_ + k];
                if (!v) continue;
                const std::uint32_t* orow = o.row_ptr(k);
                for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += v * orow[j];
            }
            for (std::size_t j = 0; j < o.cols_; ++j) r.a_[i * o.cols_ + j] = acc[j] % p_.value();
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(p_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
        return r;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
        Matrix r(p_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r.a_[i * nc + j] = a_[(r0 + i) * cols_ + c0 + j];
        return r;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) a_[(r0 + i) * cols_ + c0 + j] = b.a_[i * b.cols_ + j];
    }

    Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::vector<std::vector<long long>> to_rows() const {
        std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i][j] = a_[i * cols_ + j];
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << a_[i * cols_ + j];
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    void check_same(const Matrix& o) const {
        if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_) {
            throw std::invalid_argument("shape/prime mismatch: " + shape() + " vs " + o.shape());
        }
    }

    Prime p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime() || a.rows() != b.rows()) throw std::invalid_argument("hstack mismatch");
    Matrix r(a.prime(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime() || a.cols() != b.cols()) throw std::invalid_argument("vstack mismatch");
    Matrix r(a.prime(), a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

// Reduced row echelon form, computed in place; returns pivot columns.
// Row operations only touch the nonzero positions of the pivot row, which
// keeps the structured (Kronecker-shaped) systems of the backend cheap.
inline std::vector<std::size_t> rref_in_place(Matrix& m, std::size_t col_limit = static_cast<std::size_t>(-1)) {
    const Prime p = m.prime();
    const std::uint32_t P = p.value();
    const std::size_t rows = m.rows(), cols = m.cols();
    col_limit = std::min(col_limit, cols);
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c)) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r) {
            std::swap_ranges(m.row_ptr(piv) + c, m.row_ptr(piv) + cols, m.row_ptr(r) + c);
        }
        std::uint32_t* prow = m.row_ptr(r);
        if (prow[c] != 1) {
            std::uint32_t iv = p.inv(prow[c]);
            for (std::size_t j = c; j < cols; ++j)
                if (prow[j]) prow[j] = p.mul(prow[j], iv);
        }
        nz.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (prow[j]) nz.push_back(j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint32_t* row = m.row_ptr(i);
            std::uint32_t f = row[c];
            if (!f) continue;
            std::uint32_t g = P - f;
            if (P == 2) {
                for (std::size_t j : nz) row[j] ^= 1U;
            } else {
                for (std::size_t j : nz) row[j] = (row[j] + g * prow[j]) % P;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

inline Echelon rref(const Matrix& a) {
    Matrix m(a);
    auto piv = rref_in_place(m);
    return {std::move(m), std::move(piv)};
}

inline std::size_t rank(const Matrix& a) {
    if (a.empty()) return 0;
    Matrix m(a);
    return rref_in_place(m).size();
}

// Some X with A·X = B, or nothing when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("solve: prime mismatch");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch " + a.shape() + " vs " + b.shape());
    Matrix aug = hstack(a, b);
    auto piv = rref_in_place(aug, a.cols());
    const std::size_t n = a.cols();
    // Rows past the pivots must vanish on the right-hand side.
    for (std::size_t i = piv.size(); i < aug.rows(); ++i) {
        for (std::size_t j = n; j < aug.cols(); ++j)
            if (aug(i, j)) return std::nullopt;
    }
    Matrix x(a.prime(), n, b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(piv[i], j, aug(i, n + j));
    return x;
}

// Columns form a basis of ker(A).
inline Matrix kernel_basis(const Matrix& a) {
    const Prime p = a.prime();
    const std::size_t n = a.cols();
    if (a.rows() == 0) return Matrix::identity(p, n);
    Matrix m(a);
    auto piv = rref_in_place(m);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix k(p, n, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t f = free_cols[t];
        k.set(f, t, 1);
        for (std::size_t i = 0; i < piv.size(); ++i) k.set(piv[i], t, p.neg(m(i, f)));
    }
    return k;
}

// Independent columns of A spanning its image.
inline Matrix image_basis(const Matrix& a) {
    if (a.empty()) return Matrix(a.prime(), a.rows(), 0);
    Matrix m(a);
    auto piv = rref_in_place(m);
    Matrix out(a.prime(), a.rows(), piv.size());
    for (std::size_t t = 0; t < piv.size(); ++t)
        for (std::size_t i = 0; i < a.rows(); ++i) out.set(i, t, a(i, piv[t]));
    return out;
}

// Surjection Q with ker Q = im A (rows of Q span the annihilator of im A).
inline Matrix cokernel_projection(const Matrix& a) { return kernel_basis(a.transpose()).transpose(); }

// Left factor outer, row-major: (A⊗B)[i*rB + k][j*cB + l] = A[i][j]·B[k][l].
inline Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("kron: prime mismatch");
    const Prime p = a.prime();
    Matrix r(p, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::uint32_t v = a(i, j);
            if (!v) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l, p.mul(v, b(k, l)));
        }
    return r;
}

inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("direct_sum: prime mismatch");
    Matrix r(a.prime(), a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

inline bool is_injective(const Matrix& a) { return rank(a) == a.cols(); }
inline bool is_surjective(const Matrix& a) { return rank(a) == a.rows(); }

inline std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve(a, Matrix::identity(a.prime(), a.rows()));
    if (!x || !(a * *x == Matrix::identity(a.prime(), a.rows()))) return std::nullopt;
    return x;
}

}  // namespace commacat
