#pragma once

#include "kbb/integers.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <vector>

namespace kbb {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense matrix of arbitrary-precision integers. Rectangular, value-semantic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: size mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    IntVec operator*(const IntVec& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: size mismatch in mat*vec");
        IntVec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: size mismatch in sum");
        IntMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    IntMatrix operator-() const {
        IntMatrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    IntMatrix operator-(const IntMatrix& o) const { return *this + (-o); }

    IntMatrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        IntMatrix b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    void set_block(std::size_t i0, std::size_t j0, const IntMatrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    IntVec col(std::size_t j) const {
        IntVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const IntVec& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += q * row j
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += q * (*this)(j, k);
    }
    // col i += q * col j
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += q * (*this)(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Dense matrix of exact rationals (reduced canonically by cpp_rational).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    explicit RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: size mismatch in product");
        RatMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    RatVec operator*(const RatVec& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("RatMatrix: size mismatch in mat*vec");
        RatVec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_integral() const {
        using boost::multiprecision::denominator;
        return std::all_of(a_.begin(), a_.end(),
                           [](const Rat& x) { return denominator(x) == 1; });
    }

    /// Converts to IntMatrix; throws if any entry is non-integral.
    IntMatrix to_int() const {
        using boost::multiprecision::numerator;
        if (!is_integral()) throw std::invalid_argument("RatMatrix: non-integral entries");
        IntMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = numerator((*this)(i, j));
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// ---------------------------------------------------------------------------
// Exact algorithms
// ---------------------------------------------------------------------------

struct SmithResult {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal with d1 | d2 | ..., entries >= 0
    IntMatrix v;  // unimodular, cols x cols
};

namespace detail {

// Smallest-nonzero-absolute-value pivot in the trailing submatrix, ties broken
// by (row, col) order. Returns false if the submatrix is zero.
inline bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs_int(m(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace detail

/// Smith normal form: u*m*v = d with u, v unimodular and d diagonal with a
/// nonnegative divisibility chain. Deterministic pivoting keeps transcripts
/// reproducible.
inline SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    SmithResult s{IntMatrix::identity(R), m, IntMatrix::identity(C)};
    IntMatrix& d = s.d;
    const std::size_t n = std::min(R, C);

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = t, pj = t;
        if (!detail::find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        s.v.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                d.add_row(i, t, -q);
                s.u.add_row(i, t, -q);
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    s.u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                d.add_col(j, t, -q);
                s.v.add_col(j, t, -q);
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    s.v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix: pivot must divide the trailing block
            bool fixed = true;
            for (std::size_t i = t + 1; i < R && fixed; ++i)
                for (std::size_t j = t + 1; j < C && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        s.u.add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    return s;
}

/// Determinant by fraction-free Bareiss elimination; exact with sign.
inline Int det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact division (Bareiss)
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Basis of the saturated integer kernel { x : m*x = 0 }, one column per basis
/// vector, each sign-normalized so its first nonzero entry is positive.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t n = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    while (rank < n && s.d(rank, rank) != 0) ++rank;
    const std::size_t k = m.cols() - rank;
    IntMatrix ker(m.cols(), k);
    for (std::size_t j = 0; j < k; ++j) {
        IntVec c = s.v.col(rank + j);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) {
                if (c[i] < 0)
                    for (auto& x : c) x = -x;
                break;
            }
        ker.set_col(j, c);
    }
    return ker;
}

/// Exact inverse of a square matrix over the rationals (Gauss-Jordan).
inline RatMatrix rat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("rat_inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw std::invalid_argument("rat_inverse: singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(k, j), a(piv, j));
            std::swap(inv(k, j), inv(piv, j));
        }
        Rat d = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= d;
            inv(k, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

/// Integer inverse of a unimodular matrix.
inline IntMatrix int_inverse_unimodular(const IntMatrix& m) {
    return rat_inverse(RatMatrix(m)).to_int();
}

/// Signature (pos, neg) of a nondegenerate symmetric matrix, by exact rational
/// congruence diagonalization. Throws on degenerate input.
inline std::pair<int, int> signature(const IntMatrix& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    const std::size_t n = q.rows();
    RatMatrix a(q);
    int pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // prefer a nonzero diagonal pivot; otherwise merge a nonzero pair
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n && bi == n; ++j)
                    if (!done[i] && !done[j] && a(i, j) != 0) {
                        bi = i;
                        bj = j;
                    }
            if (bi == n) throw std::invalid_argument("signature: degenerate form");
            // row/col i += row/col j makes the diagonal entry 2*a(i,j) != 0
            for (std::size_t k = 0; k < n; ++k) a(bi, k) += a(bj, k);
            for (std::size_t k = 0; k < n; ++k) a(k, bi) += a(k, bj);
            piv = bi;
        }
        Rat d = a(piv, piv);
        if (d > 0)
            ++pos;
        else
            ++neg;
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a(i, piv) == 0) continue;
            Rat f = a(i, piv) / d;
            for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(piv, k);
            for (std::size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, piv);
        }
    }
    return {pos, neg};
}

/// Column-style Hermite normal form: returns h = m * u with u unimodular, h in
/// lower-echelon form with positive pivots and entries right of each pivot
/// reduced into [0, pivot). Canonical for full-column-rank input.
inline std::pair<IntMatrix, IntMatrix> hermite_column_form(const IntMatrix& m) {
    IntMatrix h = m, u = IntMatrix::identity(m.cols());
    std::size_t row = 0, piv_col = 0;
    while (row < h.rows() && piv_col < h.cols()) {
        // gcd-reduce columns piv_col.. on this row
        for (;;) {
            std::size_t jmin = h.cols();
            Int best;
            for (std::size_t j = piv_col; j < h.cols(); ++j)
                if (h(row, j) != 0 && (jmin == h.cols() || abs_int(h(row, j)) < best)) {
                    best = abs_int(h(row, j));
                    jmin = j;
                }
            if (jmin == h.cols()) break;  // row is zero from piv_col on
            h.swap_cols(piv_col, jmin);
            u.swap_cols(piv_col, jmin);
            bool clean = true;
            for (std::size_t j = piv_col + 1; j < h.cols(); ++j) {
                if (h(row, j) == 0) continue;
                Int q = h(row, j) / h(row, piv_col);
                h.add_col(j, piv_col, -q);
                u.add_col(j, piv_col, -q);
                if (h(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(row, piv_col) != 0) {
            if (h(row, piv_col) < 0) {
                h.negate_col(piv_col);
                u.negate_col(piv_col);
            }
            // reduce earlier columns on this row into [0, pivot)
            for (std::size_t j = 0; j < piv_col; ++j) {
                Int q = h(row, j) / h(row, piv_col);
                if (h(row, j) - q * h(row, piv_col) < 0) q -= 1;
                if (q != 0) {
                    h.add_col(j, piv_col, -q);
                    u.add_col(j, piv_col, -q);
                }
            }
            ++piv_col;
        }
        ++row;
    }
    return {h, u};
}

/// Basis of the saturation of the column span: integer basis of (span_Q m) ∩ Z^n.
inline IntMatrix saturation_basis(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t n = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    while (rank < n && s.d(rank, rank) != 0) ++rank;
    IntMatrix uinv = int_inverse_unimodular(s.u);
    IntMatrix b(m.rows(), rank);
    for (std::size_t j = 0; j < rank; ++j) b.set_col(j, uinv.col(j));
    return b;
}

/// True when the columns are independent and span a saturated sublattice
/// (all Smith invariants equal 1).
inline bool is_saturated(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t n = std::min(m.rows(), m.cols());
    if (m.cols() > m.rows()) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (s.d(i, i) != 1) return false;
    return true;
}

/// Completes a primitive n x r matrix (Smith invariants all 1) to a unimodular
/// n x n matrix whose first r columns are exactly the input columns.
inline IntMatrix complete_to_unimodular(const IntMatrix& b) {
    const std::size_t n = b.rows(), r = b.cols();
    SmithResult s = smith_normal_form(b);
    for (std::size_t i = 0; i < r; ++i)
        if (s.d(i, i) != 1) throw std::invalid_argument("complete_to_unimodular: not primitive");
    IntMatrix uinv = int_inverse_unimodular(s.u);
    IntMatrix vinv = int_inverse_unimodular(s.v);
    IntMatrix full(n, n);
    // first r columns: uinv * [vinv; 0] = b, remaining columns from uinv
    for (std::size_t j = 0; j < r; ++j) {
        IntVec c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < r; ++k) c[i] += uinv(i, k) * vinv(k, j);
        full.set_col(j, c);
    }
    for (std::size_t j = r; j < n; ++j) full.set_col(j, uinv.col(j));
    return full;
}

/// Solves a * x = b exactly over the integers; nullopt when no integral
/// solution exists.
inline std::optional<IntMatrix> solve_exact(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: size mismatch");
    SmithResult s = smith_normal_form(a);
    const std::size_t n = std::min(a.rows(), a.cols());
    IntMatrix ub = s.u * b;
    IntMatrix y(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Int di = (i < n) ? s.d(i, i) : Int(0);
            if (di == 0) {
                if (ub(i, j) != 0) return std::nullopt;
            } else {
                if (ub(i, j) % di != 0) return std::nullopt;
                y(i, j) = ub(i, j) / di;
            }
        }
    return s.v * y;
}

}  // namespace kbb
