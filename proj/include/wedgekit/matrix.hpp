#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wedgekit/scalar.hpp"

namespace wedgekit {

/// Dense row-major matrix of complex Scalars.  Rational-only matrices support
/// exact arithmetic; anything touched by a float degrades to the float tier.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("Matrix: non-positive dimensions");
    }
    Matrix(int rows, int cols, std::initializer_list<Complex> entries) : Matrix(rows, cols) {
        if (entries.size() != e_.size()) throw std::invalid_argument("Matrix: entry count mismatch");
        std::copy(entries.begin(), entries.end(), e_.begin());
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Complex(Scalar(1));
        return m;
    }
    /// Real matrix from rational entries given as (num, den) pairs is overkill
    /// in practice; this helper takes plain Scalars row-major.
    static Matrix real(int rows, int cols, std::initializer_list<Scalar> entries) {
        Matrix m(rows, cols);
        if (entries.size() != m.e_.size()) throw std::invalid_argument("Matrix: entry count mismatch");
        auto it = entries.begin();
        for (auto& e : m.e_) e = Complex(*it++);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_exact() const {
        for (const auto& e : e_)
            if (!e.exact()) return false;
        return true;
    }

    /// Every entry coerced to the float tier.
    Matrix to_float() const {
        Matrix m(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k)
            m.e_[k] = Complex(Scalar(e_[k].re.dbl()), Scalar(e_[k].im.dbl()));
        return m;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
        return m;
    }
    Matrix conj() const {
        Matrix m(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].conj();
        return m;
    }

    Complex trace() const {
        if (!square()) throw std::invalid_argument("trace: non-square matrix");
        Complex t;
        for (int i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Complex& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) m.at(i, j) = m.at(i, j) + aik * b.at(k, j);
            }
        return m;
    }
    friend Matrix operator*(const Complex& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = s * a.e_[k];
        return m;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& a) { return Complex(s) * a; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    double max_abs() const {
        double m = 0.0;
        for (const auto& e : e_) m = std::max(m, e.abs());
        return m;
    }
    double frobenius() const {
        double s = 0.0;
        for (const auto& e : e_) {
            double r = e.re.dbl(), i = e.im.dbl();
            s += r * r + i * i;
        }
        return std::sqrt(s);
    }

    Matrix block(int i0, int j0, int r, int c) const {
        if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_)
            throw std::invalid_argument("Matrix::block: out of range");
        Matrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
        return m;
    }
    void set_block(int i0, int j0, const Matrix& b) {
        if (i0 < 0 || j0 < 0 || i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
            throw std::invalid_argument("Matrix::set_block: out of range");
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
    }
    static Matrix block_diag(const std::vector<Matrix>& blocks) {
        int n = 0;
        for (const auto& b : blocks) {
            if (!b.square()) throw std::invalid_argument("block_diag: blocks must be square");
            n += b.rows();
        }
        Matrix m(n, n);
        int off = 0;
        for (const auto& b : blocks) {
            m.set_block(off, off, b);
            off += b.rows();
        }
        return m;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<Complex> e_;
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

inline bool approx_equal(const Matrix& a, const Matrix& b,
                         const ToleranceConfig& tol = default_tolerance()) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    double scale = std::max(a.max_abs(), b.max_abs());
    return max_abs_diff(a, b) <= tol.abs_tol + tol.rel_tol * scale;
}

inline bool is_hermitian(const Matrix& a, const ToleranceConfig& tol = default_tolerance()) {
    return a.square() && approx_equal(a, a.adjoint(), tol);
}

inline bool is_zero_matrix(const Matrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) return false;
    return true;
}

/// Gaussian inverse over the Complex field.  Exact when the input is exact;
/// float inputs pivot by magnitude.  Throws on singular input.
inline Matrix inverse(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse: non-square matrix");
    const int n = a.rows();
    Matrix m = a;
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = col; r < n; ++r) {
            double mag = m.at(r, col).abs();
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (piv < 0 || m.at(piv, col).is_zero())
            throw std::domain_error("inverse: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        Complex p = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) / p;
            inv.at(col, j) = inv.at(col, j) / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Complex f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - f * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Real-scalar tableaux.  Span/closure/centralizer computations flatten
// matrices into real coordinate systems and run elimination here: exact over
// rationals whenever every entry is exact, double otherwise.
// ---------------------------------------------------------------------------

using ScalarRow = std::vector<Scalar>;
using ScalarTable = std::vector<ScalarRow>;

inline bool table_is_exact(const ScalarTable& t) {
    for (const auto& row : t)
        for (const auto& s : row)
            if (!s.exact()) return false;
    return true;
}

namespace detail {

struct Echelon {
    ScalarTable m;            // reduced row-echelon form
    std::vector<int> pivots;  // pivot column per pivot row
    bool exact;
};

/// Row-reduces to RREF.  Exact path: pivot = first nonzero entry.  Float
/// path: partial pivoting with threshold relative to the largest entry.
inline Echelon rref(ScalarTable m, double float_pivot_tol) {
    Echelon out;
    out.exact = table_is_exact(m);
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    double scale = 1.0;
    if (!out.exact) {
        for (const auto& r : m)
            for (const auto& s : r) scale = std::max(scale, std::abs(s.dbl()));
    }
    int prow = 0;
    for (int col = 0; col < cols && prow < rows; ++col) {
        int piv = -1;
        if (out.exact) {
            for (int r = prow; r < rows; ++r)
                if (!m[r][col].is_zero()) {
                    piv = r;
                    break;
                }
        } else {
            double best = float_pivot_tol * scale;
            for (int r = prow; r < rows; ++r) {
                double mag = std::abs(m[r][col].dbl());
                if (mag > best) {
                    best = mag;
                    piv = r;
                }
            }
        }
        if (piv < 0) continue;
        std::swap(m[piv], m[prow]);
        Scalar p = m[prow][col];
        for (int j = col; j < cols; ++j) m[prow][j] = m[prow][j] / p;
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            Scalar f = m[r][col];
            if (f.is_zero()) continue;
            for (int j = col; j < cols; ++j) m[r][j] = m[r][j] - f * m[prow][j];
        }
        out.pivots.push_back(col);
        ++prow;
    }
    out.m = std::move(m);
    return out;
}

}  // namespace detail

inline int table_rank(const ScalarTable& t, double float_pivot_tol = 1e-9) {
    if (t.empty()) return 0;
    return static_cast<int>(detail::rref(t, float_pivot_tol).pivots.size());
}

/// Solves A x = b for possibly overdetermined A (rows >= cols).  Returns
/// nullopt when inconsistent: exactly on the rational path, beyond
/// residual_tol (times the data scale) on the float path.
inline std::optional<ScalarRow> solve_table(const ScalarTable& a, const ScalarRow& b,
                                            double residual_tol = 1e-7) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return ScalarRow{};
    const int cols = static_cast<int>(a[0].size());
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve_table: rhs size");
    ScalarTable aug = a;
    for (int r = 0; r < rows; ++r) aug[r].push_back(b[r]);
    auto ech = detail::rref(std::move(aug), 1e-12);
    // Inconsistent iff some pivot lands in the rhs column.
    for (int pc : ech.pivots)
        if (pc == cols) return std::nullopt;
    ScalarRow x(cols, Scalar(0));
    for (size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.m[i][cols];
    if (!ech.exact) {
        double scale = 0.0;
        for (const auto& row : a)
            for (const auto& s : row) scale = std::max(scale, std::abs(s.dbl()));
        for (const auto& s : b) scale = std::max(scale, std::abs(s.dbl()));
        for (int r = 0; r < rows; ++r) {
            double acc = -b[r].dbl();
            for (int c = 0; c < cols; ++c) acc += a[r][c].dbl() * x[c].dbl();
            if (std::abs(acc) > residual_tol * (1.0 + scale)) return std::nullopt;
        }
    }
    return x;
}

/// Basis of the nullspace of A (columns = unknowns).
inline std::vector<ScalarRow> nullspace_table(const ScalarTable& a, double float_pivot_tol = 1e-9) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return {};
    const int cols = static_cast<int>(a[0].size());
    auto ech = detail::rref(a, float_pivot_tol);
    std::vector<bool> is_pivot(cols, false);
    for (int pc : ech.pivots) is_pivot[pc] = true;
    std::vector<ScalarRow> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ScalarRow v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace wedgekit
