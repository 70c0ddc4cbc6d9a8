#pragma once

#include <memory>
#include <string>
#include <utility>

#include "wedgekit/matrix.hpp"

namespace wedgekit {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AlgebraMismatch : AlgebraError {
    AlgebraMismatch() : AlgebraError("elements belong to different Lie algebras") {}
};
struct SpanError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ClosureError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotSl2Triple : AlgebraError {
    NotSl2Triple() : AlgebraError("bracket table of the pair is not of sl2 type") {}
};

class AlgebraElement;

/// A matrix-realized Lie algebra with a distinguished basis.  Cheap handle;
/// the basis data is shared and immutable.
class LieAlgebra {
public:
    LieAlgebra() = default;

    /// Verifies linear independence of the basis and closure under brackets
    /// (exactly on rational bases, within 100*abs_tol on float ones).
    static LieAlgebra create(std::string name, std::vector<Matrix> basis,
                             const ToleranceConfig& tol = default_tolerance(),
                             std::string family = {});

    bool valid() const { return static_cast<bool>(d_); }
    const std::string& name() const { return d_->name; }
    const std::string& family() const { return d_->family; }
    int dim() const { return static_cast<int>(d_->basis.size()); }
    int matrix_dim() const { return d_->matrix_dim; }
    const std::vector<Matrix>& basis() const { return d_->basis; }
    bool is_exact() const { return d_->exact; }
    const ToleranceConfig& tolerance() const { return d_->tol; }

    AlgebraElement element(ScalarRow coords) const;
    AlgebraElement zero() const;
    /// Element with the given matrix; fails if the matrix is outside the span.
    AlgebraElement element_from_matrix(const Matrix& m) const;

    /// Coordinates of m in the basis, or nullopt outside the span.
    std::optional<ScalarRow> coords_of(const Matrix& m) const {
        return solve_table(d_->span, flatten(m), 100.0 * d_->tol.abs_tol);
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.d_ == b.d_; }
    friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return a.d_ != b.d_; }

private:
    struct Data {
        std::string name;
        std::string family;
        int matrix_dim = 0;
        std::vector<Matrix> basis;
        ScalarTable span;  // (2 n^2) x dim: re/im flattening of the basis
        bool exact = true;
        ToleranceConfig tol;
    };

    ScalarRow flatten(const Matrix& m) const {
        ScalarRow v;
        v.reserve(2 * static_cast<size_t>(m.rows()) * m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j).re);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j).im);
        return v;
    }

    std::shared_ptr<const Data> d_;
};

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(LieAlgebra alg, ScalarRow coords, Matrix matrix)
        : alg_(std::move(alg)), coords_(std::move(coords)), matrix_(std::move(matrix)) {}

    const LieAlgebra& algebra() const { return alg_; }
    const ScalarRow& coords() const { return coords_; }
    const Matrix& matrix() const { return matrix_; }
    bool is_exact() const {
        for (const auto& c : coords_)
            if (!c.exact()) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);

private:
    LieAlgebra alg_;
    ScalarRow coords_;
    Matrix matrix_;
};

inline LieAlgebra LieAlgebra::create(std::string name, std::vector<Matrix> basis,
                                     const ToleranceConfig& tol, std::string family) {
    if (basis.empty()) throw AlgebraError("LieAlgebra: empty basis");
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->family = std::move(family);
    d->tol = tol;
    d->matrix_dim = basis.front().rows();
    for (const auto& b : basis) {
        if (!b.square() || b.rows() != d->matrix_dim)
            throw AlgebraError("LieAlgebra: basis matrices must be square of equal size");
        if (!b.is_exact()) d->exact = false;
    }
    d->basis = std::move(basis);

    LieAlgebra alg;
    alg.d_ = d;
    const int dim = alg.dim();
    ScalarTable span(2 * static_cast<size_t>(d->matrix_dim) * d->matrix_dim,
                     ScalarRow(dim, Scalar(0)));
    for (int j = 0; j < dim; ++j) {
        ScalarRow col = alg.flatten(d->basis[j]);
        for (size_t r = 0; r < col.size(); ++r) span[r][j] = col[r];
    }
    const_cast<Data*>(alg.d_.get())->span = std::move(span);

    if (table_rank(alg.d_->span, 100.0 * tol.abs_tol) != dim)
        throw AlgebraError("LieAlgebra: basis is linearly dependent");
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Matrix c = d->basis[i] * d->basis[j] - d->basis[j] * d->basis[i];
            if (!alg.coords_of(c))
                throw ClosureError("LieAlgebra: bracket of basis elements escapes the span");
        }
    return alg;
}

inline AlgebraElement LieAlgebra::element(ScalarRow coords) const {
    if (static_cast<int>(coords.size()) != dim())
        throw AlgebraError("element: coordinate count mismatch");
    Matrix m = Matrix::zero(matrix_dim(), matrix_dim());
    for (int j = 0; j < dim(); ++j)
        if (!coords[j].is_zero()) m = m + coords[j] * d_->basis[j];
    return AlgebraElement(*this, std::move(coords), std::move(m));
}

inline AlgebraElement LieAlgebra::zero() const { return element(ScalarRow(dim(), Scalar(0))); }

inline AlgebraElement LieAlgebra::element_from_matrix(const Matrix& m) const {
    auto c = coords_of(m);
    if (!c) throw SpanError("element_from_matrix: matrix outside the algebra span");
    return element(std::move(*c));
}

inline AlgebraElement AlgebraElement::operator-() const {
    ScalarRow c = coords_;
    for (auto& s : c) s = -s;
    return AlgebraElement(alg_, std::move(c), -matrix_);
}
inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.alg_ != b.alg_) throw AlgebraMismatch();
    ScalarRow c = a.coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.coords_[i];
    return AlgebraElement(a.alg_, std::move(c), a.matrix_ + b.matrix_);
}
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return a + (-b);
}
inline AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
    ScalarRow c = a.coords_;
    for (auto& x : c) x = s * x;
    return AlgebraElement(a.alg_, std::move(c), s * a.matrix_);
}

inline bool approx_equal(const AlgebraElement& a, const AlgebraElement& b,
                         const ToleranceConfig& tol = default_tolerance()) {
    if (a.algebra() != b.algebra()) return false;
    for (size_t i = 0; i < a.coords().size(); ++i)
        if (!approx_equal(a.coords()[i], b.coords()[i], tol)) return false;
    return true;
}

/// Matrix commutator xy - yx, resolved back into basis coordinates.  Exact on
/// rational inputs; a result outside the span signals a malformed algebra.
inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra() != y.algebra()) throw AlgebraMismatch();
    Matrix c = x.matrix() * y.matrix() - y.matrix() * x.matrix();
    auto coords = x.algebra().coords_of(c);
    if (!coords) throw ClosureError("bracket: commutator escaped the basis span");
    return x.algebra().element(std::move(*coords));
}

namespace detail {

/// d x d matrix of ad(h) acting on basis coordinates (real entries).
inline Matrix ad_matrix(const AlgebraElement& h) {
    const LieAlgebra& g = h.algebra();
    Matrix ad(g.dim(), g.dim());
    for (int j = 0; j < g.dim(); ++j) {
        Matrix c = h.matrix() * g.basis()[j] - g.basis()[j] * h.matrix();
        auto coords = g.coords_of(c);
        if (!coords) throw ClosureError("ad: bracket escaped the basis span");
        for (int i = 0; i < g.dim(); ++i) ad.at(i, j) = Complex((*coords)[i]);
    }
    return ad;
}

inline ScalarRow apply_real(const Matrix& m, const ScalarRow& v) {
    ScalarRow out(m.rows(), Scalar(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).re.is_zero()) out[i] = out[i] + m.at(i, j).re * v[j];
    return out;
}

inline bool real_matrices_match(const Matrix& a, const Matrix& b, bool exact,
                                const ToleranceConfig& tol) {
    if (exact) return a == b;
    return approx_equal(a, b, tol);
}

}  // namespace detail

/// Witness that h is an Euler element: (ad h)^3 = ad h with ad h != 0,
/// together with the grading projections p_j onto ker(ad h - j).
struct EulerCertificate {
    AlgebraElement element;
    Matrix ad;  // dim x dim, real entries
    Matrix p_minus, p_zero, p_plus;
    bool g_plus_trivial = false;
    bool g_minus_trivial = false;
};

/// Accepts iff ad h != 0 and (ad h)^3 = ad h -- equivalent to ad h being
/// diagonalizable with spectrum in {-1,0,1}, and exact on rational data.
inline std::optional<EulerCertificate> is_euler(const AlgebraElement& h) {
    const LieAlgebra& g = h.algebra();
    Matrix ad = detail::ad_matrix(h);
    if (is_zero_matrix(ad)) return std::nullopt;
    const bool exact = g.is_exact() && h.is_exact();
    Matrix ad2 = ad * ad;
    if (!detail::real_matrices_match(ad2 * ad, ad, exact, g.tolerance())) return std::nullopt;

    Complex half(Rational(1, 2));
    EulerCertificate cert;
    cert.element = h;
    cert.ad = ad;
    cert.p_zero = Matrix::identity(g.dim()) - ad2;
    cert.p_plus = half * (ad2 + ad);
    cert.p_minus = half * (ad2 - ad);
    cert.g_plus_trivial = is_zero_matrix(cert.p_plus);
    cert.g_minus_trivial = is_zero_matrix(cert.p_minus);
    return cert;
}

/// dim x dim matrix of the Euler involution: I - 2 (ad h)^2.  Exact closed
/// form, valid whenever (ad h)^3 = ad h.
inline Matrix tau_matrix(const EulerCertificate& h) {
    Matrix ad2 = h.ad * h.ad;
    return Matrix::identity(ad2.rows()) - Scalar(Rational(2)) * ad2;
}

inline AlgebraElement tau_apply(const EulerCertificate& h, const AlgebraElement& x) {
    if (h.element.algebra() != x.algebra()) throw AlgebraMismatch();
    return x.algebra().element(detail::apply_real(tau_matrix(h), x.coords()));
}

/// tau_h(k) = -k for certified Euler h, k; equivalently (ad h)^2 k = k.
inline bool is_orthogonal_pair(const AlgebraElement& h, const AlgebraElement& k) {
    if (h.algebra() != k.algebra()) return false;
    auto ch = is_euler(h);
    auto ck = is_euler(k);
    if (!ch || !ck) return false;
    ScalarRow image = detail::apply_real(ch->ad * ch->ad, k.coords());
    const bool exact = h.algebra().is_exact() && h.is_exact() && k.is_exact();
    for (size_t i = 0; i < image.size(); ++i) {
        if (exact ? !(image[i] == k.coords()[i])
                  : !approx_equal(image[i], k.coords()[i], h.algebra().tolerance()))
            return false;
    }
    return true;
}

struct Sl2Triple {
    AlgebraElement h, k, z;
};

/// Builds z = [h,k] and verifies the full sl2 bracket table
/// [z,h] = -k, [z,k] = h.  Requires an orthogonal pair.
inline Sl2Triple sl2_triple(const AlgebraElement& h, const AlgebraElement& k,
                            const ToleranceConfig& tol = default_tolerance()) {
    if (!is_orthogonal_pair(h, k)) throw NotSl2Triple();
    AlgebraElement z = bracket(h, k);
    const bool exact = h.algebra().is_exact() && h.is_exact() && k.is_exact();
    auto matches = [&](const AlgebraElement& a, const AlgebraElement& b) {
        for (size_t i = 0; i < a.coords().size(); ++i) {
            if (exact ? !(a.coords()[i] == b.coords()[i])
                      : !approx_equal(a.coords()[i], b.coords()[i], tol))
                return false;
        }
        return true;
    };
    if (!matches(bracket(z, h), -k) || !matches(bracket(z, k), h)) throw NotSl2Triple();
    return Sl2Triple{h, k, z};
}

/// theta(x) = -x^T; requires the realization to be closed under
/// negative-transpose.
inline AlgebraElement cartan_theta(const AlgebraElement& x) {
    Matrix m = -x.matrix().transpose();
    auto coords = x.algebra().coords_of(m);
    if (!coords) throw SpanError("cartan_theta: -x^T lies outside the algebra span");
    return x.algebra().element(std::move(*coords));
}

/// Ad(g) x = g x g^{-1} in the matrix realization.
inline AlgebraElement adjoint_apply(const Matrix& g, const AlgebraElement& x) {
    if (!g.square() || g.rows() != x.algebra().matrix_dim())
        throw AlgebraError("adjoint_apply: group matrix has wrong size");
    Matrix m = g * x.matrix() * inverse(g);
    auto coords = x.algebra().coords_of(m);
    if (!coords) throw SpanError("adjoint_apply: image lies outside the algebra span");
    return x.algebra().element(std::move(*coords));
}

/// Basis of the centralizer ker(ad h) as algebra elements.
inline std::vector<AlgebraElement> centralizer_basis(const AlgebraElement& h) {
    Matrix ad = detail::ad_matrix(h);
    ScalarTable t(ad.rows(), ScalarRow(ad.cols(), Scalar(0)));
    for (int i = 0; i < ad.rows(); ++i)
        for (int j = 0; j < ad.cols(); ++j) t[i][j] = ad.at(i, j).re;
    std::vector<AlgebraElement> out;
    for (auto& v : nullspace_table(t, 100.0 * h.algebra().tolerance().abs_tol))
        out.push_back(h.algebra().element(std::move(v)));
    return out;
}

/// h is regular iff its centralizer is abelian.
inline bool is_regular(const AlgebraElement& h) {
    auto cz = centralizer_basis(h);
    const bool exact = h.algebra().is_exact() && h.is_exact();
    for (size_t i = 0; i < cz.size(); ++i)
        for (size_t j = i + 1; j < cz.size(); ++j) {
            AlgebraElement b = bracket(cz[i], cz[j]);
            if (exact ? !b.is_zero() : b.matrix().max_abs() > 100.0 * h.algebra().tolerance().abs_tol)
                return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Standard sl2(R) realization and finite direct sums.  These are the
// universal building blocks for the catalog, the covering groups and the
// wedge order.  Basis per summand: (h0, k0, z0).
// ---------------------------------------------------------------------------

inline Matrix sl2_h0_matrix() {
    return Matrix::real(2, 2, {Rational(1, 2), Rational(0), Rational(0), Rational(-1, 2)});
}
inline Matrix sl2_k0_matrix() {
    return Matrix::real(2, 2, {Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)});
}
inline Matrix sl2_z0_matrix() {
    return Matrix::real(2, 2, {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(0)});
}
inline Matrix sl2_e0_matrix() {
    return Matrix::real(2, 2, {Rational(0), Rational(1), Rational(0), Rational(0)});
}
inline Matrix sl2_f0_matrix() {
    return Matrix::real(2, 2, {Rational(0), Rational(0), Rational(1), Rational(0)});
}

inline LieAlgebra sl2_sum_algebra(int r) {
    if (r < 1) throw AlgebraError("sl2_sum_algebra: need r >= 1");
    std::vector<Matrix> basis;
    std::vector<Matrix> zeros(static_cast<size_t>(r), Matrix::zero(2, 2));
    for (int b = 0; b < r; ++b)
        for (const Matrix& gen : {sl2_h0_matrix(), sl2_k0_matrix(), sl2_z0_matrix()}) {
            auto blocks = zeros;
            blocks[b] = gen;
            basis.push_back(Matrix::block_diag(blocks));
        }
    std::string name = r == 1 ? "sl2R" : "sl2R_x" + std::to_string(r);
    return LieAlgebra::create(std::move(name), std::move(basis), default_tolerance(),
                              r == 1 ? "sl_n_R" : "sl2_sum_r");
}

inline LieAlgebra sl2_algebra() { return sl2_sum_algebra(1); }

/// Element of sl2^r from per-block (h0, k0, z0) coefficients.
inline AlgebraElement sl2_sum_element(const LieAlgebra& alg,
                                      const std::vector<std::array<Scalar, 3>>& blocks) {
    if (static_cast<int>(blocks.size()) * 3 != alg.dim())
        throw AlgebraError("sl2_sum_element: block count mismatch");
    ScalarRow coords;
    for (const auto& b : blocks) coords.insert(coords.end(), b.begin(), b.end());
    return alg.element(std::move(coords));
}

}  // namespace wedgekit
