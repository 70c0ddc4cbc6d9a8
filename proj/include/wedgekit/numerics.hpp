#pragma once

#include <algorithm>
#include <functional>
#include <numeric>

#include "wedgekit/matrix.hpp"

namespace wedgekit {

/// Matrix exponential by scaling-and-squaring with a Taylor kernel.
///
/// The argument is scaled so that ||B|| <= 1/4 and the series is summed until
/// the term drops below 1e-20 * ||partial sum||; the truncation error is then
/// bounded by ||B||^(N+1)/(N+1)! / (1 - ||B||), far below abs_tol for the
/// catalog sizes (<= 32x32) this library targets.  Always returns float-tier
/// entries.
inline Matrix mat_exp(const Matrix& x) {
    if (!x.square()) throw std::invalid_argument("mat_exp: non-square matrix");
    const int n = x.rows();
    Matrix a = x.to_float();
    double norm = 0.0;
    for (int j = 0; j < n; ++j) {  // 1-norm
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += a.at(i, j).abs();
        norm = std::max(norm, col);
    }
    int squarings = 0;
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    Complex half(Scalar(0.5), Scalar(0.0));
    for (int k = 0; k < squarings; ++k) a = half * a;

    Matrix sum = Matrix::identity(n).to_float();
    Matrix term = Matrix::identity(n).to_float();
    for (int k = 1; k <= 60; ++k) {
        term = term * a;
        Complex inv_k(Scalar(1.0 / k), Scalar(0.0));
        term = inv_k * term;
        sum = sum + term;
        if (term.max_abs() <= 1e-20 * std::max(1.0, sum.max_abs())) break;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // orthonormal columns, float tier
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Reconstruction error is O(machine eps * ||a||); suitable for the
/// catalog-scale matrices this library handles.
inline EigenSystem eig_selfadjoint(const Matrix& a,
                                   const ToleranceConfig& tol = default_tolerance()) {
    if (!a.square()) throw std::invalid_argument("eig_selfadjoint: non-square matrix");
    const int n = a.rows();
    double scale = std::max(1.0, a.max_abs());
    if (max_abs_diff(a, a.adjoint()) > 100 * (tol.abs_tol + tol.rel_tol * scale))
        throw std::invalid_argument("eig_selfadjoint: matrix is not Hermitian within tolerance");

    // Symmetrize exactly, then iterate on doubles.
    Matrix h = (Complex(Scalar(0.5), Scalar(0.0)) * (a + a.adjoint())).to_float();
    Matrix v = Matrix::identity(n).to_float();

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (p != q) {
                    double m = h.at(p, q).abs();
                    s += m * m;
                }
        return std::sqrt(s);
    };

    const double stop = 1e-14 * std::max(1.0, h.frobenius());
    for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = h.at(p, q).abs();
                if (apq <= 1e-300) continue;
                Complex phase = h.at(p, q) / Complex(Scalar(apq), Scalar(0.0));
                double app = h.at(p, p).re.dbl();
                double aqq = h.at(q, q).re.dbl();
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                Complex cc(Scalar(c), Scalar(0.0));
                Complex ss = Complex(Scalar(s), Scalar(0.0)) * phase;
                // Columns: [p q] <- [p q] * [[c, ss],[-conj(ss), c]]
                for (int i = 0; i < n; ++i) {
                    Complex hip = h.at(i, p), hiq = h.at(i, q);
                    h.at(i, p) = cc * hip - ss.conj() * hiq;
                    h.at(i, q) = ss * hip + cc * hiq;
                }
                for (int j = 0; j < n; ++j) {
                    Complex hpj = h.at(p, j), hqj = h.at(q, j);
                    h.at(p, j) = cc * hpj - ss * hqj;
                    h.at(q, j) = ss.conj() * hpj + cc * hqj;
                }
                for (int i = 0; i < n; ++i) {
                    Complex vip = v.at(i, p), viq = v.at(i, q);
                    v.at(i, p) = cc * vip - ss.conj() * viq;
                    v.at(i, q) = ss * vip + cc * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = h.at(i, i).re.dbl();
    std::sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
    }
    return out;
}

/// f applied through the spectral decomposition of a Hermitian matrix.
inline Matrix apply_hermitian_function(const Matrix& a, const std::function<Complex(double)>& f,
                                       const ToleranceConfig& tol = default_tolerance()) {
    EigenSystem es = eig_selfadjoint(a, tol);
    const int n = a.rows();
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) d.at(i, i) = f(es.values[i]);
    return es.vectors * d * es.vectors.adjoint();
}

inline Matrix hermitian_power(const Matrix& a, double p,
                              const ToleranceConfig& tol = default_tolerance()) {
    return apply_hermitian_function(
        a,
        [p](double lam) {
            if (lam <= 0.0) throw std::domain_error("hermitian_power: non-positive eigenvalue");
            return Complex(Scalar(std::pow(lam, p)), Scalar(0.0));
        },
        tol);
}

/// Delta^{it} = exp(it log Delta) for positive-definite Delta.
inline Matrix hermitian_imaginary_power(const Matrix& a, double t,
                                        const ToleranceConfig& tol = default_tolerance()) {
    return apply_hermitian_function(
        a,
        [t](double lam) {
            if (lam <= 0.0)
                throw std::domain_error("hermitian_imaginary_power: non-positive eigenvalue");
            double ang = t * std::log(lam);
            return Complex(Scalar(std::cos(ang)), Scalar(std::sin(ang)));
        },
        tol);
}

/// Unitary factor u of the polar decomposition g = u p with p positive
/// definite, computed as g (g* g)^{-1/2}.
inline Matrix polar_unitary(const Matrix& g, const ToleranceConfig& tol = default_tolerance()) {
    if (!g.square()) throw std::invalid_argument("polar_unitary: non-square matrix");
    Matrix h = g.adjoint() * g;
    EigenSystem es = eig_selfadjoint(h, tol);
    double lam_max = es.values.empty() ? 0.0 : es.values.back();
    if (es.values.front() <= 1e-24 * std::max(1.0, lam_max))
        throw std::domain_error("polar_unitary: singular input");
    const int n = g.rows();
    Matrix d(n, n);
    for (int i = 0; i < n; ++i)
        d.at(i, i) = Complex(Scalar(1.0 / std::sqrt(es.values[i])), Scalar(0.0));
    return g.to_float() * es.vectors * d * es.vectors.adjoint();
}

}  // namespace wedgekit
