#include "wedgekit/numerics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "wedgekit/liecore.hpp"

using namespace wedgekit;

namespace {

// Independent oracle: plain Taylor summation without scaling/squaring.
Matrix exp_by_series(const Matrix& x, int terms = 80) {
    Matrix sum = Matrix::identity(x.rows()).to_float();
    Matrix term = Matrix::identity(x.rows()).to_float();
    for (int k = 1; k <= terms; ++k) {
        term = term * x.to_float();
        term = Complex(Scalar(1.0 / k), Scalar(0.0)) * term;
        sum = sum + term;
    }
    return sum;
}

// Closed-form rotation: exp(theta*z0) = [[cos t/2, sin t/2], [-sin t/2, cos t/2]].
Matrix rotation(double theta) {
    Matrix m(2, 2);
    m.at(0, 0) = Complex(Scalar(std::cos(theta / 2)), Scalar(0.0));
    m.at(0, 1) = Complex(Scalar(std::sin(theta / 2)), Scalar(0.0));
    m.at(1, 0) = Complex(Scalar(-std::sin(theta / 2)), Scalar(0.0));
    m.at(1, 1) = Complex(Scalar(std::cos(theta / 2)), Scalar(0.0));
    return m;
}

Matrix random_float_matrix(int n, std::mt19937_64& rng, double amp) {
    std::uniform_real_distribution<double> u(-amp, amp);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Complex(Scalar(u(rng)), Scalar(u(rng)));
    return m;
}

}  // namespace

TEST(MatExp, ZeroGivesIdentity) {
    EXPECT_LT(max_abs_diff(mat_exp(Matrix::zero(2, 2)), Matrix::identity(2)), 1e-15);
}

TEST(MatExp, FullTurnOfZ0IsMinusIdentity) {
    Matrix z0 = sl2_z0_matrix();
    Matrix arg = Scalar(2 * M_PI) * z0;
    Matrix got = mat_exp(arg);
    EXPECT_LT(max_abs_diff(got, -Matrix::identity(2)), 1e-12);
    EXPECT_LT(max_abs_diff(got, exp_by_series(arg)), 1e-10);
}

TEST(MatExp, HalfTurnOfZ0) {
    Matrix got = mat_exp(Scalar(M_PI) * sl2_z0_matrix());
    Matrix expect = Matrix::real(2, 2, {Scalar(0), Scalar(1), Scalar(-1), Scalar(0)});
    EXPECT_LT(max_abs_diff(got, expect), 1e-13);
    EXPECT_LT(max_abs_diff(got, rotation(M_PI)), 1e-13);
}

TEST(MatExp, InverseProperty) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix x = random_float_matrix(4, rng, 1.2);  // ||x|| <= ~5
        Matrix prod = mat_exp(x) * mat_exp(-x);
        EXPECT_LT(max_abs_diff(prod, Matrix::identity(4)), 10 * default_tolerance().abs_tol);
    }
}

TEST(MatExp, RejectsNonSquare) { EXPECT_THROW(mat_exp(Matrix(2, 3)), std::invalid_argument); }

TEST(EigSelfadjoint, DiagonalCase) {
    Matrix a = Matrix::real(3, 3,
                            {Scalar(3), Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(0),
                             Scalar(0), Scalar(0), Scalar(2)});
    EigenSystem es = eig_selfadjoint(a);
    EXPECT_NEAR(es.values[0], 1.0, 1e-12);
    EXPECT_NEAR(es.values[1], 2.0, 1e-12);
    EXPECT_NEAR(es.values[2], 3.0, 1e-12);
}

TEST(EigSelfadjoint, SwapMatrix) {
    // Characteristic polynomial lambda^2 - 1.
    Matrix a = Matrix::real(2, 2, {Scalar(0), Scalar(1), Scalar(1), Scalar(0)});
    EigenSystem es = eig_selfadjoint(a);
    EXPECT_NEAR(es.values[0], -1.0, 1e-12);
    EXPECT_NEAR(es.values[1], 1.0, 1e-12);
}

TEST(EigSelfadjoint, IdentityAllOnes) {
    EigenSystem es = eig_selfadjoint(Matrix::identity(4));
    for (double v : es.values) EXPECT_NEAR(v, 1.0, 1e-14);
}

TEST(EigSelfadjoint, ReconstructionProperty) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix x = random_float_matrix(5, rng, 2.0);
        Matrix a = x + x.adjoint();
        EigenSystem es = eig_selfadjoint(a);
        Matrix d(5, 5);
        for (int i = 0; i < 5; ++i) d.at(i, i) = Complex(Scalar(es.values[i]), Scalar(0.0));
        Matrix rec = es.vectors * d * es.vectors.adjoint();
        double scale = std::max(1.0, a.max_abs());
        EXPECT_LT(max_abs_diff(rec, a), default_tolerance().rel_tol * scale);
        EXPECT_LT(max_abs_diff(es.vectors.adjoint() * es.vectors, Matrix::identity(5)), 1e-12);
    }
}

TEST(EigSelfadjoint, RejectsNonHermitian) {
    Matrix a = Matrix::real(2, 2, {Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    EXPECT_THROW(eig_selfadjoint(a), std::invalid_argument);
}

TEST(PolarUnitary, TrivialCases) {
    EXPECT_LT(max_abs_diff(polar_unitary(Matrix::identity(3)), Matrix::identity(3)), 1e-12);
    Matrix p = Matrix::real(2, 2, {Rational(2), Rational(0), Rational(0), Rational(1, 2)});
    EXPECT_LT(max_abs_diff(polar_unitary(p), Matrix::identity(2)), 1e-12);
}

TEST(PolarUnitary, RotationTimesPositive) {
    Matrix g = mat_exp(Scalar(M_PI) * sl2_z0_matrix()) *
               Matrix::real(2, 2, {Rational(2), Rational(0), Rational(0), Rational(1, 2)});
    Matrix u = polar_unitary(g);
    Matrix expect = Matrix::real(2, 2, {Scalar(0), Scalar(1), Scalar(-1), Scalar(0)});
    EXPECT_LT(max_abs_diff(u, expect), 1e-12);
}

TEST(PolarUnitary, RecoversUnitaryFactor) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::uniform_real_distribution<double> pos(0.3, 2.5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix u = rotation(ang(rng));
        // random positive definite p = q diag q^T with rotation q
        Matrix q = rotation(ang(rng));
        Matrix d = Matrix::real(2, 2, {Scalar(pos(rng)), Scalar(0), Scalar(0), Scalar(pos(rng))});
        Matrix p = q * d * q.transpose();
        Matrix got = polar_unitary(u * p);
        EXPECT_LT(max_abs_diff(got, u), 1e-10);
    }
}

TEST(PolarUnitary, RejectsSingular) {
    Matrix s = Matrix::real(2, 2, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
    EXPECT_THROW(polar_unitary(s), std::domain_error);
}

TEST(HermitianCalculus, PowersAndImaginaryPowers) {
    Matrix a = Matrix::real(2, 2, {Scalar(4), Scalar(0), Scalar(0), Scalar(9)});
    Matrix r = hermitian_power(a, 0.5);
    EXPECT_NEAR(r.at(0, 0).re.dbl(), 2.0, 1e-12);
    EXPECT_NEAR(r.at(1, 1).re.dbl(), 3.0, 1e-12);
    Matrix it = hermitian_imaginary_power(a, 1.0);
    EXPECT_NEAR(it.at(0, 0).abs(), 1.0, 1e-12);
    EXPECT_NEAR(it.at(0, 0).re.dbl(), std::cos(std::log(4.0)), 1e-12);
}
