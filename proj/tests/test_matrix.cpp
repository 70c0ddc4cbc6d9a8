#include "wedgekit/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wedgekit;

namespace {

Matrix random_rational_matrix(int n, std::mt19937_64& rng) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Complex(Scalar(Rational(static_cast<long>(rng() % 19) - 9,
                                                 1 + static_cast<long>(rng() % 4))));
    return m;
}

}  // namespace

TEST(Matrix, BasicAlgebra) {
    Matrix a = Matrix::real(2, 2, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
    Matrix b = Matrix::identity(2);
    EXPECT_EQ(a * b, a);
    EXPECT_EQ((a + a), Scalar(2) * a);
    EXPECT_EQ(a.transpose().at(0, 1).re.rat().str(), "3");
    EXPECT_EQ(a.trace().re.rat().str(), "5");
}

TEST(Matrix, ExactInverse) {
    Matrix a = Matrix::real(2, 2, {Rational(2), Rational(1), Rational(1), Rational(1)});
    Matrix inv = inverse(a);
    EXPECT_TRUE(inv.is_exact());
    EXPECT_EQ(a * inv, Matrix::identity(2));
    EXPECT_THROW(inverse(Matrix::zero(2, 2)), std::domain_error);
}

TEST(Matrix, RandomExactInverses) {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 20) {
        Matrix a = random_rational_matrix(4, rng);
        try {
            Matrix inv = inverse(a);
            EXPECT_EQ(a * inv, Matrix::identity(4));
            ++done;
        } catch (const std::domain_error&) {
            // singular draw, try again
        }
    }
}

TEST(Matrix, BlockHelpers) {
    Matrix a = Matrix::real(2, 2, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
    Matrix d = Matrix::block_diag({a, Matrix::identity(2)});
    EXPECT_EQ(d.rows(), 4);
    EXPECT_EQ(d.block(0, 0, 2, 2), a);
    EXPECT_EQ(d.block(2, 2, 2, 2), Matrix::identity(2));
    EXPECT_TRUE(is_zero_matrix(d.block(0, 2, 2, 2)));
}

TEST(ScalarTable, ExactSolveAndRank) {
    // x + y = 3, x - y = 1  ->  x = 2, y = 1
    ScalarTable a = {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}};
    auto x = solve_table(a, {Scalar(3), Scalar(1)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0].rat().str(), "2");
    EXPECT_EQ((*x)[1].rat().str(), "1");
    EXPECT_EQ(table_rank(a), 2);

    // Inconsistent overdetermined system.
    ScalarTable b = {{Scalar(1)}, {Scalar(1)}};
    EXPECT_FALSE(solve_table(b, {Scalar(1), Scalar(2)}).has_value());
    EXPECT_TRUE(solve_table(b, {Scalar(2), Scalar(2)}).has_value());
}

TEST(ScalarTable, Nullspace) {
    ScalarTable a = {{Scalar(1), Scalar(2), Scalar(3)}};
    auto ns = nullspace_table(a);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) {
        Scalar acc(0);
        for (int j = 0; j < 3; ++j) acc = acc + a[0][j] * v[j];
        EXPECT_TRUE(acc.is_zero());
    }
}

TEST(ScalarTable, FloatPath) {
    ScalarTable a = {{Scalar(1.0), Scalar(1.0)}, {Scalar(1.0), Scalar(-1.0)}};
    auto x = solve_table(a, {Scalar(3.0), Scalar(1.0)});
    ASSERT_TRUE(x.has_value());
    EXPECT_FALSE((*x)[0].exact());
    EXPECT_NEAR((*x)[0].dbl(), 2.0, 1e-12);
}
