#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ttensor/eigen_solvers.hpp"

using namespace ttensor;

namespace {

double orthonormality_residual(const ComplexMatrix& v) {
    return (v.adjoint() * v - ComplexMatrix::Identity(v.cols(), v.cols())).norm();
}

std::vector<Complex> roots_of_unity(int n) {
    std::vector<Complex> out;
    for (int k = 0; k < n; ++k) out.push_back(std::polar(1.0, 2.0 * std::acos(-1.0) * k / n));
    return out;
}

ComplexMatrix companion_of_unity(Eigen::Index n) {
    // Companion matrix of z^n - 1.
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    c(0, n - 1) = 1.0;
    return c;
}

}  // namespace

TEST(Jacobi, Diagonal) {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = 3.0;
    m(1, 1) = 1.0;
    m(2, 2) = 2.0;
    const HermitianEigen e = hermitian_eig(m);
    EXPECT_EQ(e.values(0), 1.0);
    EXPECT_EQ(e.values(1), 2.0);
    EXPECT_EQ(e.values(2), 3.0);
    EXPECT_LT(orthonormality_residual(e.vectors), 1e-15);
}

TEST(Jacobi, TwoByTwoClosedForm) {
    ComplexMatrix m(2, 2);
    m << 2.0, 1.0, 1.0, 1.0;
    const HermitianEigen e = hermitian_eig(m);
    EXPECT_NEAR(e.values(0), (3.0 - std::sqrt(5.0)) / 2.0, 1e-14);
    EXPECT_NEAR(e.values(1), (3.0 + std::sqrt(5.0)) / 2.0, 1e-14);
    // Real symmetric input keeps real eigenvectors.
    EXPECT_EQ(e.vectors.imag().norm(), 0.0);

    ComplexMatrix swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    const Eigen::VectorXd v = hermitian_eigenvalues(swap);
    EXPECT_NEAR(v(0), -1.0, 1e-15);
    EXPECT_NEAR(v(1), 1.0, 1e-15);
}

TEST(Jacobi, ComplexHermitian) {
    ComplexMatrix m(2, 2);
    m << 1.0, Complex(0, -2), Complex(0, 2), 1.0;
    const HermitianEigen e = hermitian_eig(m);
    EXPECT_NEAR(e.values(0), -1.0, 1e-14);
    EXPECT_NEAR(e.values(1), 3.0, 1e-14);
}

TEST(Jacobi, RandomResidualsAgainstEigen) {
    std::mt19937_64 gen(12);
    for (Eigen::Index n = 1; n <= 12; ++n) {
        const ComplexMatrix m = oracle::random_hermitian(n, gen);
        const HermitianEigen e = hermitian_eig(m);
        const ComplexMatrix recon = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LE((recon - m).norm(), 1e-10 * (1.0 + m.norm())) << "n=" << n;
        EXPECT_LE(orthonormality_residual(e.vectors), 1e-10);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(m);
        EXPECT_LT((e.values - ref.eigenvalues()).norm(), 1e-11 * (1.0 + m.norm()));
        for (Eigen::Index k = 1; k < n; ++k) EXPECT_LE(e.values(k - 1), e.values(k));
    }
}

TEST(Jacobi, RepeatedEigenvalues) {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4) * 2.0;
    m(0, 3) = m(3, 0) = 1.0;
    const HermitianEigen e = hermitian_eig(m);
    EXPECT_NEAR(e.values(0), 1.0, 1e-14);
    EXPECT_NEAR(e.values(1), 2.0, 1e-14);
    EXPECT_NEAR(e.values(2), 2.0, 1e-14);
    EXPECT_NEAR(e.values(3), 3.0, 1e-14);
    EXPECT_LT(orthonormality_residual(e.vectors), 1e-14);
}

TEST(Jacobi, RejectsNonHermitian) {
    ComplexMatrix m(2, 2);
    m << 1.0, 2.0, 0.0, 1.0;
    EXPECT_THROW(hermitian_eig(m), NotSymmetric);
    EXPECT_THROW(hermitian_eig(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST(GeneralEig, Triangular) {
    ComplexMatrix m(3, 3);
    m << 1, 5, 7, 0, 2, 3, 0, 0, -4;
    const auto ev = general_eig(m);
    EXPECT_LT(oracle::sorted_max_distance(ev, {1.0, 2.0, -4.0}), 1e-12);
}

TEST(GeneralEig, RotationHasComplexPair) {
    ComplexMatrix m(2, 2);
    m << 0, -1, 1, 0;
    const auto ev = general_eig(m);
    EXPECT_LT(oracle::sorted_max_distance(ev, {Complex(0, 1), Complex(0, -1)}), 1e-14);
}

TEST(GeneralEig, RootsOfUnityCompanion) {
    for (int n = 1; n <= 12; ++n) {
        const auto ev = general_eig(companion_of_unity(n));
        EXPECT_LT(oracle::sorted_max_distance(ev, roots_of_unity(n)), 1e-10) << "n=" << n;
    }
}

TEST(GeneralEig, RandomAgainstEigen) {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Eigen::Index n = 1; n <= 10; ++n) {
        ComplexMatrix m(n, n);
        for (Eigen::Index i = 0; i < n * n; ++i) m(i) = Complex(u(gen), u(gen));
        const auto ev = general_eig(m);
        ASSERT_EQ(ev.size(), static_cast<std::size_t>(n));
        const auto ref = oracle::eigenvalues(m);
        EXPECT_LT(oracle::sorted_max_distance(ev, ref), 1e-10) << "n=" << n;
    }
}

TEST(GeneralEig, ZeroAndScalarMatrices) {
    EXPECT_LT(oracle::sorted_max_distance(general_eig(ComplexMatrix::Zero(3, 3)), {0.0, 0.0, 0.0}), 1e-15);
    EXPECT_LT(oracle::sorted_max_distance(general_eig(ComplexMatrix::Identity(4, 4) * 2.5),
                                          {2.5, 2.5, 2.5, 2.5}),
              1e-15);
}

TEST(Hessenberg, StructureAndSpectrum) {
    std::mt19937_64 gen(14);
    const ComplexMatrix m = oracle::random_hermitian(6, gen) + ComplexMatrix::Identity(6, 6) * Complex(0, 0.3);
    const ComplexMatrix h = hessenberg(m);
    for (Eigen::Index i = 0; i < 6; ++i)
        for (Eigen::Index j = 0; j + 1 < i; ++j) EXPECT_EQ(h(i, j), Complex(0.0, 0.0));
    EXPECT_NEAR(h.trace().real(), m.trace().real(), 1e-12);
    EXPECT_NEAR(h.norm(), m.norm(), 1e-12);
    EXPECT_LT(oracle::sorted_max_distance(oracle::eigenvalues(h), oracle::eigenvalues(m)), 1e-10);
}

TEST(SingularValues, Descending) {
    ComplexMatrix m(2, 2);
    m << 3, 0, 0, -4;
    const Eigen::VectorXd s = singular_values(m);
    EXPECT_NEAR(s(0), 4.0, 1e-14);
    EXPECT_NEAR(s(1), 3.0, 1e-14);
}
