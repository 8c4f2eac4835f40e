#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ttensor/assignment.hpp"
#include "ttensor/generators.hpp"
#include "ttensor/localization.hpp"

using namespace ttensor;

namespace {

constexpr double kTol = 1e-8;

}  // namespace

TEST(Assignment, MatchesBruteForce) {
    std::mt19937_64 gen(50);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (std::size_t n = 1; n <= 7; ++n) {
        std::vector<Complex> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = Complex(u(gen), u(gen));
            y[i] = Complex(u(gen), u(gen));
        }
        const SpectrumMatch m = match_spectra(x, y);
        EXPECT_NEAR(m.l2_distance, oracle::brute_force_match_l2(x, y), 1e-12) << "n=" << n;
        std::vector<std::size_t> sorted = m.permutation;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);
    }
}

TEST(Assignment, KnownCostMatrix) {
    RealMatrix cost(3, 3);
    cost << 4, 1, 3, 2, 0, 5, 3, 2, 2;
    const std::vector<std::size_t> a = optimal_assignment(cost);
    EXPECT_EQ(a, (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_THROW(optimal_assignment(RealMatrix(2, 3)), DimensionMismatch);
}

TEST(Assignment, PermutedSpectraMatchExactly) {
    const std::vector<Complex> x{1.0, Complex(0, 2), -3.0, Complex(4, -1)};
    const std::vector<Complex> y{x[2], x[0], x[3], x[1]};
    const SpectrumMatch m = match_spectra(x, y);
    EXPECT_EQ(m.l2_distance, 0.0);
    EXPECT_EQ(m.permutation, (std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST(Schur, ScalarEqualityAndNormalEquality) {
    const InequalityCertificate c = schur_bound(Tensor3(1, 1, 1, {2.0}));
    EXPECT_TRUE(c.holds);
    EXPECT_NEAR(c.lhs, 4.0, 1e-14);
    EXPECT_NEAR(c.rhs, 4.0, 1e-14);

    RngStream rng(51);
    const InequalityCertificate s = schur_bound(gen_symmetric(3, 4, rng));
    EXPECT_TRUE(s.holds);
    EXPECT_NEAR(s.lhs, s.rhs, 1e-8 * s.rhs);
}

TEST(Schur, RandomAgainstBcircOracle) {
    std::mt19937_64 gen(52);
    for (int trial = 0; trial < 20; ++trial) {
        const Tensor3 a = oracle::random_tensor(3, 3, 4, gen);
        const InequalityCertificate c = schur_bound(a);
        EXPECT_TRUE(c.holds);
        double sum = 0.0;
        for (const Complex& z : oracle::eigenvalues(oracle::bcirc(a).cast<Complex>())) sum += std::norm(z);
        EXPECT_NEAR(c.lhs, sum, 1e-9 * (1.0 + sum));
        EXPECT_NEAR(c.rhs, 4.0 * std::pow(frobenius_norm(a), 2), 1e-12 * c.rhs);
    }
}

TEST(Gershgorin, ShiftTubeOnBoundary) {
    const Tensor3 shift(1, 1, 2, {0.0, 1.0});
    const auto discs = gershgorin_discs(shift);
    ASSERT_EQ(discs.size(), 1u);
    EXPECT_EQ(discs[0].center, Complex(0.0, 0.0));
    EXPECT_EQ(discs[0].radius, 1.0);
    const TEigenSpectrum s = t_eigenvalues(shift);
    EXPECT_TRUE(gershgorin_contains(discs, s));
    EXPECT_NEAR(gershgorin_excess(discs, s.values), 0.0, 1e-15);
    EXPECT_GT(gershgorin_excess(discs, {Complex(1.5, 0.0)}), 0.49);
}

TEST(Gershgorin, FDiagonalConstantTubes) {
    const Tensor3 d(3, 3, 2, {1, 0, 0, 0, 5, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    const auto discs = gershgorin_discs(d);
    for (const auto& disc : discs) EXPECT_EQ(disc.radius, 0.0);
    const TEigenSpectrum s = t_eigenvalues(d);
    EXPECT_TRUE(gershgorin_contains(discs, s));
    const auto comps = gershgorin_component_count(discs, s, 2);
    ASSERT_EQ(comps.size(), 3u);
    for (const auto& c : comps) {
        EXPECT_EQ(c.eigenvalue_count, 2u);
        EXPECT_TRUE(c.consistent);
    }
}

TEST(Gershgorin, RandomContainmentAgainstBcircDiscs) {
    std::mt19937_64 gen(53);
    for (int trial = 0; trial < 30; ++trial) {
        const Tensor3 a = oracle::random_tensor(3, 3, 3, gen);
        const CertificateList certs = check_gershgorin(a);
        ASSERT_FALSE(certs.empty());
        EXPECT_TRUE(certs[0].holds);
        // Disc radii agree with the off-diagonal row sums of bcirc(a).
        const RealMatrix bc = oracle::bcirc(a);
        const auto discs = gershgorin_discs(a);
        for (Eigen::Index row = 0; row < bc.rows(); ++row) {
            const double radius = bc.row(row).cwiseAbs().sum() - std::abs(bc(row, row));
            EXPECT_NEAR(discs[static_cast<std::size_t>(row) % 3].radius, radius, 1e-14);
        }
    }
}

TEST(Gershgorin, ComplexTensorDiscs) {
    const ComplexTensor3 z(1, 1, 2, {Complex(1, 1), Complex(0, 2)});
    const auto discs = gershgorin_discs(z);
    EXPECT_EQ(discs[0].center, Complex(1, 1));
    EXPECT_NEAR(discs[0].radius, 2.0, 1e-15);
    const nlohmann::json j = to_json(discs[0]);
    EXPECT_NEAR(j["radius"].get<double>(), 2.0, 1e-15);
}

TEST(BauerFike, IdenticalAndShift) {
    RngStream rng(54);
    const Tensor3 s = gen_f_diagonal(3, 2, rng);
    const Tensor3 id = identity(3, 2);
    const InequalityCertificate same = bauer_fike(s, s, id, s);
    EXPECT_TRUE(same.holds);
    EXPECT_NEAR(same.lhs, 0.0, 1e-14);

    const double eps = 0.01;
    const InequalityCertificate shifted = bauer_fike(s, s + eps * id, id, s);
    EXPECT_TRUE(shifted.holds);
    EXPECT_NEAR(shifted.lhs, eps, 1e-12);
    EXPECT_NEAR(shifted.rhs, eps, 1e-12);
}

TEST(BauerFike, RejectsBadFactorization) {
    RngStream rng(55);
    const Tensor3 s = gen_f_diagonal(2, 2, rng);
    const Tensor3 id = identity(2, 2);
    EXPECT_THROW(bauer_fike(s, s, id, gen_random(2, 2, 2, rng)), HypothesisViolation);
    EXPECT_THROW(bauer_fike(s + id, s, id, s), HypothesisViolation);
    EXPECT_THROW(bauer_fike(s, s, Tensor3(2, 2, 2), s), HypothesisViolation);
}

TEST(HoffmanWielandt, UniformShiftEquality) {
    RngStream rng(56);
    const std::size_t n = 3, n3 = 4;
    const Tensor3 a = gen_symmetric(n, n3, rng);
    const double c = 0.3;
    const HoffmanWielandtResult r = hoffman_wielandt(a, a + c * identity(n, n3));
    EXPECT_NEAR(r.matching.matched_distance, c * std::sqrt(static_cast<double>(n * n3)), 1e-10);
    EXPECT_NEAR(r.matching.bound_sqrt, std::sqrt(static_cast<double>(n3)) * c * std::sqrt(static_cast<double>(n)),
                1e-12);
    EXPECT_NEAR(r.matching.bound_n3, static_cast<double>(n3) * c * std::sqrt(static_cast<double>(n)), 1e-12);
    ASSERT_TRUE(r.sorted_distance.has_value());
    EXPECT_NEAR(*r.sorted_distance, r.matching.matched_distance, 1e-10);
    EXPECT_EQ(r.certificates.size(), 4u);
    for (const auto& cert : r.certificates) EXPECT_TRUE(cert.holds);
}

TEST(HoffmanWielandt, IdenticalAndNonNormal) {
    RngStream rng(57);
    const Tensor3 a = gen_symmetric(2, 3, rng);
    const HoffmanWielandtResult r = hoffman_wielandt(a, a);
    EXPECT_NEAR(r.matching.matched_distance, 0.0, 1e-12);
    EXPECT_EQ(r.matching.bound_sqrt, 0.0);
    EXPECT_THROW(hoffman_wielandt(a, Tensor3(2, 2, 3, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0})), HypothesisViolation);
}

TEST(HoffmanWielandt, RandomSymmetricPairsOrdering) {
    RngStream rng(58);
    for (int trial = 0; trial < 20; ++trial) {
        const Tensor3 a = gen_symmetric(3, 3, rng), b = gen_symmetric(3, 3, rng);
        const HoffmanWielandtResult r = hoffman_wielandt(a, b);
        ASSERT_TRUE(r.sorted_distance.has_value());
        EXPECT_LE(r.matching.matched_distance, *r.sorted_distance + 1e-10);
        EXPECT_LE(*r.sorted_distance, r.matching.bound_sqrt * (1 + 1e-10));
        EXPECT_LE(r.matching.bound_sqrt, r.matching.bound_n3);
        for (const auto& cert : r.certificates) EXPECT_TRUE(cert.holds);
        const nlohmann::json j = to_json(r.matching);
        EXPECT_TRUE(j.contains("permutation"));
    }
}

TEST(DiagSpectrum, ScalarAndZeroImaginaryPart) {
    const CertificateList s = diag_spectrum_bound(Tensor3(1, 1, 1, {1.0}), Tensor3(1, 1, 1, {1.0}));
    ASSERT_EQ(s.size(), 3u);
    EXPECT_NEAR(s[0].lhs, std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(s[0].rhs, 2.0, 1e-14);
    for (const auto& c : s) EXPECT_TRUE(c.holds);

    RngStream rng(59);
    for (const auto& c : diag_spectrum_bound(gen_symmetric(3, 4, rng), Tensor3(3, 3, 4))) EXPECT_TRUE(c.holds);
    EXPECT_THROW(diag_spectrum_bound(gen_random(2, 2, 2, rng), Tensor3(2, 2, 2)), HypothesisViolation);
}
