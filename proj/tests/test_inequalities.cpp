#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ttensor/generators.hpp"
#include "ttensor/inequalities.hpp"
#include "ttensor/spectral.hpp"

using namespace ttensor;

namespace {

constexpr double kTol = 1e-8;

Tensor3 worked_a() { return Tensor3(2, 2, 2, {2, 1, 1, 1, 0, 0, 0, 0}); }
Tensor3 worked_b() { return Tensor3(2, 2, 2, {1, 0, 0, 0, 0, 0, 0, 0}); }
Tensor3 scalar(double v) { return Tensor3(1, 1, 1, {v}); }

const InequalityCertificate& by_norm(const CertificateList& list, NormKind kind) {
    for (const auto& c : list)
        if (c.norm_kind == kind) return c;
    throw std::logic_error("no certificate of that norm kind");
}

}  // namespace

TEST(Certificate, NormCertificateFields) {
    const InequalityCertificate c =
        norm_certificate(TheoremId::am_gm, {}, NormKind::frobenius, 2.0, 2.5, 1e-8);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.margin, 0.5);
    EXPECT_NEAR(c.tol, 1e-8 * 3.5, 1e-22);
    const nlohmann::json j = to_json(c);
    EXPECT_EQ(j["theorem_id"], "am-gm");
    EXPECT_EQ(j["norm_kind"], "frobenius");
    for (const char* key : {"seed", "dims", "params", "lhs", "rhs", "margin", "tol", "holds"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j.size(), 10u);
}

TEST(Certificate, TheoremNamesRoundTrip) {
    for (TheoremId id : all_theorems()) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
    EXPECT_FALSE(parse_theorem_id("nosuch").has_value());
    EXPECT_EQ(parse_mode("literal"), Mode::literal);
    EXPECT_FALSE(parse_mode("loose").has_value());
}

TEST(LoewnerHeinz, SquareRootOnWorkedPair) {
    const InequalityCertificate c = check_loewner_heinz(worked_a(), worked_b(), 0.5, kTol);
    EXPECT_TRUE(c.holds);
    // Both Fourier slices are [[2,1],[1,1]] and [[1,0],[0,0]].
    RealMatrix a(2, 2), b(2, 2);
    a << 2, 1, 1, 1;
    b << 1, 0, 0, 0;
    const double gap = oracle::min_eigenvalue(oracle::matrix_power(a, 0.5) - oracle::matrix_power(b, 0.5));
    EXPECT_NEAR(c.margin, gap, 1e-12);
    EXPECT_GT(gap, 0.0);
}

TEST(LoewnerHeinz, SquareOnWorkedPairNeedsExploratoryMode) {
    EXPECT_THROW(check_loewner_heinz(worked_a(), worked_b(), 2.0, kTol), HypothesisViolation);
    const InequalityCertificate c =
        check_loewner_heinz(worked_a(), worked_b(), 2.0, kTol, {}, Mode::exploratory);
    EXPECT_FALSE(c.holds);
    // Smaller eigenvalue of [[4,3],[3,2]].
    EXPECT_NEAR(c.margin, 3.0 - std::sqrt(10.0), 1e-12);
}

TEST(LoewnerHeinz, MatchesBcircOracle) {
    RngStream rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [a, b] = gen_loewner_pair(3, 3, rng);
        const double r = 0.1 * (trial + 1);
        const InequalityCertificate c = check_loewner_heinz(a, b, r, kTol);
        EXPECT_TRUE(c.holds);
        const double gap = oracle::min_eigenvalue(oracle::matrix_power(oracle::bcirc(a), r) -
                                                  oracle::matrix_power(oracle::bcirc(b), r));
        EXPECT_NEAR(c.margin, gap, 1e-9) << "r=" << r;
    }
}

TEST(LoewnerHeinz, RejectsOutsideHypotheses) {
    RngStream rng(32);
    const auto [a, b] = gen_loewner_pair(2, 2, rng);
    EXPECT_THROW(check_loewner_heinz(b, a, 0.5, kTol), HypothesisViolation);
    EXPECT_THROW(check_loewner_heinz(a, -1.0 * b, 0.5, kTol), HypothesisViolation);
    EXPECT_THROW(check_loewner_heinz(a, b, -0.5, kTol), HypothesisViolation);
}

TEST(Hansen, ScalarContraction) {
    const InequalityCertificate c = check_hansen_power(0.5 * identity(1, 1), 4.0 * identity(1, 1), 0.5, kTol);
    EXPECT_TRUE(c.holds);
    // (Q^T X Q)^r - Q^T X^r Q = 1 - 0.5.
    EXPECT_NEAR(c.margin, 0.5, 1e-14);
}

TEST(Hansen, BothRangesAgainstBcircOracle) {
    RngStream rng(33);
    for (double r : {0.25, 0.75, 1.5, 2.0}) {
        const Tensor3 x = gen_t_psd(3, 3, rng);
        const Tensor3 g = gen_random(3, 3, 3, rng);
        const Tensor3 q = (1.0 / (spectral_norm(g) * 1.1)) * g;
        const InequalityCertificate c = check_hansen_power(q, x, r, kTol);
        EXPECT_TRUE(c.holds) << "r=" << r;
        const RealMatrix bq = oracle::bcirc(q), bx = oracle::bcirc(x);
        const RealMatrix conj_power = bq.transpose() * oracle::matrix_power(bx, r) * bq;
        const RealMatrix power_conj = oracle::matrix_power(bq.transpose() * bx * bq, r);
        const double gap = r <= 1.0 ? oracle::min_eigenvalue(power_conj - conj_power)
                                    : oracle::min_eigenvalue(conj_power - power_conj);
        EXPECT_NEAR(c.margin, gap, 1e-9) << "r=" << r;
    }
}

TEST(Hansen, RejectsNonContraction) {
    EXPECT_THROW(check_hansen_power(2.0 * identity(2, 2), identity(2, 2), 0.5, kTol), HypothesisViolation);
    EXPECT_THROW(check_hansen_power(identity(2, 2), identity(2, 2), 2.5, kTol), HypothesisViolation);
}

TEST(Furuta, WorkedPair) {
    const CertificateList certs = check_furuta(worked_a(), worked_b(), 1.0, 2.0, 2.0, kTol);
    ASSERT_EQ(certs.size(), 2u);
    for (const auto& c : certs) EXPECT_TRUE(c.holds) << c.instance.clause;
    EXPECT_THROW(check_furuta(worked_a(), worked_b(), 0.0, 3.0, 1.0, kTol), HypothesisViolation);
    EXPECT_THROW(check_furuta(worked_b(), worked_a(), 1.0, 2.0, 2.0, kTol), HypothesisViolation);
}

TEST(Furuta, FirstClauseAgainstBcircOracle) {
    RngStream rng(34);
    const auto [a, b] = gen_loewner_pair(2, 3, rng);
    const double r = 0.5, p = 1.5, q = 1.25;
    const CertificateList certs = check_furuta(a, b, r, p, q, kTol);
    const RealMatrix ba = oracle::bcirc(a), bb = oracle::bcirc(b);
    const RealMatrix br = oracle::matrix_power(bb, r);
    const RealMatrix left = oracle::matrix_power(br * oracle::matrix_power(ba, p) * br, 1.0 / q);
    const double gap = oracle::min_eigenvalue(left - oracle::matrix_power(bb, (p + 2 * r) / q));
    EXPECT_NEAR(certs[0].margin, gap, 1e-9);
    EXPECT_TRUE(certs[0].holds);
}

TEST(Young, ScalarCommuting) {
    const InequalityCertificate c = check_young_commuting(scalar(2.0), scalar(3.0), 2.0, 2.0, kTol);
    EXPECT_TRUE(c.holds);
    EXPECT_NEAR(c.margin, 0.5, 1e-14);
    EXPECT_THROW(check_young_commuting(scalar(2.0), scalar(3.0), 2.0, 3.0, kTol), HypothesisViolation);
}

TEST(Young, RejectsNonCommuting) {
    RngStream rng(35);
    const Tensor3 a = gen_t_psd(2, 2, rng), b = gen_t_psd(2, 2, rng);
    EXPECT_THROW(check_young_commuting(a, b, 2.0, 2.0, kTol), HypothesisViolation);
}

TEST(Young, WitnessCertificates) {
    RngStream rng(36);
    for (double p : {1.5, 2.0, 3.0}) {
        const Tensor3 a = gen_random(3, 3, 4, rng), b = gen_random(3, 3, 4, rng);
        EXPECT_TRUE(check_young_witness(a, b, p, p / (p - 1.0), kTol).holds) << "p=" << p;
    }
}

TEST(ComplexNorm, VariantBScalarErratum) {
    const CertificateList literal =
        check_complex_norm_bounds(scalar(1.0), scalar(1.0), ComplexNormVariant::b, kTol, {}, Mode::literal);
    const InequalityCertificate& f = by_norm(literal, NormKind::frobenius);
    // |1 + i|^2 = 2 against 1 + 2 * 1.
    EXPECT_FALSE(f.holds);
    EXPECT_NEAR(f.lhs, 3.0, 1e-14);
    EXPECT_NEAR(f.rhs, 2.0, 1e-14);
    const CertificateList corrected = check_complex_norm_bounds(scalar(1.0), scalar(1.0), ComplexNormVariant::b, kTol);
    for (const auto& c : corrected) EXPECT_TRUE(c.holds) << c.instance.clause;
}

TEST(ComplexNorm, VariantsAAndCRandom) {
    RngStream rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const CertificateList a =
            check_complex_norm_bounds(gen_symmetric(3, 4, rng), gen_symmetric(3, 4, rng), ComplexNormVariant::a, kTol);
        EXPECT_EQ(a.size(), 8u);
        for (const auto& c : a) EXPECT_TRUE(c.holds) << c.instance.clause;
        const CertificateList cc =
            check_complex_norm_bounds(gen_t_psd(3, 4, rng), gen_t_psd(3, 4, rng), ComplexNormVariant::c, kTol);
        EXPECT_EQ(cc.size(), 2u);
        for (const auto& c : cc) EXPECT_TRUE(c.holds) << c.instance.clause;
    }
    EXPECT_THROW(check_complex_norm_bounds(gen_random(2, 2, 2, rng), gen_symmetric(2, 2, rng), ComplexNormVariant::a, kTol),
                 HypothesisViolation);
}

TEST(AmGm, ScalarCases) {
    const CertificateList corrected = check_am_gm(scalar(2.0), scalar(1.0), scalar(1.0), kTol);
    ASSERT_EQ(corrected.size(), 2u);
    for (const auto& c : corrected) {
        EXPECT_TRUE(c.holds);
        EXPECT_NEAR(c.lhs, 2.0, 1e-14);
        EXPECT_NEAR(c.rhs, 2.5, 1e-14);
    }
    const CertificateList literal = check_am_gm(scalar(2.0), scalar(1.0), scalar(1.0), kTol, {}, Mode::literal);
    for (const auto& c : literal) {
        EXPECT_FALSE(c.holds);
        EXPECT_NEAR(c.rhs, 1.5, 1e-14);
    }
}

TEST(AmGm, RandomCorrectedHolds) {
    RngStream rng(38);
    for (int trial = 0; trial < 20; ++trial) {
        const auto certs = check_am_gm(gen_random(3, 3, 3, rng), gen_random(3, 3, 3, rng), gen_random(3, 3, 3, rng), kTol);
        for (const auto& c : certs) EXPECT_TRUE(c.holds);
    }
}

TEST(HeinzFamily, IdentityEquality) {
    const Tensor3 id = identity(2, 3);
    for (double t : {-1.0, 0.0, 2.0}) {
        const CertificateList certs = check_heinz_family(id, id, id, 0.75, t, kTol);
        ASSERT_EQ(certs.size(), 4u);
        for (const auto& c : certs) {
            EXPECT_TRUE(c.holds);
            EXPECT_NEAR(c.margin, 0.0, 1e-12);
        }
    }
    EXPECT_THROW(check_heinz_family(id, id, id, 0.25, 0.0, kTol), HypothesisViolation);
    EXPECT_THROW(check_heinz_family(id, id, id, 1.0, -2.0, kTol), HypothesisViolation);
}

TEST(HeinzFamily, CommutingEqualityInSecondPart) {
    RngStream rng(39);
    const Tensor3 a = gen_t_psd(3, 3, rng);
    const CertificateList certs = check_heinz_family(a, gen_random(3, 3, 3, rng), a, 1.0, 1.0, kTol);
    for (const auto& c : certs) {
        EXPECT_TRUE(c.holds);
        if (c.instance.clause == "4||A*B|| <= ||(A+B)^2||") EXPECT_NEAR(c.margin / c.rhs, 0.0, 1e-9);
    }
}

TEST(Holder, PrefactorAndCauchySchwarz) {
    for (double p : {1.25, 1.5, 2.0, 3.0, 5.0}) {
        const double q = p / (p - 1.0);
        for (std::size_t n3 : {1u, 2u, 4u, 7u}) EXPECT_NEAR(holder_n3_prefactor(n3, p, q), 1.0, 1e-15);
    }
    EXPECT_THROW(holder_n3_prefactor(4, 2.0, 3.0), HypothesisViolation);
    EXPECT_THROW(require_conjugate(1.0, std::numeric_limits<double>::infinity()), HypothesisViolation);
    EXPECT_EQ(pair_prefactor(2.0), 1.0);
    EXPECT_NEAR(pair_prefactor(1.0), std::pow(2.0, -0.5), 1e-15);

    RngStream rng(40);
    const Tensor3 a = gen_t_psd(2, 3, rng);
    for (const auto& c : check_holder(a, identity(2, 3), a, 1.0, 2.0, 2.0, kTol)) EXPECT_TRUE(c.holds);
}

TEST(Holder, RandomFamilies) {
    RngStream rng(41);
    for (double r : {0.5, 1.0, 2.0})
        for (double p : {1.25, 2.0, 5.0}) {
            const double q = p / (p - 1.0);
            const Tensor3 a = gen_t_psd(3, 3, rng), b = gen_t_psd(3, 3, rng), x = gen_random(3, 3, 3, rng);
            for (const auto& c : check_holder(a, x, b, r, p, q, kTol)) EXPECT_TRUE(c.holds) << r << " " << p;
            for (const auto& c : check_holder_corollary(gen_random(3, 3, 3, rng), gen_random(3, 3, 3, rng), r, p, q, kTol))
                EXPECT_TRUE(c.holds) << r << " " << p;
            for (const auto& c : check_holder_pairs(gen_random(3, 3, 3, rng), gen_random(3, 3, 3, rng),
                                                    gen_random(3, 3, 3, rng), gen_random(3, 3, 3, rng), p, q, kTol))
                EXPECT_TRUE(c.holds) << p;
        }
}

TEST(Minkowski, ScalarTriangleEquality) {
    const CertificateList certs = check_minkowski(scalar(3.0), scalar(4.0), scalar(0.0), scalar(0.0), 2.0, kTol);
    ASSERT_EQ(certs.size(), 2u);
    for (const auto& c : certs) {
        EXPECT_NEAR(c.lhs, 7.0, 1e-13);
        EXPECT_NEAR(c.rhs, 7.0, 1e-13);
        EXPECT_TRUE(c.holds);
    }
}

TEST(Minkowski, ZeroSecondPairAndRandom) {
    RngStream rng(42);
    const Tensor3 zero(3, 3, 2);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        for (const auto& c : check_minkowski(gen_random(3, 3, 2, rng), zero, gen_random(3, 3, 2, rng), zero, p, kTol))
            EXPECT_TRUE(c.holds);
        for (const auto& c : check_minkowski(gen_random(3, 3, 2, rng), gen_random(3, 3, 2, rng),
                                             gen_random(3, 3, 2, rng), gen_random(3, 3, 2, rng), p, kTol))
            EXPECT_TRUE(c.holds);
    }
    EXPECT_THROW(check_minkowski(zero, zero, zero, zero, 0.5, kTol), HypothesisViolation);
}

TEST(Certificates, DescriptorCarriesClauseAndParams) {
    InstanceDescriptor d;
    d.seed = 17;
    d.trial = 3;
    const InequalityCertificate c = check_loewner_heinz(worked_a(), worked_b(), 0.5, kTol, d);
    EXPECT_EQ(c.instance.seed, 17u);
    EXPECT_EQ(c.instance.trial, 3u);
    EXPECT_EQ(c.instance.dims, (Shape{2, 2, 2}));
    EXPECT_EQ(c.instance.params.at("r"), 0.5);
    EXPECT_EQ(c.instance.clause, "A^r >= B^r");
    const nlohmann::json j = to_json(c);
    EXPECT_EQ(j["params"]["trial"], 3);
    EXPECT_EQ(j["params"]["clause"], "A^r >= B^r");
}
