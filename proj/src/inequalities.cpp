#include "ttensor/inequalities.hpp"

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include "ttensor/algebra.hpp"
#include "ttensor/spectral.hpp"

namespace ttensor {

namespace {

constexpr double kSymmetryHypothesisTol = 1e-9;
constexpr double kConjugacyTol = 1e-12;

using Params = std::initializer_list<std::pair<const std::string, double>>;

InstanceDescriptor describe(const InstanceDescriptor& base, const Shape& dims, std::string clause,
                            Params params) {
    InstanceDescriptor out = base;
    if (out.dims.size() == 0) out.dims = dims;
    out.clause = std::move(clause);
    for (const auto& [key, value] : params) out.params[key] = value;
    return out;
}

void require(bool condition, const std::string& what) {
    if (!condition) throw HypothesisViolation(what);
}

void require_same_square(const Tensor3& a, const Tensor3& b, const char* who) {
    if (!a.shape().square() || a.shape() != b.shape()) {
        throw DimensionMismatch(std::string(who) + ": expected equal square tensors, got " +
                                to_string(a.shape()) + " and " + to_string(b.shape()));
    }
}

void require_symmetric(const Tensor3& a, const char* name) {
    const double skew = frobenius_norm(a - transpose(a));
    require(skew <= kSymmetryHypothesisTol * (1.0 + frobenius_norm(a)),
            std::string(name) + " is not symmetric (||X - X^T||_F = " + std::to_string(skew) + ")");
}

void require_psd(const Tensor3& a, const char* name, double tol) {
    require_symmetric(a, name);
    const LoewnerVerdict v = is_t_psd(a, tol);
    require(v.holds, std::string(name) + " is not t-positive semidefinite (min eigenvalue " +
                         std::to_string(v.min_gap) + ")");
}

void require_loewner(const Tensor3& a, const Tensor3& b, const char* what, double tol) {
    const LoewnerVerdict v = loewner_ge(a, b, tol);
    require(v.holds, std::string(what) + " fails (min gap " + std::to_string(v.min_gap) + ")");
}

double norm_of(const Tensor3& x, NormKind kind) {
    return kind == NormKind::spectral ? spectral_norm(x) : frobenius_norm(x);
}

constexpr NormKind kBothNorms[] = {NormKind::frobenius, NormKind::spectral};

Tensor3 sym_product(const Tensor3& a, const Tensor3& b, const Tensor3& c) {
    return symmetrize(t_product(a, b, c));
}

}  // namespace

double pair_prefactor(double p) { return std::pow(2.0, -std::abs(1.0 / p - 0.5)); }

void require_conjugate(double p, double q) {
    require(std::isfinite(p) && std::isfinite(q) && p > 1.0 && q > 1.0,
            "exponents must be finite and > 1, got p = " + std::to_string(p) + ", q = " + std::to_string(q));
    require(std::abs(1.0 / p + 1.0 / q - 1.0) <= kConjugacyTol,
            "p = " + std::to_string(p) + " and q = " + std::to_string(q) + " are not conjugate");
}

double holder_n3_prefactor(std::size_t n3, double p, double q) {
    const double exponent = 0.5 * (1.0 / p + 1.0 / q - 1.0);
    require(std::abs(2.0 * exponent) <= kConjugacyTol, "n3 prefactor exponent does not vanish");
    return std::pow(static_cast<double>(n3), exponent);
}

InequalityCertificate check_loewner_heinz(const Tensor3& a, const Tensor3& b, double r, double tol,
                                          InstanceDescriptor instance, Mode mode) {
    require_same_square(a, b, "check_loewner_heinz");
    require(std::isfinite(r) && r >= 0.0, "exponent r must be >= 0");
    if (mode != Mode::exploratory) require(r <= 1.0, "exponent r must lie in [0, 1]");
    require_psd(b, "B", tol);
    require_loewner(a, b, "A >= B", tol);
    const LoewnerVerdict v = loewner_ge(t_power(a, r), t_power(b, r), tol);
    return loewner_certificate(TheoremId::loewner_heinz,
                               describe(instance, a.shape(), "A^r >= B^r", {{"r", r}}), v);
}

InequalityCertificate check_hansen_power(const Tensor3& q, const Tensor3& x, double r, double tol,
                                         InstanceDescriptor instance, Mode mode) {
    require_same_square(q, x, "check_hansen_power");
    require(std::isfinite(r) && r > 0.0 && r <= 2.0, "exponent r must lie in (0, 2]");
    require_psd(x, "X", tol);
    const bool concave = r <= 1.0;
    Tensor3 conj_power;  // conjugate of X^r
    Tensor3 power_conj;  // power of the conjugate of X
    std::string clause;
    if (mode == Mode::literal) {
        require(is_orthogonal(q).holds, "Q is not orthogonal");
        const Tensor3 middle = t_product(q, x, q);
        const double skew = frobenius_norm(middle - transpose(middle));
        require(skew <= kSymmetryHypothesisTol * (1.0 + frobenius_norm(middle)),
                "Q*X*Q is not symmetric (||M - M^T||_F = " + std::to_string(skew) + ")");
        conj_power = sym_product(q, t_power(x, r), q);
        try {
            power_conj = t_power(symmetrize(middle), r);
        } catch (const NotPositiveSemidefinite& e) {
            throw HypothesisViolation(std::string("Q*X*Q is not t-positive semidefinite: ") + e.what());
        }
        clause = concave ? "Q*X^r*Q <= (Q*X*Q)^r" : "Q*X^r*Q >= (Q*X*Q)^r";
    } else {
        const double qnorm = spectral_norm(q);
        require(qnorm <= 1.0 + tol, "Q is not a contraction (||Q||_2 = " + std::to_string(qnorm) + ")");
        const Tensor3 qt = transpose(q);
        conj_power = sym_product(qt, t_power(x, r), q);
        // (Q^T X Q)^r = |X^{1/2} Q|^{2r}, evaluated from singular values.
        power_conj = abs_power(t_product(t_power(x, 0.5), q), 2.0 * r);
        clause = concave ? "Q^T*X^r*Q <= (Q^T*X*Q)^r" : "Q^T*X^r*Q >= (Q^T*X*Q)^r";
    }
    const LoewnerVerdict v = concave ? loewner_ge(power_conj, conj_power, tol)
                                     : loewner_ge(conj_power, power_conj, tol);
    return loewner_certificate(TheoremId::hansen_power,
                               describe(instance, q.shape(), clause, {{"r", r}}), v);
}

CertificateList check_furuta(const Tensor3& a, const Tensor3& b, double r, double p, double q,
                             double tol, InstanceDescriptor instance) {
    require_same_square(a, b, "check_furuta");
    require(std::isfinite(r) && std::isfinite(p) && std::isfinite(q), "parameters must be finite");
    require(r >= 0.0 && p >= 0.0 && q >= 1.0, "need r >= 0, p >= 0, q >= 1");
    require((1.0 + 2.0 * r) * q >= (p + 2.0 * r) * (1.0 - 1e-12), "need (1+2r)q >= p+2r");
    require_psd(b, "B", tol);
    require_loewner(a, b, "A >= B", tol);

    const double s = (p + 2.0 * r) / q;
    const Params params{{"r", r}, {"p", p}, {"q", q}};
    CertificateList out;
    // (X^r Y^p X^r)^{1/q} = |Y^{p/2} X^r|^{2/q}, evaluated from singular values.
    const Tensor3 lhs5 = abs_power(t_product(t_power(a, 0.5 * p), t_power(b, r)), 2.0 / q);
    out.push_back(loewner_certificate(
        TheoremId::furuta, describe(instance, a.shape(), "(B^r*A^p*B^r)^(1/q) >= B^((p+2r)/q)", params),
        loewner_ge(lhs5, t_power(b, s), tol)));
    const Tensor3 rhs6 = abs_power(t_product(t_power(b, 0.5 * p), t_power(a, r)), 2.0 / q);
    out.push_back(loewner_certificate(
        TheoremId::furuta, describe(instance, a.shape(), "A^((p+2r)/q) >= (A^r*B^p*A^r)^(1/q)", params),
        loewner_ge(t_power(a, s), rhs6, tol)));
    return out;
}

InequalityCertificate check_young_commuting(const Tensor3& a, const Tensor3& b, double p, double q,
                                            double tol, InstanceDescriptor instance) {
    require_same_square(a, b, "check_young_commuting");
    require_conjugate(p, q);
    require_psd(a, "A", tol);
    require_psd(b, "B", tol);
    const Tensor3 ab = t_product(a, b);
    const double comm = frobenius_norm(ab - t_product(b, a));
    require(comm <= tol * (1.0 + frobenius_norm(a) * frobenius_norm(b)),
            "A and B do not commute (||A*B - B*A||_F = " + std::to_string(comm) + ")");
    const Tensor3 ab_sym = symmetrize(ab);
    require(is_t_psd(ab_sym, tol).holds, "A*B is not t-positive semidefinite");
    const Tensor3 rhs = t_power(a, p) * (1.0 / p) + t_power(b, q) * (1.0 / q);
    return loewner_certificate(TheoremId::young_commuting,
                               describe(instance, a.shape(), "A*B <= A^p/p + B^q/q", {{"p", p}, {"q", q}}),
                               loewner_ge(rhs, ab_sym, tol));
}

InequalityCertificate check_young_witness(const Tensor3& a, const Tensor3& b, double p, double q,
                                          double tol, InstanceDescriptor instance) {
    require_same_square(a, b, "check_young_witness");
    const YoungWitness w = young_witness(a, b, p, q, tol);
    InequalityCertificate c = loewner_certificate(
        TheoremId::young_witness,
        describe(instance, a.shape(), "U^T*|A*B^T|*U <= |A|^p/p + |B|^q/q",
                 {{"p", p}, {"q", q}, {"dominance_margin", w.dominance_margin}}),
        w.verdict);
    if (!w.dominance_holds) {
        c.rhs = w.dominance_margin;
        c.margin = w.dominance_margin;
        c.tol = w.dominance_tolerance;
        c.holds = false;
    }
    return c;
}

CertificateList check_complex_norm_bounds(const Tensor3& a, const Tensor3& b,
                                          ComplexNormVariant variant, double tol,
                                          InstanceDescriptor instance, Mode mode) {
    require_same_square(a, b, "check_complex_norm_bounds");
    switch (variant) {
        case ComplexNormVariant::a:
            require_symmetric(a, "A");
            require_symmetric(b, "B");
            break;
        case ComplexNormVariant::b:
            require_psd(a, "A", tol);
            require_symmetric(b, "B");
            break;
        case ComplexNormVariant::c:
            require_psd(a, "A", tol);
            require_psd(b, "B", tol);
            break;
    }
    const ComplexTensor3 t = complexify(a, b);
    const double t2 = spectral_norm(t);
    const double tf = frobenius_norm(t);
    const double a2 = spectral_norm(a);
    const double b2 = spectral_norm(b);
    const double af = frobenius_norm(a);
    const double bf = frobenius_norm(b);
    const bool literal = mode == Mode::literal;

    CertificateList out;
    const auto cert = [&](TheoremId id, NormKind kind, std::string clause, double lhs, double rhs) {
        out.push_back(norm_certificate(id, describe(instance, a.shape(), std::move(clause), {}), kind,
                                       lhs, rhs, tol));
    };
    switch (variant) {
        case ComplexNormVariant::a: {
            const TheoremId id = TheoremId::complex_norm_a;
            const double lower = literal ? 1.0 : 0.5;
            cert(id, NormKind::spectral,
                 literal ? "||A||_2^2 + ||B||_2^2 <= ||T||_2^2" : "(||A||_2^2 + ||B||_2^2)/2 <= ||T||_2^2",
                 lower * (a2 * a2 + b2 * b2), t2 * t2);
            cert(id, NormKind::spectral, "||T||_2^2 <= 2(||A||_2^2 + ||B||_2^2)", t2 * t2,
                 2.0 * (a2 * a2 + b2 * b2));
            cert(id, NormKind::frobenius, "||T||_F^2 <= 4(||A||_F^2 + ||B||_F^2)", tf * tf,
                 4.0 * (af * af + bf * bf));
            cert(id, NormKind::frobenius, "||A||_F^2 + ||B||_F^2 <= ||T||_F^2", af * af + bf * bf, tf * tf);
            const Tensor3 sum_sq = symmetrize(t_product(a, a) + t_product(b, b));
            const double s2 = std::sqrt(spectral_norm(sum_sq));
            const double sf = frobenius_norm(t_power(sum_sq, 0.5));
            cert(id, NormKind::spectral, "||(A^2+B^2)^(1/2)||_2 <= ||T||_2", s2, t2);
            cert(id, NormKind::spectral, "||T||_2 <= sqrt2 ||(A^2+B^2)^(1/2)||_2", t2, std::sqrt(2.0) * s2);
            cert(id, NormKind::frobenius, "||(A^2+B^2)^(1/2)||_F <= ||T||_F", sf, tf);
            cert(id, NormKind::frobenius, "||T||_F <= ||(A^2+B^2)^(1/2)||_F", tf, sf);
            break;
        }
        case ComplexNormVariant::b: {
            const TheoremId id = TheoremId::complex_norm_b;
            const double c = literal ? 2.0 : 1.0;
            cert(id, NormKind::spectral, "||T||_2^2 <= ||A||_2^2 + 2||B||_2^2", t2 * t2,
                 a2 * a2 + 2.0 * b2 * b2);
            cert(id, NormKind::frobenius,
                 literal ? "||A||_F^2 + 2||B||_F^2 <= ||T||_F^2" : "||A||_F^2 + ||B||_F^2 <= ||T||_F^2",
                 af * af + c * bf * bf, tf * tf);
            break;
        }
        case ComplexNormVariant::c: {
            const TheoremId id = TheoremId::complex_norm_c;
            cert(id, NormKind::spectral, "||T||_2^2 <= ||A||_2^2 + ||B||_2^2", t2 * t2, a2 * a2 + b2 * b2);
            cert(id, NormKind::frobenius, "||T||_F^2 <= ||A||_F^2 + ||B||_F^2", tf * tf, af * af + bf * bf);
            break;
        }
    }
    return out;
}

CertificateList check_am_gm(const Tensor3& a, const Tensor3& x, const Tensor3& b, double tol,
                            InstanceDescriptor instance, Mode mode) {
    require_same_square(a, x, "check_am_gm");
    require_same_square(a, b, "check_am_gm");
    const Tensor3 at = transpose(a);
    const Tensor3 bt = transpose(b);
    const Tensor3 lhs = t_product(a, x, bt);
    const bool literal = mode == Mode::literal;
    const Tensor3 left_term = literal ? t_product(at, x) : t_product(at, a, x);
    const Tensor3 rhs = left_term + t_product(x, bt, b);
    const std::string clause =
        literal ? "||A*X*B^T|| <= ||A^T*X + X*B^T*B||/2" : "||A*X*B^T|| <= ||A^T*A*X + X*B^T*B||/2";
    CertificateList out;
    for (NormKind kind : kBothNorms) {
        out.push_back(norm_certificate(TheoremId::am_gm, describe(instance, a.shape(), clause, {}), kind,
                                       norm_of(lhs, kind), 0.5 * norm_of(rhs, kind), tol));
    }
    return out;
}

CertificateList check_heinz_family(const Tensor3& a, const Tensor3& x, const Tensor3& b, double r,
                                   double t, double tol, InstanceDescriptor instance) {
    require_same_square(a, x, "check_heinz_family");
    require_same_square(a, b, "check_heinz_family");
    require(std::isfinite(r) && 1.0 <= 2.0 * r && 2.0 * r <= 3.0, "need 1 <= 2r <= 3");
    require(std::isfinite(t) && -2.0 < t && t <= 2.0, "need -2 < t <= 2");
    require_psd(a, "A", tol);
    require_psd(b, "B", tol);

    const Tensor3 lhs1 = t_product(t_power(a, r), x, t_power(b, 2.0 - r)) +
                         t_product(t_power(a, 2.0 - r), x, t_power(b, r));
    const Tensor3 rhs1 = t_product(t_product(a, a), x) + t * t_product(a, x, b) + t_product(x, t_product(b, b));
    const Tensor3 ab = t_product(a, b);
    const Tensor3 sum = a + b;
    const Tensor3 sum_sq = t_product(sum, sum);

    CertificateList out;
    for (NormKind kind : kBothNorms) {
        out.push_back(norm_certificate(
            TheoremId::heinz_family,
            describe(instance, a.shape(), "(2+t)||A^r*X*B^(2-r) + A^(2-r)*X*B^r|| <= 2||A^2*X + tA*X*B + X*B^2||",
                     {{"r", r}, {"t", t}}),
            kind, (2.0 + t) * norm_of(lhs1, kind), 2.0 * norm_of(rhs1, kind), tol));
    }
    for (NormKind kind : kBothNorms) {
        out.push_back(norm_certificate(
            TheoremId::heinz_family,
            describe(instance, a.shape(), "4||A*B|| <= ||(A+B)^2||", {{"r", r}, {"t", t}}), kind,
            4.0 * norm_of(ab, kind), norm_of(sum_sq, kind), tol));
    }
    return out;
}

CertificateList check_holder(const Tensor3& a, const Tensor3& x, const Tensor3& b, double r,
                             double p, double q, double tol, InstanceDescriptor instance, Mode mode) {
    require_same_square(a, x, "check_holder");
    require_same_square(a, b, "check_holder");
    require(std::isfinite(r) && r > 0.0, "r must be positive");
    require_conjugate(p, q);
    require_psd(a, "A", tol);
    require_psd(b, "B", tol);

    const bool literal = mode == Mode::literal;
    const Tensor3 axb = t_product(a, x, b);
    const Tensor3 lhs = abs_power(axb, literal ? 1.0 : r);
    const Tensor3 left = abs_power(t_product(t_power(a, p), x), r);
    const Tensor3 right = abs_power(t_product(x, t_power(b, q)), r);
    const double c = holder_n3_prefactor(a.n3(), p, q);
    const std::string clause = literal ? "|| |A*X*B| || <= c || |A^p*X|^r ||^(1/p) || |X*B^q|^r ||^(1/q)"
                                       : "|| |A*X*B|^r || <= c || |A^p*X|^r ||^(1/p) || |X*B^q|^r ||^(1/q)";
    CertificateList out;
    for (NormKind kind : kBothNorms) {
        const double prefactor = kind == NormKind::frobenius ? c : 1.0;
        const double rhs =
            prefactor * std::pow(norm_of(left, kind), 1.0 / p) * std::pow(norm_of(right, kind), 1.0 / q);
        out.push_back(norm_certificate(
            TheoremId::holder,
            describe(instance, a.shape(), clause, {{"r", r}, {"p", p}, {"q", q}, {"n3_prefactor", prefactor}}),
            kind, norm_of(lhs, kind), rhs, tol));
    }
    return out;
}

CertificateList check_holder_pairs(const Tensor3& a, const Tensor3& b, const Tensor3& c,
                                   const Tensor3& d, double p, double q, double tol,
                                   InstanceDescriptor instance) {
    require_same_square(a, b, "check_holder_pairs");
    require_same_square(a, c, "check_holder_pairs");
    require_same_square(a, d, "check_holder_pairs");
    require_conjugate(p, q);
    const Tensor3 lhs = t_product(transpose(c), a) + t_product(transpose(d), b);
    const Tensor3 ab = abs_power(a, p) + abs_power(b, p);
    const Tensor3 cd = abs_power(c, q) + abs_power(d, q);
    const double n3c = holder_n3_prefactor(a.n3(), p, q);
    CertificateList out;
    for (NormKind kind : kBothNorms) {
        const double prefactor = kind == NormKind::frobenius ? n3c : 1.0;
        out.push_back(norm_certificate(
            TheoremId::holder_pairs,
            describe(instance, a.shape(),
                     "2^(-|1/p-1/2|) ||C^T*A + D^T*B|| <= c || |A|^p + |B|^p ||^(1/p) || |C|^q + |D|^q ||^(1/q)",
                     {{"p", p}, {"q", q}, {"n3_prefactor", prefactor}}),
            kind, pair_prefactor(p) * norm_of(lhs, kind),
            prefactor * std::pow(norm_of(ab, kind), 1.0 / p) * std::pow(norm_of(cd, kind), 1.0 / q), tol));
    }
    return out;
}

CertificateList check_holder_corollary(const Tensor3& a, const Tensor3& b, double r, double p,
                                       double q, double tol, InstanceDescriptor instance) {
    require_same_square(a, b, "check_holder_corollary");
    require(std::isfinite(r) && r > 0.0, "r must be positive");
    require_conjugate(p, q);
    const Tensor3 lhs = abs_power(t_product(a, b), r);
    const Tensor3 left = abs_power(a, p * r);
    const Tensor3 right = abs_power(b, q * r);
    const double n3c = holder_n3_prefactor(a.n3(), p, q);
    CertificateList out;
    for (NormKind kind : kBothNorms) {
        const double prefactor = kind == NormKind::frobenius ? n3c : 1.0;
        out.push_back(norm_certificate(
            TheoremId::holder_corollary,
            describe(instance, a.shape(), "|| |A*B|^r || <= c || |A|^(pr) ||^(1/p) || |B|^(qr) ||^(1/q)",
                     {{"r", r}, {"p", p}, {"q", q}, {"n3_prefactor", prefactor}}),
            kind, norm_of(lhs, kind),
            prefactor * std::pow(norm_of(left, kind), 1.0 / p) * std::pow(norm_of(right, kind), 1.0 / q), tol));
    }
    return out;
}

CertificateList check_minkowski(const Tensor3& a1, const Tensor3& a2, const Tensor3& b1,
                                const Tensor3& b2, double p, double tol, InstanceDescriptor instance) {
    require_same_square(a1, a2, "check_minkowski");
    require_same_square(a1, b1, "check_minkowski");
    require_same_square(a1, b2, "check_minkowski");
    require(std::isfinite(p) && p >= 1.0, "need 1 <= p < inf");
    const Tensor3 sum = abs_power(a1 + a2, p) + abs_power(b1 + b2, p);
    const Tensor3 first = abs_power(a1, p) + abs_power(b1, p);
    const Tensor3 second = abs_power(a2, p) + abs_power(b2, p);
    CertificateList out;
    for (NormKind kind : kBothNorms) {
        out.push_back(norm_certificate(
            TheoremId::minkowski,
            describe(instance, a1.shape(),
                     "2^(-|1/p-1/2|) || |A1+A2|^p + |B1+B2|^p ||^(1/p) <= "
                     "|| |A1|^p + |B1|^p ||^(1/p) + || |A2|^p + |B2|^p ||^(1/p)",
                     {{"p", p}}),
            kind, pair_prefactor(p) * std::pow(norm_of(sum, kind), 1.0 / p),
            std::pow(norm_of(first, kind), 1.0 / p) + std::pow(norm_of(second, kind), 1.0 / p), tol));
    }
    return out;
}

}  // namespace ttensor
