#pragma once

#include <vector>

#include "ttensor/certificate.hpp"
#include "ttensor/tensor3.hpp"

namespace ttensor {

using CertificateList = std::vector<InequalityCertificate>;

// Every certifier checks the hypotheses of its theorem and throws
// HypothesisViolation instead of evaluating an instance outside them, except
// where a literal or exploratory mode explicitly lifts a condition. The
// InstanceDescriptor argument is copied into the certificates; certifiers fill
// in `clause` and the theorem parameters themselves.

/// A >= B >= 0 and 0 <= r <= 1 imply A^r >= B^r. Exploratory mode accepts any
/// r >= 0 (the inequality is then expected to fail for some pairs).
InequalityCertificate check_loewner_heinz(const Tensor3& a, const Tensor3& b, double r, double tol,
                                          InstanceDescriptor instance = {},
                                          Mode mode = Mode::corrected);

/// Power inequalities under conjugation by Q, X >= 0:
///   0 < r <= 1:  Q'*X^r*Q <= (Q'*X*Q)^r
///   1 <= r <= 2: Q'*X^r*Q >= (Q'*X*Q)^r
/// Corrected (contraction) mode: ||Q||_2 <= 1 and Q' = Q^T. Literal mode: Q
/// orthogonal and Q' = Q as stated; a non-symmetric Q*X*Q is reported as a
/// HypothesisViolation. The r = 1 case is certified in the <= direction.
InequalityCertificate check_hansen_power(const Tensor3& q, const Tensor3& x, double r, double tol,
                                         InstanceDescriptor instance = {},
                                         Mode mode = Mode::corrected);

/// For A >= B >= 0, r >= 0, p >= 0, q >= 1 with (1+2r)q >= p+2r:
///   [0] (B^r*A^p*B^r)^{1/q} >= B^{(p+2r)/q}
///   [1] A^{(p+2r)/q} >= (A^r*B^p*A^r)^{1/q}
CertificateList check_furuta(const Tensor3& a, const Tensor3& b, double r, double p, double q,
                             double tol, InstanceDescriptor instance = {});

/// Commuting A, B >= 0 with A*B >= 0 and conjugate p, q > 1:
/// A*B <= A^p/p + B^q/q.
InequalityCertificate check_young_commuting(const Tensor3& a, const Tensor3& b, double p, double q,
                                            double tol, InstanceDescriptor instance = {});

/// Generalized Young inequality through the constructed orthogonal witness.
InequalityCertificate check_young_witness(const Tensor3& a, const Tensor3& b, double p, double q,
                                          double tol, InstanceDescriptor instance = {});

enum class ComplexNormVariant { a, b, c };

/// Bounds for T = A + iB.
///   (a) A, B symmetric: spectral two-sided bound (corrected lower constant
///       1/2, literal 1), Frobenius two-sided bound, bounds through
///       (A^2+B^2)^{1/2} in both norms (the Frobenius one as two certificates).
///   (b) A t-PSD, B symmetric: ||T||_2^2 <= ||A||_2^2 + 2||B||_2^2 and
///       ||T||_F^2 >= ||A||_F^2 + c||B||_F^2 with c = 2 literal, 1 corrected.
///   (c) A, B t-PSD: ||T||^2 <= ||A||^2 + ||B||^2 in both norms.
CertificateList check_complex_norm_bounds(const Tensor3& a, const Tensor3& b,
                                          ComplexNormVariant variant, double tol,
                                          InstanceDescriptor instance = {},
                                          Mode mode = Mode::corrected);

/// ||A*X*B^T|| <= 1/2 ||A^T*A*X + X*B^T*B|| (corrected) or
/// ||A*X*B^T|| <= 1/2 ||A^T*X + X*B^T*B|| (literal), Frobenius and spectral.
CertificateList check_am_gm(const Tensor3& a, const Tensor3& x, const Tensor3& b, double tol,
                            InstanceDescriptor instance = {}, Mode mode = Mode::corrected);

/// A, B t-PSD, 1 <= 2r <= 3, -2 < t <= 2, both norms:
///   (2+t)||A^r*X*B^{2-r} + A^{2-r}*X*B^r|| <= 2||A^2*X + t A*X*B + X*B^2||
///   4||A*B|| <= ||(A+B)^2||
CertificateList check_heinz_family(const Tensor3& a, const Tensor3& x, const Tensor3& b, double r,
                                   double t, double tol, InstanceDescriptor instance = {});

/// A, B t-PSD, r > 0, conjugate p, q > 1, both norms:
///   || |A*X*B|^r || <= c ||A^p*X|^r||^{1/p} ||X*B^q|^r||^{1/q}
/// with c = n3^{1/(2p)+1/(2q)-1/2} for Frobenius (exactly 1 under
/// conjugacy) and 1 for spectral. Literal mode drops the exponent r on the
/// left-hand side as stated.
CertificateList check_holder(const Tensor3& a, const Tensor3& x, const Tensor3& b, double r,
                             double p, double q, double tol, InstanceDescriptor instance = {},
                             Mode mode = Mode::corrected);

/// 2^{-|1/p-1/2|} ||C^T*A + D^T*B|| <= c || |A|^p + |B|^p ||^{1/p} || |C|^q + |D|^q ||^{1/q}.
CertificateList check_holder_pairs(const Tensor3& a, const Tensor3& b, const Tensor3& c,
                                   const Tensor3& d, double p, double q, double tol,
                                   InstanceDescriptor instance = {});

/// || |A*B|^r || <= c || |A|^{pr} ||^{1/p} || |B|^{qr} ||^{1/q}.
CertificateList check_holder_corollary(const Tensor3& a, const Tensor3& b, double r, double p,
                                       double q, double tol, InstanceDescriptor instance = {});

/// 2^{-|1/p-1/2|} || |A1+A2|^p + |B1+B2|^p ||^{1/p}
///     <= || |A1|^p + |B1|^p ||^{1/p} + || |A2|^p + |B2|^p ||^{1/p},  1 <= p < inf.
CertificateList check_minkowski(const Tensor3& a1, const Tensor3& a2, const Tensor3& b1,
                                const Tensor3& b2, double p, double tol,
                                InstanceDescriptor instance = {});

/// n3^{1/(2p)+1/(2q)-1/2}; throws HypothesisViolation unless the exponent
/// vanishes (|1/p + 1/q - 1| <= 1e-12).
double holder_n3_prefactor(std::size_t n3, double p, double q);

/// 2^{-|1/p - 1/2|}.
double pair_prefactor(double p);

/// Throws HypothesisViolation unless p, q > 1 are finite and conjugate.
void require_conjugate(double p, double q);

}  // namespace ttensor
