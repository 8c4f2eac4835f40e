#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "ttensor/certificate.hpp"
#include "ttensor/inequalities.hpp"
#include "ttensor/spectral.hpp"
#include "ttensor/tensor3.hpp"

namespace ttensor {

/// sum |t-eigenvalue|^2 <= n3 ||A||_F^2.
InequalityCertificate schur_bound(const Tensor3& a, double tol = kDefaultCertTol,
                                  InstanceDescriptor instance = {});

struct GershgorinDisc {
    Complex center;
    double radius = 0.0;
};

/// Disc i: center a(i,i,1), radius = sum over all (j,k) of |a(i,j,k)| minus
/// |a(i,i,1)|, which is the off-diagonal absolute row sum of bcirc(a) for
/// every one of the n3 bcirc rows belonging to tensor row i.
template <typename T>
std::vector<GershgorinDisc> gershgorin_discs(const BasicTensor3<T>& a);

/// Largest distance by which a value lies outside the union of discs
/// (<= 0 when every value is inside).
double gershgorin_excess(const std::vector<GershgorinDisc>& discs,
                         const std::vector<Complex>& values);

/// Every value lies within tol*scale of some disc, scale = 1 + max(|c|+r).
bool gershgorin_contains(const std::vector<GershgorinDisc>& discs, const TEigenSpectrum& spectrum,
                         double tol = kDefaultCertTol);

struct GershgorinComponent {
    std::vector<std::size_t> discs;
    std::size_t disc_count = 0;
    /// t-eigenvalues located in the component (raw, n3 per disc expected).
    std::size_t eigenvalue_count = 0;
    /// eigenvalue_count / n3: the count comparable to disc_count.
    double normalized_count = 0.0;
    bool consistent = false;
};

/// Connected components of the disc graph (|c1 - c2| <= r1 + r2) and the
/// number of t-eigenvalues in each. Every tensor disc stands for n3 bcirc
/// discs, so a component of k discs must hold exactly k*n3 t-eigenvalues.
std::vector<GershgorinComponent> gershgorin_component_count(
    const std::vector<GershgorinDisc>& discs, const TEigenSpectrum& spectrum, std::size_t n3,
    double tol = kDefaultCertTol);

/// Containment and component-count certificates for one tensor.
CertificateList check_gershgorin(const Tensor3& a, double tol = kDefaultCertTol,
                                 InstanceDescriptor instance = {});

/// For a = q^{-1}*s*q (s f-diagonal, q invertible), every t-eigenvalue of a
/// has a t-eigenvalue of b within ||q^{-1}||_2 ||q||_2 ||a-b||_2.
InequalityCertificate bauer_fike(const Tensor3& a, const Tensor3& b, const Tensor3& q,
                                 const Tensor3& s, double tol = kDefaultCertTol,
                                 InstanceDescriptor instance = {});

struct MatchingReport {
    std::vector<std::size_t> permutation;
    double matched_distance = 0.0;
    /// sqrt(n3) ||b - a||_F: the bound the bcirc argument actually gives.
    double bound_sqrt = 0.0;
    /// n3 ||b - a||_F, the stated constant.
    double bound_n3 = 0.0;
};

struct HoffmanWielandtResult {
    MatchingReport matching;
    /// Ascending-sorted pairing distance; set for symmetric inputs only.
    std::optional<double> sorted_distance;
    /// matched vs n3 bound, matched vs sqrt bound, and for symmetric inputs
    /// sorted vs n3 bound, sorted vs sqrt bound.
    CertificateList certificates;
};

/// Requires both tensors normal (HypothesisViolation otherwise).
HoffmanWielandtResult hoffman_wielandt(const Tensor3& a, const Tensor3& b,
                                       double tol = kDefaultCertTol,
                                       InstanceDescriptor instance = {});

/// T = a + i b for symmetric a, b; alpha, beta their t-eigenvalues ordered by
/// descending magnitude:
///   [0] (1/n3) sqrt(sum alpha^2 + beta^2) <= sqrt2 ||T||_F      (stated)
///   [1] (1/sqrt n3) sqrt(sum alpha^2 + beta^2) <= sqrt2 ||T||_F (tightened)
///   [2] max_k sqrt(alpha_k^2 + beta_k^2) <= sqrt2 ||T||_2
CertificateList diag_spectrum_bound(const Tensor3& a, const Tensor3& b,
                                    double tol = kDefaultCertTol, InstanceDescriptor instance = {});

nlohmann::json to_json(const GershgorinDisc& d);
nlohmann::json to_json(const MatchingReport& m);

}  // namespace ttensor
