#pragma once

#include <cstddef>
#include <vector>

#include "ttensor/algebra.hpp"
#include "ttensor/eigen_solvers.hpp"
#include "ttensor/fourier.hpp"
#include "ttensor/rng.hpp"
#include "ttensor/tensor3.hpp"

namespace ttensor {

/// t-eigenvalues of a square tensor: the union of the spectra of its Fourier
/// slices, which is the spectrum of bcirc(A).
struct TEigenSpectrum {
    std::vector<Complex> values;
    /// Fourier slice (zero-based) each value came from.
    std::vector<std::size_t> slice_index;

    std::size_t size() const noexcept { return values.size(); }
};

/// Symmetric input (to 1e-12 relative) goes through hermitian_eig, anything
/// else through general_eig.
TEigenSpectrum t_eigenvalues(const Tensor3& a);
TEigenSpectrum t_eigenvalues(const ComplexTensor3& a);

inline constexpr double kDefaultPowerTol = 1e-9;

/// Fourier slices of a^r for symmetric t-PSD a.
///
/// Per slice: Hermitian eigendecomposition, eigenvalues in [-tol*lmax, 0)
/// clamped to 0 (lmax = largest |eigenvalue| over all slices), then
/// V diag(lambda^r) V^H. Lower eigenvalues raise NotPositiveSemidefinite;
/// for r < 0 every eigenvalue must be >= tol*lmax (SingularTensor otherwise).
FourierSlices t_power_slices(const Tensor3& a, double r, double tol = kDefaultPowerTol);

/// Real power of a symmetric t-PSD tensor; the result is exactly symmetric.
Tensor3 t_power(const Tensor3& a, double r, double tol = kDefaultPowerTol);

/// |a| = (a^T * a)^{1/2}.
Tensor3 t_abs(const Tensor3& a, double tol = kDefaultPowerTol);

/// |a|^r evaluated from slicewise singular value decompositions
/// (V diag(sigma^r) V^H), which keeps small singular values accurate for
/// fractional r. Mathematically equal to t_power(t_abs(a), r).
Tensor3 abs_power(const Tensor3& a, double r);

/// Random orthogonal tensor: QR of the independent Fourier slices of a uniform
/// tensor, R's diagonal normalized positive, conjugates mirrored.
Tensor3 gen_orthogonal(std::size_t n, std::size_t n3, RngStream& rng);

struct YoungWitness {
    /// Orthogonal tensor U with U^T*|A*B^T|*U <= |A|^p/p + |B|^q/q.
    Tensor3 u;
    /// loewner_ge(|A|^p/p + |B|^q/q, U^T*|A*B^T|*U) evaluated on tensors.
    LoewnerVerdict verdict;
    /// min over slices and k of lambda_k(D_i) - lambda_k(C_i), ascending order.
    double dominance_margin = 0.0;
    double dominance_tolerance = 0.0;
    bool dominance_holds = false;

    bool holds() const noexcept { return verdict.holds && dominance_holds; }
};

/// Constructs the orthogonal tensor of the generalized Young inequality.
///
/// Per independent Fourier slice i, with C_i = |A_i B_i^H| and
/// D_i = |A_i|^p/p + |B_i|^q/q, both eigendecomposed in ascending order,
/// U_i = V_C V_D^H so that D_i - U_i^H C_i U_i = V_D (L_D - L_C) V_D^H.
/// Requires p, q > 0 with |1/p + 1/q - 1| <= 1e-12 (HypothesisViolation).
/// A failure of eigenvalue dominance is reported through the result, not thrown.
YoungWitness young_witness(const Tensor3& a, const Tensor3& b, double p, double q,
                           double tol = 1e-8);

}  // namespace ttensor
