#pragma once

#include <cstddef>
#include <string_view>

#include "ttensor/fourier.hpp"
#include "ttensor/tensor3.hpp"

namespace ttensor {

/// t-product of an n1 x n2 x n3 and an n2 x n4 x n3 tensor, computed as
/// slicewise matrix products in the Fourier domain.
Tensor3 t_product(const Tensor3& a, const Tensor3& b);
ComplexTensor3 t_product(const ComplexTensor3& a, const ComplexTensor3& b);

/// t_product over a chain, left to right.
Tensor3 t_product(const Tensor3& a, const Tensor3& b, const Tensor3& c);

inline constexpr double kDefaultInverseTol = 1e-12;

/// Slicewise inverse in the Fourier domain. Throws SingularTensor when some
/// slice has smallest/largest singular value <= tol_inv.
Tensor3 t_inverse(const Tensor3& a, double tol_inv = kDefaultInverseTol);

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

inline constexpr double kDefaultPredicateTol = 1e-9;

enum class PredicateReason { ok, not_square, residual_exceeded };

std::string_view to_string(PredicateReason r);

struct PredicateResult {
    bool holds = false;
    PredicateReason reason = PredicateReason::ok;
    /// Frobenius (or max-abs for f-diagonality) residual that was tested.
    double residual = 0.0;

    explicit operator bool() const noexcept { return holds; }
};

/// ||a - a^T||_F <= tol.
PredicateResult is_symmetric(const Tensor3& a, double tol = kDefaultPredicateTol);
/// ||q^T*q - I||_F <= tol and ||q*q^T - I||_F <= tol.
PredicateResult is_orthogonal(const Tensor3& q, double tol = kDefaultPredicateTol);
/// ||a^T*a - a*a^T||_F <= tol.
PredicateResult is_normal(const Tensor3& a, double tol = kDefaultPredicateTol);
/// Every off-diagonal entry of every frontal slice has magnitude <= tol.
PredicateResult is_f_diagonal(const Tensor3& a, double tol = kDefaultPredicateTol);

// ---------------------------------------------------------------------------
// Loewner order
// ---------------------------------------------------------------------------

struct LoewnerVerdict {
    bool holds = false;
    /// Smallest eigenvalue over all (Hermitian-symmetrized) Fourier slices.
    double min_gap = 0.0;
    /// Absolute threshold: holds <=> min_gap >= -tolerance_used.
    double tolerance_used = 0.0;
    /// Magnitude the relative tolerance was scaled by.
    double scale = 0.0;
};

/// Symmetric t-PSD test through the Hermitian spectra of the Fourier slices.
/// Throws NotSymmetric when ||a - a^T||_F > tol*(1 + ||a||_F). The verdict
/// holds iff min eigenvalue >= -tol*(1 + max |eigenvalue|).
LoewnerVerdict is_t_psd(const Tensor3& a, double tol = kDefaultPredicateTol);

/// a >= b, i.e. a - b symmetric t-PSD. The tolerance is scaled by
/// 1 + max(||a||_2, ||b||_2) so that the verdict is invariant under a common
/// rescaling of both sides.
LoewnerVerdict loewner_ge(const Tensor3& a, const Tensor3& b, double tol = kDefaultPredicateTol);

/// Ascending eigenvalues of the Hermitian part of every Fourier slice,
/// concatenated over the independent slices (mirrored slices share spectra).
std::vector<double> fourier_hermitian_eigenvalues(const Tensor3& a);

}  // namespace ttensor
