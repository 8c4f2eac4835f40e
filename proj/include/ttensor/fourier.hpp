#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ttensor/tensor3.hpp"

namespace ttensor {

/// Fourier-domain (block diagonal) representation of a tensor: slice k is the
/// k-th diagonal block of (F ⊗ I) bcirc(A) (F^-1 ⊗ I).
struct FourierSlices {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;
    std::vector<ComplexMatrix> slices;
    /// Set when the slices came from a real tensor; slice n3-k is then the
    /// conjugate of slice k (zero-based) and self-paired slices are real.
    bool origin_real = false;

    Shape shape() const { return {n1, n2, n3}; }
};

template <typename T>
struct BlockCirculant {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;
    /// (n1*n3) x (n2*n3); block (r, c) is frontal slice (r - c) mod n3.
    Matrix<T> matrix;
};

/// Index of the slice paired with slice k under conjugate symmetry.
constexpr std::size_t conjugate_partner(std::size_t k, std::size_t n3) noexcept {
    return (n3 - k) % n3;
}

/// e^{-2 pi i m / n}, exact at multiples of a quarter turn.
Complex dft_twiddle(std::size_t m, std::size_t n);

template <typename T>
BlockCirculant<T> bcirc(const BasicTensor3<T>& a);

/// Stacks the frontal slices vertically: (n1*n3) x n2.
template <typename T>
Matrix<T> unfold(const BasicTensor3<T>& a);

/// Inverse of unfold; m must have n1*n3 rows.
template <typename T>
BasicTensor3<T> fold(const Matrix<T>& m, std::size_t n1, std::size_t n3);

/// DFT along every tube with kernel e^{-2 pi i/n3}, unnormalized.
FourierSlices to_fourier(const Tensor3& a);
FourierSlices to_fourier(const ComplexTensor3& a);

inline constexpr double kDefaultSymmetryTol = 1e-9;

/// Inverse DFT back to a real tensor. Throws SymmetryViolation when slice k and
/// the conjugate of slice n3-k differ by more than tol*(1 + max |entry|).
Tensor3 from_fourier(const FourierSlices& s, double tol_sym = kDefaultSymmetryTol);

/// Inverse DFT keeping the complex result (no symmetry requirement).
ComplexTensor3 from_fourier_complex(const FourierSlices& s);

/// Largest |S_k - conj(S_{n3-k})| over all slices, and the worst pair.
struct SymmetryResidual {
    double residual = 0.0;
    std::size_t slice = 0;
    std::size_t partner = 0;
};
SymmetryResidual conjugate_symmetry_residual(const FourierSlices& s);

/// Builds conjugate-symmetric slices from `slice_at`, evaluated only on the
/// independent indices 0..floor(n3/2). Self-paired slices keep their real part
/// and the rest are mirrored as conjugates, so the result has a real preimage.
FourierSlices assemble_conjugate_symmetric(std::size_t n1, std::size_t n2, std::size_t n3,
                                           const std::function<ComplexMatrix(std::size_t)>& slice_at);

/// True for slices that are their own conjugate partner (k = 0, and n3/2 when n3 is even).
constexpr bool self_paired(std::size_t k, std::size_t n3) noexcept {
    return conjugate_partner(k, n3) == k;
}

/// Number of independent slices of a conjugate-symmetric list: floor(n3/2) + 1.
constexpr std::size_t independent_slices(std::size_t n3) noexcept { return n3 / 2 + 1; }

/// fold(bcirc(a) * unfold(b)), the direct definition of the t-product. Kept
/// as a reference path; t_product itself works in the Fourier domain.
template <typename T>
BasicTensor3<T> t_product_via_bcirc(const BasicTensor3<T>& a, const BasicTensor3<T>& b);

}  // namespace ttensor
