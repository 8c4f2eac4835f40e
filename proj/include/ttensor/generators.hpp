#pragma once

#include <cstddef>
#include <utility>

#include "ttensor/rng.hpp"
#include "ttensor/tensor3.hpp"

namespace ttensor {

inline constexpr double kDefaultDelta = 1e-3;

/// Entries i.i.d. uniform on [-1, 1].
Tensor3 gen_random(const Shape& dims, RngStream& rng);
Tensor3 gen_random(std::size_t n1, std::size_t n2, std::size_t n3, RngStream& rng);

/// (R + R^T)/2 for a uniform R; exactly symmetric.
Tensor3 gen_symmetric(std::size_t n, std::size_t n3, RngStream& rng);

/// R^T * R + delta * I, symmetric t-positive semidefinite (definite for delta > 0).
Tensor3 gen_t_psd(std::size_t n, std::size_t n3, RngStream& rng, double delta = kDefaultDelta);

/// (B + P, B) with B, P independent t-PSD tensors, so first >= second >= 0.
std::pair<Tensor3, Tensor3> gen_loewner_pair(std::size_t n, std::size_t n3, RngStream& rng);

/// (p1(C), p2(C)) for a random t-PSD C and random polynomials of degree <= 3
/// with nonnegative coefficients, so the pair commutes and its product is t-PSD.
std::pair<Tensor3, Tensor3> gen_commuting_psd_pair(std::size_t n, std::size_t n3, RngStream& rng);

/// f-diagonal tensor with uniform diagonal entries in every frontal slice.
Tensor3 gen_f_diagonal(std::size_t n, std::size_t n3, RngStream& rng);

}  // namespace ttensor
