#pragma once

#include <cstddef>
#include <vector>

#include "ttensor/tensor3.hpp"

namespace ttensor {

/// Minimum-cost perfect matching on a square cost matrix (Kuhn-Munkres with
/// potentials, O(n^3)). Returns assignment[row] = column.
std::vector<std::size_t> optimal_assignment(const RealMatrix& cost);

struct SpectrumMatch {
    /// permutation[i] = index into `second` matched with first[i].
    std::vector<std::size_t> permutation;
    /// sqrt(sum |second[perm[i]] - first[i]|^2), minimal over permutations.
    double l2_distance = 0.0;
    /// max |second[perm[i]] - first[i]| for the same matching.
    double max_distance = 0.0;
};

/// Optimal assignment between two equally sized multisets of complex numbers,
/// minimizing the sum of squared distances.
SpectrumMatch match_spectra(const std::vector<Complex>& first, const std::vector<Complex>& second);

}  // namespace ttensor
