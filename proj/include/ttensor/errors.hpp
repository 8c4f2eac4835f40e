#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ttensor {

/// Shapes of the operands do not fit the operation.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fourier data without a real preimage: slice i is not the conjugate of slice n3-i.
class SymmetryViolation : public std::runtime_error {
public:
    SymmetryViolation(std::size_t slice, std::size_t partner, double residual);

    std::size_t slice() const noexcept { return slice_; }
    std::size_t partner() const noexcept { return partner_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t slice_;
    std::size_t partner_;
    double residual_;
};

/// A Fourier slice is numerically singular.
class SingularTensor : public std::runtime_error {
public:
    SingularTensor(std::size_t worst_slice, double condition);

    std::size_t worst_slice() const noexcept { return worst_slice_; }
    double condition() const noexcept { return condition_; }

private:
    std::size_t worst_slice_;
    double condition_;
};

/// Input was required to be (numerically) symmetric or Hermitian.
class NotSymmetric : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Fourier slice has an eigenvalue below the admitted clamping window.
class NotPositiveSemidefinite : public std::domain_error {
public:
    NotPositiveSemidefinite(double min_eigenvalue, double threshold);

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class ConvergenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certifier was handed an instance outside the hypotheses of its theorem.
class HypothesisViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace ttensor
