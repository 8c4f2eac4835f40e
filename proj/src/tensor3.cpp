#include "ttensor/tensor3.hpp"

#include <algorithm>

namespace ttensor {

std::string to_string(const Shape& s) {
    return std::to_string(s.n1) + "x" + std::to_string(s.n2) + "x" + std::to_string(s.n3);
}

SymmetryViolation::SymmetryViolation(std::size_t slice, std::size_t partner, double residual)
    : std::runtime_error("Fourier slices " + std::to_string(slice) + " and " +
                         std::to_string(partner) +
                         " are not conjugate (residual " + std::to_string(residual) +
                         "); no real tensor has these slices"),
      slice_(slice), partner_(partner), residual_(residual) {}

SingularTensor::SingularTensor(std::size_t worst_slice, double condition)
    : std::runtime_error("tensor is singular: Fourier slice " + std::to_string(worst_slice) +
                         " has condition estimate " + std::to_string(condition)),
      worst_slice_(worst_slice), condition_(condition) {}

NotPositiveSemidefinite::NotPositiveSemidefinite(double min_eigenvalue, double threshold)
    : std::domain_error("tensor is not t-positive semidefinite: eigenvalue " +
                        std::to_string(min_eigenvalue) + " below -" + std::to_string(threshold)),
      min_eigenvalue_(min_eigenvalue) {}

Tensor3 zeros(std::size_t n1, std::size_t n2, std::size_t n3) { return Tensor3(n1, n2, n3); }

Tensor3 ones(std::size_t n1, std::size_t n2, std::size_t n3) {
    return Tensor3(n1, n2, n3, std::vector<double>(n1 * n2 * n3, 1.0));
}

Tensor3 identity(std::size_t n, std::size_t n3) {
    Tensor3 out(n, n, n3);
    for (std::size_t i = 0; i < n; ++i) out(i, i, 0) = 1.0;
    return out;
}

Tensor3 symmetrize(const Tensor3& a) {
    if (!a.shape().square()) throw DimensionMismatch("symmetrize needs a square tensor");
    const Tensor3 at = transpose(a);
    Tensor3 out(a.shape());
    auto dst = out.entries();
    auto x = a.entries();
    auto y = at.entries();
    // (x + y)/2 is commutative in floating point, so the result is exactly symmetric.
    for (std::size_t n = 0; n < dst.size(); ++n) dst[n] = 0.5 * (x[n] + y[n]);
    return out;
}

ComplexTensor3 complexify(const Tensor3& re, const Tensor3& im) {
    if (re.shape() != im.shape()) throw DimensionMismatch("complexify: shape mismatch");
    ComplexTensor3 out(re.shape());
    auto dst = out.entries();
    for (std::size_t n = 0; n < dst.size(); ++n) dst[n] = Complex(re.entries()[n], im.entries()[n]);
    return out;
}

Tensor3 real_part(const ComplexTensor3& a) {
    Tensor3 out(a.shape());
    for (std::size_t n = 0; n < a.size(); ++n) out.entries()[n] = a.entries()[n].real();
    return out;
}

Tensor3 imag_part(const ComplexTensor3& a) {
    Tensor3 out(a.shape());
    for (std::size_t n = 0; n < a.size(); ++n) out.entries()[n] = a.entries()[n].imag();
    return out;
}

double inner_product(const Tensor3& x, const Tensor3& y) {
    if (x.shape() != y.shape()) {
        throw DimensionMismatch("inner_product: " + to_string(x.shape()) + " vs " +
                                to_string(y.shape()));
    }
    double s = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) s += x.entries()[n] * y.entries()[n];
    return s;
}

double max_abs(const Tensor3& a) {
    double m = 0.0;
    for (double v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace ttensor
