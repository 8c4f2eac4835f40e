#include "ttensor/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ttensor {

Complex dft_twiddle(std::size_t m, std::size_t n) {
    m %= n;
    if (m == 0) return {1.0, 0.0};
    if (2 * m == n) return {-1.0, 0.0};
    if (4 * m == n) return {0.0, -1.0};
    if (4 * m == 3 * n) return {0.0, 1.0};
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

template <typename T>
BlockCirculant<T> bcirc(const BasicTensor3<T>& a) {
    const auto [n1, n2, n3] = a.shape();
    BlockCirculant<T> out{n1, n2, n3, Matrix<T>::Zero(n1 * n3, n2 * n3)};
    for (std::size_t r = 0; r < n3; ++r) {
        for (std::size_t c = 0; c < n3; ++c) {
            const std::size_t k = (r + n3 - c) % n3;
            out.matrix.block(r * n1, c * n2, n1, n2) = a.slice(k);
        }
    }
    return out;
}

template <typename T>
Matrix<T> unfold(const BasicTensor3<T>& a) {
    const auto [n1, n2, n3] = a.shape();
    Matrix<T> out(n1 * n3, n2);
    for (std::size_t k = 0; k < n3; ++k) out.block(k * n1, 0, n1, n2) = a.slice(k);
    return out;
}

template <typename T>
BasicTensor3<T> fold(const Matrix<T>& m, std::size_t n1, std::size_t n3) {
    if (n1 == 0 || n3 == 0 || static_cast<std::size_t>(m.rows()) != n1 * n3) {
        throw DimensionMismatch("fold: matrix with " + std::to_string(m.rows()) +
                                " rows cannot hold " + std::to_string(n3) + " slices of " +
                                std::to_string(n1) + " rows");
    }
    const std::size_t n2 = static_cast<std::size_t>(m.cols());
    BasicTensor3<T> out(n1, n2, n3);
    for (std::size_t k = 0; k < n3; ++k) out.set_slice(k, m.block(k * n1, 0, n1, n2));
    return out;
}

template <typename T>
BasicTensor3<T> t_product_via_bcirc(const BasicTensor3<T>& a, const BasicTensor3<T>& b) {
    if (a.n2() != b.n1() || a.n3() != b.n3()) {
        throw DimensionMismatch("t-product of " + to_string(a.shape()) + " and " +
                                to_string(b.shape()));
    }
    return fold<T>(bcirc(a).matrix * unfold(b), a.n1(), a.n3());
}

template BlockCirculant<double> bcirc(const BasicTensor3<double>&);
template BlockCirculant<Complex> bcirc(const BasicTensor3<Complex>&);
template Matrix<double> unfold(const BasicTensor3<double>&);
template Matrix<Complex> unfold(const BasicTensor3<Complex>&);
template BasicTensor3<double> fold(const Matrix<double>&, std::size_t, std::size_t);
template BasicTensor3<Complex> fold(const Matrix<Complex>&, std::size_t, std::size_t);
template BasicTensor3<double> t_product_via_bcirc(const BasicTensor3<double>&,
                                                  const BasicTensor3<double>&);
template BasicTensor3<Complex> t_product_via_bcirc(const BasicTensor3<Complex>&,
                                                   const BasicTensor3<Complex>&);

namespace {

template <typename T>
std::vector<ComplexMatrix> complex_slices(const BasicTensor3<T>& a) {
    std::vector<ComplexMatrix> out;
    out.reserve(a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) out.push_back(a.slice(k).template cast<Complex>());
    return out;
}

ComplexMatrix forward_slice(const std::vector<ComplexMatrix>& spatial, std::size_t k) {
    const std::size_t n3 = spatial.size();
    ComplexMatrix s = ComplexMatrix::Zero(spatial[0].rows(), spatial[0].cols());
    for (std::size_t j = 0; j < n3; ++j) s += dft_twiddle(k * j, n3) * spatial[j];
    return s;
}

std::vector<ComplexMatrix> inverse_slices(const FourierSlices& s) {
    const std::size_t n3 = s.n3;
    std::vector<ComplexMatrix> out;
    out.reserve(n3);
    for (std::size_t j = 0; j < n3; ++j) {
        ComplexMatrix m = ComplexMatrix::Zero(s.n1, s.n2);
        for (std::size_t k = 0; k < n3; ++k) m += std::conj(dft_twiddle(k * j, n3)) * s.slices[k];
        m /= static_cast<double>(n3);
        out.push_back(std::move(m));
    }
    return out;
}

void require_well_formed(const FourierSlices& s) {
    if (s.n3 == 0 || s.slices.size() != s.n3) {
        throw DimensionMismatch("FourierSlices: expected " + std::to_string(s.n3) +
                                " slices, got " + std::to_string(s.slices.size()));
    }
    for (const auto& m : s.slices) {
        if (static_cast<std::size_t>(m.rows()) != s.n1 ||
            static_cast<std::size_t>(m.cols()) != s.n2) {
            throw DimensionMismatch("FourierSlices: slice shape does not match dims");
        }
    }
}

}  // namespace

FourierSlices assemble_conjugate_symmetric(
    std::size_t n1, std::size_t n2, std::size_t n3,
    const std::function<ComplexMatrix(std::size_t)>& slice_at) {
    FourierSlices out{n1, n2, n3, std::vector<ComplexMatrix>(n3), true};
    for (std::size_t k = 0; k < independent_slices(n3); ++k) {
        ComplexMatrix m = slice_at(k);
        if (static_cast<std::size_t>(m.rows()) != n1 || static_cast<std::size_t>(m.cols()) != n2) {
            throw DimensionMismatch("assemble_conjugate_symmetric: slice has wrong shape");
        }
        if (self_paired(k, n3)) m = m.real().cast<Complex>();
        out.slices[k] = std::move(m);
    }
    for (std::size_t k = independent_slices(n3); k < n3; ++k) {
        out.slices[k] = out.slices[conjugate_partner(k, n3)].conjugate();
    }
    return out;
}

FourierSlices to_fourier(const Tensor3& a) {
    const auto spatial = complex_slices(a);
    return assemble_conjugate_symmetric(a.n1(), a.n2(), a.n3(),
                                        [&](std::size_t k) { return forward_slice(spatial, k); });
}

FourierSlices to_fourier(const ComplexTensor3& a) {
    const auto spatial = complex_slices(a);
    FourierSlices out{a.n1(), a.n2(), a.n3(), {}, false};
    out.slices.reserve(a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) out.slices.push_back(forward_slice(spatial, k));
    return out;
}

SymmetryResidual conjugate_symmetry_residual(const FourierSlices& s) {
    require_well_formed(s);
    SymmetryResidual worst;
    for (std::size_t k = 0; k < s.n3; ++k) {
        const std::size_t p = conjugate_partner(k, s.n3);
        if (p < k) continue;
        const double r = (s.slices[k] - s.slices[p].conjugate()).cwiseAbs().maxCoeff();
        if (r > worst.residual) worst = {r, k, p};
    }
    return worst;
}

Tensor3 from_fourier(const FourierSlices& s, double tol_sym) {
    require_well_formed(s);
    double scale = 0.0;
    for (const auto& m : s.slices) scale = std::max(scale, m.cwiseAbs().maxCoeff());
    const SymmetryResidual sym = conjugate_symmetry_residual(s);
    if (sym.residual > tol_sym * (1.0 + scale)) {
        throw SymmetryViolation(sym.slice, sym.partner, sym.residual);
    }
    const auto spatial = inverse_slices(s);
    Tensor3 out(s.n1, s.n2, s.n3);
    for (std::size_t k = 0; k < s.n3; ++k) out.set_slice(k, spatial[k].real());
    return out;
}

ComplexTensor3 from_fourier_complex(const FourierSlices& s) {
    require_well_formed(s);
    const auto spatial = inverse_slices(s);
    return ComplexTensor3::from_slices(spatial);
}

}  // namespace ttensor
