#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ttensor/errors.hpp"

namespace ttensor {

using Complex = std::complex<double>;

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

template <typename T>
inline constexpr bool is_complex_v = false;
template <typename R>
inline constexpr bool is_complex_v<std::complex<R>> = true;

struct Shape {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;

    std::size_t size() const noexcept { return n1 * n2 * n3; }
    bool square() const noexcept { return n1 == n2; }
    friend bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(const Shape& s);

/// Dense third-order tensor, n1 x n2 x n3.
///
/// Entries are stored slice-major: frontal slice k is outermost and each slice
/// is row-major, so entry (i, j, k) (zero-based) lives at (k*n1 + i)*n2 + j.
/// The tensor file format and the test oracles rely on this layout.
template <typename T>
class BasicTensor3 {
public:
    using value_type = T;

    BasicTensor3() = default;

    BasicTensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : shape_{n1, n2, n3}, entries_(n1 * n2 * n3, T{}) {
        check_dims();
    }

    BasicTensor3(std::size_t n1, std::size_t n2, std::size_t n3, std::vector<T> entries)
        : shape_{n1, n2, n3}, entries_(std::move(entries)) {
        check_dims();
        if (entries_.size() != shape_.size()) {
            throw DimensionMismatch("tensor entry count " + std::to_string(entries_.size()) +
                                    " does not match dims " + to_string(shape_));
        }
        for (const T& v : entries_) {
            if (!finite(v)) throw std::invalid_argument("tensor entries must be finite");
        }
    }

    explicit BasicTensor3(const Shape& s) : BasicTensor3(s.n1, s.n2, s.n3) {}

    /// Stacks equally sized matrices as frontal slices.
    static BasicTensor3 from_slices(std::span<const Matrix<T>> slices) {
        if (slices.empty()) throw DimensionMismatch("from_slices needs at least one slice");
        BasicTensor3 out(static_cast<std::size_t>(slices[0].rows()),
                         static_cast<std::size_t>(slices[0].cols()), slices.size());
        for (std::size_t k = 0; k < slices.size(); ++k) out.set_slice(k, slices[k]);
        return out;
    }

    const Shape& shape() const noexcept { return shape_; }
    std::size_t n1() const noexcept { return shape_.n1; }
    std::size_t n2() const noexcept { return shape_.n2; }
    std::size_t n3() const noexcept { return shape_.n3; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    static constexpr std::size_t index(const Shape& s, std::size_t i, std::size_t j,
                                       std::size_t k) noexcept {
        return (k * s.n1 + i) * s.n2 + j;
    }

    T operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return entries_[index(shape_, i, j, k)];
    }
    T& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return entries_[index(shape_, i, j, k)];
    }

    std::span<const T> entries() const noexcept { return entries_; }
    std::span<T> entries() noexcept { return entries_; }

    Matrix<T> slice(std::size_t k) const {
        Matrix<T> m(shape_.n1, shape_.n2);
        for (std::size_t i = 0; i < shape_.n1; ++i)
            for (std::size_t j = 0; j < shape_.n2; ++j) m(i, j) = (*this)(i, j, k);
        return m;
    }

    void set_slice(std::size_t k, const Matrix<T>& m) {
        if (static_cast<std::size_t>(m.rows()) != shape_.n1 ||
            static_cast<std::size_t>(m.cols()) != shape_.n2) {
            throw DimensionMismatch("slice shape does not match tensor");
        }
        for (std::size_t i = 0; i < shape_.n1; ++i)
            for (std::size_t j = 0; j < shape_.n2; ++j) (*this)(i, j, k) = m(i, j);
    }

    BasicTensor3& operator+=(const BasicTensor3& o) {
        require_same_shape(o, "+");
        for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] += o.entries_[n];
        return *this;
    }
    BasicTensor3& operator-=(const BasicTensor3& o) {
        require_same_shape(o, "-");
        for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] -= o.entries_[n];
        return *this;
    }
    BasicTensor3& operator*=(T s) {
        for (T& v : entries_) v *= s;
        return *this;
    }

    friend BasicTensor3 operator+(BasicTensor3 a, const BasicTensor3& b) { return a += b; }
    friend BasicTensor3 operator-(BasicTensor3 a, const BasicTensor3& b) { return a -= b; }
    friend BasicTensor3 operator*(BasicTensor3 a, T s) { return a *= s; }
    friend BasicTensor3 operator*(T s, BasicTensor3 a) { return a *= s; }
    friend BasicTensor3 operator-(BasicTensor3 a) { return a *= T(-1); }

    /// Bitwise-exact comparison of shape and entries.
    friend bool operator==(const BasicTensor3&, const BasicTensor3&) = default;

private:
    static bool finite(const T& v) {
        if constexpr (is_complex_v<T>) {
            return std::isfinite(v.real()) && std::isfinite(v.imag());
        } else {
            return std::isfinite(v);
        }
    }

    void check_dims() const {
        if (shape_.n1 == 0 || shape_.n2 == 0 || shape_.n3 == 0) {
            throw DimensionMismatch("tensor dims must be positive, got " + to_string(shape_));
        }
    }

    void require_same_shape(const BasicTensor3& o, const char* op) const {
        if (shape_ != o.shape_) {
            throw DimensionMismatch(std::string("operator") + op + ": " + to_string(shape_) +
                                    " vs " + to_string(o.shape_));
        }
    }

    Shape shape_{};
    std::vector<T> entries_;
};

using Tensor3 = BasicTensor3<double>;
using ComplexTensor3 = BasicTensor3<Complex>;

Tensor3 zeros(std::size_t n1, std::size_t n2, std::size_t n3);
Tensor3 ones(std::size_t n1, std::size_t n2, std::size_t n3);
/// n x n x n3 tensor whose first frontal slice is the identity, others zero.
Tensor3 identity(std::size_t n, std::size_t n3);

/// Transposes every frontal slice and reverses the order of slices 2..n3.
template <typename T>
BasicTensor3<T> transpose(const BasicTensor3<T>& a) {
    const std::size_t n3 = a.n3();
    BasicTensor3<T> out(a.n2(), a.n1(), n3);
    for (std::size_t k = 0; k < n3; ++k) {
        const std::size_t src = (n3 - k) % n3;
        for (std::size_t i = 0; i < a.n1(); ++i)
            for (std::size_t j = 0; j < a.n2(); ++j) out(j, i, k) = a(i, j, src);
    }
    return out;
}

/// (a + transpose(a)) / 2, exactly symmetric.
Tensor3 symmetrize(const Tensor3& a);

ComplexTensor3 complexify(const Tensor3& re, const Tensor3& im);
Tensor3 real_part(const ComplexTensor3& a);
Tensor3 imag_part(const ComplexTensor3& a);

double inner_product(const Tensor3& x, const Tensor3& y);

template <typename T>
double frobenius_norm(const BasicTensor3<T>& a) {
    double s = 0.0;
    for (const T& v : a.entries()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const Tensor3& a);

/// Largest singular value of bcirc(a), evaluated slicewise in the Fourier domain.
double spectral_norm(const Tensor3& a);
double spectral_norm(const ComplexTensor3& a);

}  // namespace ttensor
