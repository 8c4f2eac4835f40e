#include "ttensor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ttensor/generators.hpp"

namespace ttensor {

namespace {

constexpr double kSymmetricSpectrumTol = 1e-12;

void require_square(const Shape& s, const char* who) {
    if (!s.square()) throw DimensionMismatch(std::string(who) + ": tensor " + to_string(s) + " is not square");
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

/// Singular values (descending, padded with zeros to the column count) and
/// right singular vectors, so that M^H M = V diag(sigma^2) V^H. `real_slice`
/// forces a real factorization for self-paired Fourier slices.
struct AbsDecomposition {
    Eigen::VectorXd sigma;
    ComplexMatrix v;
};

AbsDecomposition abs_decomposition(const ComplexMatrix& m, bool real_slice) {
    const Eigen::Index cols = m.cols();
    AbsDecomposition out;
    out.sigma = Eigen::VectorXd::Zero(cols);
    Eigen::VectorXd sv;
    if (real_slice) {
        Eigen::JacobiSVD<RealMatrix> svd(m.real(), Eigen::ComputeFullV);
        sv = svd.singularValues();
        out.v = svd.matrixV().cast<Complex>();
    } else {
        Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
        sv = svd.singularValues();
        out.v = svd.matrixV();
    }
    out.sigma.head(sv.size()) = sv;
    return out;
}

ComplexMatrix abs_power_slice(const ComplexMatrix& m, double r, bool real_slice) {
    const AbsDecomposition d = abs_decomposition(m, real_slice);
    Eigen::VectorXd powered(d.sigma.size());
    for (Eigen::Index k = 0; k < d.sigma.size(); ++k) powered(k) = std::pow(d.sigma(k), r);
    ComplexMatrix out = d.v * powered.cast<Complex>().asDiagonal() * d.v.adjoint();
    out = hermitian_part(out);
    if (real_slice) out = out.real().cast<Complex>();
    return out;
}

}  // namespace

TEigenSpectrum t_eigenvalues(const Tensor3& a) {
    require_square(a.shape(), "t_eigenvalues");
    const std::size_t n = a.n1();
    const std::size_t n3 = a.n3();
    const bool symmetric =
        frobenius_norm(a - transpose(a)) <= kSymmetricSpectrumTol * (1.0 + frobenius_norm(a));
    const FourierSlices f = to_fourier(a);

    std::vector<std::vector<Complex>> per_slice(n3);
    for (std::size_t k = 0; k < independent_slices(n3); ++k) {
        if (symmetric) {
            const Eigen::VectorXd ev = hermitian_eigenvalues(hermitian_part(f.slices[k]));
            per_slice[k].assign(ev.data(), ev.data() + ev.size());
        } else {
            per_slice[k] = general_eig(f.slices[k]);
        }
    }
    for (std::size_t k = independent_slices(n3); k < n3; ++k) {
        const std::vector<Complex>& src = per_slice[conjugate_partner(k, n3)];
        per_slice[k].reserve(src.size());
        for (const Complex& z : src) per_slice[k].push_back(std::conj(z));
    }

    TEigenSpectrum out;
    out.values.reserve(n * n3);
    out.slice_index.reserve(n * n3);
    for (std::size_t k = 0; k < n3; ++k) {
        for (const Complex& z : per_slice[k]) {
            out.values.push_back(z);
            out.slice_index.push_back(k);
        }
    }
    return out;
}

TEigenSpectrum t_eigenvalues(const ComplexTensor3& a) {
    require_square(a.shape(), "t_eigenvalues");
    const FourierSlices f = to_fourier(a);
    TEigenSpectrum out;
    for (std::size_t k = 0; k < a.n3(); ++k) {
        for (const Complex& z : general_eig(f.slices[k])) {
            out.values.push_back(z);
            out.slice_index.push_back(k);
        }
    }
    return out;
}

FourierSlices t_power_slices(const Tensor3& a, double r, double tol) {
    require_square(a.shape(), "t_power");
    if (!std::isfinite(r)) throw std::invalid_argument("t_power: exponent must be finite");
    const double skew = frobenius_norm(a - transpose(a));
    if (skew > tol * (1.0 + frobenius_norm(a))) {
        throw NotSymmetric("t_power: ||A - A^T||_F = " + std::to_string(skew));
    }
    const std::size_t n3 = a.n3();
    const FourierSlices f = to_fourier(a);
    const std::size_t half = independent_slices(n3);

    std::vector<HermitianEigen> eig;
    eig.reserve(half);
    double lmax = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        ComplexMatrix h = hermitian_part(f.slices[k]);
        if (self_paired(k, n3)) h = h.real().cast<Complex>();
        eig.push_back(hermitian_eig(h));
        lmax = std::max(lmax, eig.back().values.cwiseAbs().maxCoeff());
    }

    const double floor = -tol * lmax;
    for (std::size_t k = 0; k < half; ++k) {
        Eigen::VectorXd& values = eig[k].values;
        for (Eigen::Index j = 0; j < values.size(); ++j) {
            double& v = values(j);
            if (v < floor) throw NotPositiveSemidefinite(v, floor);
            if (v < 0.0) v = 0.0;
            if (r < 0.0 && v < tol * lmax) {
                throw SingularTensor(k, v > 0.0 ? lmax / v : std::numeric_limits<double>::infinity());
            }
        }
    }

    return assemble_conjugate_symmetric(a.n1(), a.n2(), n3, [&](std::size_t k) -> ComplexMatrix {
        const HermitianEigen& e = eig[k];
        Eigen::VectorXcd powered(e.values.size());
        for (Eigen::Index j = 0; j < e.values.size(); ++j) powered(j) = std::pow(e.values(j), r);
        return hermitian_part(e.vectors * powered.asDiagonal() * e.vectors.adjoint());
    });
}

Tensor3 t_power(const Tensor3& a, double r, double tol) {
    return symmetrize(from_fourier(t_power_slices(a, r, tol)));
}

Tensor3 t_abs(const Tensor3& a, double tol) {
    return t_power(symmetrize(t_product(transpose(a), a)), 0.5, tol);
}

Tensor3 abs_power(const Tensor3& a, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("abs_power: exponent must be positive");
    const std::size_t n3 = a.n3();
    const FourierSlices f = to_fourier(a);
    return symmetrize(from_fourier(assemble_conjugate_symmetric(
        a.n2(), a.n2(), n3,
        [&](std::size_t k) { return abs_power_slice(f.slices[k], r, self_paired(k, n3)); })));
}

Tensor3 gen_orthogonal(std::size_t n, std::size_t n3, RngStream& rng) {
    const Tensor3 seed = gen_random(n, n, n3, rng);
    const FourierSlices f = to_fourier(seed);
    const auto q_factor = [n](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        Eigen::HouseholderQR<M> qr(m);
        M q = qr.householderQ() * M::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        const M r = qr.matrixQR();
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
            const auto d = r(i, i);
            if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
        }
        return q;
    };
    return from_fourier(assemble_conjugate_symmetric(n, n, n3, [&](std::size_t k) -> ComplexMatrix {
        if (self_paired(k, n3)) return q_factor(RealMatrix(f.slices[k].real())).template cast<Complex>();
        return q_factor(f.slices[k]);
    }));
}

YoungWitness young_witness(const Tensor3& a, const Tensor3& b, double p, double q, double tol) {
    require_square(a.shape(), "young_witness");
    if (a.shape() != b.shape()) {
        throw DimensionMismatch("young_witness: " + to_string(a.shape()) + " vs " + to_string(b.shape()));
    }
    if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q) ||
        std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
        throw HypothesisViolation("young_witness: p = " + std::to_string(p) + ", q = " +
                                  std::to_string(q) + " are not conjugate exponents");
    }
    const std::size_t n = a.n1();
    const std::size_t n3 = a.n3();
    const FourierSlices fa = to_fourier(a);
    const FourierSlices fb = to_fourier(b);

    YoungWitness out;
    out.dominance_margin = std::numeric_limits<double>::infinity();
    double dmax = 0.0;
    std::vector<ComplexMatrix> u_slices(independent_slices(n3));
    for (std::size_t k = 0; k < independent_slices(n3); ++k) {
        const bool real_slice = self_paired(k, n3);
        const ComplexMatrix m = fa.slices[k] * fb.slices[k].adjoint();
        const AbsDecomposition c = abs_decomposition(m, real_slice);
        ComplexMatrix d = abs_power_slice(fa.slices[k], p, real_slice) / p +
                          abs_power_slice(fb.slices[k], q, real_slice) / q;
        const HermitianEigen de = hermitian_eig(d);

        // C's eigenpairs in ascending order are the reversed singular triplets.
        ComplexMatrix vc(n, n);
        Eigen::VectorXd lc(n);
        for (std::size_t j = 0; j < n; ++j) {
            vc.col(static_cast<Eigen::Index>(j)) = c.v.col(static_cast<Eigen::Index>(n - 1 - j));
            lc(static_cast<Eigen::Index>(j)) = c.sigma(static_cast<Eigen::Index>(n - 1 - j));
        }
        out.dominance_margin = std::min(out.dominance_margin, (de.values - lc).minCoeff());
        dmax = std::max(dmax, de.values.cwiseAbs().maxCoeff());
        u_slices[k] = vc * de.vectors.adjoint();
    }
    out.dominance_tolerance = tol * (1.0 + dmax);
    out.dominance_holds = out.dominance_margin >= -out.dominance_tolerance;

    out.u = from_fourier(assemble_conjugate_symmetric(
        n, n, n3, [&](std::size_t k) -> ComplexMatrix { return u_slices[k]; }));
    const Tensor3 lhs = abs_power(a, p) * (1.0 / p) + abs_power(b, q) * (1.0 / q);
    const Tensor3 rhs = symmetrize(t_product(transpose(out.u), abs_power(t_product(a, transpose(b)), 1.0), out.u));
    out.verdict = loewner_ge(lhs, rhs, tol);
    return out;
}

}  // namespace ttensor
