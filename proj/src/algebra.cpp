#include "ttensor/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ttensor/eigen_solvers.hpp"

namespace ttensor {

namespace {

void require_conformable(const Shape& a, const Shape& b) {
    if (a.n2 != b.n1 || a.n3 != b.n3) {
        throw DimensionMismatch("t_product: " + to_string(a) + " * " + to_string(b));
    }
}

void require_square(const Shape& s, const char* who) {
    if (!s.square()) throw DimensionMismatch(std::string(who) + ": tensor " + to_string(s) + " is not square");
}

void require_symmetric(const Tensor3& a, double tol, const char* who) {
    const double skew = frobenius_norm(a - transpose(a));
    if (skew > tol * (1.0 + frobenius_norm(a))) {
        throw NotSymmetric(std::string(who) + ": ||A - A^T||_F = " + std::to_string(skew));
    }
}

PredicateResult verdict(double residual, double tol) {
    PredicateResult r;
    r.residual = residual;
    r.holds = residual <= tol;
    r.reason = r.holds ? PredicateReason::ok : PredicateReason::residual_exceeded;
    return r;
}

PredicateResult not_square() {
    PredicateResult r;
    r.reason = PredicateReason::not_square;
    r.residual = std::numeric_limits<double>::infinity();
    return r;
}

LoewnerVerdict psd_verdict(const std::vector<double>& eigenvalues, double tol, double scale) {
    LoewnerVerdict v;
    v.min_gap = eigenvalues.empty() ? 0.0 : *std::min_element(eigenvalues.begin(), eigenvalues.end());
    v.scale = scale;
    v.tolerance_used = tol * (1.0 + scale);
    v.holds = v.min_gap >= -v.tolerance_used;
    return v;
}

}  // namespace

Tensor3 t_product(const Tensor3& a, const Tensor3& b) {
    require_conformable(a.shape(), b.shape());
    const FourierSlices fa = to_fourier(a);
    const FourierSlices fb = to_fourier(b);
    return from_fourier(assemble_conjugate_symmetric(
        a.n1(), b.n2(), a.n3(), [&](std::size_t k) -> ComplexMatrix { return fa.slices[k] * fb.slices[k]; }));
}

ComplexTensor3 t_product(const ComplexTensor3& a, const ComplexTensor3& b) {
    require_conformable(a.shape(), b.shape());
    const FourierSlices fa = to_fourier(a);
    const FourierSlices fb = to_fourier(b);
    FourierSlices out{a.n1(), b.n2(), a.n3(), {}, false};
    out.slices.reserve(a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) out.slices.push_back(fa.slices[k] * fb.slices[k]);
    return from_fourier_complex(out);
}

Tensor3 t_product(const Tensor3& a, const Tensor3& b, const Tensor3& c) {
    return t_product(t_product(a, b), c);
}

Tensor3 t_inverse(const Tensor3& a, double tol_inv) {
    require_square(a.shape(), "t_inverse");
    const FourierSlices fa = to_fourier(a);
    std::size_t worst = 0;
    double worst_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < independent_slices(a.n3()); ++k) {
        const Eigen::VectorXd sv = singular_values(fa.slices[k]);
        const double ratio = sv(0) > 0.0 ? sv(sv.size() - 1) / sv(0) : 0.0;
        if (ratio < worst_ratio) {
            worst_ratio = ratio;
            worst = k;
        }
    }
    if (worst_ratio <= tol_inv) {
        throw SingularTensor(worst, worst_ratio > 0.0 ? 1.0 / worst_ratio
                                                      : std::numeric_limits<double>::infinity());
    }
    return from_fourier(assemble_conjugate_symmetric(
        a.n1(), a.n2(), a.n3(),
        [&](std::size_t k) -> ComplexMatrix { return fa.slices[k].partialPivLu().inverse(); }));
}

double spectral_norm(const Tensor3& a) {
    const FourierSlices f = to_fourier(a);
    double best = 0.0;
    for (std::size_t k = 0; k < independent_slices(a.n3()); ++k) {
        best = std::max(best, singular_values(f.slices[k])(0));
    }
    return best;
}

double spectral_norm(const ComplexTensor3& a) {
    const FourierSlices f = to_fourier(a);
    double best = 0.0;
    for (const ComplexMatrix& s : f.slices) best = std::max(best, singular_values(s)(0));
    return best;
}

std::string_view to_string(PredicateReason r) {
    switch (r) {
        case PredicateReason::ok: return "ok";
        case PredicateReason::not_square: return "not_square";
        case PredicateReason::residual_exceeded: return "residual_exceeded";
    }
    return "unknown";
}

PredicateResult is_symmetric(const Tensor3& a, double tol) {
    if (!a.shape().square()) return not_square();
    return verdict(frobenius_norm(a - transpose(a)), tol);
}

PredicateResult is_orthogonal(const Tensor3& q, double tol) {
    if (!q.shape().square()) return not_square();
    const Tensor3 id = identity(q.n1(), q.n3());
    const Tensor3 qt = transpose(q);
    const double left = frobenius_norm(t_product(qt, q) - id);
    const double right = frobenius_norm(t_product(q, qt) - id);
    return verdict(std::max(left, right), tol);
}

PredicateResult is_normal(const Tensor3& a, double tol) {
    if (!a.shape().square()) return not_square();
    const Tensor3 at = transpose(a);
    return verdict(frobenius_norm(t_product(at, a) - t_product(a, at)), tol);
}

PredicateResult is_f_diagonal(const Tensor3& a, double tol) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.n3(); ++k)
        for (std::size_t i = 0; i < a.n1(); ++i)
            for (std::size_t j = 0; j < a.n2(); ++j)
                if (i != j) worst = std::max(worst, std::abs(a(i, j, k)));
    return verdict(worst, tol);
}

std::vector<double> fourier_hermitian_eigenvalues(const Tensor3& a) {
    require_square(a.shape(), "fourier_hermitian_eigenvalues");
    const FourierSlices f = to_fourier(a);
    std::vector<double> out;
    out.reserve(independent_slices(a.n3()) * a.n1());
    for (std::size_t k = 0; k < independent_slices(a.n3()); ++k) {
        const ComplexMatrix h = 0.5 * (f.slices[k] + f.slices[k].adjoint());
        const Eigen::VectorXd ev = hermitian_eigenvalues(h);
        out.insert(out.end(), ev.data(), ev.data() + ev.size());
    }
    return out;
}

LoewnerVerdict is_t_psd(const Tensor3& a, double tol) {
    require_square(a.shape(), "is_t_psd");
    require_symmetric(a, tol, "is_t_psd");
    const std::vector<double> ev = fourier_hermitian_eigenvalues(a);
    double scale = 0.0;
    for (double v : ev) scale = std::max(scale, std::abs(v));
    return psd_verdict(ev, tol, scale);
}

LoewnerVerdict loewner_ge(const Tensor3& a, const Tensor3& b, double tol) {
    require_square(a.shape(), "loewner_ge");
    if (a.shape() != b.shape()) {
        throw DimensionMismatch("loewner_ge: " + to_string(a.shape()) + " vs " + to_string(b.shape()));
    }
    const Tensor3 d = a - b;
    require_symmetric(d, tol, "loewner_ge");
    const double scale = std::max(spectral_norm(a), spectral_norm(b));
    return psd_verdict(fourier_hermitian_eigenvalues(d), tol, scale);
}

}  // namespace ttensor
