#include "ttensor/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ttensor/algebra.hpp"
#include "ttensor/assignment.hpp"

namespace ttensor {

namespace {

constexpr double kHypothesisTol = 1e-9;
constexpr double kFactorizationTol = 1e-8;

void require(bool condition, const std::string& what) {
    if (!condition) throw HypothesisViolation(what);
}

void require_square(const Shape& s, const char* who) {
    if (!s.square()) throw DimensionMismatch(std::string(who) + ": tensor " + to_string(s) + " is not square");
}

void require_same_square(const Tensor3& a, const Tensor3& b, const char* who) {
    require_square(a.shape(), who);
    if (a.shape() != b.shape()) {
        throw DimensionMismatch(std::string(who) + ": " + to_string(a.shape()) + " vs " + to_string(b.shape()));
    }
}

InstanceDescriptor describe(const InstanceDescriptor& base, const Shape& dims, std::string clause) {
    InstanceDescriptor out = base;
    if (out.dims.size() == 0) out.dims = dims;
    out.clause = std::move(clause);
    return out;
}

double containment_scale(const std::vector<GershgorinDisc>& discs) {
    double scale = 0.0;
    for (const GershgorinDisc& d : discs) scale = std::max(scale, std::abs(d.center) + d.radius);
    return 1.0 + scale;
}

/// Distance of z outside disc d (negative inside).
double outside(const GershgorinDisc& d, Complex z) { return std::abs(z - d.center) - d.radius; }

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::vector<double> real_parts(const TEigenSpectrum& s) {
    std::vector<double> out;
    out.reserve(s.size());
    for (const Complex& z : s.values) out.push_back(z.real());
    return out;
}

void require_symmetric(const Tensor3& a, const char* name) {
    const double skew = frobenius_norm(a - transpose(a));
    require(skew <= kHypothesisTol * (1.0 + frobenius_norm(a)),
            std::string(name) + " is not symmetric (||X - X^T||_F = " + std::to_string(skew) + ")");
}

bool nearly_symmetric(const Tensor3& a) {
    return frobenius_norm(a - transpose(a)) <= kHypothesisTol * (1.0 + frobenius_norm(a));
}

}  // namespace

InequalityCertificate schur_bound(const Tensor3& a, double tol, InstanceDescriptor instance) {
    require_square(a.shape(), "schur_bound");
    const TEigenSpectrum spectrum = t_eigenvalues(a);
    double sum = 0.0;
    for (const Complex& z : spectrum.values) sum += std::norm(z);
    const double f = frobenius_norm(a);
    return norm_certificate(TheoremId::schur,
                            describe(instance, a.shape(), "sum |lambda|^2 <= n3 ||A||_F^2"),
                            NormKind::frobenius, sum, static_cast<double>(a.n3()) * f * f, tol);
}

template <typename T>
std::vector<GershgorinDisc> gershgorin_discs(const BasicTensor3<T>& a) {
    require_square(a.shape(), "gershgorin_discs");
    std::vector<GershgorinDisc> discs(a.n1());
    for (std::size_t i = 0; i < a.n1(); ++i) {
        double row = 0.0;
        for (std::size_t k = 0; k < a.n3(); ++k)
            for (std::size_t j = 0; j < a.n2(); ++j) row += std::abs(a(i, j, k));
        discs[i].center = Complex(a(i, i, 0));
        discs[i].radius = std::max(0.0, row - std::abs(a(i, i, 0)));
    }
    return discs;
}

template std::vector<GershgorinDisc> gershgorin_discs(const BasicTensor3<double>&);
template std::vector<GershgorinDisc> gershgorin_discs(const BasicTensor3<Complex>&);

double gershgorin_excess(const std::vector<GershgorinDisc>& discs, const std::vector<Complex>& values) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const Complex& z : values) {
        double best = std::numeric_limits<double>::infinity();
        for (const GershgorinDisc& d : discs) best = std::min(best, outside(d, z));
        worst = std::max(worst, best);
    }
    return worst;
}

bool gershgorin_contains(const std::vector<GershgorinDisc>& discs, const TEigenSpectrum& spectrum,
                         double tol) {
    if (spectrum.values.empty()) return true;
    return gershgorin_excess(discs, spectrum.values) <= tol * containment_scale(discs);
}

std::vector<GershgorinComponent> gershgorin_component_count(const std::vector<GershgorinDisc>& discs,
                                                            const TEigenSpectrum& spectrum,
                                                            std::size_t n3, double tol) {
    const std::size_t n = discs.size();
    const double slack = tol * containment_scale(discs);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(discs[i].center - discs[j].center) <= discs[i].radius + discs[j].radius + slack) {
                parent[find(parent, i)] = find(parent, j);
            }
        }
    }

    std::vector<GershgorinComponent> components;
    std::vector<std::size_t> component_of_root(n, n);
    std::vector<std::size_t> component_of_disc(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(parent, i);
        if (component_of_root[root] == n) {
            component_of_root[root] = components.size();
            components.emplace_back();
        }
        component_of_disc[i] = component_of_root[root];
        components[component_of_disc[i]].discs.push_back(i);
        ++components[component_of_disc[i]].disc_count;
    }

    // Each value goes to the component of its nearest disc.
    for (const Complex& z : spectrum.values) {
        std::size_t best = 0;
        double best_out = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const double o = outside(discs[i], z);
            if (o < best_out) {
                best_out = o;
                best = i;
            }
        }
        if (n > 0) ++components[component_of_disc[best]].eigenvalue_count;
    }
    for (GershgorinComponent& c : components) {
        c.normalized_count = n3 > 0 ? static_cast<double>(c.eigenvalue_count) / static_cast<double>(n3) : 0.0;
        c.consistent = c.eigenvalue_count == c.disc_count * n3;
    }
    return components;
}

CertificateList check_gershgorin(const Tensor3& a, double tol, InstanceDescriptor instance) {
    require_square(a.shape(), "check_gershgorin");
    const std::vector<GershgorinDisc> discs = gershgorin_discs(a);
    const TEigenSpectrum spectrum = t_eigenvalues(a);
    const double scale = containment_scale(discs) - 1.0;

    CertificateList out;
    const double excess = gershgorin_excess(discs, spectrum.values);
    out.push_back(norm_certificate(TheoremId::gershgorin,
                                   describe(instance, a.shape(), "every t-eigenvalue lies in the union of discs"),
                                   NormKind::not_applicable, excess, 0.0, tol, scale));

    const auto components = gershgorin_component_count(discs, spectrum, a.n3(), tol);
    double inconsistent = 0.0;
    for (const GershgorinComponent& c : components) inconsistent += c.consistent ? 0.0 : 1.0;
    InstanceDescriptor counted = describe(instance, a.shape(), "k isolated discs hold k*n3 t-eigenvalues");
    counted.params["components"] = static_cast<double>(components.size());
    out.push_back(norm_certificate(TheoremId::gershgorin, std::move(counted), NormKind::not_applicable,
                                   inconsistent, 0.0, tol, 0.0));
    return out;
}

InequalityCertificate bauer_fike(const Tensor3& a, const Tensor3& b, const Tensor3& q,
                                 const Tensor3& s, double tol, InstanceDescriptor instance) {
    require_same_square(a, b, "bauer_fike");
    require_same_square(a, q, "bauer_fike");
    require_same_square(a, s, "bauer_fike");
    require(is_f_diagonal(s, kHypothesisTol * (1.0 + max_abs(s))).holds, "S is not f-diagonal");
    Tensor3 q_inv;
    try {
        q_inv = t_inverse(q);
    } catch (const SingularTensor& e) {
        throw HypothesisViolation(std::string("Q is not invertible: ") + e.what());
    }
    const double residual = frobenius_norm(a - t_product(q_inv, s, q));
    require(residual <= kFactorizationTol * (1.0 + frobenius_norm(a)),
            "A differs from Q^-1*S*Q by " + std::to_string(residual));

    const TEigenSpectrum la = t_eigenvalues(a);
    const TEigenSpectrum mb = t_eigenvalues(b);
    double worst = 0.0;
    for (const Complex& lambda : la.values) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const Complex& mu : mb.values) nearest = std::min(nearest, std::abs(lambda - mu));
        worst = std::max(worst, nearest);
    }
    const double bound = spectral_norm(q_inv) * spectral_norm(q) * spectral_norm(a - b);
    return norm_certificate(TheoremId::bauer_fike,
                            describe(instance, a.shape(), "|lambda - mu| <= ||Q^-1||_2 ||Q||_2 ||A-B||_2"),
                            NormKind::spectral, worst, bound, tol, bound + spectral_norm(a));
}

HoffmanWielandtResult hoffman_wielandt(const Tensor3& a, const Tensor3& b, double tol,
                                       InstanceDescriptor instance) {
    require_same_square(a, b, "hoffman_wielandt");
    for (const Tensor3* x : {&a, &b}) {
        const double fn = frobenius_norm(*x);
        require(is_normal(*x, kHypothesisTol * (1.0 + fn * fn)).holds, "input tensor is not normal");
    }
    const TEigenSpectrum la = t_eigenvalues(a);
    const TEigenSpectrum mb = t_eigenvalues(b);
    const SpectrumMatch match = match_spectra(la.values, mb.values);
    const double diff = frobenius_norm(b - a);
    const double n3 = static_cast<double>(a.n3());

    HoffmanWielandtResult out;
    out.matching.permutation = match.permutation;
    out.matching.matched_distance = match.l2_distance;
    out.matching.bound_sqrt = std::sqrt(n3) * diff;
    out.matching.bound_n3 = n3 * diff;

    const auto add = [&](const char* clause, double lhs, double rhs) {
        out.certificates.push_back(norm_certificate(TheoremId::hoffman_wielandt,
                                                    describe(instance, a.shape(), clause),
                                                    NormKind::frobenius, lhs, rhs, tol));
    };
    add("matched distance <= n3 ||B-A||_F", match.l2_distance, out.matching.bound_n3);
    add("matched distance <= sqrt(n3) ||B-A||_F", match.l2_distance, out.matching.bound_sqrt);

    if (nearly_symmetric(a) && nearly_symmetric(b)) {
        std::vector<double> x = real_parts(la);
        std::vector<double> y = real_parts(mb);
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        double sum = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) sum += (y[i] - x[i]) * (y[i] - x[i]);
        out.sorted_distance = std::sqrt(sum);
        add("sorted distance <= n3 ||B-A||_F", *out.sorted_distance, out.matching.bound_n3);
        add("sorted distance <= sqrt(n3) ||B-A||_F", *out.sorted_distance, out.matching.bound_sqrt);
    }
    return out;
}

CertificateList diag_spectrum_bound(const Tensor3& a, const Tensor3& b, double tol,
                                    InstanceDescriptor instance) {
    require_same_square(a, b, "diag_spectrum_bound");
    require_symmetric(a, "A");
    require_symmetric(b, "B");
    const auto by_magnitude = [](const TEigenSpectrum& s) {
        std::vector<double> v = real_parts(s);
        std::stable_sort(v.begin(), v.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
        return v;
    };
    const std::vector<double> alpha = by_magnitude(t_eigenvalues(a));
    const std::vector<double> beta = by_magnitude(t_eigenvalues(b));
    double sum = 0.0;
    double peak = 0.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        const double m2 = alpha[k] * alpha[k] + beta[k] * beta[k];
        sum += m2;
        peak = std::max(peak, std::sqrt(m2));
    }
    const ComplexTensor3 t = complexify(a, b);
    const double n3 = static_cast<double>(a.n3());
    const double tf = std::sqrt(2.0) * frobenius_norm(t);

    CertificateList out;
    out.push_back(norm_certificate(TheoremId::diag_spectrum,
                                   describe(instance, a.shape(), "(1/n3) ||diag(alpha + i beta)||_F <= sqrt2 ||T||_F"),
                                   NormKind::frobenius, std::sqrt(sum) / n3, tf, tol));
    out.push_back(norm_certificate(
        TheoremId::diag_spectrum,
        describe(instance, a.shape(), "(1/sqrt(n3)) ||diag(alpha + i beta)||_F <= sqrt2 ||T||_F"),
        NormKind::frobenius, std::sqrt(sum / n3), tf, tol));
    out.push_back(norm_certificate(TheoremId::diag_spectrum,
                                   describe(instance, a.shape(), "||diag(alpha + i beta)||_2 <= sqrt2 ||T||_2"),
                                   NormKind::spectral, peak, std::sqrt(2.0) * spectral_norm(t), tol));
    return out;
}

nlohmann::json to_json(const GershgorinDisc& d) {
    return {{"center_re", d.center.real()}, {"center_im", d.center.imag()}, {"radius", d.radius}};
}

nlohmann::json to_json(const MatchingReport& m) {
    return {{"permutation", m.permutation},
            {"matched_distance", m.matched_distance},
            {"bound_sqrt", m.bound_sqrt},
            {"bound_n3", m.bound_n3}};
}

}  // namespace ttensor
