#include "ttensor/eigen_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ttensor {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiTol = 1e-13;
constexpr double kHermitianInputTol = 1e-9;
constexpr double kDeflationTol = 1e-13;

void require_square(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch(std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
    }
}

double max_off_diagonal(const ComplexMatrix& a) {
    double off = 0.0;
    for (Eigen::Index q = 1; q < a.cols(); ++q)
        for (Eigen::Index p = 0; p < q; ++p) off = std::max(off, std::abs(a(p, q)));
    return off;
}

HermitianEigen jacobi(const ComplexMatrix& input, bool with_vectors) {
    require_square(input, "hermitian_eig");
    const Eigen::Index n = input.rows();
    const double norm = input.norm();
    const double skew = (input - input.adjoint()).norm();
    if (skew > kHermitianInputTol * (1.0 + norm)) {
        throw NotSymmetric("hermitian_eig: ||M - M^H||_F = " + std::to_string(skew));
    }

    ComplexMatrix a = 0.5 * (input + input.adjoint());
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix v;
    if (with_vectors) v = ComplexMatrix::Identity(n, n);

    const double threshold = kJacobiTol * norm;
    bool converged = false;
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        if (max_off_diagonal(a) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == kMaxSweeps) break;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                // Phase first (a_pq -> |a_pq|), then a real rotation; J = diag(1, conj(e)) R.
                const Complex e = apq / mag;
                const Complex ec = std::conj(e);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * ec * akq;
                    a(k, q) = s * akp + c * ec * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * e * aqk;
                    a(q, k) = s * apk + c * e * aqk;
                }
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                if (with_vectors) {
                    for (Eigen::Index k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = c * vkp - s * ec * vkq;
                        v(k, q) = s * vkp + c * ec * vkq;
                    }
                }
            }
        }
    }
    if (!converged) {
        throw ConvergenceFailure("hermitian_eig: no convergence after " +
                                 std::to_string(kMaxSweeps) + " sweeps, off-diagonal " +
                                 std::to_string(max_off_diagonal(a)));
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        return a(x, x).real() < a(y, y).real();
    });

    HermitianEigen out;
    out.values.resize(n);
    if (with_vectors) out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = a(order[k], order[k]).real();
        if (with_vectors) out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

/// Eigenvalues of [[a, b], [c, d]].
std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
    const Complex half_trace = 0.5 * (a + d);
    const Complex half_diff = 0.5 * (a - d);
    const Complex root = std::sqrt(half_diff * half_diff + b * c);
    Complex big = half_trace + root;
    if (std::abs(half_trace - root) > std::abs(big)) big = half_trace - root;
    if (big == Complex(0.0)) return {0.0, 0.0};
    // The smaller one from the determinant avoids cancellation.
    return {big, (a * d - b * c) / big};
}

/// One explicitly shifted QR step on the active window [lo, hi] of h.
void qr_step(ComplexMatrix& h, Eigen::Index lo, Eigen::Index hi, Complex mu) {
    const Eigen::Index m = hi - lo;
    std::vector<Complex> cs(static_cast<std::size_t>(m));
    std::vector<Complex> ss(static_cast<std::size_t>(m));
    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) -= mu;

    for (Eigen::Index k = lo; k < hi; ++k) {
        const Complex x = h(k, k);
        const Complex y = h(k + 1, k);
        const double r = std::hypot(std::abs(x), std::abs(y));
        Complex c = 1.0;
        Complex s = 0.0;
        if (r != 0.0) {
            c = x / r;
            s = y / r;
        }
        cs[static_cast<std::size_t>(k - lo)] = c;
        ss[static_cast<std::size_t>(k - lo)] = s;
        // G = [[conj c, conj s], [-s, c]] applied from the left.
        for (Eigen::Index j = k; j <= hi; ++j) {
            const Complex u = h(k, j);
            const Complex w = h(k + 1, j);
            h(k, j) = std::conj(c) * u + std::conj(s) * w;
            h(k + 1, j) = -s * u + c * w;
        }
        h(k + 1, k) = 0.0;
    }
    for (Eigen::Index k = lo; k < hi; ++k) {
        const Complex c = cs[static_cast<std::size_t>(k - lo)];
        const Complex s = ss[static_cast<std::size_t>(k - lo)];
        const Eigen::Index last = std::min(k + 1, hi);
        // G^H = [[c, -conj s], [s, conj c]] applied from the right.
        for (Eigen::Index i = lo; i <= last; ++i) {
            const Complex u = h(i, k);
            const Complex w = h(i, k + 1);
            h(i, k) = u * c + w * s;
            h(i, k + 1) = -u * std::conj(s) + w * std::conj(c);
        }
    }
    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) += mu;
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& m) { return jacobi(m, true); }

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) { return jacobi(m, false).values; }

ComplexMatrix hessenberg(const ComplexMatrix& m) {
    require_square(m, "hessenberg");
    const Eigen::Index n = m.rows();
    ComplexMatrix h = m;
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index len = n - k - 1;
        Eigen::VectorXcd v = h.block(k + 1, k, len, 1);
        const double xnorm = v.norm();
        if (xnorm == 0.0) continue;
        const Complex x0 = v(0);
        const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
        v(0) += phase * xnorm;
        const double vnorm = v.norm();
        if (vnorm == 0.0) continue;
        v /= vnorm;
        // Reflector I - 2 v v^H from both sides.
        const Eigen::RowVectorXcd left = v.adjoint() * h.block(k + 1, 0, len, n);
        h.block(k + 1, 0, len, n) -= 2.0 * v * left;
        const Eigen::VectorXcd right = h.block(0, k + 1, n, len) * v;
        h.block(0, k + 1, n, len) -= 2.0 * right * v.adjoint();
        h(k + 1, k) = -phase * xnorm;
        for (Eigen::Index i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
    return h;
}

std::vector<Complex> general_eig(const ComplexMatrix& m) {
    require_square(m, "general_eig");
    const Eigen::Index n = m.rows();
    std::vector<Complex> eig(static_cast<std::size_t>(n));
    if (n == 0) return eig;

    ComplexMatrix h = hessenberg(m);
    const double threshold = kDeflationTol * h.norm();
    const long max_iter = 30L * n;

    Eigen::Index hi = n - 1;
    long iter = 0;
    while (hi >= 0) {
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        Eigen::Index lo = hi;
        while (lo > 0 && std::abs(h(lo, lo - 1)) > threshold) --lo;
        if (lo > 0) h(lo, lo - 1) = 0.0;

        if (lo == hi) {
            eig[static_cast<std::size_t>(hi)] = h(hi, hi);
            --hi;
            iter = 0;
            continue;
        }
        if (lo == hi - 1) {
            const auto [e1, e2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
            eig[static_cast<std::size_t>(lo)] = e1;
            eig[static_cast<std::size_t>(hi)] = e2;
            hi -= 2;
            iter = 0;
            continue;
        }
        if (++iter > max_iter) {
            throw ConvergenceFailure("general_eig: no convergence after " +
                                     std::to_string(max_iter) + " iterations at index " +
                                     std::to_string(hi));
        }

        Complex mu;
        if (iter % 10 == 0) {
            // Exceptional shift breaks cycles such as those of unitary Hessenberg matrices.
            const double angle = static_cast<double>(iter);
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1)) * Complex(std::cos(angle), std::sin(angle));
        } else {
            const auto [e1, e2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = std::abs(e1 - h(hi, hi)) <= std::abs(e2 - h(hi, hi)) ? e1 : e2;
        }
        qr_step(h, lo, hi, mu);
    }
    return eig;
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
    if (m.size() == 0) return {};
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

}  // namespace ttensor
