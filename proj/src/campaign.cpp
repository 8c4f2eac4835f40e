#include "ttensor/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <variant>

#include "ttensor/algebra.hpp"
#include "ttensor/generators.hpp"
#include "ttensor/localization.hpp"
#include "ttensor/spectral.hpp"

namespace ttensor {

namespace {

constexpr std::array kLoewnerHeinzR{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
constexpr std::array kHansenR{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
constexpr std::array kYoungCommutingP{1.5, 2.0, 4.0};
constexpr std::array kYoungWitnessP{1.5, 2.0, 3.0};
constexpr std::array kHeinzR{0.5, 0.75, 1.0, 1.25, 1.5};
constexpr std::array kHeinzT{-1.0, 0.0, 1.0, 2.0};
constexpr std::array kHolderR{0.5, 1.0, 2.0};
constexpr std::array kHolderP{1.25, 2.0, 5.0};
constexpr std::array kMinkowskiP{1.0, 1.5, 2.0, 3.0};
constexpr std::array kBauerFikeEps{1e-3, 1e-2, 1e-1};

template <typename Array>
double cycle(const Array& values, std::uint64_t index) {
    return values[static_cast<std::size_t>(index % values.size())];
}

double conjugate_of(double p) { return p / (p - 1.0); }

/// The pair of the worked counterexample to Loewner-Heinz beyond r = 1.
std::pair<Tensor3, Tensor3> worked_example_pair() {
    Tensor3 a(2, 2, 2);
    Tensor3 b(2, 2, 2);
    a(0, 0, 0) = 2.0;
    a(0, 1, 0) = 1.0;
    a(1, 0, 0) = 1.0;
    a(1, 1, 0) = 1.0;
    b(0, 0, 0) = 1.0;
    return {a, b};
}

/// Normal tensor Q^T*S*Q with Q orthogonal and S f-diagonal.
Tensor3 gen_normal(std::size_t n, std::size_t n3, RngStream& rng) {
    const Tensor3 q = gen_orthogonal(n, n3, rng);
    const Tensor3 s = gen_f_diagonal(n, n3, rng);
    return t_product(transpose(q), s, q);
}

CertificateList single(InequalityCertificate c) { return CertificateList{std::move(c)}; }

}  // namespace

CertificateList run_trial(TheoremId theorem, const CampaignOptions& o, std::uint64_t trial) {
    RngStream rng(o.seed, trial);
    const std::size_t n = o.n;
    const std::size_t n3 = o.n3;
    const double tol = o.tol;
    InstanceDescriptor inst;
    inst.seed = o.seed;
    inst.trial = trial;

    switch (theorem) {
        case TheoremId::loewner_heinz: {
            if (o.mode == Mode::exploratory && trial == 0) {
                const auto [a, b] = worked_example_pair();
                return single(check_loewner_heinz(a, b, o.exponent.value_or(2.0), tol, inst, o.mode));
            }
            const auto [a, b] = gen_loewner_pair(n, n3, rng);
            const double r = o.exponent.value_or(o.mode == Mode::exploratory ? 2.0 : cycle(kLoewnerHeinzR, trial));
            return single(check_loewner_heinz(a, b, r, tol, inst, o.mode));
        }
        case TheoremId::hansen_power: {
            const double r = o.exponent.value_or(cycle(kHansenR, trial));
            const Tensor3 x = gen_t_psd(n, n3, rng);
            Tensor3 q;
            if (o.mode == Mode::literal) {
                q = gen_orthogonal(n, n3, rng);
            } else {
                q = gen_random(n, n, n3, rng);
                const double u = rng.uniform(0.0, 1.0);
                q *= 1.0 / (spectral_norm(q) * (1.0 + u));
            }
            return single(check_hansen_power(q, x, r, tol, inst, o.mode));
        }
        case TheoremId::furuta: {
            const auto [a, b] = gen_loewner_pair(n, n3, rng);
            double r = 0.0, p = 0.0, q = 1.0;
            do {
                r = rng.uniform(0.0, 2.0);
                p = rng.uniform(0.0, 4.0);
                q = rng.uniform(1.0, 4.0);
            } while ((1.0 + 2.0 * r) * q < p + 2.0 * r);
            return check_furuta(a, b, r, p, q, tol, inst);
        }
        case TheoremId::young_commuting: {
            const auto [a, b] = gen_commuting_psd_pair(n, n3, rng);
            const double p = o.exponent.value_or(cycle(kYoungCommutingP, trial));
            return single(check_young_commuting(a, b, p, conjugate_of(p), tol, inst));
        }
        case TheoremId::young_witness: {
            const Tensor3 a = gen_random(n, n, n3, rng);
            const Tensor3 b = gen_random(n, n, n3, rng);
            const double p = o.exponent.value_or(cycle(kYoungWitnessP, trial));
            return single(check_young_witness(a, b, p, conjugate_of(p), tol, inst));
        }
        case TheoremId::complex_norm_a: {
            const Tensor3 a = gen_symmetric(n, n3, rng);
            const Tensor3 b = gen_symmetric(n, n3, rng);
            return check_complex_norm_bounds(a, b, ComplexNormVariant::a, tol, inst, o.mode);
        }
        case TheoremId::complex_norm_b: {
            if (o.mode == Mode::literal && trial == 0) {
                const Tensor3 id = identity(n, n3);
                return check_complex_norm_bounds(id, id, ComplexNormVariant::b, tol, inst, o.mode);
            }
            const Tensor3 a = gen_t_psd(n, n3, rng);
            const Tensor3 b = gen_symmetric(n, n3, rng);
            return check_complex_norm_bounds(a, b, ComplexNormVariant::b, tol, inst, o.mode);
        }
        case TheoremId::complex_norm_c: {
            const Tensor3 a = gen_t_psd(n, n3, rng);
            const Tensor3 b = gen_t_psd(n, n3, rng);
            return check_complex_norm_bounds(a, b, ComplexNormVariant::c, tol, inst, o.mode);
        }
        case TheoremId::am_gm: {
            if (o.mode == Mode::literal && trial == 0) {
                const Tensor3 id = identity(n, n3);
                return check_am_gm(2.0 * id, id, id, tol, inst, o.mode);
            }
            const Tensor3 a = gen_random(n, n, n3, rng);
            const Tensor3 x = gen_random(n, n, n3, rng);
            const Tensor3 b = gen_random(n, n, n3, rng);
            return check_am_gm(a, x, b, tol, inst, o.mode);
        }
        case TheoremId::heinz_family: {
            const Tensor3 a = gen_t_psd(n, n3, rng);
            const Tensor3 x = gen_random(n, n, n3, rng);
            const Tensor3 b = gen_t_psd(n, n3, rng);
            const double r = o.exponent.value_or(cycle(kHeinzR, trial));
            const double t = cycle(kHeinzT, trial / kHeinzR.size());
            return check_heinz_family(a, x, b, r, t, tol, inst);
        }
        case TheoremId::holder: {
            const Tensor3 a = gen_t_psd(n, n3, rng);
            const Tensor3 x = gen_random(n, n, n3, rng);
            const Tensor3 b = gen_t_psd(n, n3, rng);
            const double r = cycle(kHolderR, trial);
            const double p = o.exponent.value_or(cycle(kHolderP, trial / kHolderR.size()));
            return check_holder(a, x, b, r, p, conjugate_of(p), tol, inst, o.mode);
        }
        case TheoremId::holder_pairs: {
            const Tensor3 a = gen_random(n, n, n3, rng);
            const Tensor3 b = gen_random(n, n, n3, rng);
            const Tensor3 c = gen_random(n, n, n3, rng);
            const Tensor3 d = gen_random(n, n, n3, rng);
            const double p = o.exponent.value_or(cycle(kHolderP, trial));
            return check_holder_pairs(a, b, c, d, p, conjugate_of(p), tol, inst);
        }
        case TheoremId::holder_corollary: {
            const Tensor3 a = gen_random(n, n, n3, rng);
            const Tensor3 b = gen_random(n, n, n3, rng);
            const double r = cycle(kHolderR, trial);
            const double p = o.exponent.value_or(cycle(kHolderP, trial / kHolderR.size()));
            return check_holder_corollary(a, b, r, p, conjugate_of(p), tol, inst);
        }
        case TheoremId::minkowski: {
            const Tensor3 a1 = gen_random(n, n, n3, rng);
            const Tensor3 a2 = gen_random(n, n, n3, rng);
            const Tensor3 b1 = gen_random(n, n, n3, rng);
            const Tensor3 b2 = gen_random(n, n, n3, rng);
            const double p = o.exponent.value_or(cycle(kMinkowskiP, trial));
            return check_minkowski(a1, a2, b1, b2, p, tol, inst);
        }
        case TheoremId::schur: {
            const Tensor3 a = trial % 2 == 0 ? gen_random(n, n, n3, rng) : gen_symmetric(n, n3, rng);
            return single(schur_bound(a, tol, inst));
        }
        case TheoremId::gershgorin: {
            Tensor3 a = gen_random(n, n, n3, rng);
            if (trial % 2 == 1) {
                // Spread the centers so that several disc components appear.
                const double spacing = 2.5 * static_cast<double>(n * n3);
                for (std::size_t i = 0; i < n; ++i) a(i, i, 0) += spacing * static_cast<double>(i);
            }
            return check_gershgorin(a, tol, inst);
        }
        case TheoremId::bauer_fike: {
            const Tensor3 q = gen_random(n, n, n3, rng) + 2.0 * identity(n, n3);
            const Tensor3 s = gen_f_diagonal(n, n3, rng);
            const Tensor3 a = t_product(t_inverse(q), s, q);
            const double eps = cycle(kBauerFikeEps, trial);
            InstanceDescriptor withp = inst;
            withp.params["epsilon"] = eps;
            const Tensor3 b = a + eps * gen_random(n, n, n3, rng);
            return single(bauer_fike(a, b, q, s, tol, withp));
        }
        case TheoremId::hoffman_wielandt: {
            Tensor3 a, b;
            if (trial % 2 == 0) {
                a = gen_symmetric(n, n3, rng);
                b = gen_symmetric(n, n3, rng);
            } else {
                a = gen_normal(n, n3, rng);
                b = gen_normal(n, n3, rng);
            }
            return hoffman_wielandt(a, b, tol, inst).certificates;
        }
        case TheoremId::diag_spectrum: {
            const Tensor3 a = gen_symmetric(n, n3, rng);
            const Tensor3 b = gen_symmetric(n, n3, rng);
            return diag_spectrum_bound(a, b, tol, inst);
        }
    }
    throw std::invalid_argument("unknown theorem");
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("TTENSOR_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CampaignReport run_campaign(TheoremId theorem, const CampaignOptions& options) {
    using Outcome = std::variant<CertificateList, TrialFailure>;
    std::vector<Outcome> outcomes(options.trials);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t t = next++; t < options.trials; t = next++) {
            try {
                outcomes[t] = run_trial(theorem, options, t);
            } catch (const std::exception& e) {
                outcomes[t] = TrialFailure{t, e.what()};
            }
        }
    };
    const std::size_t threads =
        std::min(options.threads > 0 ? options.threads : default_thread_count(), std::max<std::size_t>(1, options.trials));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    CampaignReport report;
    report.summary.theorem = theorem;
    report.summary.trials = options.trials;
    for (Outcome& outcome : outcomes) {
        if (auto* certs = std::get_if<CertificateList>(&outcome)) {
            for (InequalityCertificate& c : *certs) report.certificates.push_back(std::move(c));
        } else {
            report.failures.push_back(std::get<TrialFailure>(outcome));
        }
    }
    CampaignSummary& s = report.summary;
    s.certificates = report.certificates.size();
    s.failures = report.failures.size();
    for (std::size_t i = 0; i < report.certificates.size(); ++i) {
        const InequalityCertificate& c = report.certificates[i];
        if (!c.holds) ++s.violations;
        const double ratio = c.tol > 0.0 ? c.margin / c.tol : (c.margin >= 0.0 ? 0.0 : -1.0);
        if (!s.worst_ratio || ratio < *s.worst_ratio) {
            s.worst_ratio = ratio;
            s.worst_index = i;
        }
    }
    return report;
}

nlohmann::json to_json(const CampaignSummary& s, const CampaignReport& report) {
    nlohmann::json j;
    j["theorem_id"] = std::string(to_string(s.theorem));
    j["trials"] = s.trials;
    j["certificates"] = s.certificates;
    j["violations"] = s.violations;
    j["failures"] = s.failures;
    j["worst_ratio"] = s.worst_ratio ? nlohmann::json(*s.worst_ratio) : nlohmann::json(nullptr);
    j["worst_case"] = s.worst_index ? to_json(report.certificates[*s.worst_index]) : nlohmann::json(nullptr);
    nlohmann::json failures = nlohmann::json::array();
    for (const TrialFailure& f : report.failures) failures.push_back({{"trial", f.trial}, {"what", f.what}});
    j["failure_list"] = std::move(failures);
    return j;
}

}  // namespace ttensor
