#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ttensor/certificate.hpp"
#include "ttensor/inequalities.hpp"

namespace ttensor {

struct CampaignOptions {
    std::size_t n = 3;
    std::size_t n3 = 4;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = kDefaultCertTol;
    Mode mode = Mode::corrected;
    /// Overrides the exponent sampled per trial where the theorem has one
    /// (loewner-heinz r, hansen-power r, young p, holder/minkowski p).
    std::optional<double> exponent;
    /// 0 picks TTENSOR_THREADS or the hardware concurrency.
    std::size_t threads = 0;
};

/// A trial that could not be certified (hypothesis refused, solver failure).
struct TrialFailure {
    std::uint64_t trial = 0;
    std::string what;
};

struct CampaignSummary {
    TheoremId theorem = TheoremId::loewner_heinz;
    std::size_t trials = 0;
    std::size_t certificates = 0;
    std::size_t violations = 0;
    std::size_t failures = 0;
    /// Smallest margin/tol over all certificates (negative below -1 means violated).
    std::optional<double> worst_ratio;
    /// Index into the certificate list of the worst case.
    std::optional<std::size_t> worst_index;
};

struct CampaignReport {
    std::vector<InequalityCertificate> certificates;
    std::vector<TrialFailure> failures;
    CampaignSummary summary;
};

/// Runs `trials` hypothesis-valid instances of one theorem. Trial t draws its
/// instance from RngStream(seed, t), so the report depends only on the
/// options, never on thread count or scheduling. Trials run concurrently and
/// certificates are collected in trial order.
CampaignReport run_campaign(TheoremId theorem, const CampaignOptions& options);

/// Builds and certifies the instance of a single trial.
CertificateList run_trial(TheoremId theorem, const CampaignOptions& options, std::uint64_t trial);

nlohmann::json to_json(const CampaignSummary& s, const CampaignReport& report);

/// Threads to use when a caller asks for 0: TTENSOR_THREADS if set and valid,
/// otherwise std::thread::hardware_concurrency().
std::size_t default_thread_count();

}  // namespace ttensor
