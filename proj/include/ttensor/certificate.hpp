#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ttensor/algebra.hpp"
#include "ttensor/tensor3.hpp"

namespace ttensor {

/// Registry of certified theorems; names are the stable kebab-case ids.
enum class TheoremId {
    loewner_heinz,
    hansen_power,
    furuta,
    young_commuting,
    young_witness,
    complex_norm_a,
    complex_norm_b,
    complex_norm_c,
    am_gm,
    heinz_family,
    holder,
    holder_pairs,
    holder_corollary,
    minkowski,
    schur,
    gershgorin,
    bauer_fike,
    hoffman_wielandt,
    diag_spectrum,
};

std::span<const TheoremId> all_theorems();
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

enum class NormKind { frobenius, spectral, not_applicable };

std::string_view to_string(NormKind k);

/// Evaluation mode for certifiers whose stated form is defective.
/// `corrected` is the default everywhere; `literal` evaluates the statement as
/// stated; `exploratory` lifts parameter-range hypotheses (loewner-heinz).
enum class Mode { corrected, literal, exploratory };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view name);

/// Enough to rebuild a certificate bit-identically: dims, seed, trial index,
/// the clause of the theorem being certified, and its numeric parameters.
struct InstanceDescriptor {
    Shape dims{};
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::string clause;
    std::map<std::string, double> params;
};

struct InequalityCertificate {
    TheoremId theorem = TheoremId::loewner_heinz;
    InstanceDescriptor instance;
    NormKind norm_kind = NormKind::not_applicable;
    /// Norm inequalities: the two sides of lhs <= rhs. Loewner inequalities:
    /// lhs = 0 and rhs = min eigenvalue of (larger side - smaller side).
    double lhs = 0.0;
    double rhs = 0.0;
    /// rhs - lhs.
    double margin = 0.0;
    /// Absolute tolerance; holds <=> margin >= -tol.
    double tol = 0.0;
    bool holds = false;
};

inline constexpr double kDefaultCertTol = 1e-8;

/// lhs <= rhs with tolerance tol*(1 + scale); scale defaults to |rhs|.
InequalityCertificate norm_certificate(TheoremId id, InstanceDescriptor instance, NormKind kind,
                                       double lhs, double rhs, double tol,
                                       std::optional<double> scale = std::nullopt);

/// Certificate from a Loewner verdict (margin = min gap eigenvalue).
InequalityCertificate loewner_certificate(TheoremId id, InstanceDescriptor instance,
                                          const LoewnerVerdict& verdict);

/// JSON object with exactly the fields theorem_id, seed, dims, params,
/// norm_kind, lhs, rhs, margin, tol, holds. Trial index and clause are
/// carried inside params.
nlohmann::json to_json(const InequalityCertificate& c);

}  // namespace ttensor
