#include "ttensor/certificate.hpp"

#include <array>
#include <cmath>

namespace ttensor {

namespace {

constexpr std::array kTheorems{
    TheoremId::loewner_heinz,   TheoremId::hansen_power,     TheoremId::furuta,
    TheoremId::young_commuting, TheoremId::young_witness,    TheoremId::complex_norm_a,
    TheoremId::complex_norm_b,  TheoremId::complex_norm_c,   TheoremId::am_gm,
    TheoremId::heinz_family,    TheoremId::holder,           TheoremId::holder_pairs,
    TheoremId::holder_corollary, TheoremId::minkowski,       TheoremId::schur,
    TheoremId::gershgorin,      TheoremId::bauer_fike,       TheoremId::hoffman_wielandt,
    TheoremId::diag_spectrum,
};

}  // namespace

std::span<const TheoremId> all_theorems() { return kTheorems; }

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::loewner_heinz: return "loewner-heinz";
        case TheoremId::hansen_power: return "hansen-power";
        case TheoremId::furuta: return "furuta";
        case TheoremId::young_commuting: return "young-commuting";
        case TheoremId::young_witness: return "young-witness";
        case TheoremId::complex_norm_a: return "complex-norm-a";
        case TheoremId::complex_norm_b: return "complex-norm-b";
        case TheoremId::complex_norm_c: return "complex-norm-c";
        case TheoremId::am_gm: return "am-gm";
        case TheoremId::heinz_family: return "heinz-family";
        case TheoremId::holder: return "holder";
        case TheoremId::holder_pairs: return "holder-pairs";
        case TheoremId::holder_corollary: return "holder-corollary";
        case TheoremId::minkowski: return "minkowski";
        case TheoremId::schur: return "schur";
        case TheoremId::gershgorin: return "gershgorin";
        case TheoremId::bauer_fike: return "bauer-fike";
        case TheoremId::hoffman_wielandt: return "hoffman-wielandt";
        case TheoremId::diag_spectrum: return "diag-spectrum";
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (TheoremId id : kTheorems) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

std::string_view to_string(NormKind k) {
    switch (k) {
        case NormKind::frobenius: return "frobenius";
        case NormKind::spectral: return "spectral";
        case NormKind::not_applicable: return "n/a";
    }
    return "n/a";
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::corrected: return "corrected";
        case Mode::literal: return "literal";
        case Mode::exploratory: return "exploratory";
    }
    return "corrected";
}

std::optional<Mode> parse_mode(std::string_view name) {
    for (Mode m : {Mode::corrected, Mode::literal, Mode::exploratory}) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

InequalityCertificate norm_certificate(TheoremId id, InstanceDescriptor instance, NormKind kind,
                                       double lhs, double rhs, double tol,
                                       std::optional<double> scale) {
    InequalityCertificate c;
    c.theorem = id;
    c.instance = std::move(instance);
    c.norm_kind = kind;
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = rhs - lhs;
    c.tol = tol * (1.0 + scale.value_or(std::abs(rhs)));
    c.holds = c.margin >= -c.tol;
    return c;
}

InequalityCertificate loewner_certificate(TheoremId id, InstanceDescriptor instance,
                                          const LoewnerVerdict& verdict) {
    InequalityCertificate c;
    c.theorem = id;
    c.instance = std::move(instance);
    c.norm_kind = NormKind::not_applicable;
    c.lhs = 0.0;
    c.rhs = verdict.min_gap;
    c.margin = verdict.min_gap;
    c.tol = verdict.tolerance_used;
    c.holds = verdict.holds;
    return c;
}

nlohmann::json to_json(const InequalityCertificate& c) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : c.instance.params) params[key] = value;
    params["trial"] = c.instance.trial;
    params["clause"] = c.instance.clause;

    nlohmann::json j;
    j["theorem_id"] = std::string(to_string(c.theorem));
    j["seed"] = c.instance.seed;
    j["dims"] = {c.instance.dims.n1, c.instance.dims.n2, c.instance.dims.n3};
    j["params"] = std::move(params);
    j["norm_kind"] = std::string(to_string(c.norm_kind));
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["margin"] = c.margin;
    j["tol"] = c.tol;
    j["holds"] = c.holds;
    return j;
}

}  // namespace ttensor
