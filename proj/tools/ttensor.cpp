// Command-line front end: tensor files, t-products, t-eigenvalues,
// Gershgorin localization and seeded theorem-verification campaigns.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttensor/algebra.hpp"
#include "ttensor/campaign.hpp"
#include "ttensor/generators.hpp"
#include "ttensor/localization.hpp"
#include "ttensor/spectral.hpp"
#include "ttensor/tensor_io.hpp"

namespace {

using namespace ttensor;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

/// Usage problems found after parsing (bad theorem id, bad mode, bad file).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string registry_text() {
    std::ostringstream out;
    out << "Theorem registry (ids for `check`):\n";
    for (TheoremId id : all_theorems()) out << "  " << to_string(id) << '\n';
    return out.str();
}

ComplexTensor3 as_complex(const AnyTensor& t) {
    if (const auto* c = std::get_if<ComplexTensor3>(&t)) return *c;
    const Tensor3& r = std::get<Tensor3>(t);
    return complexify(r, Tensor3(r.shape()));
}

Shape shape_of(const AnyTensor& t) {
    return std::visit([](const auto& x) { return x.shape(); }, t);
}

std::string format_complex(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g %c %.12gi", z.real(), z.imag() < 0 ? '-' : '+', std::abs(z.imag()));
    return buf;
}

int cmd_tprod(const std::string& file_a, const std::string& file_b, const std::string& out_path) {
    const AnyTensor a = read_tensor_file(file_a);
    const AnyTensor b = read_tensor_file(file_b);
    Shape dims;
    double norm = 0.0;
    if (std::holds_alternative<Tensor3>(a) && std::holds_alternative<Tensor3>(b)) {
        const Tensor3 c = t_product(std::get<Tensor3>(a), std::get<Tensor3>(b));
        write_tensor_file(out_path, c);
        dims = c.shape();
        norm = frobenius_norm(c);
    } else {
        const ComplexTensor3 c = t_product(as_complex(a), as_complex(b));
        write_tensor_file(out_path, c);
        dims = c.shape();
        norm = frobenius_norm(c);
    }
    std::cout << "dims " << dims.n1 << ' ' << dims.n2 << ' ' << dims.n3 << '\n';
    std::cout << "frobenius_norm " << nlohmann::json(norm).dump() << '\n';
    return kExitOk;
}

TEigenSpectrum spectrum_of(const AnyTensor& t) {
    return std::visit([](const auto& x) { return t_eigenvalues(x); }, t);
}

int cmd_eig(const std::string& file, const std::string& format) {
    const AnyTensor t = read_tensor_file(file);
    if (!shape_of(t).square()) throw DimensionMismatch("eig: tensor " + to_string(shape_of(t)) + " is not square");
    const TEigenSpectrum s = spectrum_of(t);
    std::vector<std::size_t> order(s.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const double mx = std::abs(s.values[x]);
        const double my = std::abs(s.values[y]);
        if (mx != my) return mx > my;
        return s.values[x].real() > s.values[y].real();
    });
    if (format == "json") {
        nlohmann::json values = nlohmann::json::array();
        for (std::size_t i : order) {
            values.push_back({{"re", s.values[i].real()}, {"im", s.values[i].imag()}, {"slice", s.slice_index[i]}});
        }
        const Shape d = shape_of(t);
        std::cout << nlohmann::json{{"dims", {d.n1, d.n2, d.n3}}, {"eigenvalues", values}}.dump() << '\n';
    } else {
        for (std::size_t i : order) {
            std::cout << format_complex(s.values[i]) << "  slice " << s.slice_index[i] << '\n';
        }
    }
    return kExitOk;
}

int cmd_gershgorin(const std::string& file, bool json, double tol) {
    const AnyTensor t = read_tensor_file(file);
    if (!shape_of(t).square()) {
        throw DimensionMismatch("gershgorin: tensor " + to_string(shape_of(t)) + " is not square");
    }
    const std::vector<GershgorinDisc> discs =
        std::visit([](const auto& x) { return gershgorin_discs(x); }, t);
    const TEigenSpectrum s = spectrum_of(t);
    double scale = 0.0;
    for (const GershgorinDisc& d : discs) scale = std::max(scale, std::abs(d.center) + d.radius);
    const double slack = tol * (1.0 + scale);

    bool all_inside = true;
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double excess = gershgorin_excess(discs, {s.values[i]});
        const bool inside = excess <= slack;
        all_inside = all_inside && inside;
        values.push_back({{"re", s.values[i].real()},
                          {"im", s.values[i].imag()},
                          {"slice", s.slice_index[i]},
                          {"excess", excess},
                          {"contained", inside}});
    }
    const auto components = gershgorin_component_count(discs, s, shape_of(t).n3, tol);

    if (json) {
        nlohmann::json disc_list = nlohmann::json::array();
        for (const GershgorinDisc& d : discs) disc_list.push_back(to_json(d));
        nlohmann::json comp_list = nlohmann::json::array();
        for (const GershgorinComponent& c : components) {
            comp_list.push_back({{"discs", c.discs},
                                 {"disc_count", c.disc_count},
                                 {"eigenvalue_count", c.eigenvalue_count},
                                 {"normalized_count", c.normalized_count},
                                 {"consistent", c.consistent}});
        }
        std::cout << nlohmann::json{{"discs", disc_list},
                                    {"eigenvalues", values},
                                    {"components", comp_list},
                                    {"contained", all_inside}}
                         .dump()
                  << '\n';
    } else {
        for (std::size_t i = 0; i < discs.size(); ++i) {
            std::cout << "disc " << i << ": center " << format_complex(discs[i].center) << ", radius "
                      << nlohmann::json(discs[i].radius).dump() << '\n';
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::cout << "t-eigenvalue " << format_complex(s.values[i]) << " (slice " << s.slice_index[i] << "): "
                      << (values[i]["contained"].get<bool>() ? "contained" : "OUTSIDE") << '\n';
        }
        for (const GershgorinComponent& c : components) {
            std::cout << "component of " << c.disc_count << " disc(s): " << c.eigenvalue_count
                      << " t-eigenvalues (" << c.normalized_count << " per slice)"
                      << (c.consistent ? "" : " INCONSISTENT") << '\n';
        }
        std::cout << (all_inside ? "all t-eigenvalues contained" : "some t-eigenvalue escapes the discs") << '\n';
    }
    return all_inside ? kExitOk : kExitViolation;
}

int cmd_check(const std::string& name, CampaignOptions options, const std::string& mode, bool json) {
    const std::optional<TheoremId> id = parse_theorem_id(name);
    if (!id) throw UsageError("unknown theorem id '" + name + "'\n" + registry_text());
    const std::optional<Mode> m = parse_mode(mode);
    if (!m) throw UsageError("unknown mode '" + mode + "' (corrected, literal, exploratory)");
    options.mode = *m;
    if (options.n == 0 || options.n3 == 0) throw UsageError("--n and --n3 must be positive");

    const CampaignReport report = run_campaign(*id, options);
    const CampaignSummary& s = report.summary;
    if (json) {
        for (const InequalityCertificate& c : report.certificates) std::cout << to_json(c).dump() << '\n';
        std::cout << nlohmann::json{{"summary", to_json(s, report)}}.dump() << '\n';
    } else {
        for (const InequalityCertificate& c : report.certificates) {
            if (c.holds) continue;
            std::cout << "VIOLATED trial " << c.instance.trial << " [" << to_string(c.norm_kind) << "] "
                      << c.instance.clause << ": lhs " << nlohmann::json(c.lhs).dump() << ", rhs "
                      << nlohmann::json(c.rhs).dump() << ", margin " << nlohmann::json(c.margin).dump() << '\n';
        }
        std::cout << to_string(s.theorem) << ": " << s.trials << " trials, " << s.certificates << " certificates, "
                  << s.violations << " violations, " << s.failures << " refused/failed";
        if (s.worst_ratio) std::cout << ", worst margin/tol " << nlohmann::json(*s.worst_ratio).dump();
        std::cout << '\n';
    }
    for (const TrialFailure& f : report.failures) std::cerr << "trial " << f.trial << ": " << f.what << '\n';
    if (s.violations > 0) return kExitViolation;
    if (s.failures > 0) return kExitNumerical;
    return kExitOk;
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t n3, std::uint64_t seed, const std::string& out) {
    RngStream rng(seed);
    Tensor3 t;
    if (kind == "random") {
        t = gen_random(n, n, n3, rng);
    } else if (kind == "symmetric") {
        t = gen_symmetric(n, n3, rng);
    } else if (kind == "psd") {
        t = gen_t_psd(n, n3, rng);
    } else if (kind == "orthogonal") {
        t = gen_orthogonal(n, n3, rng);
    } else if (kind == "identity") {
        t = identity(n, n3);
    } else {
        throw UsageError("unknown kind '" + kind + "' (random, symmetric, psd, orthogonal, identity)");
    }
    write_tensor_file(out, t);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor t-product algebra: spectra, localization and inequality certificates"};
    app.footer(registry_text() + "\nExit codes: 0 ok, 1 violation found, 2 usage or file error, 3 numerical failure.");
    app.require_subcommand(1);

    std::string file_a, file_b, out_path;
    auto* tprod = app.add_subcommand("tprod", "t-product of two tensor files");
    tprod->add_option("a", file_a, "left operand")->required();
    tprod->add_option("b", file_b, "right operand")->required();
    tprod->add_option("-o,--output", out_path, "output tensor file")->required();

    std::string eig_file, format = "text";
    auto* eig = app.add_subcommand("eig", "t-eigenvalues with slice provenance");
    eig->add_option("file", eig_file, "tensor file")->required();
    eig->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string theorem, mode = "corrected";
    CampaignOptions options;
    bool json = false;
    std::optional<double> exponent;
    auto* check = app.add_subcommand("check", "seeded verification campaign for one theorem");
    check->add_option("theorem", theorem, "theorem id (see registry below)")->required();
    check->add_option("--n", options.n, "tensor size n (n x n x n3)");
    check->add_option("--n3", options.n3, "number of frontal slices");
    check->add_option("--trials", options.trials, "number of trials");
    check->add_option("--seed", options.seed, "campaign seed");
    check->add_option("--tol", options.tol, "relative tolerance");
    check->add_option("--mode", mode, "corrected, literal or exploratory");
    check->add_option("--r", exponent, "fix the exponent instead of cycling through the default grid");
    check->add_option("--threads", options.threads, "worker threads (0: TTENSOR_THREADS or all cores)");
    check->add_flag("--json", json, "JSON lines output");
    check->footer(registry_text());

    std::string g_file;
    bool g_json = false;
    double g_tol = kDefaultCertTol;
    auto* gersh = app.add_subcommand("gershgorin", "Gershgorin discs and containment of the t-eigenvalues");
    gersh->add_option("file", g_file, "tensor file")->required();
    gersh->add_flag("--json", g_json, "JSON output");
    gersh->add_option("--tol", g_tol, "relative containment tolerance");

    std::string gen_kind = "random", gen_out;
    std::size_t gen_n = 3, gen_n3 = 4;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "write a generated tensor file");
    gen->add_option("kind", gen_kind, "random, symmetric, psd, orthogonal or identity");
    gen->add_option("--n", gen_n, "tensor size n");
    gen->add_option("--n3", gen_n3, "number of frontal slices");
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("-o,--output", gen_out, "output tensor file")->required();

    app.add_subcommand("list", "print the theorem registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*tprod) return cmd_tprod(file_a, file_b, out_path);
        if (*eig) return cmd_eig(eig_file, format);
        if (*check) {
            options.exponent = exponent;
            return cmd_check(theorem, options, mode, json);
        }
        if (*gersh) return cmd_gershgorin(g_file, g_json, g_tol);
        if (*gen) return cmd_gen(gen_kind, gen_n, gen_n3, gen_seed, gen_out);
        std::cout << registry_text();
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TensorFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}
