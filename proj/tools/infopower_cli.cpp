// Command-line frontend: validate measurement documents, compute
// informational power, sweep measurement families, check duality identities
// and additivity at small dimension.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "infopower/infopower.hpp"

namespace {

using namespace infopower;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNoConvergence = 2;

struct CommonOptions {
    std::uint64_t seed = 0;
    int restarts = 24;
    double alpha0 = 0.2;
    double tol = kDefaultTol;
    int max_iters = 5000;
    std::optional<std::size_t> ensemble_size;
    bool real_hint = false;
    bool force_general = false;
    std::string output;
    std::string format = "json";
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--seed", opt.seed, "RNG seed (all commands are deterministic given this)");
    cmd->add_option("--restarts", opt.restarts, "independent optimizer restarts")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--alpha0", opt.alpha0, "initial ascent step size in (0,1]");
    cmd->add_option("--tol", opt.tol, "validation tolerance");
    cmd->add_option("--max-iters", opt.max_iters, "iteration cap per restart")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--ensemble-size", opt.ensemble_size, "override the start ensemble size");
    cmd->add_flag("--real", opt.real_hint,
                  "the POVM is real in some basis; start from D(D+1)/2 states");
    cmd->add_flag("--force-general", opt.force_general,
                  "use the gradient optimizer even for commuting POVMs");
    cmd->add_option("--output", opt.output, "write the result to this path instead of stdout");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

OptimizerConfig optimizer_config(const CommonOptions& opt) {
    OptimizerConfig cfg;
    cfg.seed = opt.seed;
    cfg.restarts = opt.restarts;
    cfg.alpha0 = opt.alpha0;
    cfg.max_iters = opt.max_iters;
    cfg.ensemble_size_override = opt.ensemble_size;
    cfg.real_hint = opt.real_hint;
    return cfg;
}

struct FamilyFlags {
    Eigen::Index dim = 2;
    double eta = 0.5;
    int n = 3;
    double theta = 0.5;
    bool eta_set = false, n_set = false, theta_set = false;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& fam) {
    cmd->add_option("--d", fam.dim, "dimension for projective families");
    cmd->add_option("--eta", fam.eta, "noise parameter for noisy-projective")
        ->each([&fam](const std::string&) { fam.eta_set = true; });
    cmd->add_option("--n", fam.n, "outcome count for the zn family")
        ->each([&fam](const std::string&) { fam.n_set = true; });
    cmd->add_option("--theta", fam.theta, "angle for the mirror-y family")
        ->each([&fam](const std::string&) { fam.theta_set = true; });
}

bool is_catalog_name(const std::string& source) {
    return source == "projective" || source == "noisy-projective" || source == "zn" ||
           source == "trine" || source == "mirror-y" || source == "sic2";
}

CatalogEntry resolve_catalog(const std::string& name, const FamilyFlags& fam) {
    if (name == "projective") return projective_povm(fam.dim);
    if (name == "noisy-projective") {
        if (!fam.eta_set) throw InvalidArguments("noisy-projective needs --eta");
        return noisy_projective_povm(fam.dim, fam.eta);
    }
    if (name == "zn") {
        if (!fam.n_set) throw InvalidArguments("zn needs --n");
        return zn_symmetric_povm(fam.n);
    }
    if (name == "trine") return zn_symmetric_povm(3);
    if (name == "mirror-y") {
        if (!fam.theta_set) throw InvalidArguments("mirror-y needs --theta");
        return mirror_y_povm(fam.theta);
    }
    if (name == "sic2") return sic_qubit();
    throw InvalidArguments("unknown catalog family " + name);
}

/// Catalog names take precedence; anything else is read as a document path.
std::pair<Povm, std::string> resolve_povm(const std::string& source, const FamilyFlags& fam) {
    if (is_catalog_name(source)) {
        CatalogEntry entry = resolve_catalog(source, fam);
        return {std::move(entry.povm), source};
    }
    return {read_povm_document(source), std::filesystem::path(source).filename().string()};
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw Error("cannot write " + opt.output);
    out << text;
}

struct PowerResult {
    double power_bits = 0.0;
    std::string method;
    int iterations = 0;
    double residual = 0.0;
    double corollary = 0.0;
    bool converged = true;
    std::optional<PureEnsemble> ensemble;
    std::optional<double> crosscheck_bits;
};

PowerResult compute_power(const Povm& povm, const CommonOptions& opt) {
    PowerResult result;
    const auto basis = common_eigenbasis(povm, opt.tol);
    if (basis && !opt.force_general) {
        CommutingPower cp = commuting_power(povm, opt.tol);
        result.power_bits = cp.power_bits;
        result.method = "commuting";
        result.iterations = cp.iterations;
        result.residual = stationarity_residual(cp.ensemble, povm);
        result.corollary = corollary_gap(cp.ensemble, povm);
        result.ensemble = std::move(cp.ensemble);
        return result;
    }
    OptimizationReport report = maximize_informational_power(povm, optimizer_config(opt));
    result.power_bits = report.power_bits;
    result.method = "gradient-ascent";
    result.iterations = report.iterations_used;
    result.residual = report.stationarity_residual;
    result.corollary = report.corollary_gap_bits;
    result.converged = report.converged;
    result.ensemble = std::move(report.ensemble);
    if (basis) result.crosscheck_bits = commuting_power(povm, opt.tol).power_bits;
    return result;
}

std::string power_json(const std::string& label, const Povm& povm, const PowerResult& r) {
    std::string ensemble_json;
    {
        std::istringstream lines(ensemble_to_json(*r.ensemble));
        std::string line;
        bool first = true;
        while (std::getline(lines, line)) {
            if (!first) ensemble_json += "\n  ";
            ensemble_json += line;
            first = false;
        }
    }
    std::string out = "{\n";
    out += "  \"source\": \"" + label + "\",\n";
    out += "  \"dim\": " + std::to_string(povm.dim()) + ",\n";
    out += "  \"outcomes\": " + std::to_string(povm.size()) + ",\n";
    out += "  \"power_bits\": " + format_double(r.power_bits) + ",\n";
    out += "  \"method\": \"" + r.method + "\",\n";
    out += "  \"iterations\": " + std::to_string(r.iterations) + ",\n";
    out += "  \"stationarity_residual\": " + format_double(r.residual) + ",\n";
    out += "  \"corollary_gap\": " + format_double(r.corollary) + ",\n";
    out += "  \"converged\": " + std::string(r.converged ? "true" : "false") + ",\n";
    if (r.crosscheck_bits)
        out += "  \"commuting_crosscheck_bits\": " + format_double(*r.crosscheck_bits) + ",\n";
    out += "  \"ensemble\": " + ensemble_json + "\n}\n";
    return out;
}

int cmd_validate(const std::string& source) {
    const Povm povm = read_povm_document(source);
    std::cout << "dim: " << povm.dim() << "\n"
              << "outcomes: " << povm.size() << "\n"
              << "completeness_deviation: " << format_double(completeness_deviation(povm.elements()))
              << "\n"
              << "min_eigenvalues:";
    for (std::size_t j = 0; j < povm.size(); ++j)
        std::cout << ' ' << format_double(min_eigenvalue(povm.element(j)));
    std::cout << "\nvalid: true\n";
    return kExitOk;
}

int cmd_power(const std::string& source, const CommonOptions& opt, const FamilyFlags& fam) {
    auto [povm, label] = resolve_povm(source, fam);
    const PowerResult result = compute_power(povm, opt);
    if (opt.format == "csv") {
        std::string csv = "source,power_bits,method,iterations,residual\n";
        csv += label + ',' + format_double(result.power_bits) + ',' + result.method + ',' +
               std::to_string(result.iterations) + ',' + format_double(result.residual) + '\n';
        emit(opt, csv);
    } else {
        emit(opt, power_json(label, povm, result));
    }
    return result.converged ? kExitOk : kExitNoConvergence;
}

struct SweepSpec {
    std::string family;
    std::string parameter;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

void check_sweep(const SweepSpec& spec, const FamilyFlags& fam) {
    if (spec.count < 2) throw InvalidSpec("sweep needs at least two grid points");
    if (spec.family == "noisy-projective") {
        if (spec.parameter != "eta") throw InvalidSpec("noisy-projective sweeps over 'eta'");
        if (spec.start < 0.0 || spec.stop > 1.0) throw InvalidSpec("eta range is [0, 1]");
        if (fam.dim < 2) throw InvalidSpec("dimension must be at least 2");
    } else if (spec.family == "mirror-y") {
        if (spec.parameter != "theta") throw InvalidSpec("mirror-y sweeps over 'theta'");
        if (!(spec.start > 0.0) || spec.stop > std::numbers::pi / 4 + 1e-12)
            throw InvalidSpec("theta range is (0, pi/4]");
    } else if (spec.family == "zn") {
        if (spec.parameter != "n") throw InvalidSpec("zn sweeps over 'n'");
        if (spec.start < 2) throw InvalidSpec("zn needs n >= 2");
    } else {
        throw InvalidSpec("unknown sweep family " + spec.family);
    }
    if (spec.stop < spec.start) throw InvalidSpec("empty sweep range");
}

int cmd_sweep(const SweepSpec& spec, const CommonOptions& opt, const FamilyFlags& fam) {
    check_sweep(spec, fam);
    std::string csv = "param,power_bits,method,iterations,residual\n";
    for (int k = 0; k < spec.count; ++k) {
        double value =
            spec.start + (spec.stop - spec.start) * k / static_cast<double>(spec.count - 1);
        CatalogEntry entry = [&] {
            if (spec.family == "noisy-projective") return noisy_projective_povm(fam.dim, value);
            if (spec.family == "mirror-y") return mirror_y_povm(value);
            value = std::round(value);
            return zn_symmetric_povm(static_cast<int>(value));
        }();
        CommonOptions point = opt;
        point.seed = derive_stream(opt.seed, static_cast<std::uint64_t>(k));
        const PowerResult result = compute_power(entry.povm, point);
        csv += format_double(value) + ',' + format_double(result.power_bits) + ',' +
               result.method + ',' + std::to_string(result.iterations) + ',' +
               format_double(result.residual) + '\n';
    }
    emit(opt, csv);
    return kExitOk;
}

int cmd_dualcheck(const std::string& source, const std::string& sigma_path,
                  const CommonOptions& opt, const FamilyFlags& fam) {
    auto [lambda, label] = resolve_povm(source, fam);
    const DensityMatrix sigma = sigma_path.empty() ? DensityMatrix::maximally_mixed(lambda.dim())
                                                   : read_state_document(sigma_path);
    const DualEnsemble dual = dual_ensemble(lambda, sigma, opt.tol);
    const Ensemble& s = dual.ensemble;

    const double gap = duality_gap(s, lambda);

    // Round trip 1: the measurement induced by the dual ensemble is Λ again.
    const Povm induced = pretty_good_measurement(s);
    double round_trip_1 = 0.0;
    std::size_t kept = 0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (std::find(dual.dropped_outcomes.begin(), dual.dropped_outcomes.end(), j) !=
            dual.dropped_outcomes.end())
            continue;
        round_trip_1 =
            std::max(round_trip_1, max_abs(induced.element(kept) - lambda.element(j)));
        ++kept;
    }

    // Round trip 2: the dual of the induced measurement at σ_S is S again.
    const DensityMatrix average = s.average();
    const DualEnsemble back = dual_ensemble(induced, average, opt.tol);
    double round_trip_2 = 0.0;
    for (std::size_t i = 0; i < s.size() && i < back.ensemble.size(); ++i) {
        round_trip_2 = std::max(round_trip_2,
                                std::abs(back.ensemble.prior(i) - s.prior(i)));
        round_trip_2 = std::max(
            round_trip_2, max_abs(back.ensemble.state(i).matrix() - s.state(i).matrix()));
    }

    std::ostringstream out;
    out << "source: " << label << "\n"
        << "duality_gap: " << format_double(gap) << "\n"
        << "round_trip_povm: " << format_double(round_trip_1) << "\n"
        << "round_trip_ensemble: " << format_double(round_trip_2) << "\n"
        << "dropped_outcomes: " << dual.dropped_outcomes.size() << "\n";
    emit(opt, out.str());
    const bool pass = gap < 1e-8 && round_trip_1 < 1e-8 && round_trip_2 < 1e-8;
    return pass ? kExitOk : kExitInvalid;
}

int cmd_additivity(const std::string& source, int copies, Eigen::Index dim_limit,
                   const CommonOptions& opt, const FamilyFlags& fam) {
    if (copies < 2) throw InvalidArguments("additivity needs at least two copies");
    auto [povm, label] = resolve_povm(source, fam);
    double product_dim = 1.0;
    for (int c = 0; c < copies; ++c) product_dim *= static_cast<double>(povm.dim());
    if (product_dim > static_cast<double>(dim_limit)) {
        std::ostringstream msg;
        msg << "product dimension " << product_dim << " exceeds limit " << dim_limit;
        throw DimensionLimitExceeded(msg.str());
    }

    const PowerResult single = compute_power(povm, opt);
    Povm product = tensor_povm(povm, povm);
    for (int c = 2; c < copies; ++c) product = tensor_povm(product, povm);
    const PowerResult joint = compute_power(product, opt);

    const double expected = copies * single.power_bits;
    const double difference = joint.power_bits - expected;
    std::ostringstream out;
    out << "source: " << label << "\n"
        << "copies: " << copies << "\n"
        << "power_single: " << format_double(single.power_bits) << "\n"
        << "power_product: " << format_double(joint.power_bits) << "\n"
        << "copies_times_single: " << format_double(expected) << "\n"
        << "difference: " << format_double(difference) << "\n";
    emit(opt, out.str());
    if (!single.converged || !joint.converged) return kExitNoConvergence;
    return std::abs(difference) < 5e-3 ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Informational power of quantum measurements"};
    app.require_subcommand(1);

    std::string source;
    std::string sigma_path;
    CommonOptions opt;
    FamilyFlags fam;
    SweepSpec spec;
    int copies = 2;
    Eigen::Index dim_limit = 9;

    CLI::App* validate = app.add_subcommand("validate", "validate a POVM document");
    validate->add_option("path", source, "POVM document")->required();

    CLI::App* power =
        app.add_subcommand("power", "informational power of a POVM (document or catalog name)");
    power->add_option("source", source, "document path or catalog name")->required();
    add_common_flags(power, opt);
    add_family_flags(power, fam);

    CLI::App* sweep = app.add_subcommand("sweep", "sweep a catalog family and emit CSV");
    sweep->add_option("--family", spec.family, "noisy-projective | mirror-y | zn")->required();
    sweep->add_option("--parameter", spec.parameter, "eta | theta | n")->required();
    sweep->add_option("--start", spec.start)->required();
    sweep->add_option("--stop", spec.stop)->required();
    sweep->add_option("--count", spec.count)->required();
    add_common_flags(sweep, opt);
    add_family_flags(sweep, fam);

    CLI::App* dualcheck =
        app.add_subcommand("dualcheck", "duality identity and round-trip deviations");
    dualcheck->add_option("source", source, "document path or catalog name")->required();
    dualcheck->add_option("--sigma", sigma_path, "reference state document (default: 1/D)");
    add_common_flags(dualcheck, opt);
    add_family_flags(dualcheck, fam);

    CLI::App* additivity =
        app.add_subcommand("additivity", "compare the power of parallel copies with the sum");
    additivity->add_option("source", source, "catalog name or document path")->required();
    additivity->add_option("--copies", copies, "number of parallel copies");
    additivity->add_option("--dim-limit", dim_limit, "largest allowed product dimension");
    add_common_flags(additivity, opt);
    add_family_flags(additivity, fam);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(source);
        if (power->parsed()) return cmd_power(source, opt, fam);
        if (sweep->parsed()) return cmd_sweep(spec, opt, fam);
        if (dualcheck->parsed()) return cmd_dualcheck(source, sigma_path, opt, fam);
        if (additivity->parsed()) return cmd_additivity(source, copies, dim_limit, opt, fam);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
