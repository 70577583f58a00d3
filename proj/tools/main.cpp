#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqent/bounds.hpp"
#include "sqent/qudit.hpp"
#include "sqent/scenario.hpp"
#include "sqent/verify.hpp"

// Command-line frontend: entropy evaluation, scenario reports, closed-form
// sweeps and seeded fuzz verification, with CSV/JSON output for plotting.
//
// Exit codes: 0 success, 1 verification failure (a replay file is written),
// 2 usage or domain error.

namespace {

using nlohmann::json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsageError = 2;

// 12 significant digits, locale independent
std::string fmt(double value) {
    char buf[40];
    const auto result =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, result.ptr);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
}

std::string replay_path_for(const std::string& out_path) {
    return out_path.empty() ? "sqent_replay.json" : out_path + ".replay.json";
}

// Writes the replay file and reports the failure; returns the failure code.
int fail_with_replay(const std::string& command, const json& params,
                     const std::vector<sqent::Violation>& violations,
                     const std::string& out_path) {
    json replay;
    replay["command"] = command;
    replay["params"] = params;
    replay["violations"] = json::array();
    for (const auto& v : violations) replay["violations"].push_back(sqent::to_json(v));
    const std::string path = replay_path_for(out_path);
    std::ofstream file(path, std::ios::binary);
    file << replay.dump(2) << "\n";
    std::cerr << "verification failure: " << violations.size()
              << " violation(s); replay written to " << path << "\n";
    return kExitVerificationFailure;
}

sqent::BlochVector parse_axis(std::vector<double> raw, const std::string& name) {
    if (raw.size() != 3) {
        throw std::invalid_argument(name + " needs exactly 3 comma-separated components");
    }
    sqent::BlochVector v{raw[0], raw[1], raw[2]};
    const double norm = v.norm();
    if (norm == 0.0) {
        throw std::invalid_argument(name + " must not be the zero vector");
    }
    if (std::abs(norm - 1.0) > 1e-9) {
        std::cerr << "warning: " << name << " deviates from unit length by "
                  << fmt(std::abs(norm - 1.0)) << "; normalizing\n";
    }
    return sqent::normalized(v);
}

Eigen::MatrixXcd parse_complex_matrix(const json& rows) {
    const auto d = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const auto& row = rows.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != d) {
            throw std::invalid_argument("matrix in JSON file must be square");
        }
        for (Eigen::Index j = 0; j < d; ++j) {
            const auto& entry = row.at(static_cast<std::size_t>(j));
            if (entry.is_array()) {
                m(i, j) = std::complex<double>(entry.at(0).get<double>(),
                                               entry.at(1).get<double>());
            } else {
                m(i, j) = std::complex<double>(entry.get<double>(), 0.0);
            }
        }
    }
    return m;
}

// Rows of the JSON array are eigenvectors; they become basis columns.
sqent::QuditObservable parse_basis(const json& rows) {
    Eigen::MatrixXcd as_rows = parse_complex_matrix(rows);
    Eigen::MatrixXcd basis = as_rows.transpose();
    const Eigen::Index d = basis.rows();
    return sqent::QuditObservable(
        std::move(basis), Eigen::VectorXd::LinSpaced(d, 0.0, static_cast<double>(d - 1)));
}

json report_to_json(const sqent::BoundReport& report) {
    json conditions = json::array();
    for (const auto& c : report.equality_conditions) {
        conditions.push_back({{"name", c.name}, {"met", c.met}});
    }
    return json{{"quantity", report.quantity},
                {"lower", report.lower},
                {"upper", report.upper},
                {"lower_residual", report.lower_residual},
                {"upper_residual", report.upper_residual},
                {"lower_saturated", report.lower_saturated},
                {"upper_saturated", report.upper_saturated},
                {"lower_is_trivial_floor", report.lower_is_trivial_floor},
                {"equality_conditions", conditions}};
}

void print_report_text(std::ostringstream& out, const sqent::BoundReport& report) {
    out << "quantity = " << fmt(report.quantity) << "\n"
        << "lower_bound = " << fmt(report.lower) << "\n"
        << "upper_bound = " << fmt(report.upper) << "\n"
        << "lower_residual = " << fmt(report.lower_residual) << "\n"
        << "upper_residual = " << fmt(report.upper_residual) << "\n"
        << "lower_saturated = " << (report.lower_saturated ? "true" : "false") << "\n"
        << "upper_saturated = " << (report.upper_saturated ? "true" : "false") << "\n";
    for (const auto& c : report.equality_conditions) {
        out << "condition " << c.name << " = " << (c.met ? "true" : "false") << "\n";
    }
}

// ---------------------------------------------------------------------------
// entropy

struct EntropyArgs {
    std::vector<double> probs;
    double alpha = 1.0;
    std::string format = "text";
    std::string out;
};

int run_entropy(const EntropyArgs& args) {
    double sum = 0.0;
    for (double p : args.probs) sum += p;
    if (std::abs(sum - 1.0) > 1e-9) {
        std::cerr << "error: probabilities sum to " << fmt(sum)
                  << ", more than 1e-9 away from 1\n";
        return kExitUsageError;
    }
    std::vector<double> normalized = args.probs;
    for (double& p : normalized) p /= sum;

    const sqent::EntropyOrder order(args.alpha);
    const sqent::ProbabilityDistribution dist(normalized);
    const double h = sqent::tsallis(dist, order);
    const double r = sqent::renyi_from_tsallis(h, order);

    if (args.format == "json") {
        json output{{"command", "entropy"},
                    {"params", {{"alpha", args.alpha}, {"p", args.probs}}},
                    {"results", {{"tsallis", h}, {"renyi", r}}},
                    {"violations", json::array()}};
        emit(output.dump(2) + "\n", args.out);
    } else {
        std::ostringstream out;
        out << "H = " << fmt(h) << "\n"
            << "R = " << fmt(r) << "\n";
        emit(out.str(), args.out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// scenario

struct ScenarioArgs {
    int kind = 1;
    double alpha = 1.0;
    std::vector<double> r;
    std::vector<double> p;
    std::vector<double> q;
    std::optional<double> mu;
    int d = 0;
    bool mub = false;
    bool random_bases = false;
    std::uint64_t seed = 0;
    std::string instance_json;
    std::string format = "text";
    std::string out;
};

int run_scenario_qubit(const ScenarioArgs& args) {
    const sqent::EntropyOrder order(args.alpha);
    const sqent::QubitState state = [&] {
        if (args.r.size() != 3) {
            throw std::invalid_argument("--r needs exactly 3 comma-separated components");
        }
        return sqent::QubitState(sqent::BlochVector{args.r[0], args.r[1], args.r[2]});
    }();

    sqent::BlochVector first_axis{0.0, 0.0, 1.0};
    sqent::BlochVector second_axis{1.0, 0.0, 0.0};
    if (args.mu.has_value()) {
        if (!args.p.empty() || !args.q.empty()) {
            throw std::invalid_argument("give either --mu or the --p/--q axes, not both");
        }
        const double mu = *args.mu;
        if (std::abs(mu) > 1.0) throw std::invalid_argument("--mu must lie in [-1, 1]");
        second_axis = sqent::BlochVector{std::sqrt(1.0 - mu * mu), 0.0, mu};
    } else {
        if (!args.p.empty()) first_axis = parse_axis(args.p, "--p");
        if (!args.q.empty()) second_axis = parse_axis(args.q, "--q");
    }
    const sqent::QubitObservable first(first_axis);
    const sqent::QubitObservable second(second_axis);

    json params{{"kind", args.kind},
                {"alpha", args.alpha},
                {"r", args.r},
                {"p", {first_axis.x, first_axis.y, first_axis.z}},
                {"q", {second_axis.x, second_axis.y, second_axis.z}}};

    std::ostringstream text;
    json results;
    sqent::BoundReport report;
    if (args.kind == 1) {
        const auto result = sqent::scenario1(state, first, second, order);
        report = sqent::scenario1_report(state, first, second, order);
        results = {{"first_entropy", result.first_entropy},
                   {"second_entropy", result.second_entropy},
                   {"total", result.total},
                   {"report", report_to_json(report)}};
        text << "first_entropy = " << fmt(result.first_entropy) << "\n"
             << "second_entropy = " << fmt(result.second_entropy) << "\n"
             << "total = " << fmt(result.total) << "\n";
    } else {
        const auto result = sqent::scenario2(state, first, second, order);
        report = sqent::scenario2_report(state, first, second, order);
        json per_outcome = json::array();
        for (std::size_t z = 0; z < result.per_outcome.size(); ++z) {
            per_outcome.push_back({{"z", result.marginal.label(z)},
                                   {"p", result.marginal.prob(z)},
                                   {"entropy", result.per_outcome[z]}});
        }
        results = {{"form1", result.form1},
                   {"form2", result.form2},
                   {"per_outcome", per_outcome},
                   {"report", report_to_json(report)}};
        text << "form1 = " << fmt(result.form1) << "\n"
             << "form2 = " << fmt(result.form2) << "\n";
        for (std::size_t z = 0; z < result.per_outcome.size(); ++z) {
            text << "H(X|z=" << fmt(result.marginal.label(z))
                 << ") = " << fmt(result.per_outcome[z]) << "\n";
        }
    }
    print_report_text(text, report);

    if (args.format == "json") {
        json output{{"command", "scenario"},
                    {"params", params},
                    {"results", results},
                    {"violations", json::array()}};
        emit(output.dump(2) + "\n", args.out);
    } else {
        emit(text.str(), args.out);
    }
    return 0;
}

int run_scenario_qudit(const ScenarioArgs& args) {
    const sqent::EntropyOrder order(args.alpha);

    std::optional<sqent::QuditState> state;
    std::optional<sqent::QuditObservable> first;
    std::optional<sqent::QuditObservable> second;
    if (!args.instance_json.empty()) {
        std::ifstream file(args.instance_json);
        if (!file) throw std::invalid_argument("cannot read " + args.instance_json);
        json instance = json::parse(file);
        if (instance.contains("state")) {
            state = sqent::QuditState(parse_complex_matrix(instance.at("state")));
        }
        if (instance.contains("first")) first = parse_basis(instance.at("first"));
        if (instance.contains("second")) second = parse_basis(instance.at("second"));
    }

    Eigen::Index d = args.d;
    if (state.has_value()) d = state->dim();
    if (first.has_value()) d = first->dim();
    if (d < 2) throw std::invalid_argument("qudit scenarios need --d >= 2 or an instance file");

    if (!first.has_value() || !second.has_value()) {
        if (args.mub) {
            auto pair = sqent::fourier_mub_pair(d);
            if (!first.has_value()) first = std::move(pair.first);
            if (!second.has_value()) second = std::move(pair.second);
        } else if (args.random_bases) {
            std::mt19937_64 rng(args.seed);
            if (!first.has_value()) first = sqent::random_basis(d, rng);
            if (!second.has_value()) second = sqent::random_basis(d, rng);
        } else {
            throw std::invalid_argument(
                "qudit observables need --mub, --random-basis, or an instance file");
        }
    }
    if (!state.has_value()) state = sqent::QuditState::completely_mixed(d);

    json params{{"kind", args.kind},
                {"alpha", args.alpha},
                {"d", static_cast<int>(d)},
                {"mub", args.mub},
                {"seed", args.seed}};

    std::ostringstream text;
    json results;
    if (args.kind == 1) {
        const auto result = sqent::scenario1(*state, *first, *second, order);
        const auto sides = sqent::scenario1_quantum_sides(*state, *first, order);
        sqent::BoundReport report;
        report.quantity = result.total;
        report.lower = sides.lower;
        report.upper = sides.upper;
        report.lower_residual = result.total - sides.lower;
        report.upper_residual = sides.upper - result.total;
        report.lower_saturated = report.lower_residual <= 1e-9;
        report.upper_saturated = report.upper_residual <= 1e-9;
        results = {{"first_entropy", result.first_entropy},
                   {"second_entropy", result.second_entropy},
                   {"total", result.total},
                   {"report", report_to_json(report)}};
        text << "first_entropy = " << fmt(result.first_entropy) << "\n"
             << "second_entropy = " << fmt(result.second_entropy) << "\n"
             << "total = " << fmt(result.total) << "\n";
        print_report_text(text, report);
    } else {
        const auto result = sqent::scenario2(*state, *first, *second, order);
        const auto report = sqent::qudit_certainty_report(*state, *first, *second, order);
        results = {{"form1", result.form1},
                   {"form2", result.form2},
                   {"form1_report", report_to_json(report.form1)},
                   {"form2_report", report_to_json(report.form2)},
                   {"mutually_unbiased", report.bases_mutually_unbiased},
                   {"strictly_positive", report.state_strictly_positive}};
        text << "form1 = " << fmt(result.form1) << "\n"
             << "form2 = " << fmt(result.form2) << "\n"
             << "mutually_unbiased = " << (report.bases_mutually_unbiased ? "true" : "false")
             << "\n"
             << "strictly_positive = " << (report.state_strictly_positive ? "true" : "false")
             << "\n"
             << "form1 upper_bound = " << fmt(report.form1.upper) << " (residual "
             << fmt(report.form1.upper_residual) << ")\n"
             << "form2 upper_bound = " << fmt(report.form2.upper) << " (residual "
             << fmt(report.form2.upper_residual) << ")\n";
    }

    if (args.format == "json") {
        json output{{"command", "scenario"},
                    {"params", params},
                    {"results", results},
                    {"violations", json::array()}};
        emit(output.dump(2) + "\n", args.out);
    } else {
        emit(text.str(), args.out);
    }
    return 0;
}

int run_scenario(const ScenarioArgs& args) {
    const bool qudit = args.d > 0 || !args.instance_json.empty();
    if (qudit) return run_scenario_qudit(args);
    return run_scenario_qubit(args);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
    int kind = 1;
    double r_norm = 0.8;
    std::vector<double> alphas{2.0};
    std::vector<double> mus{0.0};
    int points = 2001;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
};

int run_sweep(const SweepArgs& args) {
    sqent::SweepConfig config;
    config.r_norm = args.r_norm;
    config.alpha_grid = args.alphas;
    config.mu_grid = args.mus;
    config.r3_points = args.points;
    config.seed = args.seed;
    config.violation_tol = args.tol;

    const sqent::SweepResult result =
        args.kind == 1 ? sqent::sweep_scenario1(config) : sqent::sweep_scenario2(config);

    const json params{{"kind", args.kind},   {"r_norm", args.r_norm}, {"alphas", args.alphas},
                      {"mus", args.mus},     {"points", args.points}, {"tol", args.tol},
                      {"seed", args.seed}};

    if (args.format == "json") {
        json cells = json::array();
        for (const auto& cell : result.cells) cells.push_back(sqent::to_json(cell));
        json violations = json::array();
        for (const auto& v : result.violations) violations.push_back(sqent::to_json(v));
        json output{{"command", "sweep"},
                    {"params", params},
                    {"results", {{"cells", cells}}},
                    {"violations", violations}};
        emit(output.dump(2) + "\n", args.out);
    } else {
        std::ostringstream csv;
        csv << "alpha,mu,r_norm,min,argmin_r3,max,argmax_r3,lower,upper,"
               "min_residual,max_residual\n";
        for (const auto& cell : result.cells) {
            csv << fmt(cell.alpha) << ',' << fmt(cell.mu) << ',' << fmt(cell.r_norm) << ','
                << fmt(cell.min_value) << ',' << fmt(cell.argmin_r3) << ','
                << fmt(cell.max_value) << ',' << fmt(cell.argmax_r3) << ','
                << fmt(cell.lower_bound) << ',' << fmt(cell.upper_bound) << ','
                << fmt(cell.min_residual) << ',' << fmt(cell.max_residual) << '\n';
        }
        emit(csv.str(), args.out);
    }

    if (!result.violations.empty()) {
        return fail_with_replay("sweep", params, result.violations, args.out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// fuzz

struct FuzzArgs {
    std::string mode = "monotonicity";
    int trials = 100;
    std::vector<int> dims{2, 3, 4};
    std::vector<double> alphas{0.5, 1.0, 2.0};
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::string out;
};

int run_fuzz(const FuzzArgs& args) {
    const json params{{"mode", args.mode},     {"trials", args.trials}, {"dims", args.dims},
                      {"alphas", args.alphas}, {"seed", args.seed},     {"tol", args.tol}};

    json results;
    std::vector<sqent::Violation> violations;
    if (args.mode == "monotonicity") {
        const auto report =
            sqent::fuzz_monotonicity(args.trials, args.dims, args.alphas, args.seed, args.tol);
        results = {{"trials", report.trials_per_dim},
                   {"total_checks", report.total_checks},
                   {"violations", report.violations.size()},
                   {"worst_margin", report.worst_margin}};
        violations = report.violations;
    } else {
        const auto report = sqent::cross_check_pipelines(args.trials, args.alphas, args.seed);
        results = {{"trials", report.trials},
                   {"violations", report.violations.size()},
                   {"max_closed_form_discrepancy", report.max_closed_form_discrepancy},
                   {"max_representation_discrepancy", report.max_representation_discrepancy}};
        violations = report.violations;
    }

    json violations_json = json::array();
    for (const auto& v : violations) violations_json.push_back(sqent::to_json(v));
    json output{{"command", "fuzz"},
                {"params", params},
                {"results", results},
                {"violations", violations_json}};
    emit(output.dump(2) + "\n", args.out);

    if (!violations.empty()) {
        return fail_with_replay("fuzz", params, violations, args.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tsallis-entropy uncertainty and certainty toolkit for two successive "
                 "projective quantum measurements"};
    app.require_subcommand(1);

    EntropyArgs entropy_args;
    auto* entropy_cmd =
        app.add_subcommand("entropy", "Tsallis and Renyi entropy of a distribution");
    entropy_cmd->add_option("--p", entropy_args.probs, "outcome probabilities")
        ->required()
        ->delimiter(',');
    entropy_cmd->add_option("--alpha", entropy_args.alpha, "entropic order")->required();
    entropy_cmd->add_option("--format", entropy_args.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    entropy_cmd->add_option("--out", entropy_args.out, "write output to file");

    ScenarioArgs scenario_args;
    auto* scenario_cmd = app.add_subcommand(
        "scenario", "evaluate a successive-measurement instance with its bound report");
    scenario_cmd->add_option("--kind", scenario_args.kind, "1: entropy sum, 2: conditional")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    scenario_cmd->add_option("--alpha", scenario_args.alpha, "entropic order")->required();
    scenario_cmd->add_option("--r", scenario_args.r, "qubit Bloch vector")->delimiter(',');
    scenario_cmd->add_option("--p", scenario_args.p, "first measurement axis")->delimiter(',');
    scenario_cmd->add_option("--q", scenario_args.q, "second measurement axis")->delimiter(',');
    double mu_value = 0.0;
    auto* mu_opt =
        scenario_cmd->add_option("--mu", mu_value, "axis overlap (p = e3, q in the xz-plane)");
    scenario_cmd->add_option("--d", scenario_args.d, "qudit dimension");
    scenario_cmd->add_flag("--mub", scenario_args.mub,
                           "use the computational/Fourier unbiased pair");
    scenario_cmd->add_flag("--random-basis", scenario_args.random_bases,
                           "draw both eigenbases Haar-randomly from --seed");
    scenario_cmd->add_option("--seed", scenario_args.seed, "seed for --random-basis");
    scenario_cmd->add_option("--instance-json", scenario_args.instance_json,
                             "JSON file with state / first / second matrices");
    scenario_cmd->add_option("--format", scenario_args.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    scenario_cmd->add_option("--out", scenario_args.out, "write output to file");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "sweep the scenario quantity over r3 and compare with the tight bounds");
    sweep_cmd->add_option("--kind", sweep_args.kind, "1: entropy sum, 2: conditional form1")
        ->check(CLI::IsMember({1, 2}));
    sweep_cmd->add_option("--r-norm", sweep_args.r_norm, "Bloch radius")->required();
    sweep_cmd->add_option("--alphas", sweep_args.alphas, "entropic orders")->delimiter(',');
    sweep_cmd->add_option("--mus", sweep_args.mus, "axis overlaps")->delimiter(',');
    sweep_cmd->add_option("--points", sweep_args.points, "odd number of r3 grid points");
    sweep_cmd->add_option("--tol", sweep_args.tol, "violation tolerance on the residuals");
    sweep_cmd->add_option("--seed", sweep_args.seed, "configuration seed (recorded)");
    sweep_cmd->add_option("--format", sweep_args.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_args.out, "write output to file");

    FuzzArgs fuzz_args;
    auto* fuzz_cmd =
        app.add_subcommand("fuzz", "seeded random verification of the entropic inequalities");
    fuzz_cmd->add_option("--mode", fuzz_args.mode, "monotonicity | crosscheck")
        ->check(CLI::IsMember({"monotonicity", "crosscheck"}));
    fuzz_cmd->add_option("--trials", fuzz_args.trials, "trials per dimension")->required();
    fuzz_cmd->add_option("--dims", fuzz_args.dims, "dimensions to sample")->delimiter(',');
    fuzz_cmd->add_option("--alphas", fuzz_args.alphas, "entropic orders")->delimiter(',');
    fuzz_cmd->add_option("--seed", fuzz_args.seed, "base seed")->required();
    fuzz_cmd->add_option("--tol", fuzz_args.tol, "violation tolerance");
    fuzz_cmd->add_option("--out", fuzz_args.out, "write output to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    try {
        if (entropy_cmd->parsed()) return run_entropy(entropy_args);
        if (scenario_cmd->parsed()) {
            if (mu_opt->count() > 0) scenario_args.mu = mu_value;
            return run_scenario(scenario_args);
        }
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (fuzz_cmd->parsed()) return run_fuzz(fuzz_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    }
    return kExitUsageError;
}
