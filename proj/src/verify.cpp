#include "sqent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "sqent/qudit.hpp"

namespace sqent {

namespace {

void validate(const SweepConfig& config) {
    if (config.r3_points < 3 || config.r3_points % 2 == 0) {
        throw std::invalid_argument("r3_points must be odd and >= 3");
    }
    if (config.mu_grid.empty() || config.alpha_grid.empty()) {
        throw std::invalid_argument("sweep grids must be non-empty");
    }
    if (config.r_norm < 0.0 || config.r_norm > 1.0) {
        throw std::invalid_argument("r_norm must lie in [0, 1]");
    }
}

// i-th grid point of [-r_norm, r_norm]; the center index gives exactly 0 and
// the end indices exactly +-r_norm. Adding 0.0 turns -0.0 into +0.0.
double grid_point(double r_norm, int i, int points) {
    const double t = static_cast<double>(2 * i - (points - 1)) / static_cast<double>(points - 1);
    return r_norm * t + 0.0;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json bloch_to_json(const BlochVector& v) {
    return nlohmann::json::array({v.x, v.y, v.z});
}

template <typename ValueFn, typename BoundsFn>
SweepResult run_sweep(const SweepConfig& config, const char* kind, ValueFn value_at,
                      BoundsFn bounds_for) {
    validate(config);
    SweepResult result;
    result.config = config;
    result.cells.resize(config.alpha_grid.size() * config.mu_grid.size());

    std::size_t slot = 0;
    for (double alpha : config.alpha_grid) {
        const EntropyOrder order(alpha);
        for (double mu : config.mu_grid) {
            SweepCell cell;
            cell.alpha = alpha;
            cell.mu = mu;
            cell.r_norm = config.r_norm;

            double min_value = std::numeric_limits<double>::infinity();
            double max_value = -std::numeric_limits<double>::infinity();
            double argmin = 0.0;
            double argmax = 0.0;
            for (int i = 0; i < config.r3_points; ++i) {
                const double r3 = grid_point(config.r_norm, i, config.r3_points);
                const double value = value_at(r3, mu, order);
                if (value < min_value) {
                    min_value = value;
                    argmin = r3;
                }
                if (value > max_value) {
                    max_value = value;
                    argmax = r3;
                }
            }

            const EntropyInterval bounds = bounds_for(config.r_norm, mu, order);
            cell.min_value = min_value;
            cell.argmin_r3 = argmin;
            cell.max_value = max_value;
            cell.argmax_r3 = argmax;
            cell.lower_bound = bounds.lower;
            cell.upper_bound = bounds.upper;
            cell.min_residual = min_value - bounds.lower;
            cell.max_residual = bounds.upper - max_value;

            for (const auto& [which, residual, observed, bound] :
                 {std::tuple{"lower", cell.min_residual, min_value, bounds.lower},
                  std::tuple{"upper", cell.max_residual, max_value, bounds.upper}}) {
                if (residual < -config.violation_tol) {
                    Violation violation;
                    violation.kind = std::string(kind) + "_" + which;
                    violation.instance = {{"alpha", alpha},
                                          {"mu", mu},
                                          {"r_norm", config.r_norm},
                                          {"r3_points", config.r3_points}};
                    violation.observed = observed;
                    violation.bound = bound;
                    violation.margin = residual;
                    result.violations.push_back(std::move(violation));
                }
            }
            result.cells[slot++] = cell;
        }
    }
    return result;
}

}  // namespace

SweepResult sweep_scenario1(const SweepConfig& config) {
    return run_sweep(
        config, "scenario1_sweep",
        [](double r3, double mu, const EntropyOrder& order) {
            return scenario1_closed_form(r3, mu, order);
        },
        [](double r_norm, double mu, const EntropyOrder& order) {
            return scenario1_bounds(r_norm, mu, order);
        });
}

SweepResult sweep_scenario2(const SweepConfig& config) {
    return run_sweep(
        config, "scenario2_sweep",
        [](double r3, double mu, const EntropyOrder& order) {
            return scenario2_form1_closed_form(r3, mu, order);
        },
        [](double r_norm, double mu, const EntropyOrder& order) {
            return scenario2_bounds(g_alpha(r_norm, order), mu, order);
        });
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 over base + stream index
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BlochVector random_unit_bloch(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    while (true) {
        BlochVector v{normal(rng), normal(rng), normal(rng)};
        const double n = v.norm();
        if (n > 1e-12) return scaled(v, 1.0 / n);
    }
}

QubitState random_qubit_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    return QubitState(scaled(random_unit_bloch(rng), radius(rng)));
}

FuzzReport fuzz_monotonicity(int trials, const std::vector<int>& dims,
                             const std::vector<double>& alphas, std::uint64_t seed, double tol) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (dims.empty() || alphas.empty()) {
        throw std::invalid_argument("dimension and alpha lists must be non-empty");
    }

    FuzzReport report;
    report.trials_per_dim = static_cast<std::uint64_t>(trials);
    report.worst_margin = std::numeric_limits<double>::infinity();

    std::uint64_t stream = 0;
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("dimensions must be >= 2");
        for (int trial = 0; trial < trials; ++trial) {
            std::mt19937_64 rng(derive_seed(seed, stream++));
            const QuditState state = random_state(d, rng);
            const QuditObservable obs = random_basis(d, rng);
            const ProbabilityDistribution before = state.spectrum();
            // spectrum of the dephased state: its diagonal in the measurement basis
            const ProbabilityDistribution after = outcome_probabilities(state, obs);
            for (double alpha : alphas) {
                const EntropyOrder order(alpha);
                const double s_before = quantum_tsallis(before, order);
                const double s_after = quantum_tsallis(after, order);
                const double margin = s_after - s_before;
                ++report.total_checks;
                report.worst_margin = std::min(report.worst_margin, margin);
                if (margin < -tol) {
                    Violation violation;
                    violation.kind = "entropy_nondecrease";
                    violation.instance = {{"dim", d},
                                          {"alpha", alpha},
                                          {"trial", trial},
                                          {"state", matrix_to_json(state.matrix())},
                                          {"basis", matrix_to_json(obs.basis())}};
                    violation.observed = s_after;
                    violation.bound = s_before;
                    violation.margin = margin;
                    report.violations.push_back(std::move(violation));
                }
            }
        }
    }
    if (report.total_checks == 0) report.worst_margin = 0.0;
    return report;
}

CrossCheckReport cross_check_pipelines(int trials, const std::vector<double>& alphas,
                                       std::uint64_t seed, double closed_tol,
                                       double representation_tol) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (alphas.empty()) throw std::invalid_argument("alpha list must be non-empty");

    CrossCheckReport report;
    report.trials = static_cast<std::uint64_t>(trials);

    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const QubitState state = random_qubit_state(rng);
        const QubitObservable first(random_unit_bloch(rng));
        const QubitObservable second(random_unit_bloch(rng));
        const double r3 = dot(first.axis(), state.bloch());
        const double mu = overlap_mu(first, second);

        const QuditState state_m = to_qudit(state);
        const QuditObservable first_m = to_qudit(first);
        const QuditObservable second_m = to_qudit(second);

        for (double alpha : alphas) {
            const EntropyOrder order(alpha);

            const double s1_bloch = scenario1(state, first, second, order).total;
            const double s1_closed = scenario1_closed_form(r3, mu, order);
            const double s1_matrix = scenario1(state_m, first_m, second_m, order).total;

            const ScenarioTwoResult s2_bloch = scenario2(state, first, second, order);
            const double form1_closed = scenario2_form1_closed_form(r3, mu, order);
            const double form2_closed = scenario2_form2_closed_form(mu, order);
            const ScenarioTwoResult s2_matrix = scenario2(state_m, first_m, second_m, order);

            const double closed_gap =
                std::max({std::abs(s1_bloch - s1_closed), std::abs(s2_bloch.form1 - form1_closed),
                          std::abs(s2_bloch.form2 - form2_closed)});
            const double rep_gap = std::max({std::abs(s1_bloch - s1_matrix),
                                             std::abs(s2_bloch.form1 - s2_matrix.form1),
                                             std::abs(s2_bloch.form2 - s2_matrix.form2)});
            report.max_closed_form_discrepancy =
                std::max(report.max_closed_form_discrepancy, closed_gap);
            report.max_representation_discrepancy =
                std::max(report.max_representation_discrepancy, rep_gap);

            const auto instance_json = [&] {
                return nlohmann::json{{"alpha", alpha},
                                      {"trial", trial},
                                      {"r", bloch_to_json(state.bloch())},
                                      {"p", bloch_to_json(first.axis())},
                                      {"q", bloch_to_json(second.axis())}};
            };
            if (closed_gap > closed_tol) {
                report.violations.push_back(Violation{"closed_form_mismatch", instance_json(),
                                                      closed_gap, closed_tol,
                                                      closed_tol - closed_gap});
            }
            if (rep_gap > representation_tol) {
                report.violations.push_back(Violation{"representation_mismatch", instance_json(),
                                                      rep_gap, representation_tol,
                                                      representation_tol - rep_gap});
            }
        }
    }
    return report;
}

nlohmann::json to_json(const Violation& violation) {
    return nlohmann::json{{"kind", violation.kind},
                          {"instance", violation.instance},
                          {"observed", violation.observed},
                          {"bound", violation.bound},
                          {"margin", violation.margin}};
}

nlohmann::json to_json(const SweepCell& cell) {
    return nlohmann::json{
        {"alpha", cell.alpha},
        {"mu", cell.mu},
        {"r_norm", cell.r_norm},
        {"min", cell.min_value},
        {"argmin_r3", cell.argmin_r3},
        {"max", cell.max_value},
        {"argmax_r3", cell.argmax_r3},
        {"lower", cell.lower_bound},
        {"upper", cell.upper_bound},
        {"min_residual", cell.min_residual},
        {"max_residual", cell.max_residual},
    };
}

}  // namespace sqent
