#include "sqent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sqent {

namespace {

BoundReport make_report(double quantity, double lower, double upper, double saturation_tol) {
    BoundReport report;
    report.quantity = quantity;
    report.lower = lower;
    report.upper = upper;
    report.lower_residual = quantity - lower;
    report.upper_residual = upper - quantity;
    report.lower_saturated = report.lower_residual <= saturation_tol;
    report.upper_saturated = report.upper_residual <= saturation_tol;
    return report;
}

}  // namespace

EntropyInterval scenario1_bounds(double r_norm, double mu, const EntropyOrder& order) {
    if (r_norm < 0.0 || r_norm > 1.0 + 1e-12) {
        throw std::domain_error("Bloch radius must lie in [0, 1]");
    }
    if (std::abs(mu) > 1.0 + 1e-12) {
        throw std::domain_error("axis overlap must lie in [-1, 1]");
    }
    return EntropyInterval{scenario1_closed_form(std::min(r_norm, 1.0), mu, order),
                           2.0 * alpha_log(2.0, order)};
}

BoundReport scenario1_report(const QubitState& state, const QubitObservable& first,
                             const QubitObservable& second, const EntropyOrder& order,
                             const ReportTolerances& tols) {
    const double r_norm = std::min(state.bloch().norm(), 1.0);
    const double mu = overlap_mu(first, second);
    const EntropyInterval bounds = scenario1_bounds(r_norm, mu, order);
    const double quantity = scenario1(state, first, second, order).total;
    BoundReport report = make_report(quantity, bounds.lower, bounds.upper, tols.saturation);
    report.equality_conditions = {
        {"commutes_with_first", commutes_with(state, first, tols.predicate)},
        {"zero_mean_first", zero_mean_condition(state, first, tols.predicate)},
    };
    return report;
}

EntropyInterval scenario2_bounds(double spectrum_factor, double mu, const EntropyOrder& order) {
    if (!(spectrum_factor > 0.0)) {
        throw std::domain_error("spectrum factor must be positive");
    }
    const double k = scenario2_form2_closed_form(mu, order);
    if (order.shannon_regime()) return EntropyInterval{k, k};
    const double central_factor = g_alpha(0.0, order);  // 2^(1-alpha)
    if (order.alpha() < 1.0) {
        return EntropyInterval{spectrum_factor * k, central_factor * k};
    }
    return EntropyInterval{central_factor * k, spectrum_factor * k};
}

BoundReport scenario2_report(const QubitState& state, const QubitObservable& first,
                             const QubitObservable& second, const EntropyOrder& order,
                             const ReportTolerances& tols) {
    const double r_norm = std::min(state.bloch().norm(), 1.0);
    const double mu = overlap_mu(first, second);
    const double spectrum_factor = g_alpha(r_norm, order);
    const EntropyInterval bounds = scenario2_bounds(spectrum_factor, mu, order);
    const double quantity = scenario2(state, first, second, order).form1;
    BoundReport report = make_report(quantity, bounds.lower, bounds.upper, tols.saturation);
    report.equality_conditions = {
        {"commutes_with_first", commutes_with(state, first, tols.predicate)},
        {"zero_mean_first", zero_mean_condition(state, first, tols.predicate)},
    };
    return report;
}

QuditCertaintyReport qudit_certainty_report(const QuditState& state,
                                            const QuditObservable& first,
                                            const QuditObservable& second,
                                            const EntropyOrder& order,
                                            const ReportTolerances& tols) {
    const double d = static_cast<double>(state.dim());
    const ScenarioTwoResult result = scenario2(state, first, second, order);

    double trace_alpha = 1.0;  // sum_z p(z)^alpha; exactly 1 in the Shannon regime
    if (!order.shannon_regime()) {
        trace_alpha = 0.0;
        for (double pz : result.marginal.probs()) trace_alpha += std::pow(pz, order.alpha());
    }
    const double max_entropy = alpha_log(d, order);

    QuditCertaintyReport report;
    report.form1 = make_report(result.form1, 0.0, trace_alpha * max_entropy, tols.saturation);
    report.form2 = make_report(result.form2, 0.0, max_entropy, tols.saturation);
    report.form1.lower_is_trivial_floor = true;
    report.form2.lower_is_trivial_floor = true;
    report.bases_mutually_unbiased = is_mub_pair(first, second, tols.predicate);
    report.state_strictly_positive = strictly_positive(state, tols.predicate);
    for (BoundReport* sub : {&report.form1, &report.form2}) {
        sub->equality_conditions = {
            {"mutually_unbiased_bases", report.bases_mutually_unbiased},
            {"strictly_positive_state", report.state_strictly_positive},
        };
    }
    return report;
}

}  // namespace sqent
