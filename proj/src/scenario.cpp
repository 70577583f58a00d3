#include "sqent/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqent {

namespace {

template <typename State, typename Observable, typename MeasureFn>
ScenarioOneResult scenario1_impl(const State& state, const Observable& first,
                                 const Observable& second, const EntropyOrder& order,
                                 MeasureFn measure) {
    const double h_first = tsallis(measure(state, first), order);
    const State after = dephase_channel(state, first);
    const double h_second = tsallis(measure(after, second), order);
    return ScenarioOneResult{h_first, h_second, h_first + h_second, order};
}

template <typename Marginal, typename Rows>
ScenarioTwoResult scenario2_impl(Marginal marginal, Rows rows, const EntropyOrder& order) {
    std::vector<double> per_outcome;
    per_outcome.reserve(rows.size());
    for (const auto& row : rows) per_outcome.push_back(tsallis(row, order));
    ConditionalTable table(marginal, std::move(rows));
    return ScenarioTwoResult{conditional_tsallis_form1(table, order),
                             conditional_tsallis_form2(table, order), std::move(per_outcome),
                             std::move(marginal)};
}

}  // namespace

ScenarioOneResult scenario1(const QubitState& state, const QubitObservable& first,
                            const QubitObservable& second, const EntropyOrder& order) {
    return scenario1_impl(state, first, second, order,
                          [](const QubitState& s, const QubitObservable& o) {
                              return measurement_probabilities(s, o);
                          });
}

ScenarioOneResult scenario1(const QuditState& state, const QuditObservable& first,
                            const QuditObservable& second, const EntropyOrder& order) {
    return scenario1_impl(state, first, second, order,
                          [](const QuditState& s, const QuditObservable& o) {
                              return outcome_probabilities(s, o);
                          });
}

double scenario1_closed_form(double r3, double mu, const EntropyOrder& order) {
    return eta(0.5 * (1.0 + r3), order) + eta(0.5 * (1.0 - r3), order) +
           eta(0.5 * (1.0 + mu * r3), order) + eta(0.5 * (1.0 - mu * r3), order);
}

EntropyInterval scenario1_quantum_sides(const QubitState& state, const QubitObservable& first,
                                        const EntropyOrder& order) {
    const double lower = quantum_tsallis(state.spectrum(), order) +
                         quantum_tsallis(dephase_channel(state, first).spectrum(), order);
    return EntropyInterval{lower, 2.0 * alpha_log(2.0, order)};
}

EntropyInterval scenario1_quantum_sides(const QuditState& state, const QuditObservable& first,
                                        const EntropyOrder& order) {
    // spectrum of the dephased state is its diagonal in the measurement basis
    const double lower = quantum_tsallis(state.spectrum(), order) +
                         quantum_tsallis(outcome_probabilities(state, first), order);
    return EntropyInterval{lower, 2.0 * alpha_log(static_cast<double>(state.dim()), order)};
}

ScenarioTwoResult scenario2(const QubitState& state, const QubitObservable& first,
                            const QubitObservable& second, const EntropyOrder& order) {
    return scenario2_impl(measurement_probabilities(state, first),
                          conditional_probabilities(first, second), order);
}

ScenarioTwoResult scenario2(const QuditState& state, const QuditObservable& first,
                            const QuditObservable& second, const EntropyOrder& order) {
    return scenario2_impl(outcome_probabilities(state, first),
                          conditional_probabilities(first, second), order);
}

double g_alpha(double r3, const EntropyOrder& order) {
    if (std::abs(r3) > 1.0 + 1e-12) {
        throw std::domain_error("g_alpha requires |r3| <= 1");
    }
    r3 = std::clamp(r3, -1.0, 1.0);
    if (order.shannon_regime()) return 1.0;
    return std::pow(0.5 * (1.0 + r3), order.alpha()) + std::pow(0.5 * (1.0 - r3), order.alpha());
}

double scenario2_form2_closed_form(double mu, const EntropyOrder& order) {
    return eta(0.5 * (1.0 + mu), order) + eta(0.5 * (1.0 - mu), order);
}

double scenario2_form1_closed_form(double r3, double mu, const EntropyOrder& order) {
    return g_alpha(r3, order) * scenario2_form2_closed_form(mu, order);
}

}  // namespace sqent
