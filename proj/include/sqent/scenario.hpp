#pragma once

#include <vector>

#include "sqent/entropy.hpp"
#include "sqent/qubit.hpp"
#include "sqent/qudit.hpp"

// The two successive-measurement uncertainty quantities. Scenario 1 measures
// the second observable on the dephased post-measurement state and sums the
// two outcome entropies; scenario 2 conditions on the actual first outcome
// and weighs the per-outcome entropies into the two conditional forms.
//
// Each quantity has a probability-pipeline path (authoritative) and a qubit
// closed-form path; the verify module cross-checks them against each other.

namespace sqent {

struct EntropyInterval {
    double lower = 0.0;
    double upper = 0.0;
};

struct ScenarioOneResult {
    double first_entropy = 0.0;
    double second_entropy = 0.0;
    double total = 0.0;
    EntropyOrder order;
};

struct ScenarioTwoResult {
    double form1 = 0.0;
    double form2 = 0.0;
    std::vector<double> per_outcome;  // H(X|z), one per first outcome
    ProbabilityDistribution marginal;
};

/// Entropy sum of two successive measurements, second one performed on the
/// dephased state.
ScenarioOneResult scenario1(const QubitState& state, const QubitObservable& first,
                            const QubitObservable& second, const EntropyOrder& order);
ScenarioOneResult scenario1(const QuditState& state, const QuditObservable& first,
                            const QuditObservable& second, const EntropyOrder& order);

/// Closed-form scenario-1 sum for a qubit in terms of r3 = p.r and mu = q.p.
double scenario1_closed_form(double r3, double mu, const EntropyOrder& order);

/// Generic two-sided estimate on the scenario-1 sum: lower is the sum of the
/// quantum entropies of the state and its dephased image, upper is twice the
/// entropy of the completely mixed state.
EntropyInterval scenario1_quantum_sides(const QubitState& state, const QubitObservable& first,
                                        const EntropyOrder& order);
EntropyInterval scenario1_quantum_sides(const QuditState& state, const QuditObservable& first,
                                        const EntropyOrder& order);

/// Conditional entropies of the second measurement given the first outcome,
/// in both weighting forms.
ScenarioTwoResult scenario2(const QubitState& state, const QubitObservable& first,
                            const QubitObservable& second, const EntropyOrder& order);
ScenarioTwoResult scenario2(const QuditState& state, const QuditObservable& first,
                            const QuditObservable& second, const EntropyOrder& order);

/// State-dependent factor g(r3) = ((1+r3)/2)^alpha + ((1-r3)/2)^alpha of the
/// form-1 conditional entropy for a qubit; even in r3, equals 1 at alpha = 1.
double g_alpha(double r3, const EntropyOrder& order);

/// Closed-form qubit conditional entropies: form2 depends only on mu,
/// form1 factorizes as g_alpha(r3) * form2.
double scenario2_form2_closed_form(double mu, const EntropyOrder& order);
double scenario2_form1_closed_form(double r3, double mu, const EntropyOrder& order);

}  // namespace sqent
