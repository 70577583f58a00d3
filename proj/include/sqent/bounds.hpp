#pragma once

#include <string>
#include <vector>

#include "sqent/scenario.hpp"

// Closed-form tight bounds on the scenario quantities at fixed Bloch radius,
// their d-dimensional certainty counterparts, and structured reports that
// compare an achieved value against its bounds and evaluate the equality
// conditions.

namespace sqent {

struct EqualityCondition {
    std::string name;
    bool met = false;
};

struct BoundReport {
    double quantity = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double lower_residual = 0.0;  // quantity - lower
    double upper_residual = 0.0;  // upper - quantity
    bool lower_saturated = false;
    bool upper_saturated = false;
    bool lower_is_trivial_floor = false;  // lower bound is the generic entropy floor 0
    std::vector<EqualityCondition> equality_conditions;
};

struct ReportTolerances {
    double saturation = 1e-9;  // residual threshold for the saturated flags
    double predicate = 1e-9;   // Bloch-geometry tolerance for the equality predicates
};

/// Tight range of the scenario-1 entropy sum over all qubit states of Bloch
/// radius r_norm with axis overlap mu. The minimum sits at r3 = +-r_norm, the
/// maximum is 2 alpha_log(2) at r3 = 0.
EntropyInterval scenario1_bounds(double r_norm, double mu, const EntropyOrder& order);

/// Scenario-1 value of a concrete qubit instance against scenario1_bounds.
/// Lower saturation pairs with commutes_with, upper saturation with
/// zero_mean_condition.
BoundReport scenario1_report(const QubitState& state, const QubitObservable& first,
                             const QubitObservable& second, const EntropyOrder& order,
                             const ReportTolerances& tols = {});

/// Tight range of the form-1 conditional entropy over qubit states of fixed
/// radius. spectrum_factor is g_alpha at the radius, equivalently
/// 1 + (1-alpha) S_alpha(rho). For alpha < 1 the factor bounds from below and
/// 2^(1-alpha) from above; for alpha > 1 the roles swap; at alpha = 1 the
/// range collapses to the state-independent value.
EntropyInterval scenario2_bounds(double spectrum_factor, double mu, const EntropyOrder& order);

/// Form-1 conditional entropy of a concrete qubit instance against
/// scenario2_bounds. The saturation/predicate pairing swaps across alpha = 1;
/// in the Shannon regime the range collapses and both flags hold trivially.
BoundReport scenario2_report(const QubitState& state, const QubitObservable& first,
                             const QubitObservable& second, const EntropyOrder& order,
                             const ReportTolerances& tols = {});

/// d-dimensional certainty reports for both conditional forms. No
/// non-trivial lower bound exists: the lower field is the 0 floor, marked.
/// Mutual unbiasedness forces saturation of both upper bounds; for strictly
/// positive states saturation forces mutual unbiasedness. The two directions
/// are reported separately.
struct QuditCertaintyReport {
    BoundReport form1;  // upper bound: sum_z p(z)^alpha * alpha_log(d)
    BoundReport form2;  // upper bound: alpha_log(d)
    bool bases_mutually_unbiased = false;
    bool state_strictly_positive = false;
};

QuditCertaintyReport qudit_certainty_report(const QuditState& state,
                                            const QuditObservable& first,
                                            const QuditObservable& second,
                                            const EntropyOrder& order,
                                            const ReportTolerances& tols = {});

}  // namespace sqent
