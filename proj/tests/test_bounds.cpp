#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sqent/bounds.hpp"
#include "sqent/verify.hpp"

using namespace sqent;

namespace {

const BlochVector e1{1.0, 0.0, 0.0};
const BlochVector e3{0.0, 0.0, 1.0};

// 45-degree Bloch geometry at radius r against the e3 axis
QubitState diagonal_state(double r) {
    const double c = r / std::sqrt(2.0);
    return QubitState(BlochVector{c, 0.0, c});
}

QubitObservable tilted_axis(double mu) {
    return QubitObservable(BlochVector{std::sqrt(1.0 - mu * mu), 0.0, mu});
}

bool condition(const BoundReport& report, const char* name) {
    for (const auto& c : report.equality_conditions) {
        if (c.name == name) return c.met;
    }
    FAIL("unknown equality condition: " << name);
    return false;
}

}  // namespace

TEST_CASE("scenario-1 bounds on reference cells") {
    for (double a : {0.3, 1.0, 2.0}) {
        const EntropyOrder order(a);
        // zero radius collapses the range onto the maximum
        for (double mu : {-1.0, 0.0, 0.5}) {
            const auto bounds = scenario1_bounds(0.0, mu, order);
            CHECK(bounds.lower == doctest::Approx(bounds.upper).epsilon(1e-14));
            CHECK(bounds.upper == doctest::Approx(2.0 * alpha_log(2.0, order)).epsilon(1e-14));
        }
        // pure state with coinciding axes: no uncertainty left
        CHECK(scenario1_bounds(1.0, 1.0, order).lower == 0.0);
        CHECK(scenario1_bounds(1.0, -1.0, order).lower == 0.0);
    }

    const auto bounds = scenario1_bounds(0.8, 0.3, EntropyOrder(2.0));
    CHECK(bounds.lower == doctest::Approx(0.6512).epsilon(1e-13));
    CHECK(bounds.upper == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bounds.lower > 0.0);
    CHECK(bounds.lower < bounds.upper);

    const auto half = scenario1_bounds(0.8, 0.3, EntropyOrder(0.5));
    CHECK(half.lower == doctest::Approx(oracle::kScenario1Lower08_03_a05).epsilon(1e-13));
}

TEST_CASE("scenario-1 report wires saturation to the equality predicates") {
    const QubitObservable z(e3);
    const QubitObservable q = tilted_axis(0.5);

    for (double a : {0.3, 0.5, 1.0, 2.0, 3.0}) {
        const EntropyOrder order(a);

        const auto parallel = scenario1_report(QubitState(scaled(e3, 0.9)), z, q, order);
        CHECK(parallel.lower_saturated);
        CHECK_FALSE(parallel.upper_saturated);
        CHECK(condition(parallel, "commutes_with_first"));
        CHECK_FALSE(condition(parallel, "zero_mean_first"));

        const auto perpendicular = scenario1_report(QubitState(scaled(e1, 0.9)), z, q, order);
        CHECK(perpendicular.upper_saturated);
        CHECK_FALSE(perpendicular.lower_saturated);
        CHECK_FALSE(condition(perpendicular, "commutes_with_first"));
        CHECK(condition(perpendicular, "zero_mean_first"));

        const auto interior = scenario1_report(diagonal_state(0.9), z, q, order);
        CHECK_FALSE(interior.lower_saturated);
        CHECK_FALSE(interior.upper_saturated);
        CHECK(interior.lower_residual > 1e-6);
        CHECK(interior.upper_residual > 1e-6);
    }
}

TEST_CASE("scenario-2 bounds per order regime") {
    // alpha = 1: range collapses onto the state-independent value ln 2 at mu=0
    const auto shannon = scenario2_bounds(1.0, 0.0, EntropyOrder(1.0));
    CHECK(shannon.lower == doctest::Approx(oracle::kLn2).epsilon(1e-14));
    CHECK(shannon.upper == shannon.lower);

    // alpha = 2, pure state (factor g(1) = 1), mu = 0
    const auto convex = scenario2_bounds(g_alpha(1.0, EntropyOrder(2.0)), 0.0, EntropyOrder(2.0));
    CHECK(convex.lower == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(convex.upper == doctest::Approx(0.5).epsilon(1e-14));

    // alpha = 0.5, pure state: bounds swap roles
    const EntropyOrder half(0.5);
    const auto concave = scenario2_bounds(g_alpha(1.0, half), 0.0, half);
    CHECK(concave.lower == doctest::Approx(oracle::kFormTwoMu0A05).epsilon(1e-13));
    CHECK(concave.upper ==
          doctest::Approx(std::sqrt(2.0) * oracle::kFormTwoMu0A05).epsilon(1e-13));

    // zero radius: factor equals the central value, range collapses
    for (double a : {0.3, 2.0, 3.0}) {
        const EntropyOrder order(a);
        const auto collapsed = scenario2_bounds(g_alpha(0.0, order), 0.4, order);
        CHECK(collapsed.lower == doctest::Approx(collapsed.upper).epsilon(1e-14));
    }
}

TEST_CASE("scenario-2 report swaps the pairing across alpha = 1") {
    const QubitObservable z(e3);
    const QubitObservable q = tilted_axis(0.5);
    const QubitState parallel(scaled(e3, 0.7));
    const QubitState perpendicular(scaled(e1, 0.7));

    for (double a : {0.3, 0.5, 0.7}) {
        const EntropyOrder order(a);
        const auto at_parallel = scenario2_report(parallel, z, q, order);
        CHECK(at_parallel.lower_saturated);
        CHECK_FALSE(at_parallel.upper_saturated);
        const auto at_perpendicular = scenario2_report(perpendicular, z, q, order);
        CHECK(at_perpendicular.upper_saturated);
        CHECK_FALSE(at_perpendicular.lower_saturated);
    }
    for (double a : {1.5, 2.0, 3.0}) {
        const EntropyOrder order(a);
        const auto at_parallel = scenario2_report(parallel, z, q, order);
        CHECK(at_parallel.upper_saturated);
        CHECK_FALSE(at_parallel.lower_saturated);
        const auto at_perpendicular = scenario2_report(perpendicular, z, q, order);
        CHECK(at_perpendicular.lower_saturated);
        CHECK_FALSE(at_perpendicular.upper_saturated);
    }

    const auto interior = scenario2_report(diagonal_state(0.7), z, q, EntropyOrder(2.0));
    CHECK_FALSE(interior.lower_saturated);
    CHECK_FALSE(interior.upper_saturated);
}

TEST_CASE("report invariants on random instances") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const QubitState state = random_qubit_state(rng);
        const QubitObservable first(random_unit_bloch(rng));
        const QubitObservable second(random_unit_bloch(rng));
        for (double a : {0.5, 1.0, 2.0}) {
            const EntropyOrder order(a);
            for (const auto& report : {scenario1_report(state, first, second, order),
                                       scenario2_report(state, first, second, order)}) {
                CHECK(report.quantity >= report.lower - 1e-9);
                CHECK(report.quantity <= report.upper + 1e-9);
                CHECK(report.lower_residual == report.quantity - report.lower);
                CHECK(report.upper_residual == report.upper - report.quantity);
                CHECK(report.lower_saturated == (report.lower_residual <= 1e-9));
                CHECK(report.upper_saturated == (report.upper_residual <= 1e-9));
            }
        }
    }
}

TEST_CASE("d-dimensional certainty report") {
    SUBCASE("mutually unbiased pair saturates both upper bounds") {
        for (Eigen::Index d : {2, 3, 4, 5}) {
            const auto [comp, fourier] = fourier_mub_pair(d);
            for (double a : {0.5, 1.0, 2.0}) {
                const EntropyOrder order(a);
                const auto report = qudit_certainty_report(QuditState::completely_mixed(d), comp,
                                                           fourier, order);
                CHECK(report.bases_mutually_unbiased);
                CHECK(report.state_strictly_positive);
                CHECK(report.form1.upper_saturated);
                CHECK(report.form2.upper_saturated);
                CHECK(report.form2.upper ==
                      doctest::Approx(alpha_log(static_cast<double>(d), order)).epsilon(1e-13));
                CHECK(report.form1.lower_is_trivial_floor);
            }
        }
    }

    SUBCASE("repeated measurement is deterministic") {
        std::mt19937_64 rng(42);
        const QuditObservable obs = random_basis(3, rng);
        const QuditState state = random_state(3, rng);
        const auto report = qudit_certainty_report(state, obs, obs, EntropyOrder(2.0));
        CHECK(std::abs(report.form1.quantity) < 1e-12);
        CHECK(std::abs(report.form2.quantity) < 1e-12);
        CHECK_FALSE(report.bases_mutually_unbiased);
    }

    SUBCASE("generic bases stay strictly below the bound") {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 20; ++i) {
            const QuditObservable a = random_basis(3, rng);
            const QuditObservable b = random_basis(3, rng);
            const QuditState state = random_state(3, rng);
            const auto report = qudit_certainty_report(state, a, b, EntropyOrder(2.0));
            CHECK(report.form2.upper_residual > 0.0);
            CHECK(report.form1.quantity >= 0.0);
            CHECK(report.form2.quantity <= report.form2.upper + 1e-9);
        }
    }
}

TEST_CASE("scenario-1 total equals the sum of dephased quantum entropies") {
    // classical entropies of the two generated distributions match the quantum
    // entropies of the once- and twice-dephased states
    std::mt19937_64 rng(44);
    for (int i = 0; i < 50; ++i) {
        const QuditState state = random_state(3, rng);
        const QuditObservable first = random_basis(3, rng);
        const QuditObservable second = random_basis(3, rng);
        for (double a : {0.5, 1.0, 2.0}) {
            const EntropyOrder order(a);
            const double total = scenario1(state, first, second, order).total;
            const QuditState once = dephase_channel(state, first);
            const QuditState twice = dephase_channel(once, second);
            const double quantum_sum = quantum_tsallis(once.spectrum(), order) +
                                       quantum_tsallis(twice.spectrum(), order);
            CHECK(std::abs(total - quantum_sum) < 1e-10);
        }
    }
}

TEST_CASE("sweep tightness on a spot-check grid") {
    // acceptance runs the full grid; this pins one interior cell per regime
    SweepConfig config;
    config.r_norm = 0.8;
    config.mu_grid = {0.3};
    config.alpha_grid = {0.5, 2.0};
    config.r3_points = 2001;

    const auto s1 = sweep_scenario1(config);
    for (const auto& cell : s1.cells) {
        CHECK(std::abs(cell.min_residual) < 1e-9);
        CHECK(std::abs(cell.max_residual) < 1e-9);
        CHECK(std::abs(std::abs(cell.argmin_r3) - 0.8) < 1e-12);
        CHECK(cell.argmax_r3 == 0.0);
    }
    CHECK(s1.violations.empty());

    const auto s2 = sweep_scenario2(config);
    for (const auto& cell : s2.cells) {
        CHECK(std::abs(cell.min_residual) < 1e-9);
        CHECK(std::abs(cell.max_residual) < 1e-9);
        if (cell.alpha < 1.0) {
            CHECK(std::abs(std::abs(cell.argmin_r3) - 0.8) < 1e-12);
            CHECK(cell.argmax_r3 == 0.0);
        } else {
            CHECK(std::abs(std::abs(cell.argmax_r3) - 0.8) < 1e-12);
            CHECK(cell.argmin_r3 == 0.0);
        }
    }
    CHECK(s2.violations.empty());
}
