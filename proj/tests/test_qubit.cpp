#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sqent/qubit.hpp"
#include "sqent/verify.hpp"

using namespace sqent;

namespace {
const BlochVector e1{1.0, 0.0, 0.0};
const BlochVector e3{0.0, 0.0, 1.0};
}  // namespace

TEST_CASE("state and observable validation") {
    CHECK_THROWS_AS(QubitState(BlochVector{0.8, 0.8, 0.8}), std::invalid_argument);
    CHECK_NOTHROW(QubitState(BlochVector{0.0, 0.0, 1.0}));
    CHECK_THROWS_AS(QubitObservable(BlochVector{0.0, 0.0, 0.9}), std::invalid_argument);
    CHECK_THROWS_AS(QubitObservable(e3, 1.0, 1.0), std::invalid_argument);

    const QubitState mixed = QubitState::completely_mixed();
    CHECK(mixed.purity() == 0.5);
    CHECK(QubitState(BlochVector{0.6, 0.0, 0.0}).purity() == doctest::Approx(0.68));
}

TEST_CASE("measurement probabilities") {
    const QubitObservable z(e3);
    CHECK(measurement_probabilities(QubitState::completely_mixed(), z).prob(0) == 0.5);

    // eigenstate of the measured observable
    const auto point = measurement_probabilities(QubitState(e3), z);
    CHECK(point.prob(0) == 1.0);
    CHECK(point.prob(1) == 0.0);

    const auto probs = measurement_probabilities(QubitState(BlochVector{0.0, 0.0, 0.6}), z);
    CHECK(probs.prob(0) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(probs.prob(1) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(probs.label(0) == +1.0);
    CHECK(probs.label(1) == -1.0);
}

TEST_CASE("dephasing channel") {
    const QubitObservable z(e3);

    // orthogonal Bloch vector is erased completely
    const QubitState erased = dephase_channel(QubitState(BlochVector{0.5, 0.0, 0.0}), z);
    CHECK(erased.bloch().norm() == 0.0);

    // parallel Bloch vector is a fixed point
    const QubitState fixed = dephase_channel(QubitState(BlochVector{0.0, 0.0, 0.7}), z);
    CHECK(fixed.bloch().z == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(fixed.bloch().x == 0.0);

    const QubitState projected = dephase_channel(QubitState(BlochVector{0.3, 0.4, 0.5}), z);
    CHECK(projected.bloch().x == 0.0);
    CHECK(projected.bloch().y == 0.0);
    CHECK(projected.bloch().z == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("second measurement probabilities") {
    const QubitObservable z(e3);
    const QubitObservable x(e1);

    // orthogonal axes: uniform regardless of the state
    const auto unbiased =
        second_measurement_probabilities(QubitState(BlochVector{0.2, 0.3, 0.4}), z, x);
    CHECK(unbiased.prob(0) == 0.5);

    const auto aligned = second_measurement_probabilities(QubitState(e3), z, z);
    CHECK(aligned.prob(0) == 1.0);

    // mu = 0.5, p.r = 0.6
    const QubitObservable tilted(BlochVector{std::sqrt(3.0) / 2.0, 0.0, 0.5});
    const auto probs =
        second_measurement_probabilities(QubitState(BlochVector{0.0, 0.0, 0.6}), z, tilted);
    CHECK(probs.prob(0) == doctest::Approx(0.65).epsilon(1e-14));
    CHECK(probs.prob(1) == doctest::Approx(0.35).epsilon(1e-14));
}

TEST_CASE("conditional probabilities are state independent rows") {
    const QubitObservable z(e3);
    const QubitObservable x(e1);

    const auto unbiased = conditional_probabilities(z, x);
    for (const auto& row : unbiased) {
        CHECK(row.prob(0) == 0.5);
        CHECK(row.prob(1) == 0.5);
    }

    const auto repeated = conditional_probabilities(z, z);
    CHECK(repeated[0].prob(0) == 1.0);  // n = m with mu = 1
    CHECK(repeated[0].prob(1) == 0.0);
    CHECK(repeated[1].prob(0) == 0.0);
    CHECK(repeated[1].prob(1) == 1.0);

    // mu = -0.8, row m = +1 gives (0.1, 0.9)
    const QubitObservable flipped(BlochVector{0.0, 0.6, -0.8});
    const auto rows = conditional_probabilities(z, flipped);
    CHECK(rows[0].prob(0) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(rows[0].prob(1) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("eigenvalue labels never enter the probabilities") {
    const QubitState state(BlochVector{0.0, 0.0, 0.6});
    const QubitObservable spin(e3);
    const QubitObservable shifted(e3, 5.0, -3.0);

    const auto a = measurement_probabilities(state, spin);
    const auto b = measurement_probabilities(state, shifted);
    CHECK(a.prob(0) == b.prob(0));
    CHECK(a.prob(1) == b.prob(1));
    CHECK(b.label(0) == 5.0);
    CHECK(b.label(1) == -3.0);
}

TEST_CASE("axis overlap") {
    CHECK(overlap_mu(QubitObservable(e3), QubitObservable(e3)) == 1.0);
    CHECK(overlap_mu(QubitObservable(e3), QubitObservable(e1)) == 0.0);
    const double theta = std::numbers::pi / 3.0;
    const QubitObservable tilted(BlochVector{std::sin(theta), 0.0, std::cos(theta)});
    CHECK(overlap_mu(QubitObservable(e3), tilted) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("equality-condition predicates") {
    const QubitObservable z(e3);
    CHECK(commutes_with(QubitState(BlochVector{0.0, 0.0, 0.4}), z));
    CHECK_FALSE(commutes_with(QubitState(BlochVector{0.5, 0.0, 0.0}), z));
    CHECK(commutes_with(QubitState(BlochVector{1e-14, 0.0, 0.5}), z, 1e-10));

    CHECK(zero_mean_condition(QubitState(BlochVector{0.5, 0.0, 0.0}), z));
    CHECK_FALSE(zero_mean_condition(QubitState(e3), z));
    CHECK(zero_mean_condition(QubitState(BlochVector{0.6, 0.0, 1e-13}), z, 1e-10));

    CHECK_THROWS_AS(commutes_with(QubitState(e3), z, 0.0), std::invalid_argument);
}

TEST_CASE("channel and probability laws on random instances") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 1000; ++i) {
        const QubitState state = random_qubit_state(rng);
        const QubitObservable first(random_unit_bloch(rng));
        const QubitObservable second(random_unit_bloch(rng));

        // closed-form second distribution equals the measure-after-dephase pipeline
        const auto direct = second_measurement_probabilities(state, first, second);
        const auto piped = measurement_probabilities(dephase_channel(state, first), second);
        CHECK(std::abs(direct.prob(0) - piped.prob(0)) < 1e-12);
        CHECK(std::abs(direct.prob(1) - piped.prob(1)) < 1e-12);

        // purity of the dephased state: (1 + (p.r)^2)/2, never above the input purity
        const QubitState dephased = dephase_channel(state, first);
        const double pr = dot(first.axis(), state.bloch());
        CHECK(dephased.purity() == doctest::Approx(0.5 * (1.0 + pr * pr)).epsilon(1e-12));
        CHECK(dephased.purity() <= state.purity() + 1e-15);

        // repeating the measurement reproduces the original outcome distribution
        const auto repeat = measurement_probabilities(dephased, first);
        const auto original = measurement_probabilities(state, first);
        CHECK(std::abs(repeat.prob(0) - original.prob(0)) < 1e-12);

        // idempotence
        const QubitState twice = dephase_channel(dephased, first);
        CHECK(std::abs(twice.bloch().x - dephased.bloch().x) < 1e-12);
        CHECK(std::abs(twice.bloch().y - dephased.bloch().y) < 1e-12);
        CHECK(std::abs(twice.bloch().z - dephased.bloch().z) < 1e-12);

        // conditional rows sum to 1 and carry no state dependence by construction
        for (const auto& row : conditional_probabilities(first, second)) {
            CHECK(std::abs(row.prob(0) + row.prob(1) - 1.0) < 1e-12);
        }
    }
}
