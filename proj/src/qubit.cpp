#include "sqent/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace sqent {

namespace {
constexpr double kStateNormTol = 1e-12;
constexpr double kAxisNormTol = 1e-12;
}  // namespace

double BlochVector::norm() const { return std::sqrt(norm_squared()); }

double dot(const BlochVector& a, const BlochVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

BlochVector cross(const BlochVector& a, const BlochVector& b) {
    return BlochVector{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

BlochVector scaled(const BlochVector& v, double factor) {
    return BlochVector{factor * v.x, factor * v.y, factor * v.z};
}

BlochVector normalized(const BlochVector& v) {
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero Bloch vector");
    return scaled(v, 1.0 / n);
}

QubitState::QubitState(BlochVector bloch) : bloch_(bloch) {
    if (bloch_.norm() > 1.0 + kStateNormTol) {
        throw std::invalid_argument("qubit Bloch vector must have |r| <= 1");
    }
}

ProbabilityDistribution QubitState::spectrum() const {
    const double r = std::min(bloch_.norm(), 1.0);
    return ProbabilityDistribution({0.5 * (1.0 + r), 0.5 * (1.0 - r)}, {+1.0, -1.0});
}

QubitObservable::QubitObservable(BlochVector axis, double eigen_plus, double eigen_minus)
    : axis_(axis), eigen_plus_(eigen_plus), eigen_minus_(eigen_minus) {
    if (std::abs(axis_.norm() - 1.0) > kAxisNormTol) {
        throw std::invalid_argument("observable axis must be a unit Bloch vector");
    }
    if (eigen_plus_ == eigen_minus_) {
        throw std::invalid_argument("observable eigenvalues must be distinct (non-degenerate)");
    }
}

ProbabilityDistribution measurement_probabilities(const QubitState& state,
                                                  const QubitObservable& obs) {
    const double pr = dot(obs.axis(), state.bloch());
    return ProbabilityDistribution({0.5 * (1.0 + pr), 0.5 * (1.0 - pr)},
                                   {obs.eigen_plus(), obs.eigen_minus()});
}

QubitState dephase_channel(const QubitState& state, const QubitObservable& obs) {
    const double pr = dot(obs.axis(), state.bloch());
    return QubitState(scaled(obs.axis(), pr));
}

ProbabilityDistribution second_measurement_probabilities(const QubitState& state,
                                                         const QubitObservable& first,
                                                         const QubitObservable& second) {
    const double mu = overlap_mu(first, second);
    const double pr = dot(first.axis(), state.bloch());
    return ProbabilityDistribution({0.5 * (1.0 + mu * pr), 0.5 * (1.0 - mu * pr)},
                                   {second.eigen_plus(), second.eigen_minus()});
}

std::vector<ProbabilityDistribution> conditional_probabilities(const QubitObservable& first,
                                                               const QubitObservable& second) {
    const double mu = overlap_mu(first, second);
    const std::vector<double> labels{second.eigen_plus(), second.eigen_minus()};
    std::vector<ProbabilityDistribution> rows;
    rows.reserve(2);
    for (double m : {+1.0, -1.0}) {
        rows.emplace_back(std::vector<double>{0.5 * (1.0 + m * mu), 0.5 * (1.0 - m * mu)},
                          labels);
    }
    return rows;
}

double overlap_mu(const QubitObservable& first, const QubitObservable& second) {
    return dot(second.axis(), first.axis());
}

bool commutes_with(const QubitState& state, const QubitObservable& obs, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return cross(state.bloch(), obs.axis()).norm() <= tol;
}

bool zero_mean_condition(const QubitState& state, const QubitObservable& obs, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return std::abs(dot(obs.axis(), state.bloch())) <= tol;
}

}  // namespace sqent
