#pragma once

#include <vector>

#include "sqent/entropy.hpp"

// Bloch-vector representation of qubit states and non-degenerate qubit
// observables, the dephasing channel of a projective measurement, and the
// outcome distributions of one or two successive measurements in closed form.
// No 2x2 matrices are materialized here; everything is Bloch algebra.

namespace sqent {

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double norm_squared() const { return x * x + y * y + z * z; }
};

double dot(const BlochVector& a, const BlochVector& b);
BlochVector cross(const BlochVector& a, const BlochVector& b);
BlochVector scaled(const BlochVector& v, double factor);
BlochVector normalized(const BlochVector& v);

/// Qubit density matrix (1 + r.sigma)/2 identified by its Bloch vector r,
/// |r| <= 1 within 1e-12.
class QubitState {
  public:
    explicit QubitState(BlochVector bloch);

    const BlochVector& bloch() const { return bloch_; }
    double purity() const { return 0.5 * (1.0 + bloch_.norm_squared()); }

    /// Eigenvalues (1 + |r|)/2, (1 - |r|)/2 as a distribution.
    ProbabilityDistribution spectrum() const;

    static QubitState completely_mixed() { return QubitState(BlochVector{}); }

  private:
    BlochVector bloch_;
};

/// Non-degenerate qubit observable: a unit Bloch axis for the projectors
/// (1 +- axis.sigma)/2 plus two distinct eigenvalue labels. The labels never
/// enter a probability.
class QubitObservable {
  public:
    explicit QubitObservable(BlochVector axis, double eigen_plus = +1.0,
                             double eigen_minus = -1.0);

    const BlochVector& axis() const { return axis_; }
    double eigen_plus() const { return eigen_plus_; }
    double eigen_minus() const { return eigen_minus_; }

  private:
    BlochVector axis_;
    double eigen_plus_;
    double eigen_minus_;
};

/// Outcome distribution ((1 + p.r)/2, (1 - p.r)/2) of measuring obs on state,
/// labeled by the observable eigenvalues (plus outcome first).
ProbabilityDistribution measurement_probabilities(const QubitState& state,
                                                  const QubitObservable& obs);

/// Projective-measurement channel with erased outcome: maps the Bloch vector
/// to its projection (p.r) p onto the measurement axis. Idempotent.
QubitState dephase_channel(const QubitState& state, const QubitObservable& obs);

/// Outcome distribution of measuring `second` on the dephased state,
/// ((1 +- (q.p)(p.r))/2), in closed form.
ProbabilityDistribution second_measurement_probabilities(const QubitState& state,
                                                         const QubitObservable& first,
                                                         const QubitObservable& second);

/// State-independent conditionals p(x=n | z=m) = (1 + n m (q.p))/2, one
/// distribution per first-measurement outcome (m = +1 row first).
std::vector<ProbabilityDistribution> conditional_probabilities(const QubitObservable& first,
                                                               const QubitObservable& second);

/// Overlap mu = q.p of the two measurement axes, in [-1, 1].
double overlap_mu(const QubitObservable& first, const QubitObservable& second);

/// True iff the state commutes with the observable: |r x p| <= tol.
bool commutes_with(const QubitState& state, const QubitObservable& obs, double tol = 1e-9);

/// True iff the observable mean matches the maximally mixed value,
/// i.e. |p.r| <= tol.
bool zero_mean_condition(const QubitState& state, const QubitObservable& obs, double tol = 1e-9);

}  // namespace sqent
