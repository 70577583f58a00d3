#pragma once

#include <Eigen/Dense>
#include <random>
#include <utility>
#include <vector>

#include "sqent/entropy.hpp"
#include "sqent/qubit.hpp"

// d-dimensional machinery: density matrices, non-degenerate observables as
// orthonormal eigenbases, the dephasing channel, state-independent
// conditional probabilities, and the computational/Fourier mutually unbiased
// basis pair. Also holds the Bloch <-> matrix bridges used to cross-check the
// qubit closed forms against the d = 2 matrix pipeline.

namespace sqent {

/// Density matrix: Hermitian, unit trace, positive semi-definite, all
/// within tolerance 1e-10.
class QuditState {
  public:
    explicit QuditState(Eigen::MatrixXcd matrix);

    Eigen::Index dim() const { return matrix_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

    /// Eigenvalues in descending order as a distribution; rounding-level
    /// negatives are clamped to 0 and the spectrum renormalized.
    ProbabilityDistribution spectrum() const;

    static QuditState completely_mixed(Eigen::Index d);

  private:
    Eigen::MatrixXcd matrix_;
};

/// Non-degenerate observable: an orthonormal eigenbasis (matrix columns) plus
/// pairwise distinct eigenvalues. Projectors are the rank-1 |z><z|.
class QuditObservable {
  public:
    QuditObservable(Eigen::MatrixXcd basis, Eigen::VectorXd eigenvalues);

    Eigen::Index dim() const { return basis_.rows(); }
    const Eigen::MatrixXcd& basis() const { return basis_; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    Eigen::MatrixXcd::ConstColXpr eigenvector(Eigen::Index z) const { return basis_.col(z); }

    /// Standard basis with eigenvalues 0, 1, ..., d-1.
    static QuditObservable computational(Eigen::Index d);

  private:
    Eigen::MatrixXcd basis_;
    Eigen::VectorXd eigenvalues_;
};

/// Outcome probabilities <z|rho|z> over the eigenbasis, labeled by the
/// observable eigenvalues.
ProbabilityDistribution outcome_probabilities(const QuditState& state,
                                              const QuditObservable& obs);

/// Projective-measurement channel sum_z |z><z| rho |z><z|: zeroes the
/// off-diagonal elements in the observable eigenbasis. Trace preserving and
/// idempotent.
QuditState dephase_channel(const QuditState& state, const QuditObservable& obs);

/// State-independent conditionals p(x|z) = |<x|z>|^2, one distribution over
/// x per first-observable outcome z.
std::vector<ProbabilityDistribution> conditional_probabilities(const QuditObservable& first,
                                                               const QuditObservable& second);

/// Computational basis paired with the discrete-Fourier basis
/// exp(2 pi i j k / d) / sqrt(d); the pair is mutually unbiased in every d.
std::pair<QuditObservable, QuditObservable> fourier_mub_pair(Eigen::Index d);

/// True iff every cross overlap |<x|z>|^2 lies within tol of 1/d.
bool is_mub_pair(const QuditObservable& first, const QuditObservable& second, double tol = 1e-9);

/// True iff the smallest eigenvalue of the state is >= tol.
bool strictly_positive(const QuditState& state, double tol);

/// Ginibre-constructed random density matrix G G^dag / Tr(G G^dag).
QuditState random_state(Eigen::Index d, std::mt19937_64& rng);

/// Haar-random eigenbasis (QR of a Ginibre matrix with phase correction),
/// eigenvalues 0, 1, ..., d-1.
QuditObservable random_basis(Eigen::Index d, std::mt19937_64& rng);

/// Bloch -> matrix bridges for the d = 2 cross-checks.
QuditState to_qudit(const QubitState& state);
QuditObservable to_qudit(const QubitObservable& obs);

/// Bloch vector (Tr(rho sigma_k)) of a 2x2 density matrix.
BlochVector bloch_from(const QuditState& state);

}  // namespace sqent
