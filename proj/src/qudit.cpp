#include "sqent/qudit.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace sqent {

namespace {

constexpr double kMatrixTol = 1e-10;

using complex = std::complex<double>;

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace

QuditState::QuditState(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
        throw std::invalid_argument("density matrix must be square and non-empty");
    }
    if (!matrix_.allFinite()) {
        throw std::invalid_argument("density matrix entries must be finite");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kMatrixTol) {
        throw std::invalid_argument("density matrix must be Hermitian");
    }
    if (std::abs(matrix_.trace() - complex(1.0, 0.0)) > kMatrixTol) {
        throw std::invalid_argument("density matrix must have unit trace");
    }
    if (hermitian_eigenvalues(matrix_).minCoeff() < -kMatrixTol) {
        throw std::invalid_argument("density matrix must be positive semi-definite");
    }
}

ProbabilityDistribution QuditState::spectrum() const {
    Eigen::VectorXd ev = hermitian_eigenvalues(matrix_);
    std::vector<double> probs(static_cast<std::size_t>(ev.size()));
    double sum = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        // descending order; rounding-level negatives become exact zeros
        const double lambda = std::max(ev(ev.size() - 1 - i), 0.0);
        probs[static_cast<std::size_t>(i)] = lambda;
        sum += lambda;
    }
    for (double& p : probs) p /= sum;
    return ProbabilityDistribution(std::move(probs));
}

QuditState QuditState::completely_mixed(Eigen::Index d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    return QuditState(Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

QuditObservable::QuditObservable(Eigen::MatrixXcd basis, Eigen::VectorXd eigenvalues)
    : basis_(std::move(basis)), eigenvalues_(std::move(eigenvalues)) {
    const Eigen::Index d = basis_.rows();
    if (d < 1 || basis_.cols() != d) {
        throw std::invalid_argument("eigenbasis must be a square matrix of column vectors");
    }
    if (eigenvalues_.size() != d) {
        throw std::invalid_argument("need one eigenvalue per eigenvector");
    }
    Eigen::MatrixXcd gram = basis_.adjoint() * basis_;
    if ((gram - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > kMatrixTol) {
        throw std::invalid_argument("eigenvectors must be orthonormal");
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            if (std::abs(eigenvalues_(i) - eigenvalues_(j)) <= 1e-12) {
                throw std::invalid_argument("eigenvalues must be pairwise distinct");
            }
        }
    }
}

QuditObservable QuditObservable::computational(Eigen::Index d) {
    Eigen::VectorXd eigenvalues = Eigen::VectorXd::LinSpaced(d, 0.0, static_cast<double>(d - 1));
    return QuditObservable(Eigen::MatrixXcd::Identity(d, d), std::move(eigenvalues));
}

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b) {
    if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

ProbabilityDistribution outcome_probabilities(const QuditState& state,
                                              const QuditObservable& obs) {
    require_same_dim(state.dim(), obs.dim());
    const Eigen::Index d = state.dim();
    std::vector<double> probs(static_cast<std::size_t>(d));
    std::vector<double> labels(static_cast<std::size_t>(d));
    for (Eigen::Index z = 0; z < d; ++z) {
        const complex value = obs.eigenvector(z).dot(state.matrix() * obs.eigenvector(z));
        probs[static_cast<std::size_t>(z)] = value.real();
        labels[static_cast<std::size_t>(z)] = obs.eigenvalues()(z);
    }
    return ProbabilityDistribution(std::move(probs), std::move(labels));
}

QuditState dephase_channel(const QuditState& state, const QuditObservable& obs) {
    require_same_dim(state.dim(), obs.dim());
    const Eigen::Index d = state.dim();
    Eigen::VectorXd diag(d);
    for (Eigen::Index z = 0; z < d; ++z) {
        diag(z) = obs.eigenvector(z).dot(state.matrix() * obs.eigenvector(z)).real();
    }
    Eigen::MatrixXcd out = obs.basis() * diag.asDiagonal() * obs.basis().adjoint();
    out = 0.5 * (out + out.adjoint().eval());
    return QuditState(std::move(out));
}

std::vector<ProbabilityDistribution> conditional_probabilities(const QuditObservable& first,
                                                               const QuditObservable& second) {
    require_same_dim(first.dim(), second.dim());
    const Eigen::Index d = first.dim();
    // overlaps(x, z) = <x|z>
    Eigen::MatrixXcd overlaps = second.basis().adjoint() * first.basis();
    std::vector<double> labels(static_cast<std::size_t>(d));
    for (Eigen::Index x = 0; x < d; ++x) {
        labels[static_cast<std::size_t>(x)] = second.eigenvalues()(x);
    }
    std::vector<ProbabilityDistribution> rows;
    rows.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index z = 0; z < d; ++z) {
        std::vector<double> probs(static_cast<std::size_t>(d));
        for (Eigen::Index x = 0; x < d; ++x) {
            probs[static_cast<std::size_t>(x)] = std::norm(overlaps(x, z));
        }
        rows.emplace_back(std::move(probs), labels);
    }
    return rows;
}

std::pair<QuditObservable, QuditObservable> fourier_mub_pair(Eigen::Index d) {
    if (d < 2) throw std::invalid_argument("mutually unbiased pair needs d >= 2");
    Eigen::MatrixXcd fourier(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(j) *
                                 static_cast<double>(k) / static_cast<double>(d);
            fourier(j, k) = scale * complex(std::cos(phase), std::sin(phase));
        }
    }
    Eigen::VectorXd eigenvalues = Eigen::VectorXd::LinSpaced(d, 0.0, static_cast<double>(d - 1));
    return {QuditObservable::computational(d), QuditObservable(std::move(fourier), eigenvalues)};
}

bool is_mub_pair(const QuditObservable& first, const QuditObservable& second, double tol) {
    require_same_dim(first.dim(), second.dim());
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const double target = 1.0 / static_cast<double>(first.dim());
    Eigen::MatrixXcd overlaps = second.basis().adjoint() * first.basis();
    return (overlaps.cwiseAbs2().array() - target).abs().maxCoeff() <= tol;
}

bool strictly_positive(const QuditState& state, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return hermitian_eigenvalues(state.matrix()).minCoeff() >= tol;
}

QuditState random_state(Eigen::Index d, std::mt19937_64& rng) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd ginibre(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            ginibre(i, j) = complex(normal(rng), normal(rng));
        }
    }
    Eigen::MatrixXcd rho = ginibre * ginibre.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint().eval());
    return QuditState(std::move(rho));
}

QuditObservable random_basis(Eigen::Index d, std::mt19937_64& rng) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd ginibre(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            ginibre(i, j) = complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // phase correction makes the distribution Haar
    for (Eigen::Index j = 0; j < d; ++j) {
        const complex rjj = r(j, j);
        if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
    }
    Eigen::VectorXd eigenvalues = Eigen::VectorXd::LinSpaced(d, 0.0, static_cast<double>(d - 1));
    return QuditObservable(std::move(q), std::move(eigenvalues));
}

QuditState to_qudit(const QubitState& state) {
    const BlochVector& r = state.bloch();
    Eigen::MatrixXcd rho(2, 2);
    rho(0, 0) = complex(0.5 * (1.0 + r.z), 0.0);
    rho(1, 1) = complex(0.5 * (1.0 - r.z), 0.0);
    rho(0, 1) = complex(0.5 * r.x, -0.5 * r.y);
    rho(1, 0) = complex(0.5 * r.x, 0.5 * r.y);
    return QuditState(std::move(rho));
}

QuditObservable to_qudit(const QubitObservable& obs) {
    const BlochVector& p = obs.axis();
    Eigen::Vector2cd plus;
    // spinor for the +1 eigenvector of p.sigma; pick the numerically stable branch
    if (1.0 + p.z >= 1.0 - p.z) {
        const double norm = std::sqrt(2.0 * (1.0 + p.z));
        plus << complex(1.0 + p.z, 0.0) / norm, complex(p.x, p.y) / norm;
    } else {
        const double norm = std::sqrt(2.0 * (1.0 - p.z));
        plus << complex(p.x, -p.y) / norm, complex(1.0 - p.z, 0.0) / norm;
    }
    Eigen::Vector2cd minus;
    minus << -std::conj(plus(1)), std::conj(plus(0));
    Eigen::MatrixXcd basis(2, 2);
    basis.col(0) = plus;
    basis.col(1) = minus;
    Eigen::VectorXd eigenvalues(2);
    eigenvalues << obs.eigen_plus(), obs.eigen_minus();
    return QuditObservable(std::move(basis), std::move(eigenvalues));
}

BlochVector bloch_from(const QuditState& state) {
    if (state.dim() != 2) throw std::invalid_argument("Bloch vector requires a 2x2 state");
    const Eigen::MatrixXcd& rho = state.matrix();
    return BlochVector{2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
                       (rho(0, 0) - rho(1, 1)).real()};
}

}  // namespace sqent
