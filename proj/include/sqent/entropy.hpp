#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Tsallis-family entropic functions of finite probability distributions:
// the deformed logarithm, the eta kernel, Tsallis and Renyi entropies, the
// quantum entropy of a spectrum, and the two conditional forms built from
// a marginal plus per-outcome conditional distributions.

namespace sqent {

/// Entropic order alpha > 0 with an explicit switching band around alpha = 1.
///
/// Inside the band (|alpha - 1| < shannon_switch_width) every function of this
/// order evaluates its Shannon/von Neumann limit instead of the generic
/// formula, which degrades as 1/(1 - alpha) near alpha = 1.
class EntropyOrder {
  public:
    explicit EntropyOrder(double alpha, double shannon_switch_width = 1e-6);

    double alpha() const { return alpha_; }
    double shannon_switch_width() const { return width_; }

    /// True when this order is treated as the Shannon limit alpha -> 1.
    bool shannon_regime() const { return shannon_; }

    static EntropyOrder shannon() { return EntropyOrder(1.0); }

  private:
    double alpha_;
    double width_;
    bool shannon_;
};

/// Finite probability distribution with one real outcome label per entry.
///
/// Entries within 1e-12 outside [0,1] are clamped; larger violations and
/// sums deviating from 1 by more than 1e-12 are rejected.
class ProbabilityDistribution {
  public:
    ProbabilityDistribution(std::vector<double> probs, std::vector<double> labels);
    explicit ProbabilityDistribution(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    double prob(std::size_t i) const { return probs_[i]; }
    double label(std::size_t i) const { return labels_[i]; }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<double>& labels() const { return labels_; }

    static ProbabilityDistribution uniform(std::size_t n);

  private:
    std::vector<double> probs_;
    std::vector<double> labels_;
};

/// Marginal over z together with one conditional distribution over x per
/// z-outcome. All conditionals must share one x-label set, and the implied
/// joint p(x|z) p(z) must sum to 1 within 1e-12.
class ConditionalTable {
  public:
    ConditionalTable(ProbabilityDistribution marginal,
                     std::vector<ProbabilityDistribution> conditionals);

    const ProbabilityDistribution& marginal() const { return marginal_; }
    const std::vector<ProbabilityDistribution>& conditionals() const { return conditionals_; }
    const ProbabilityDistribution& conditional(std::size_t z) const { return conditionals_[z]; }

  private:
    ProbabilityDistribution marginal_;
    std::vector<ProbabilityDistribution> conditionals_;
};

/// Deformed logarithm: (xi^(1-alpha) - 1) / (1 - alpha), ln(xi) in the
/// Shannon regime. Requires xi > 0.
double alpha_log(double xi, const EntropyOrder& order);

/// Entropy kernel eta(xi) = (xi^alpha - xi) / (1 - alpha) on [0,1], with
/// eta(0) = eta(1) = 0; -xi ln(xi) in the Shannon regime.
double eta(double xi, const EntropyOrder& order);

/// Tsallis entropy of a distribution, evaluated as the sum of eta over the
/// entries. Equals (sum p^alpha - 1) / (1 - alpha); Shannon entropy in the
/// Shannon regime. Maximal value alpha_log(n) on the n-outcome uniform.
double tsallis(const ProbabilityDistribution& dist, const EntropyOrder& order);

/// Renyi entropy from a Tsallis value of the same order:
/// ln(1 + (1-alpha) h) / (1-alpha); the identity map in the Shannon regime.
double renyi_from_tsallis(double h, const EntropyOrder& order);

/// Quantum entropy of a density-matrix spectrum; numerically identical to
/// tsallis() of the eigenvalue distribution.
double quantum_tsallis(const ProbabilityDistribution& eigenvalues, const EntropyOrder& order);

/// First conditional form: sum_z p(z)^alpha H(X|z). Reduces to
/// sum_z p(z) H(X|z) in the Shannon regime.
double conditional_tsallis_form1(const ConditionalTable& table, const EntropyOrder& order);

/// Second conditional form: sum_z p(z) H(X|z) for every order.
double conditional_tsallis_form2(const ConditionalTable& table, const EntropyOrder& order);

}  // namespace sqent
