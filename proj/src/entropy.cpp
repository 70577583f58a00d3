#include "sqent/entropy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sqent {

namespace {

constexpr double kClampTol = 1e-12;
constexpr double kSumTol = 1e-12;

double clamp_unit(double x, const char* what) {
    if (x < -kClampTol || x > 1.0 + kClampTol) {
        throw std::domain_error(std::string(what) + " outside [0,1] beyond clamping tolerance: " +
                                std::to_string(x));
    }
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

}  // namespace

EntropyOrder::EntropyOrder(double alpha, double shannon_switch_width)
    : alpha_(alpha), width_(shannon_switch_width) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("entropy order alpha must be positive");
    }
    if (!(shannon_switch_width > 0.0) || shannon_switch_width >= 0.5) {
        throw std::domain_error("shannon_switch_width must lie in (0, 0.5)");
    }
    // The band is shrunk by a relative 1e-9 guard so that orders written
    // exactly one width away from 1 (such as 0.999999) stay in the generic
    // formula regime even though decimal parsing rounds |alpha - 1| low.
    shannon_ = std::abs(alpha_ - 1.0) < width_ * (1.0 - 1e-9);
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs,
                                                 std::vector<double> labels)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
    if (probs_.empty()) {
        throw std::invalid_argument("probability distribution must have at least one outcome");
    }
    if (labels_.size() != probs_.size()) {
        throw std::invalid_argument("label count must match outcome count");
    }
    double sum = 0.0;
    for (double& p : probs_) {
        p = clamp_unit(p, "probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw std::invalid_argument("probabilities must sum to 1 within 1e-12, got sum " +
                                    std::to_string(sum));
    }
}

namespace {

std::vector<double> index_labels(std::size_t n) {
    std::vector<double> labels(n);
    std::iota(labels.begin(), labels.end(), 0.0);
    return labels;
}

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs)
    : ProbabilityDistribution(probs, index_labels(probs.size())) {}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform distribution needs n >= 1");
    return ProbabilityDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ConditionalTable::ConditionalTable(ProbabilityDistribution marginal,
                                   std::vector<ProbabilityDistribution> conditionals)
    : marginal_(std::move(marginal)), conditionals_(std::move(conditionals)) {
    if (conditionals_.size() != marginal_.size()) {
        throw std::invalid_argument("need one conditional distribution per marginal outcome");
    }
    const auto& x_labels = conditionals_.front().labels();
    double joint = 0.0;
    for (std::size_t z = 0; z < conditionals_.size(); ++z) {
        if (conditionals_[z].labels() != x_labels) {
            throw std::invalid_argument("all conditionals must share one x-label set");
        }
        for (std::size_t x = 0; x < conditionals_[z].size(); ++x) {
            joint += marginal_.prob(z) * conditionals_[z].prob(x);
        }
    }
    if (std::abs(joint - 1.0) > kSumTol) {
        throw std::invalid_argument("implied joint distribution must sum to 1 within 1e-12");
    }
}

double alpha_log(double xi, const EntropyOrder& order) {
    if (!(xi > 0.0)) {
        throw std::domain_error("alpha_log requires a positive argument");
    }
    if (order.shannon_regime()) return std::log(xi);
    const double one_minus_alpha = 1.0 - order.alpha();
    return (std::pow(xi, one_minus_alpha) - 1.0) / one_minus_alpha;
}

double eta(double xi, const EntropyOrder& order) {
    xi = clamp_unit(xi, "eta argument");
    if (xi == 0.0 || xi == 1.0) return 0.0;
    if (order.shannon_regime()) return -xi * std::log(xi);
    return (std::pow(xi, order.alpha()) - xi) / (1.0 - order.alpha());
}

double tsallis(const ProbabilityDistribution& dist, const EntropyOrder& order) {
    // Summing eta(p) term by term keeps the identity with the eta kernel exact
    // and avoids the cancellation of (sum p^alpha - 1) close to alpha = 1.
    double h = 0.0;
    for (double p : dist.probs()) h += eta(p, order);
    return h;
}

double renyi_from_tsallis(double h, const EntropyOrder& order) {
    if (order.shannon_regime()) return h;
    const double one_minus_alpha = 1.0 - order.alpha();
    const double arg = one_minus_alpha * h;
    if (arg <= -1.0) {
        throw std::domain_error("renyi_from_tsallis: 1 + (1-alpha) h must be positive");
    }
    return std::log1p(arg) / one_minus_alpha;
}

double quantum_tsallis(const ProbabilityDistribution& eigenvalues, const EntropyOrder& order) {
    return tsallis(eigenvalues, order);
}

namespace {

double weighted_conditional_sum(const ConditionalTable& table, const EntropyOrder& order,
                                bool alpha_weights) {
    double total = 0.0;
    for (std::size_t z = 0; z < table.marginal().size(); ++z) {
        const double pz = table.marginal().prob(z);
        if (pz == 0.0) continue;  // zero-weight outcomes contribute nothing
        const double h_given_z = tsallis(table.conditional(z), order);
        const double weight = alpha_weights ? std::pow(pz, order.alpha()) : pz;
        total += weight * h_given_z;
    }
    return total;
}

}  // namespace

double conditional_tsallis_form1(const ConditionalTable& table, const EntropyOrder& order) {
    const bool alpha_weights = !order.shannon_regime();
    return weighted_conditional_sum(table, order, alpha_weights);
}

double conditional_tsallis_form2(const ConditionalTable& table, const EntropyOrder& order) {
    return weighted_conditional_sum(table, order, /*alpha_weights=*/false);
}

}  // namespace sqent
