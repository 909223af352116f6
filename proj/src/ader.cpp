#include "oco/ader.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oco/anh.hpp"

namespace oco {

StepSizeGrid build_grid(double D, double G, int T) {
    if (!(D > 0.0) || !(G > 0.0) || T < 1)
        throw std::invalid_argument("build_grid: need D, G > 0 and T >= 1");
    const int N = static_cast<int>(std::ceil(0.5 * std::log2(1.0 + 4.0 * T / 7.0))) + 1;
    StepSizeGrid grid;
    grid.etas.resize(N);
    const double base = (D / G) * std::sqrt(7.0 / (2.0 * T));
    for (int i = 0; i < N; ++i) grid.etas[i] = std::ldexp(base, i);  // 2^(i-1) with i 1-based
    return grid;
}

std::vector<double> hedge_update(const std::vector<double>& weights,
                                 const std::vector<double>& expert_losses, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("hedge_update: alpha must be > 0");
    if (weights.size() != expert_losses.size() || weights.empty())
        throw std::invalid_argument("hedge_update: size mismatch");
    std::vector<double> next(weights.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        next[i] = weights[i] * std::exp(-alpha * expert_losses[i]);
        sum += next[i];
    }
    if (sum <= 0.0) throw std::runtime_error("hedge_update: degenerate weights");
    for (double& w : next) w /= sum;
    return next;
}

AderLearner::AderLearner(DomainPtr domain, double D, double G, int horizon)
    : grid_(build_grid(D, G, horizon)), horizon_(horizon) {
    alpha_ = std::sqrt(8.0 / horizon);
    const int N = grid_.size();
    experts_.reserve(N);
    for (int i = 0; i < N; ++i) experts_.push_back(make_ogd(domain, grid_.etas[i]));
    // Prior C/(i(i+1)) telescopes to exactly 1 over i = 1..N.
    weights_.resize(N);
    logw_.resize(N);
    const double C = 1.0 + 1.0 / N;
    for (int i = 1; i <= N; ++i) {
        weights_[i - 1] = C / (static_cast<double>(i) * (i + 1));
        logw_[i - 1] = std::log(weights_[i - 1]);
    }
}

Vec AderLearner::act() {
    std::vector<Vec> actions;
    actions.reserve(experts_.size());
    for (const OgdState& e : experts_) actions.push_back(e.current);
    return combine_actions(weights_, actions);
}

void AderLearner::observe(const LossFunction& f) {
    if (rounds_seen_ >= horizon_) throw std::runtime_error("AderLearner: past its horizon");
    ++rounds_seen_;
    // Hedge in log space; exponents drift by up to alpha per round.
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < experts_.size(); ++i) {
        logw_[i] -= alpha_ * f.value(experts_[i].current);
        m = std::max(m, logw_[i]);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < experts_.size(); ++i) {
        weights_[i] = std::exp(logw_[i] - m);
        sum += weights_[i];
    }
    const double logsum = m + std::log(sum);
    for (std::size_t i = 0; i < experts_.size(); ++i) {
        logw_[i] -= logsum;
        weights_[i] /= sum;
    }
    for (OgdState& e : experts_) e = ogd_step(e, f);
}

}  // namespace oco
