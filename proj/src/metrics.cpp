#include "oco/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace oco {

namespace {

void require_env(const RunTrace& trace) {
    if (!trace.env || trace.T < 1) throw std::invalid_argument("metrics: trace has no loss oracle");
}

std::vector<double> prefix_losses(const RunTrace& trace) {
    std::vector<double> p(trace.T + 1, 0.0);
    for (int t = 1; t <= trace.T; ++t) p[t] = p[t - 1] + trace.losses[t - 1];
    return p;
}

// Streaming optimum of sum |w - theta_t|: two balanced multisets around the
// median with running sums.
class MedianDeviation {
public:
    void insert(double x) {
        if (low_.empty() || x <= *low_.rbegin()) {
            low_.insert(x);
            low_sum_ += x;
        } else {
            high_.insert(x);
            high_sum_ += x;
        }
        rebalance();
    }

    double min_abs_deviation() const {
        const double m = *low_.rbegin();
        return (high_sum_ - m * static_cast<double>(high_.size())) +
               (m * static_cast<double>(low_.size()) - low_sum_);
    }

private:
    void rebalance() {
        while (low_.size() > high_.size() + 1) {
            auto it = std::prev(low_.end());
            high_.insert(*it);
            high_sum_ += *it;
            low_sum_ -= *it;
            low_.erase(it);
        }
        while (high_.size() > low_.size()) {
            auto it = high_.begin();
            low_.insert(*it);
            low_sum_ += *it;
            high_sum_ -= *it;
            high_.erase(it);
        }
    }

    std::multiset<double> low_, high_;
    double low_sum_ = 0.0, high_sum_ = 0.0;
};

}  // namespace

double window_best_loss(const RunTrace& trace, int r, int s) {
    require_env(trace);
    return trace.env->window_min_loss(r, s);
}

double window_regret(const RunTrace& trace, int r, int s) {
    if (r < 1 || r > s || s > trace.T) throw std::invalid_argument("window_regret: bad window");
    double loss = 0.0;
    for (int t = r; t <= s; ++t) loss += trace.losses[t - 1];
    return loss - window_best_loss(trace, r, s);
}

double static_regret(const RunTrace& trace, int grid_resolution) {
    require_env(trace);
    if (grid_resolution <= 0) return window_regret(trace, 1, trace.T);

    // 1-d grid + golden-section refinement; cross-check path.
    const Environment& env = *trace.env;
    if (env.dimension() != 1)
        throw std::invalid_argument("static_regret: grid search is one-dimensional only");
    const auto total = [&](double w) {
        double s = 0.0;
        const Vec p{w};
        for (int t = 1; t <= trace.T; ++t) s += env.loss_at(t).value(p);
        return s;
    };
    double lo = 0.0, hi = 1.0;
    double best_w = lo, best_v = total(lo);
    for (int i = 1; i <= grid_resolution; ++i) {
        const double w = lo + (hi - lo) * i / grid_resolution;
        const double v = total(w);
        if (v < best_v) {
            best_v = v;
            best_w = w;
        }
    }
    double a = std::max(lo, best_w - (hi - lo) / grid_resolution);
    double b = std::min(hi, best_w + (hi - lo) / grid_resolution);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = total(x1), f2 = total(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = total(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = total(x2);
        }
    }
    best_v = std::min(best_v, std::min(f1, f2));
    return trace.cumulative_loss() - best_v;
}

double dynamic_regret(const RunTrace& trace, const std::vector<Vec>& comparators) {
    require_env(trace);
    if (static_cast<int>(comparators.size()) != trace.T)
        throw std::invalid_argument("dynamic_regret: comparator length mismatch");
    double comp = 0.0;
    for (int t = 1; t <= trace.T; ++t) {
        if (!trace.env->domain().contains(comparators[t - 1]))
            throw std::invalid_argument("dynamic_regret: comparator outside domain");
        comp += trace.env->loss_at(t).value(comparators[t - 1]);
    }
    return trace.cumulative_loss() - comp;
}

double restricted_dynamic_regret(const RunTrace& trace) {
    require_env(trace);
    double best = 0.0;
    for (int t = 1; t <= trace.T; ++t)
        best += trace.env->loss_at(t).value(trace.env->minimizer_at(t));
    return trace.cumulative_loss() - best;
}

std::vector<double> sa_regret_all(const RunTrace& trace) {
    require_env(trace);
    const Environment& env = *trace.env;
    const int T = trace.T;
    const auto pl = prefix_losses(trace);
    std::vector<double> worst(T + 1, -std::numeric_limits<double>::infinity());

    if (env.family() == LossFamily::AbsDistance) {
        for (int r = 1; r <= T; ++r) {
            MedianDeviation md;
            for (int s = r; s <= T; ++s) {
                md.insert(env.theta(s)[0]);
                const double reg = (pl[s] - pl[r - 1]) - md.min_abs_deviation();
                worst[s - r + 1] = std::max(worst[s - r + 1], reg);
            }
        }
    } else {
        // sum over window of (<g,w>+1)/2 is minimized at -sum(g)/|sum(g)|.
        const int d = env.dimension();
        std::vector<Vec> pg(T + 1, zeros(d));
        for (int t = 1; t <= T; ++t) pg[t] = axpy(pg[t - 1], 1.0, env.theta(t));
        for (int r = 1; r <= T; ++r) {
            for (int s = r; s <= T; ++s) {
                const Vec gsum = axpy(pg[s], -1.0, pg[r - 1]);
                const double minloss = 0.5 * ((s - r + 1) - norm2(gsum));
                const double reg = (pl[s] - pl[r - 1]) - minloss;
                worst[s - r + 1] = std::max(worst[s - r + 1], reg);
            }
        }
    }
    return worst;
}

double sa_regret(const RunTrace& trace, int tau) {
    require_env(trace);
    if (tau < 1 || tau > trace.T) throw std::invalid_argument("sa_regret: tau out of range");
    const auto pl = prefix_losses(trace);
    double worst = 0.0;
    bool first = true;
    for (int r = 1; r + tau - 1 <= trace.T; ++r) {
        const int s = r + tau - 1;
        const double reg = (pl[s] - pl[r - 1]) - window_best_loss(trace, r, s);
        if (first || reg > worst) worst = reg;
        first = false;
    }
    return worst;
}

double weak_adaptive_regret(const RunTrace& trace) {
    const auto worst = sa_regret_all(trace);
    double m = worst[1];
    for (int tau = 2; tau <= trace.T; ++tau) m = std::max(m, worst[tau]);
    return m;
}

double path_length(const std::vector<Vec>& points) {
    if (points.empty()) throw std::invalid_argument("path_length: empty sequence");
    double p = 0.0;
    for (std::size_t t = 1; t < points.size(); ++t) p += dist2(points[t], points[t - 1]);
    return p;
}

double squared_path_length(const std::vector<Vec>& points) {
    if (points.empty()) throw std::invalid_argument("squared_path_length: empty sequence");
    double p = 0.0;
    for (std::size_t t = 1; t < points.size(); ++t) {
        const double d = dist2(points[t], points[t - 1]);
        p += d * d;
    }
    return p;
}

double function_variation(const RunTrace& trace) {
    require_env(trace);
    const Environment& env = *trace.env;
    double v = 0.0;
    for (int t = 1; t < trace.T; ++t) {
        if (env.family() == LossFamily::AbsDistance) {
            // sup over [0,1] of ||w-a| - |w-b|| = |a-b|
            v += std::abs(env.theta(t + 1)[0] - env.theta(t)[0]);
        } else {
            // sup over the unit ball of |<g2-g1, w>|/2
            v += 0.5 * dist2(env.theta(t + 1), env.theta(t));
        }
    }
    return v;
}

double bound_thm1_rhs(const RunTrace& trace, const std::vector<Vec>& comparators, double G) {
    require_env(trace);
    const auto worst = sa_regret_all(trace);
    const double P = path_length(comparators);
    double best = worst[trace.T] + static_cast<double>(trace.T) * G * P;  // tau = T
    for (int tau = 1; tau < trace.T; ++tau)
        best = std::min(best, worst[tau] * trace.T / tau + tau * G * P);
    return best;
}

std::vector<Vec> comparators_minimizers(const Environment& env) {
    std::vector<Vec> u(env.horizon());
    for (int t = 1; t <= env.horizon(); ++t) u[t - 1] = env.minimizer_at(t);
    return u;
}

std::vector<Vec> comparators_piecewise(const Environment& env) {
    std::vector<Vec> u(env.horizon());
    for (const auto& [r, s] : env.segments()) {
        const Vec best = env.window_minimizer(r, s);
        for (int t = r; t <= s; ++t) u[t - 1] = best;
    }
    return u;
}

}  // namespace oco
