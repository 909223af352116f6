#ifndef OCO_METRICS_HPP
#define OCO_METRICS_HPP

#include <vector>

#include "oco/game.hpp"

namespace oco {

// Loss of the best fixed point over rounds [r, s], exact for the shipped
// loss families.
double window_best_loss(const RunTrace& trace, int r, int s);

// Learner loss minus best-fixed loss over [r, s].
double window_regret(const RunTrace& trace, int r, int s);

// Eq.-style regret notions. static_regret optionally uses a 1-d grid with
// golden-section refinement instead of the exact window optimum
// (grid_resolution > 0; cross-check path only).
double static_regret(const RunTrace& trace, int grid_resolution = 0);
double dynamic_regret(const RunTrace& trace, const std::vector<Vec>& comparators);
double restricted_dynamic_regret(const RunTrace& trace);
double sa_regret(const RunTrace& trace, int tau);
double weak_adaptive_regret(const RunTrace& trace);

// Worst window regret for every length 1..T in one scan (index 0 unused).
std::vector<double> sa_regret_all(const RunTrace& trace);

// Regularities.
double path_length(const std::vector<Vec>& points);
double squared_path_length(const std::vector<Vec>& points);
double function_variation(const RunTrace& trace);

// Equal-length-partition relaxation of the regret-relation bound:
// min over tau of (SAReg(T,tau) * T / tau + tau * G * P_T).
double bound_thm1_rhs(const RunTrace& trace, const std::vector<Vec>& comparators, double G);

// Comparator policies for the shipped environments.
std::vector<Vec> comparators_minimizers(const Environment& env);
std::vector<Vec> comparators_piecewise(const Environment& env);

}  // namespace oco

#endif
