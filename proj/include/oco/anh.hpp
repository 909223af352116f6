#ifndef OCO_ANH_HPP
#define OCO_ANH_HPP

#include <vector>

#include "oco/vec.hpp"

namespace oco {

// AdaNormalHedge bookkeeping pair: cumulative regret to the expert and
// cumulative absolute regret. |R| <= C always.
struct AnhRecord {
    double R = 0.0;
    double C = 0.0;
};

// Phi(R, C) = exp([R]+^2 / (3C)), with Phi(.,0) = 1.
double anh_potential(double R, double C);

// w(R, C) = (Phi(R+1, C+1) - Phi(R-1, C+1)) / 2; nonnegative.
double anh_weight(double R, double C);

// log w(R, C); -inf when the weight is exactly 0.
double anh_log_weight(double R, double C);

// Normalized probabilities over the records. Exponents are taken in log
// space once they would overflow; the all-zero case falls back to uniform.
std::vector<double> normalize_weights(const std::vector<AnhRecord>& records);

// Weighted average of the experts' points.
Vec combine_actions(const std::vector<double>& weights, const std::vector<Vec>& actions);

}  // namespace oco

#endif
