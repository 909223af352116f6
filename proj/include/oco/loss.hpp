#ifndef OCO_LOSS_HPP
#define OCO_LOSS_HPP

#include <functional>

#include "oco/vec.hpp"

namespace oco {

// First-order oracle for one round's convex loss. Values lie in [0,1] and
// gradient norms are bounded by lipschitz_bound on the feasible set.
struct LossFunction {
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;
    double lipschitz_bound = 0.0;
};

}  // namespace oco

#endif
