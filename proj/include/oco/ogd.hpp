#ifndef OCO_OGD_HPP
#define OCO_OGD_HPP

#include "oco/domain.hpp"
#include "oco/learner.hpp"
#include "oco/loss.hpp"

namespace oco {

// Projected online gradient descent with a fixed step size.
struct OgdState {
    Vec current;
    double step_size = 0.0;
    DomainPtr domain;
};

OgdState make_ogd(DomainPtr domain, double step_size);
OgdState make_ogd(DomainPtr domain, double step_size, Vec initial);

// w <- proj(w - eta * grad f(w)); functional, the input state is untouched.
OgdState ogd_step(const OgdState& state, const LossFunction& f);

// Theorem-2 tuning: eta = D / (G * sqrt(horizon)).
double static_step_size(double D, double G, int horizon);

class OgdLearner final : public OnlineLearner {
public:
    OgdLearner(OgdState state) : state_(std::move(state)) {}
    Vec act() override { return state_.current; }
    void observe(const LossFunction& f) override { state_ = ogd_step(state_, f); }
    const OgdState& state() const { return state_; }

private:
    OgdState state_;
};

}  // namespace oco

#endif
