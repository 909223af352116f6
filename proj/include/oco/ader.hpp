#ifndef OCO_ADER_HPP
#define OCO_ADER_HPP

#include <vector>

#include "oco/learner.hpp"
#include "oco/ogd.hpp"

namespace oco {

// Geometric step-size grid: eta_i = 2^(i-1) * (D/G) * sqrt(7 / (2T)).
struct StepSizeGrid {
    std::vector<double> etas;  // ascending
    int size() const { return static_cast<int>(etas.size()); }
};

StepSizeGrid build_grid(double D, double G, int T);

// One Hedge step: p_i <- p_i * exp(-alpha * loss_i), renormalized.
std::vector<double> hedge_update(const std::vector<double>& weights,
                                 const std::vector<double>& expert_losses, double alpha);

// Ader: OGD experts over the step-size grid combined by Hedge with the
// nonuniform prior p_1,i = C / (i(i+1)), C = 1 + 1/N.
class AderLearner final : public OnlineLearner {
public:
    AderLearner(DomainPtr domain, double D, double G, int horizon);

    Vec act() override;
    void observe(const LossFunction& f) override;
    int active_experts() const override { return grid_.size(); }

    const StepSizeGrid& grid() const { return grid_; }
    const std::vector<double>& weights() const { return weights_; }
    double alpha() const { return alpha_; }
    int rounds_seen() const { return rounds_seen_; }
    int horizon() const { return horizon_; }

private:
    StepSizeGrid grid_;
    std::vector<OgdState> experts_;
    std::vector<double> weights_;
    std::vector<double> logw_;
    double alpha_ = 0.0;
    int horizon_ = 0;
    int rounds_seen_ = 0;
};

}  // namespace oco

#endif
