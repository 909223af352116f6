#ifndef OCO_AOD_HPP
#define OCO_AOD_HPP

#include <memory>
#include <vector>

#include "oco/anh.hpp"
#include "oco/game.hpp"
#include "oco/intervals.hpp"
#include "oco/learner.hpp"
#include "oco/ogd.hpp"

namespace oco {

// AOD: OGD experts on dense geometric covering intervals, one live expert
// per level, combined by AdaNormalHedge. The horizon must be known upfront.
class AodLearner final : public OnlineLearner, public ExpertIntrospection {
public:
    AodLearner(DomainPtr domain, double D, double G, int horizon);

    Vec act() override;
    void observe(const LossFunction& f) override;
    int active_experts() const override;
    std::vector<ExpertMeta> expert_snapshot() const override;

    int horizon() const { return horizon_; }
    int round() const { return t_; }
    // Normalized weights used for the current round's action (valid after act()).
    const std::vector<double>& last_weights() const { return last_weights_; }

    struct Slot {
        Interval interval;
        OgdState learner;
        AnhRecord record;
    };
    // Slots indexed by level 0..floor(log2 T); every level is always live.
    const std::vector<Slot>& slots() const { return slots_; }

private:
    void spawn_round_experts();

    DomainPtr domain_;
    double D_ = 0.0;
    double G_ = 0.0;
    int horizon_ = 0;
    int t_ = 1;  // round about to be played
    bool acted_ = false;
    std::vector<Slot> slots_;
    std::vector<Vec> last_actions_;
    std::vector<double> last_weights_;
};

}  // namespace oco

#endif
