#ifndef OCO_AOA_HPP
#define OCO_AOA_HPP

#include <memory>
#include <vector>

#include "oco/ader.hpp"
#include "oco/anh.hpp"
#include "oco/game.hpp"
#include "oco/intervals.hpp"
#include "oco/learner.hpp"

namespace oco {

// AOA: Ader experts on (lazily generated) geometric covering intervals,
// combined by AdaNormalHedge. Horizon-free.
class AoaLearner final : public OnlineLearner, public ExpertIntrospection {
public:
    AoaLearner(DomainPtr domain, double D, double G);

    Vec act() override;
    void observe(const LossFunction& f) override;
    int active_experts() const override;
    std::vector<ExpertMeta> expert_snapshot() const override;

    int round() const { return t_; }
    const std::vector<double>& last_weights() const { return last_weights_; }

    struct Slot {
        Interval interval;
        std::unique_ptr<AderLearner> learner;
        AnhRecord record;
    };
    const std::vector<Slot>& slots() const { return slots_; }

private:
    void spawn_round_experts();

    DomainPtr domain_;
    double D_ = 0.0;
    double G_ = 0.0;
    int t_ = 1;
    bool acted_ = false;
    std::vector<Slot> slots_;  // sorted by level ascending, at most one per level
    std::vector<Vec> last_actions_;
    std::vector<double> last_weights_;
};

}  // namespace oco

#endif
