#ifndef OCO_GAME_HPP
#define OCO_GAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "oco/environment.hpp"
#include "oco/learner.hpp"

namespace oco {

// Per-expert bookkeeping snapshot taken after each round; used by the
// meta-regret checks on recorded runs.
struct ExpertMeta {
    int start = 0;
    int level = 0;
    double regret_to_expert = 0.0;  // cumulative R for this expert
};

// Learners that expose their expert pool implement this on top of
// OnlineLearner (AOD and AOA do).
class ExpertIntrospection {
public:
    virtual ~ExpertIntrospection() = default;
    virtual std::vector<ExpertMeta> expert_snapshot() const = 0;
};

// Full record of one run: enough to recompute every metric offline.
struct RunTrace {
    EnvPtr env;
    double D = 0.0;
    double G = 0.0;
    int T = 0;
    int dim = 1;
    std::vector<Vec> actions;
    std::vector<double> losses;
    std::vector<int> n_active;
    // One entry per round when the learner exposes its experts.
    std::vector<std::vector<ExpertMeta>> expert_meta;

    double cumulative_loss() const;
};

// Runs the sequential game for the environment's full horizon. Throws if the
// learner ever acts outside the feasible set (beyond 1e-9).
RunTrace run_game(OnlineLearner& learner, const EnvPtr& env);

}  // namespace oco

#endif
