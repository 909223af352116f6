#include "oco/game.hpp"

#include <stdexcept>

namespace oco {

double RunTrace::cumulative_loss() const {
    double s = 0.0;
    for (double v : losses) s += v;
    return s;
}

RunTrace run_game(OnlineLearner& learner, const EnvPtr& env) {
    if (!env || env->horizon() < 1) throw std::invalid_argument("run_game: empty environment");
    const int T = env->horizon();

    RunTrace trace;
    trace.env = env;
    trace.D = env->diameter_bound();
    trace.G = env->gradient_bound();
    trace.T = T;
    trace.dim = env->dimension();
    trace.actions.reserve(T);
    trace.losses.reserve(T);
    trace.n_active.reserve(T);

    auto* introspect = dynamic_cast<ExpertIntrospection*>(&learner);

    for (int t = 1; t <= T; ++t) {
        Vec w = learner.act();
        if (!all_finite(w)) throw std::runtime_error("run_game: non-finite action at round " + std::to_string(t));
        if (dist2(w, env->domain().project(w)) > 1e-9)
            throw std::runtime_error("run_game: protocol violation, action outside domain at round " +
                                     std::to_string(t));
        const LossFunction f = env->loss_at(t);
        trace.actions.push_back(w);
        trace.losses.push_back(f.value(w));
        trace.n_active.push_back(learner.active_experts());
        learner.observe(f);
        if (introspect) trace.expert_meta.push_back(introspect->expert_snapshot());
    }
    return trace;
}

}  // namespace oco
