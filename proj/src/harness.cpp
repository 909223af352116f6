#include "oco/harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oco/aoa.hpp"
#include "oco/aod.hpp"
#include "oco/ader.hpp"
#include "oco/bounds.hpp"
#include "oco/metrics.hpp"
#include "oco/ogd.hpp"

namespace oco {

namespace {

std::string interval_label(int r, int s) {
    return "[" + std::to_string(r) + ":" + std::to_string(s) + "]";
}

void add_metric(std::vector<ReportRow>& rows, const std::string& name, double value,
                const std::string& where = "") {
    rows.push_back({name, where, value, false, 0.0, true});
}

void add_check(std::vector<ReportRow>& rows, const std::string& name, const std::string& where,
               double measured, double bound) {
    rows.push_back({name, where, measured, true, bound, measured <= bound});
}

}  // namespace

std::unique_ptr<OnlineLearner> build_learner(const std::string& algorithm, const EnvPtr& env,
                                             const std::string& eta) {
    const double D = env->diameter_bound();
    const double G = env->gradient_bound();
    const int T = env->horizon();
    if (algorithm == "ogd") {
        const double step = (eta == "auto") ? static_step_size(D, G, T) : std::stod(eta);
        return std::make_unique<OgdLearner>(make_ogd(env->domain_ptr(), step));
    }
    if (algorithm == "ader") return std::make_unique<AderLearner>(env->domain_ptr(), D, G, T);
    if (algorithm == "aod") return std::make_unique<AodLearner>(env->domain_ptr(), D, G, T);
    if (algorithm == "aoa") return std::make_unique<AoaLearner>(env->domain_ptr(), D, G);
    throw std::invalid_argument("build_learner: unknown algorithm '" + algorithm + "'");
}

std::vector<ReportRow> evaluate_trace(const RunTrace& trace, const std::string& algorithm) {
    const Environment& env = *trace.env;
    const double D = trace.D, G = trace.G;
    const int T = trace.T;
    std::vector<ReportRow> rows;

    const auto u_min = comparators_minimizers(env);
    const auto u_pw = comparators_piecewise(env);
    const double p_min = path_length(u_min);
    const double p_pw = path_length(u_pw);

    add_metric(rows, "cumulative_loss", trace.cumulative_loss());
    add_metric(rows, "static_regret", static_regret(trace));
    add_metric(rows, "restricted_dynamic_regret", restricted_dynamic_regret(trace));
    add_metric(rows, "dynamic_regret_minimizers", dynamic_regret(trace, u_min));
    add_metric(rows, "dynamic_regret_piecewise", dynamic_regret(trace, u_pw));
    add_metric(rows, "weak_adaptive_regret", weak_adaptive_regret(trace));
    add_metric(rows, "path_length_minimizers", p_min);
    add_metric(rows, "path_length_piecewise", p_pw);
    add_metric(rows, "squared_path_length_minimizers", squared_path_length(u_min));
    add_metric(rows, "function_variation", function_variation(trace));
    add_metric(rows, "thm1_rhs_minimizers", bound_thm1_rhs(trace, u_min, G));

    if (algorithm == "ogd") {
        add_check(rows, "thm2_static_regret", "tau=" + std::to_string(T), static_regret(trace),
                  D * G * std::sqrt(static_cast<double>(T)));
    } else if (algorithm == "ader") {
        add_check(rows, "thm7_dynamic_regret", "minimizers", dynamic_regret(trace, u_min),
                  bound_thm7(T, p_min, D, G));
        add_check(rows, "thm7_dynamic_regret", "piecewise", dynamic_regret(trace, u_pw),
                  bound_thm7(T, p_pw, D, G));
    } else if (algorithm == "aod") {
        const auto worst = sa_regret_all(trace);
        for (int tau = 1; tau <= T; ++tau)
            add_check(rows, "thm3_sa_regret", "tau=" + std::to_string(tau), worst[tau],
                      bound_thm3(tau, T, D, G));
        add_check(rows, "thm4_dynamic_regret", "minimizers", dynamic_regret(trace, u_min),
                  bound_thm4(T, p_min, D, G));
        add_check(rows, "thm4_dynamic_regret", "piecewise", dynamic_regret(trace, u_pw),
                  bound_thm4(T, p_pw, D, G));
        // Lemma-1 meta-regret, worst prefix over all experts.
        double worst_gap = -std::numeric_limits<double>::infinity();
        ReportRow worst_row{"lemma1_meta_regret", "", 0.0, true, 0.0, true};
        for (int t = 1; t <= static_cast<int>(trace.expert_meta.size()); ++t) {
            for (const ExpertMeta& e : trace.expert_meta[t - 1]) {
                const double bound = bound_meta_regret(t - e.start + 1, t, T);
                if (e.regret_to_expert - bound > worst_gap) {
                    worst_gap = e.regret_to_expert - bound;
                    worst_row.tau_or_interval =
                        "t=" + std::to_string(t) + "@start=" + std::to_string(e.start);
                    worst_row.measured = e.regret_to_expert;
                    worst_row.bound = bound;
                    worst_row.pass = e.regret_to_expert <= bound;
                }
            }
        }
        if (!trace.expert_meta.empty()) rows.push_back(worst_row);
    } else if (algorithm == "aoa") {
        // Theorem 5 over every interval; report the worst interval per length.
        for (const auto* u : {&u_min, &u_pw}) {
            const bool is_min = (u == &u_min);
            std::vector<double> pl(T + 1, 0.0), pu(T + 1, 0.0), pp(T + 1, 0.0);
            for (int t = 1; t <= T; ++t) {
                pl[t] = pl[t - 1] + trace.losses[t - 1];
                pu[t] = pu[t - 1] + env.loss_at(t).value((*u)[t - 1]);
                pp[t] = pp[t - 1] + (t > 1 ? dist2((*u)[t - 1], (*u)[t - 2]) : 0.0);
            }
            for (int len = 1; len <= T; ++len) {
                double worst_gap = -std::numeric_limits<double>::infinity();
                double wm = 0.0, wb = 0.0;
                int wr = 1;
                for (int r = 1; r + len - 1 <= T; ++r) {
                    const int s = r + len - 1;
                    const double measured = (pl[s] - pl[r - 1]) - (pu[s] - pu[r - 1]);
                    const double bound = bound_thm5(len, s, pp[s] - pp[r], D, G);
                    if (measured - bound > worst_gap) {
                        worst_gap = measured - bound;
                        wm = measured;
                        wb = bound;
                        wr = r;
                    }
                }
                add_check(rows, std::string("thm5_interval_regret_") + (is_min ? "minimizers" : "piecewise"),
                          interval_label(wr, wr + len - 1), wm, wb);
            }
        }
    }
    return rows;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    EnvPtr env = build_environment(config.env);
    auto learner = build_learner(config.algorithm, env, config.eta);
    ExperimentResult result;
    result.trace = run_game(*learner, env);
    result.rows = evaluate_trace(result.trace, config.algorithm);
    for (const ReportRow& r : result.rows) {
        if (r.has_bound && !r.pass) {
            result.all_pass = false;
            if (result.first_violation.empty())
                result.first_violation = r.check + " @ " + r.tau_or_interval;
        }
    }
    return result;
}

ExperimentResult run_experiment_to_files(const ExperimentConfig& config) {
    ExperimentResult result = run_experiment(config);
    write_trace_file(result.trace, config.trace_path);
    write_report_file(result.rows, config.report_path);
    return result;
}

}  // namespace oco
