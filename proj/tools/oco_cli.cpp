#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oco/bounds.hpp"
#include "oco/config.hpp"
#include "oco/harness.hpp"
#include "oco/intervals.hpp"
#include "oco/metrics.hpp"
#include "oco/trace_io.hpp"

namespace {

int cmd_run(const std::string& config_path) {
    const oco::ExperimentConfig cfg = oco::load_config(config_path);
    const oco::ExperimentResult result = oco::run_experiment_to_files(cfg);
    std::cout << "trace: " << cfg.trace_path << "\nreport: " << cfg.report_path << "\n";
    if (!result.all_pass) {
        std::cerr << "bound violation: " << result.first_violation << "\n";
        return 1;
    }
    return 0;
}

int cmd_evaluate(const std::string& trace_path, const std::string& metric, int tau,
                 const std::string& policy) {
    const oco::RunTrace trace = oco::read_trace_file(trace_path);
    const auto comparators = (policy == "piecewise") ? oco::comparators_piecewise(*trace.env)
                                                     : oco::comparators_minimizers(*trace.env);
    double value = 0.0;
    if (metric == "cumulative_loss") value = trace.cumulative_loss();
    else if (metric == "static_regret") value = oco::static_regret(trace);
    else if (metric == "dynamic_regret") value = oco::dynamic_regret(trace, comparators);
    else if (metric == "restricted_dynamic_regret") value = oco::restricted_dynamic_regret(trace);
    else if (metric == "sa_regret") value = oco::sa_regret(trace, tau);
    else if (metric == "weak_adaptive_regret") value = oco::weak_adaptive_regret(trace);
    else if (metric == "path_length") value = oco::path_length(comparators);
    else if (metric == "squared_path_length") value = oco::squared_path_length(comparators);
    else if (metric == "function_variation") value = oco::function_variation(trace);
    else if (metric == "thm1_rhs") value = oco::bound_thm1_rhs(trace, comparators, trace.G);
    else {
        std::cerr << "unknown metric: " << metric << "\n";
        return 2;
    }
    std::cout << metric << "," << oco::format_sig(value) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online convex optimization harness: adaptive and dynamic regret algorithms"};
    app.require_subcommand(1);

    // run
    std::string config_path;
    auto* run = app.add_subcommand("run", "Run an experiment from a config file");
    run->add_option("--config", config_path, "config file (key = value lines)")->required();

    // evaluate
    std::string trace_path, metric, policy = "minimizers";
    int tau = 1;
    auto* ev = app.add_subcommand("evaluate", "Compute a metric from a recorded trace");
    ev->add_option("--trace", trace_path)->required();
    ev->add_option("--metric", metric)->required();
    ev->add_option("--tau", tau, "window length for sa_regret");
    ev->add_option("--comparators", policy, "minimizers | piecewise");

    // cover
    std::string system = "dgc";
    int from = 1, to = 1, horizon = 0;
    auto* cv = app.add_subcommand("cover", "Print the covering partition of [from, to]");
    cv->add_option("--system", system, "dgc | gc")->required();
    cv->add_option("--from", from)->required();
    cv->add_option("--to", to)->required();
    cv->add_option("--horizon", horizon, "required for dgc");

    // bounds
    int theorem = 0, bT = 1, btau = 1, bs = 1, blen = 1;
    double bP = 0.0, bD = 1.0, bG = 1.0;
    auto* bd = app.add_subcommand("bounds", "Evaluate a theorem bound");
    bd->add_option("--theorem", theorem, "3 | 4 | 5 | 7")->required();
    bd->add_option("--T", bT);
    bd->add_option("--tau", btau);
    bd->add_option("--P", bP, "path length");
    bd->add_option("--D", bD);
    bd->add_option("--G", bG);
    bd->add_option("--s", bs, "interval end (theorem 5)");
    bd->add_option("--len", blen, "interval length (theorem 5)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path);
        if (ev->parsed()) return cmd_evaluate(trace_path, metric, tau, policy);
        if (cv->parsed()) {
            const auto sys = (system == "gc") ? oco::IntervalSystem::GC : oco::IntervalSystem::DGC;
            if (system != "gc" && system != "dgc") throw std::invalid_argument("unknown system: " + system);
            for (const oco::Interval& I : oco::cover(from, to, sys, horizon))
                std::cout << I.start << " " << I.end() << " " << I.level << "\n";
            return 0;
        }
        if (bd->parsed()) {
            double value = 0.0;
            switch (theorem) {
                case 3: value = oco::bound_thm3(btau, bT, bD, bG); break;
                case 4: value = oco::bound_thm4(bT, bP, bD, bG); break;
                case 5: value = oco::bound_thm5(blen, bs, bP, bD, bG); break;
                case 7: value = oco::bound_thm7(bT, bP, bD, bG); break;
                default: throw std::invalid_argument("theorem must be 3, 4, 5 or 7");
            }
            std::cout << "thm" << theorem << "," << oco::format_sig(value) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
