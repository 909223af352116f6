#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oco/ader.hpp"
#include "oco/anh.hpp"
#include "oco/bounds.hpp"
#include "oco/config.hpp"
#include "oco/harness.hpp"
#include "oco/intervals.hpp"
#include "oco/metrics.hpp"
#include "oco/trace_io.hpp"

namespace py = pybind11;

namespace {

std::vector<std::tuple<int, int, int>> as_tuples(const std::vector<oco::Interval>& v) {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(v.size());
    for (const oco::Interval& I : v) out.emplace_back(I.start, I.end(), I.level);
    return out;
}

py::dict run_experiment_py(const std::string& algorithm, const std::string& environment,
                           int horizon, int segments, unsigned long long seed, int dimension,
                           const std::string& eta) {
    oco::ExperimentConfig cfg;
    cfg.algorithm = algorithm;
    cfg.eta = eta;
    cfg.env.id = environment;
    cfg.env.horizon = horizon;
    cfg.env.segments = segments;
    cfg.env.seed = seed;
    cfg.env.dimension = dimension;
    const oco::ExperimentResult result = oco::run_experiment(cfg);

    py::dict out;
    out["losses"] = result.trace.losses;
    out["actions"] = result.trace.actions;
    out["n_active"] = result.trace.n_active;
    out["all_pass"] = result.all_pass;
    py::list rows;
    for (const oco::ReportRow& r : result.rows) {
        py::dict row;
        row["check"] = r.check;
        row["where"] = r.tau_or_interval;
        row["measured"] = r.measured;
        if (r.has_bound) {
            row["bound"] = r.bound;
            row["pass"] = r.pass;
        }
        rows.append(row);
    }
    out["rows"] = rows;
    return out;
}

}  // namespace

PYBIND11_MODULE(_oco, m) {
    m.doc() = "Online convex optimization algorithms minimizing dynamic and adaptive regret";

    m.def("dgc_starting_at", [](int t, int T) { return as_tuples(oco::dgc_starting_at(t, T)); },
          py::arg("t"), py::arg("T"));
    m.def("gc_starting_at", [](int t) { return as_tuples(oco::gc_starting_at(t)); }, py::arg("t"));
    m.def(
        "cover",
        [](int r, int s, const std::string& system, int horizon) {
            const auto sys = system == "gc" ? oco::IntervalSystem::GC : oco::IntervalSystem::DGC;
            if (system != "gc" && system != "dgc")
                throw std::invalid_argument("system must be 'dgc' or 'gc'");
            return as_tuples(oco::cover(r, s, sys, horizon));
        },
        py::arg("r"), py::arg("s"), py::arg("system") = "dgc", py::arg("horizon") = 0);

    m.def("potential", &oco::anh_potential, py::arg("R"), py::arg("C"));
    m.def("anh_weight", &oco::anh_weight, py::arg("R"), py::arg("C"));
    m.def(
        "normalize_weights",
        [](const std::vector<std::pair<double, double>>& rc) {
            std::vector<oco::AnhRecord> records;
            records.reserve(rc.size());
            for (const auto& [R, C] : rc) records.push_back({R, C});
            return oco::normalize_weights(records);
        },
        py::arg("records"));

    m.def("build_grid", [](double D, double G, int T) { return oco::build_grid(D, G, T).etas; },
          py::arg("D"), py::arg("G"), py::arg("T"));
    m.def("hedge_update", &oco::hedge_update, py::arg("weights"), py::arg("losses"), py::arg("alpha"));

    m.def("bound_c", &oco::bound_c, py::arg("t"), py::arg("T"));
    m.def("bound_thm3", &oco::bound_thm3, py::arg("tau"), py::arg("T"), py::arg("D"), py::arg("G"));
    m.def("bound_thm4", &oco::bound_thm4, py::arg("T"), py::arg("P"), py::arg("D"), py::arg("G"));
    m.def("bound_thm5", &oco::bound_thm5, py::arg("len"), py::arg("s"), py::arg("P"), py::arg("D"),
          py::arg("G"));
    m.def("bound_thm7", &oco::bound_thm7, py::arg("T"), py::arg("P"), py::arg("D"), py::arg("G"));

    m.def("run_experiment", &run_experiment_py, py::arg("algorithm"), py::arg("environment"),
          py::arg("horizon"), py::arg("segments") = 4, py::arg("seed") = 0, py::arg("dimension") = 1,
          py::arg("eta") = "auto");
}
