#include <doctest.h>

#include <cmath>
#include <limits>
#include <memory>

#include "oco/bounds.hpp"
#include "oco/environment.hpp"
#include "oco/game.hpp"
#include "oco/harness.hpp"
#include "oco/metrics.hpp"
#include "oco/ogd.hpp"

namespace {

oco::EnvPtr abs_env(std::vector<double> targets) {
    std::vector<oco::Vec> thetas;
    for (double x : targets) thetas.push_back(oco::Vec{x});
    return std::make_shared<oco::Environment>(oco::LossFamily::AbsDistance,
                                              std::make_shared<oco::BoxDomain>(0.0, 1.0, 1),
                                              std::move(thetas), "scripted");
}

oco::RunTrace make_trace(oco::EnvPtr env, const std::vector<double>& plays) {
    oco::RunTrace tr;
    tr.env = env;
    tr.D = env->diameter_bound();
    tr.G = env->gradient_bound();
    tr.T = env->horizon();
    tr.dim = 1;
    for (int t = 1; t <= tr.T; ++t) {
        tr.actions.push_back(oco::Vec{plays[t - 1]});
        tr.losses.push_back(env->loss_at(t).value(tr.actions.back()));
        tr.n_active.push_back(1);
    }
    return tr;
}

oco::RunTrace ogd_trace(const oco::EnvPtr& env) {
    oco::OgdLearner learner(oco::make_ogd(
        env->domain_ptr(),
        oco::static_step_size(env->diameter_bound(), env->gradient_bound(), env->horizon())));
    return oco::run_game(learner, env);
}

}  // namespace

TEST_CASE("static regret on a two-round hand example") {
    // Targets 0 and 1: any fixed point pays total 1, so playing 0.5 twice
    // (total loss 1) has zero static regret; playing the wrong endpoint each
    // round (total 2) has regret 1.
    const auto env = abs_env({0.0, 1.0});
    CHECK(oco::static_regret(make_trace(env, {0.5, 0.5})) == doctest::Approx(0.0));
    CHECK(oco::static_regret(make_trace(env, {1.0, 0.0})) == doctest::Approx(1.0));
    CHECK(oco::window_best_loss(make_trace(env, {0.5, 0.5}), 1, 2) == doctest::Approx(1.0));
}

TEST_CASE("dynamic and restricted dynamic regret on hand examples") {
    const auto env = abs_env({0.0, 1.0});
    const auto tr = make_trace(env, {0.5, 0.5});
    // Tracking the per-round minimizers perfectly costs 0.
    CHECK(oco::dynamic_regret(tr, {oco::Vec{0.0}, oco::Vec{1.0}}) == doctest::Approx(1.0));
    CHECK(oco::restricted_dynamic_regret(tr) == doctest::Approx(1.0));
    // The comparator equal to the plays gives zero regret.
    CHECK(oco::dynamic_regret(tr, tr.actions) == doctest::Approx(0.0));
    CHECK_THROWS_AS(oco::dynamic_regret(tr, {oco::Vec{2.0}, oco::Vec{0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(oco::dynamic_regret(tr, {oco::Vec{0.0}}), std::invalid_argument);
}

TEST_CASE("strongly and weakly adaptive regret on hand examples") {
    const auto env = abs_env({0.0, 1.0});
    const auto tr = make_trace(env, {0.5, 0.5});
    CHECK(oco::sa_regret(tr, 1) == doctest::Approx(0.5));
    CHECK(oco::sa_regret(tr, 2) == doctest::Approx(0.0));
    CHECK(oco::weak_adaptive_regret(tr) == doctest::Approx(0.5));
    const auto all = oco::sa_regret_all(tr);
    CHECK(all[1] == doctest::Approx(0.5));
    CHECK(all[2] == doctest::Approx(0.0));
    CHECK_THROWS_AS(oco::sa_regret(tr, 0), std::invalid_argument);
    CHECK_THROWS_AS(oco::sa_regret(tr, 3), std::invalid_argument);
}

TEST_CASE("the one-scan adaptive regret agrees with the per-window definition") {
    oco::EnvironmentSpec spec;
    spec.horizon = 64;
    spec.segments = 4;
    for (const std::string id : {"abrupt", "drift", "adversarial-linear"}) {
        spec.id = id;
        spec.seed = 17;
        spec.dimension = 3;
        const auto env = oco::build_environment(spec);
        const auto tr = ogd_trace(env);
        const auto all = oco::sa_regret_all(tr);
        for (int tau = 1; tau <= 64; ++tau)
            CHECK(all[tau] == doctest::Approx(oco::sa_regret(tr, tau)).epsilon(1e-9));
    }
}

TEST_CASE("grid-plus-refinement static regret agrees with the exact optimum") {
    oco::EnvironmentSpec spec;
    spec.id = "abrupt";
    spec.horizon = 64;
    spec.segments = 4;
    spec.seed = 23;
    const auto env = oco::build_environment(spec);
    const auto tr = ogd_trace(env);
    CHECK(oco::static_regret(tr, 1000) == doctest::Approx(oco::static_regret(tr)).epsilon(1e-9));
}

TEST_CASE("path length, squared path length, and function variation") {
    const std::vector<oco::Vec> u{{0.0}, {1.0}, {0.0}};
    CHECK(oco::path_length(u) == doctest::Approx(2.0));
    CHECK(oco::squared_path_length(u) == doctest::Approx(2.0));
    CHECK(oco::path_length({oco::Vec{0.3}}) == 0.0);
    CHECK_THROWS_AS(oco::path_length({}), std::invalid_argument);

    const auto env = abs_env({0.2, 0.7, 0.7});
    CHECK(oco::function_variation(make_trace(env, {0.0, 0.0, 0.0})) == doctest::Approx(0.5));

    // Linear family: sup_w |<g2 - g1, w>| / 2 over the unit ball.
    std::vector<oco::Vec> gs{{1.0, 0.0}, {0.0, 1.0}};
    const auto lin = std::make_shared<oco::Environment>(
        oco::LossFamily::Linear, std::make_shared<oco::BallDomain>(1.0, 2), gs, "scripted");
    oco::RunTrace ltr;
    ltr.env = lin;
    ltr.T = 2;
    ltr.dim = 2;
    ltr.actions = {oco::Vec{0.0, 0.0}, oco::Vec{0.0, 0.0}};
    ltr.losses = {0.5, 0.5};
    ltr.n_active = {1, 1};
    CHECK(oco::function_variation(ltr) == doctest::Approx(0.5 * std::sqrt(2.0)));
}

TEST_CASE("comparator policies") {
    const auto env = abs_env({0.1, 0.1, 0.9, 0.9});
    const auto mins = oco::comparators_minimizers(*env);
    REQUIRE(mins.size() == 4);
    CHECK(mins[0][0] == 0.1);
    CHECK(mins[3][0] == 0.9);
    CHECK(oco::path_length(mins) == doctest::Approx(0.8));
    const auto pw = oco::comparators_piecewise(*env);
    CHECK(pw[0][0] == doctest::Approx(0.1));
    CHECK(pw[2][0] == doctest::Approx(0.9));
    // Piecewise comparators are constant on each stationarity segment.
    CHECK(pw[0] == pw[1]);
    CHECK(pw[2] == pw[3]);
}

TEST_CASE("closed-form bound constants match frozen reference values") {
    CHECK(oco::bound_c(1, 1) == doctest::Approx(2.2640478457408184).epsilon(1e-14));
    CHECK(oco::bound_c(1024, 1024) == doctest::Approx(12.886491426120593).epsilon(1e-14));
    CHECK(oco::bound_c_prime(1024) == doctest::Approx(oco::bound_c(1024, 1024)));
    CHECK(oco::bound_thm3(1024, 1024, 1.0, 1.0) ==
          doctest::Approx(1847.7246326883044).epsilon(1e-12));
    CHECK(oco::bound_thm4(1024, 0.0, 1.0, 1.0) ==
          doctest::Approx(329.37982038889163).epsilon(1e-12));
    CHECK(oco::bound_meta_regret(1, 1, 1) ==
          doctest::Approx(std::sqrt(3.0 * oco::bound_c(1, 1))));
    CHECK(oco::step_size_grid_index(0.0, 1.0) == 1);
    CHECK(oco::step_size_grid_index(7.0, 1.0) ==
          static_cast<int>(std::floor(0.5 * std::log2(5.0))) + 1);
    // Monotone in the path length, and every bound grows with its window.
    double prev = 0.0;
    for (double P : {0.0, 1.0, 4.0, 16.0, 64.0}) {
        CHECK(oco::bound_thm4(256, P, 1.0, 1.0) > prev);
        prev = oco::bound_thm4(256, P, 1.0, 1.0);
    }
    CHECK(oco::bound_thm3(64, 256, 1.0, 1.0) < oco::bound_thm3(128, 256, 1.0, 1.0));
    CHECK(oco::bound_thm5(32, 64, 0.5, 1.0, 1.0) < oco::bound_thm5(64, 64, 0.5, 1.0, 1.0));
    CHECK(oco::bound_thm7(64, 0.0, 1.0, 1.0) < oco::bound_thm7(256, 0.0, 1.0, 1.0));
    CHECK(oco::bound_thm6(64, 256, 1.0, 1.0) > 0.0);
    CHECK_THROWS_AS(oco::bound_c(0, 1), std::invalid_argument);
}

TEST_CASE("the equal-split relation bound is the minimum over window lengths") {
    oco::EnvironmentSpec spec;
    spec.id = "abrupt";
    spec.horizon = 32;
    spec.segments = 4;
    spec.seed = 31;
    const auto env = oco::build_environment(spec);
    const auto tr = ogd_trace(env);
    const auto u = oco::comparators_minimizers(*env);
    const double G = env->gradient_bound();
    const double P = oco::path_length(u);
    const auto worst = oco::sa_regret_all(tr);
    double expected = std::numeric_limits<double>::infinity();
    for (int tau = 1; tau <= 32; ++tau)
        expected = std::min(expected, worst[tau] * 32.0 / tau + tau * G * P);
    CHECK(oco::bound_thm1_rhs(tr, u, G) == doctest::Approx(expected).epsilon(1e-12));
    // With a stationary comparator the path term vanishes and the full-window
    // term reduces to the static regret.
    const std::vector<oco::Vec> fixed(32, env->window_minimizer(1, 32));
    CHECK(oco::bound_thm1_rhs(tr, fixed, G) <= worst[32] + 1e-12);
}
