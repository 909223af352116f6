#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "oco/domain.hpp"
#include "oco/environment.hpp"
#include "oco/game.hpp"
#include "oco/ogd.hpp"

namespace {

struct FixedLearner final : oco::OnlineLearner {
    oco::Vec w;
    explicit FixedLearner(oco::Vec v) : w(std::move(v)) {}
    oco::Vec act() override { return w; }
    void observe(const oco::LossFunction&) override {}
};

oco::EnvPtr abs_env(std::vector<double> targets) {
    std::vector<oco::Vec> thetas;
    for (double x : targets) thetas.push_back(oco::Vec{x});
    return std::make_shared<oco::Environment>(oco::LossFamily::AbsDistance,
                                              std::make_shared<oco::BoxDomain>(0.0, 1.0, 1),
                                              std::move(thetas), "scripted");
}

}  // namespace

TEST_CASE("box domain projects by coordinatewise clamping") {
    const oco::BoxDomain box(0.0, 1.0, 3);
    CHECK(box.project({-0.5, 0.25, 2.0}) == oco::Vec{0.0, 0.25, 1.0});
    CHECK(box.project({0.1, 0.2, 0.3}) == oco::Vec{0.1, 0.2, 0.3});
    CHECK(box.contains({0.0, 1.0, 0.5}, 1e-9));
    CHECK_FALSE(box.contains({0.0, 1.1, 0.5}, 1e-9));
    CHECK(box.diameter() == doctest::Approx(std::sqrt(3.0)));
    CHECK(box.dimension() == 3);
}

TEST_CASE("box domain must contain the origin") {
    CHECK_THROWS_AS(oco::BoxDomain(0.5, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(oco::BoxDomain(-2.0, -1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(oco::BoxDomain(1.0, 0.0, 1), std::invalid_argument);
}

TEST_CASE("ball domain projects by rescaling") {
    const oco::BallDomain ball(1.0, 2);
    const oco::Vec p = ball.project({3.0, 4.0});
    CHECK(p[0] == doctest::Approx(0.6));
    CHECK(p[1] == doctest::Approx(0.8));
    CHECK(ball.project({0.1, -0.2}) == oco::Vec{0.1, -0.2});
    CHECK(ball.diameter() == doctest::Approx(2.0));
    CHECK_THROWS_AS(oco::BallDomain(0.0, 2), std::invalid_argument);
}

TEST_CASE("projections are idempotent and distance-minimizing") {
    const oco::BoxDomain box(0.0, 1.0, 2);
    const oco::BallDomain ball(1.5, 2);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const oco::Vec x{unif(rng), unif(rng)};
        for (const oco::Domain* dom : {static_cast<const oco::Domain*>(&box),
                                       static_cast<const oco::Domain*>(&ball)}) {
            const oco::Vec p = dom->project(x);
            CHECK(dom->contains(p, 1e-12));
            CHECK(oco::dist2(dom->project(p), p) == doctest::Approx(0.0));
            // No feasible candidate is closer than the projection.
            const oco::Vec q = dom->project(oco::Vec{unif(rng), unif(rng)});
            CHECK(oco::dist2(x, p) <= oco::dist2(x, q) + 1e-12);
        }
    }
}

TEST_CASE("environment derives segments from equal-theta runs") {
    const auto env = abs_env({0.2, 0.2, 0.7, 0.7, 0.7, 0.2});
    REQUIRE(env->segments().size() == 3);
    CHECK(env->segments()[0] == std::pair<int, int>(1, 2));
    CHECK(env->segments()[1] == std::pair<int, int>(3, 5));
    CHECK(env->segments()[2] == std::pair<int, int>(6, 6));
    CHECK(env->theta(3)[0] == 0.7);
    CHECK(env->minimizer_at(6)[0] == 0.2);
    CHECK_THROWS_AS(env->theta(0), std::out_of_range);
    CHECK_THROWS_AS(env->theta(7), std::out_of_range);
}

TEST_CASE("abs losses report exact values, subgradients, and window optima") {
    const auto env = abs_env({0.2, 0.8, 0.5});
    const oco::LossFunction f = env->loss_at(1);
    CHECK(f.value({0.7}) == doctest::Approx(0.5));
    CHECK(f.gradient({0.7}) == oco::Vec{1.0});
    CHECK(f.gradient({0.1}) == oco::Vec{-1.0});
    CHECK(f.gradient({0.2}) == oco::Vec{0.0});  // subgradient 0 at the kink
    CHECK(f.lipschitz_bound == 1.0);
    // Median of {0.2, 0.8, 0.5} is 0.5: min sum = 0.3 + 0.3 + 0.
    CHECK(env->window_minimizer(1, 3)[0] == doctest::Approx(0.5));
    CHECK(env->window_min_loss(1, 3) == doctest::Approx(0.6));
    CHECK(env->window_min_loss(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("linear losses on the unit ball have the closed-form window optimum") {
    std::vector<oco::Vec> gs{{1.0, 0.0}, {0.0, 1.0}};
    const auto env = std::make_shared<oco::Environment>(
        oco::LossFamily::Linear, std::make_shared<oco::BallDomain>(1.0, 2), gs, "scripted");
    const oco::LossFunction f = env->loss_at(1);
    CHECK(f.value({-1.0, 0.0}) == doctest::Approx(0.0));
    CHECK(f.value({1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(f.gradient({0.3, 0.3}) == oco::Vec{0.5, 0.0});
    // sum g = (1,1): minimizer -(1,1)/sqrt(2), min loss = (2 - sqrt(2)) / 2.
    const oco::Vec m = env->window_minimizer(1, 2);
    CHECK(m[0] == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(m[1] == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(env->window_min_loss(1, 2) == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0));
}

TEST_CASE("run_game records the played loss each round") {
    const auto env = abs_env({0.75, 0.75, 0.75});
    FixedLearner fixed(oco::Vec{0.25});
    const oco::RunTrace trace = oco::run_game(fixed, env);
    REQUIRE(trace.T == 3);
    for (double l : trace.losses) CHECK(l == doctest::Approx(0.5));
    CHECK(trace.cumulative_loss() == doctest::Approx(1.5));
    CHECK(trace.D == doctest::Approx(1.0));
    CHECK(trace.G == doctest::Approx(1.0));
}

TEST_CASE("run_game rejects infeasible actions") {
    const auto env = abs_env({0.5, 0.5});
    FixedLearner outside(oco::Vec{2.0});
    CHECK_THROWS_AS(oco::run_game(outside, env), std::runtime_error);
}

TEST_CASE("OGD runs are deterministic") {
    oco::EnvironmentSpec spec;
    spec.id = "abrupt";
    spec.horizon = 32;
    spec.segments = 4;
    spec.seed = 11;
    const auto env = oco::build_environment(spec);
    const double eta = oco::static_step_size(env->diameter_bound(), env->gradient_bound(), 32);
    oco::OgdLearner a(oco::make_ogd(env->domain_ptr(), eta));
    oco::OgdLearner b(oco::make_ogd(env->domain_ptr(), eta));
    const auto ta = oco::run_game(a, env);
    const auto tb = oco::run_game(b, env);
    CHECK(ta.actions == tb.actions);
    CHECK(ta.losses == tb.losses);
}

TEST_CASE("actions depend only on the observed prefix") {
    const auto env_a = abs_env({0.1, 0.9, 0.4, 0.6, 0.2, 0.2, 0.8, 0.8});
    const auto env_b = abs_env({0.1, 0.9, 0.4, 0.6, 0.9, 0.1, 0.3, 0.3});
    const double eta = oco::static_step_size(1.0, 1.0, 8);
    oco::OgdLearner a(oco::make_ogd(env_a->domain_ptr(), eta));
    oco::OgdLearner b(oco::make_ogd(env_b->domain_ptr(), eta));
    const auto ta = oco::run_game(a, env_a);
    const auto tb = oco::run_game(b, env_b);
    // Round-t actions only see losses 1..t-1; the first 4 rounds agree, so
    // actions 1..5 must match bit for bit.
    for (int t = 1; t <= 5; ++t) CHECK(ta.actions[t - 1] == tb.actions[t - 1]);
}

TEST_CASE("OGD trace matches an independent hand replay") {
    oco::EnvironmentSpec spec;
    spec.id = "abrupt";
    spec.horizon = 8;
    spec.segments = 2;
    spec.seed = 7;
    const auto env = oco::build_environment(spec);
    const double eta = oco::static_step_size(1.0, 1.0, 8);
    oco::OgdLearner learner(oco::make_ogd(env->domain_ptr(), eta));
    const auto trace = oco::run_game(learner, env);

    double w = 0.0;
    for (int t = 1; t <= 8; ++t) {
        CHECK(trace.actions[t - 1][0] == w);
        const double theta = env->theta(t)[0];
        CHECK(trace.losses[t - 1] == std::abs(w - theta));
        const double g = w > theta ? 1.0 : (w < theta ? -1.0 : 0.0);
        w = std::clamp(w + (-eta) * g, 0.0, 1.0);
    }
}
