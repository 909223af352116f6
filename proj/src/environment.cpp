#include "oco/environment.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace oco {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec abs_gradient(const Vec& w, const Vec& theta) {
    // Subgradient of |w - theta|; 0 at the kink keeps OGD stationary there.
    Vec g(w.size(), 0.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > theta[i])
            g[i] = 1.0;
        else if (w[i] < theta[i])
            g[i] = -1.0;
    }
    return g;
}

}  // namespace

Environment::Environment(LossFamily family, DomainPtr domain, std::vector<Vec> thetas,
                         std::string kind)
    : family_(family), domain_(std::move(domain)), thetas_(std::move(thetas)), kind_(std::move(kind)) {
    if (thetas_.empty()) throw std::invalid_argument("Environment: horizon must be >= 1");
    if (family_ == LossFamily::AbsDistance && domain_->dimension() != 1)
        throw std::invalid_argument("Environment: AbsDistance losses are one-dimensional");
    for (const Vec& th : thetas_) {
        if (static_cast<int>(th.size()) != domain_->dimension())
            throw std::invalid_argument("Environment: theta dimension mismatch");
        if (!all_finite(th)) throw std::invalid_argument("Environment: non-finite theta");
    }
    int start = 1;
    for (int t = 2; t <= horizon(); ++t) {
        if (thetas_[t - 1] != thetas_[t - 2]) {
            segments_.emplace_back(start, t - 1);
            start = t;
        }
    }
    segments_.emplace_back(start, horizon());
}

void Environment::check_round(int t) const {
    if (t < 1 || t > horizon()) throw std::out_of_range("Environment: round out of range");
}

double Environment::diameter_bound() const { return domain_->diameter(); }

double Environment::gradient_bound() const {
    return family_ == LossFamily::AbsDistance ? 1.0 : 0.5;
}

const Vec& Environment::theta(int t) const {
    check_round(t);
    return thetas_[t - 1];
}

LossFunction Environment::loss_at(int t) const {
    check_round(t);
    const Vec th = thetas_[t - 1];
    LossFunction f;
    f.lipschitz_bound = gradient_bound();
    if (family_ == LossFamily::AbsDistance) {
        f.value = [th](const Vec& w) { return std::abs(w[0] - th[0]); };
        f.gradient = [th](const Vec& w) { return abs_gradient(w, th); };
    } else {
        f.value = [th](const Vec& w) { return 0.5 * (dot(th, w) + 1.0); };
        f.gradient = [th](const Vec& w) {
            (void)w;
            Vec g(th.size());
            for (std::size_t i = 0; i < th.size(); ++i) g[i] = 0.5 * th[i];
            return g;
        };
    }
    return f;
}

Vec Environment::minimizer_at(int t) const {
    check_round(t);
    const Vec& th = thetas_[t - 1];
    if (family_ == LossFamily::AbsDistance) return th;
    Vec m(th.size());
    for (std::size_t i = 0; i < th.size(); ++i) m[i] = -th[i];
    return m;
}

Vec Environment::window_minimizer(int r, int s) const {
    check_round(r);
    check_round(s);
    if (r > s) throw std::invalid_argument("window_minimizer: r > s");
    if (family_ == LossFamily::AbsDistance) {
        // Sum of absolute deviations is minimized at a median of the targets.
        std::vector<double> vals;
        vals.reserve(s - r + 1);
        for (int t = r; t <= s; ++t) vals.push_back(thetas_[t - 1][0]);
        std::nth_element(vals.begin(), vals.begin() + (vals.size() - 1) / 2, vals.end());
        return Vec{vals[(vals.size() - 1) / 2]};
    }
    Vec sum(dimension(), 0.0);
    for (int t = r; t <= s; ++t)
        for (int i = 0; i < dimension(); ++i) sum[i] += thetas_[t - 1][i];
    const double n = norm2(sum);
    if (n == 0.0) return zeros(dimension());
    Vec m(dimension());
    for (int i = 0; i < dimension(); ++i) m[i] = -sum[i] / n;
    return m;
}

double Environment::window_min_loss(int r, int s) const {
    const Vec m = window_minimizer(r, s);
    double total = 0.0;
    for (int t = r; t <= s; ++t) total += loss_at(t).value(m);
    return total;
}

EnvPtr build_environment(const EnvironmentSpec& spec) {
    const int T = spec.horizon;
    if (T < 1) throw std::invalid_argument("build_environment: horizon must be >= 1");
    std::mt19937_64 rng(spec.seed);

    if (spec.id == "stationary" || spec.id == "abrupt" || spec.id == "drift") {
        std::vector<Vec> thetas(T);
        if (spec.id == "stationary") {
            double theta = spec.thetas.empty()
                               ? std::uniform_real_distribution<double>(0.0, 1.0)(rng)
                               : spec.thetas[0];
            for (int t = 0; t < T; ++t) thetas[t] = Vec{theta};
        } else if (spec.id == "abrupt") {
            const int m = std::max(1, std::min(spec.segments, T));
            if (!spec.thetas.empty() && static_cast<int>(spec.thetas.size()) != m)
                throw std::invalid_argument("build_environment: thetas list must match segment count");
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            for (int i = 0; i < m; ++i) {
                const double theta = spec.thetas.empty() ? unif(rng) : spec.thetas[i];
                const int lo = i * T / m, hi = (i + 1) * T / m;  // [lo, hi) 0-based
                for (int t = lo; t < hi; ++t) thetas[t] = Vec{theta};
            }
        } else {  // drift
            for (int t = 1; t <= T; ++t)
                thetas[t - 1] = Vec{0.5 * (1.0 + std::sin(2.0 * kPi * t / T))};
        }
        return std::make_shared<Environment>(LossFamily::AbsDistance,
                                             std::make_shared<BoxDomain>(0.0, 1.0, 1),
                                             std::move(thetas), spec.id);
    }

    if (spec.id == "adversarial-linear") {
        const int d = std::max(1, spec.dimension);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<Vec> gs(T);
        for (int t = 0; t < T; ++t) {
            Vec g(d);
            double n = 0.0;
            do {
                for (int i = 0; i < d; ++i) g[i] = gauss(rng);
                n = norm2(g);
            } while (n < 1e-12);
            for (int i = 0; i < d; ++i) g[i] /= n;
            gs[t] = std::move(g);
        }
        return std::make_shared<Environment>(LossFamily::Linear,
                                             std::make_shared<BallDomain>(1.0, d),
                                             std::move(gs), spec.id);
    }

    throw std::invalid_argument("build_environment: unknown environment id '" + spec.id + "'");
}

EnvPtr rebuild_environment(const std::string& kind, int dimension,
                           const std::vector<Vec>& thetas) {
    if (kind == "adversarial-linear")
        return std::make_shared<Environment>(LossFamily::Linear,
                                             std::make_shared<BallDomain>(1.0, dimension),
                                             thetas, kind);
    return std::make_shared<Environment>(LossFamily::AbsDistance,
                                         std::make_shared<BoxDomain>(0.0, 1.0, 1), thetas, kind);
}

}  // namespace oco
