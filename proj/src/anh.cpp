#include "oco/anh.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oco {

namespace {

double pos_part(double x) { return x > 0.0 ? x : 0.0; }

// Exponent of Phi(R, C); 0 when C == 0 (Phi(0,0) := 1).
double phi_exponent(double R, double C) {
    if (C == 0.0) return 0.0;
    const double r = pos_part(R);
    return r * r / (3.0 * C);
}

// Direct evaluation overflows once the exponent passes ~709.
constexpr double kSafeExponent = 600.0;

}  // namespace

double anh_potential(double R, double C) {
    if (C < 0.0) throw std::invalid_argument("anh_potential: C must be >= 0");
    return std::exp(phi_exponent(R, C));
}

double anh_weight(double R, double C) {
    if (C < 0.0) throw std::invalid_argument("anh_weight: C must be >= 0");
    return 0.5 * (std::exp(phi_exponent(R + 1.0, C + 1.0)) -
                  std::exp(phi_exponent(R - 1.0, C + 1.0)));
}

double anh_log_weight(double R, double C) {
    if (C < 0.0) throw std::invalid_argument("anh_log_weight: C must be >= 0");
    const double a = phi_exponent(R + 1.0, C + 1.0);
    const double b = phi_exponent(R - 1.0, C + 1.0);
    if (a == 0.0) return -std::numeric_limits<double>::infinity();  // [R+1]+ = 0
    // w = exp(a) * (1 - exp(b - a)) / 2 with b < a
    return std::log(0.5) + a + std::log1p(-std::exp(b - a));
}

std::vector<double> normalize_weights(const std::vector<AnhRecord>& records) {
    if (records.empty()) throw std::invalid_argument("normalize_weights: no records");
    const std::size_t n = records.size();

    double max_exp = 0.0;
    for (const AnhRecord& rec : records)
        max_exp = std::max(max_exp, phi_exponent(rec.R + 1.0, rec.C + 1.0));

    std::vector<double> w(n);
    double sum = 0.0;
    if (max_exp <= kSafeExponent) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = anh_weight(records[i].R, records[i].C);
            sum += w[i];
        }
    } else {
        // Shift by the max log weight before exponentiating.
        std::vector<double> lw(n);
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            lw[i] = anh_log_weight(records[i].R, records[i].C);
            m = std::max(m, lw[i]);
        }
        if (std::isfinite(m)) {
            for (std::size_t i = 0; i < n; ++i) {
                w[i] = std::exp(lw[i] - m);
                sum += w[i];
            }
        }
    }

    if (sum <= 0.0) return std::vector<double>(n, 1.0 / static_cast<double>(n));
    for (double& x : w) x /= sum;
    return w;
}

Vec combine_actions(const std::vector<double>& weights, const std::vector<Vec>& actions) {
    if (weights.size() != actions.size() || actions.empty())
        throw std::invalid_argument("combine_actions: size mismatch");
    Vec out(actions.front().size(), 0.0);
    for (std::size_t i = 0; i < actions.size(); ++i) {
        if (actions[i].size() != out.size())
            throw std::invalid_argument("combine_actions: action dimension mismatch");
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += weights[i] * actions[i][j];
    }
    return out;
}

}  // namespace oco
