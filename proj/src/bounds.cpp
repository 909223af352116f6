#include "oco/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace oco {

double bound_c(int t, int T) {
    if (t < 1 || T < 1) throw std::invalid_argument("bound_c: t, T must be >= 1");
    return 1.0 + std::log(static_cast<double>(t)) + std::log(1.0 + std::log2(static_cast<double>(T))) +
           std::log((5.0 + 3.0 * std::log(1.0 + t)) / 2.0);
}

double bound_c_prime(int s) { return bound_c(s, s); }

int step_size_grid_index(double P, double D) {
    if (P < 0.0 || !(D > 0.0)) throw std::invalid_argument("step_size_grid_index: need P >= 0, D > 0");
    return static_cast<int>(std::floor(0.5 * std::log2(1.0 + 4.0 * P / (7.0 * D)))) + 1;
}

double bound_thm3(int tau, int T, double D, double G) {
    return 8.0 * (std::sqrt(3.0 * bound_c(T, T)) + D * G) * std::sqrt(static_cast<double>(tau));
}

double bound_thm4(int T, double P, double D, double G) {
    return (1.5 * D * G + 2.5 * G * std::sqrt(D * P) +
            std::sqrt(6.0 * bound_c(T, T) * (1.0 + 2.0 * P / D))) *
           std::sqrt(static_cast<double>(T));
}

double bound_thm5(int len, int s, double P, double D, double G) {
    const int k = step_size_grid_index(P, D);
    return (14.0 * std::sqrt(bound_c_prime(s)) + 3.0 * (1.0 + 2.0 * std::log(k + 1.0)) +
            23.0 * D * G) *
               std::sqrt(static_cast<double>(len)) +
           5.0 * G * std::sqrt(D * P * len);
}

double bound_thm7(int T, double P, double D, double G) {
    const int k = step_size_grid_index(P, D);
    return 0.75 * G * std::sqrt(2.0 * T * (7.0 * D * D + 4.0 * D * P)) +
           0.25 * std::sqrt(2.0 * T) * (1.0 + 2.0 * std::log(k + 1.0));
}

double bound_thm6(int tau, int T, double D, double G) {
    return (4.0 * D * G / (std::sqrt(2.0) - 1.0) +
            8.0 * std::sqrt(7.0 * std::log(static_cast<double>(T)) + 5.0)) *
           std::sqrt(static_cast<double>(tau));
}

double bound_meta_regret(int n, int t, int T) {
    return std::sqrt(3.0 * n * bound_c(t, T));
}

}  // namespace oco
