#ifndef OCO_VEC_HPP
#define OCO_VEC_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oco {

// Points and gradients are plain dense vectors.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

inline double dist2(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dist2: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// a + c*b
inline Vec axpy(const Vec& a, double c, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("axpy: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + c * b[i];
    return r;
}

inline bool all_finite(const Vec& a) {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

inline Vec zeros(std::size_t d) { return Vec(d, 0.0); }

}  // namespace oco

#endif
