#include "oco/domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oco {

BoxDomain::BoxDomain(double lo, double hi, int dim) : lo_(lo), hi_(hi), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("BoxDomain: dimension must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("BoxDomain: lo must be < hi");
    if (lo > 0.0 || hi < 0.0) throw std::invalid_argument("BoxDomain: must contain the origin");
}

Vec BoxDomain::project(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("project: dimension mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::clamp(x[i], lo_, hi_);
    return r;
}

bool BoxDomain::contains(const Vec& x, double tol) const {
    if (static_cast<int>(x.size()) != dim_) return false;
    for (double v : x)
        if (v < lo_ - tol || v > hi_ + tol) return false;
    return true;
}

double BoxDomain::diameter() const { return (hi_ - lo_) * std::sqrt(static_cast<double>(dim_)); }

BallDomain::BallDomain(double radius, int dim) : radius_(radius), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("BallDomain: dimension must be >= 1");
    if (!(radius > 0.0)) throw std::invalid_argument("BallDomain: radius must be > 0");
}

Vec BallDomain::project(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("project: dimension mismatch");
    const double n = norm2(x);
    if (n <= radius_) return x;
    Vec r(x.size());
    const double scale = radius_ / n;
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * scale;
    return r;
}

bool BallDomain::contains(const Vec& x, double tol) const {
    if (static_cast<int>(x.size()) != dim_) return false;
    return norm2(x) <= radius_ + tol;
}

}  // namespace oco
