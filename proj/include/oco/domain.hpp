#ifndef OCO_DOMAIN_HPP
#define OCO_DOMAIN_HPP

#include <memory>

#include "oco/vec.hpp"

namespace oco {

// Convex feasible set with a Euclidean projection oracle. Must contain the
// origin and have finite diameter.
class Domain {
public:
    virtual ~Domain() = default;
    virtual Vec project(const Vec& x) const = 0;
    virtual bool contains(const Vec& x, double tol = 1e-9) const = 0;
    virtual double diameter() const = 0;
    virtual int dimension() const = 0;
};

using DomainPtr = std::shared_ptr<const Domain>;

// Axis-aligned box [lo, hi]^d. Projection clamps coordinatewise.
class BoxDomain final : public Domain {
public:
    BoxDomain(double lo, double hi, int dim);
    Vec project(const Vec& x) const override;
    bool contains(const Vec& x, double tol) const override;
    double diameter() const override;
    int dimension() const override { return dim_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    double lo_;
    double hi_;
    int dim_;
};

// Euclidean ball of given radius centered at the origin.
class BallDomain final : public Domain {
public:
    BallDomain(double radius, int dim);
    Vec project(const Vec& x) const override;
    bool contains(const Vec& x, double tol) const override;
    double diameter() const override { return 2.0 * radius_; }
    int dimension() const override { return dim_; }
    double radius() const { return radius_; }

private:
    double radius_;
    int dim_;
};

}  // namespace oco

#endif
