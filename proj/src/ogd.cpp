#include "oco/ogd.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace oco {

OgdState make_ogd(DomainPtr domain, double step_size) {
    return make_ogd(std::move(domain), step_size, Vec{});
}

OgdState make_ogd(DomainPtr domain, double step_size, Vec initial) {
    if (!domain) throw std::invalid_argument("make_ogd: null domain");
    if (!(step_size > 0.0)) throw std::invalid_argument("make_ogd: step size must be > 0");
    OgdState s;
    if (initial.empty()) initial = zeros(domain->dimension());
    if (!domain->contains(initial)) throw std::invalid_argument("make_ogd: initial point outside domain");
    s.current = std::move(initial);
    s.step_size = step_size;
    s.domain = std::move(domain);
    return s;
}

OgdState ogd_step(const OgdState& state, const LossFunction& f) {
    const Vec g = f.gradient(state.current);
    if (!all_finite(g)) throw std::runtime_error("ogd_step: non-finite gradient");
    OgdState next = state;
    next.current = state.domain->project(axpy(state.current, -state.step_size, g));
    return next;
}

double static_step_size(double D, double G, int horizon) {
    if (!(D > 0.0) || !(G > 0.0) || horizon < 1)
        throw std::invalid_argument("static_step_size: need D, G > 0 and horizon >= 1");
    return D / (G * std::sqrt(static_cast<double>(horizon)));
}

}  // namespace oco
