#ifndef OCO_ENVIRONMENT_HPP
#define OCO_ENVIRONMENT_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "oco/domain.hpp"
#include "oco/loss.hpp"

namespace oco {

// The two loss families produced by the shipped environments. Both admit an
// exact minimizer of the summed loss over any window of rounds.
enum class LossFamily {
    AbsDistance,  // f_t(w) = |w - theta_t| / D on a 1-d box
    Linear,       // f_t(w) = (<g_t, w> + 1) / 2 on the unit ball, |g_t| = 1
};

// A fixed, seeded loss sequence: one parameter vector per round plus the loss
// family that interprets it. Rounds are 1-based.
class Environment {
public:
    // Segments (maximal runs of equal theta) are derived from the sequence.
    Environment(LossFamily family, DomainPtr domain, std::vector<Vec> thetas,
                std::string kind);

    int horizon() const { return static_cast<int>(thetas_.size()); }
    const Domain& domain() const { return *domain_; }
    DomainPtr domain_ptr() const { return domain_; }
    int dimension() const { return domain_->dimension(); }
    LossFamily family() const { return family_; }
    const std::string& kind() const { return kind_; }

    double diameter_bound() const;   // D
    double gradient_bound() const;   // G

    LossFunction loss_at(int t) const;
    const Vec& theta(int t) const;
    Vec minimizer_at(int t) const;

    // Exact minimizer / minimum of sum_{t=r}^{s} f_t over the domain.
    Vec window_minimizer(int r, int s) const;
    double window_min_loss(int r, int s) const;

    // Stationarity blocks used by the piecewise-constant comparator policy.
    const std::vector<std::pair<int, int>>& segments() const { return segments_; }

private:
    void check_round(int t) const;

    LossFamily family_;
    DomainPtr domain_;
    std::vector<Vec> thetas_;
    std::string kind_;
    std::vector<std::pair<int, int>> segments_;
};

using EnvPtr = std::shared_ptr<const Environment>;

// Environment ids accepted by the harness: stationary, abrupt, drift,
// adversarial-linear.
struct EnvironmentSpec {
    std::string id = "abrupt";
    int horizon = 64;
    int dimension = 1;        // adversarial-linear only
    int segments = 4;         // abrupt: number of stationary pieces
    std::vector<double> thetas;  // abrupt/stationary: explicit targets (optional)
    unsigned long long seed = 0;
};

EnvPtr build_environment(const EnvironmentSpec& spec);

// Reassemble an environment from recorded per-round parameters (trace replay).
EnvPtr rebuild_environment(const std::string& kind, int dimension,
                           const std::vector<Vec>& thetas);

}  // namespace oco

#endif
