#include "oco/aod.hpp"

#include <cmath>
#include <stdexcept>

namespace oco {

AodLearner::AodLearner(DomainPtr domain, double D, double G, int horizon)
    : domain_(std::move(domain)), D_(D), G_(G), horizon_(horizon) {
    if (!(D > 0.0) || !(G > 0.0)) throw std::invalid_argument("AodLearner: need D, G > 0");
    if (horizon < 1) throw std::invalid_argument("AodLearner: horizon must be >= 1");
}

int AodLearner::active_experts() const { return static_cast<int>(slots_.size()); }

void AodLearner::spawn_round_experts() {
    for (const Interval& I : dgc_starting_at(t_, horizon_)) {
        const double eta = D_ / (G_ * std::sqrt(static_cast<double>(I.length())));
        Vec init;
        if (t_ > 1) {
            // Warm start: the dying same-level expert's current output.
            if (I.level >= static_cast<int>(slots_.size()))
                throw std::logic_error("AodLearner: missing same-length predecessor");
            init = slots_[I.level].learner.current;
        }
        Slot slot{I, make_ogd(domain_, eta, std::move(init)), AnhRecord{}};
        if (I.level < static_cast<int>(slots_.size()))
            slots_[I.level] = std::move(slot);  // replaces (removes) the predecessor
        else if (I.level == static_cast<int>(slots_.size()))
            slots_.push_back(std::move(slot));
        else
            throw std::logic_error("AodLearner: non-contiguous level");
    }
}

Vec AodLearner::act() {
    if (t_ > horizon_) throw std::runtime_error("AodLearner: past its horizon");
    if (!acted_) {
        spawn_round_experts();
        last_actions_.clear();
        std::vector<AnhRecord> records;
        records.reserve(slots_.size());
        for (const Slot& s : slots_) {
            last_actions_.push_back(s.learner.current);
            records.push_back(s.record);
        }
        last_weights_ = normalize_weights(records);
        acted_ = true;
    }
    return combine_actions(last_weights_, last_actions_);
}

void AodLearner::observe(const LossFunction& f) {
    if (!acted_) (void)act();
    const Vec played = combine_actions(last_weights_, last_actions_);
    const double loss_played = f.value(played);
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const double r = loss_played - f.value(last_actions_[i]);
        slots_[i].record.R += r;
        slots_[i].record.C += std::abs(r);
    }
    for (Slot& s : slots_) s.learner = ogd_step(s.learner, f);
    ++t_;
    acted_ = false;
}

std::vector<ExpertMeta> AodLearner::expert_snapshot() const {
    std::vector<ExpertMeta> out;
    out.reserve(slots_.size());
    for (const Slot& s : slots_)
        out.push_back({s.interval.start, s.interval.level, s.record.R});
    return out;
}

}  // namespace oco
