#include "oco/aoa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oco {

AoaLearner::AoaLearner(DomainPtr domain, double D, double G)
    : domain_(std::move(domain)), D_(D), G_(G) {
    if (!(D > 0.0) || !(G > 0.0)) throw std::invalid_argument("AoaLearner: need D, G > 0");
}

int AoaLearner::active_experts() const { return static_cast<int>(slots_.size()); }

void AoaLearner::spawn_round_experts() {
    for (const Interval& I : gc_starting_at(t_)) {
        Slot slot{I, std::make_unique<AderLearner>(domain_, D_, G_, I.length()), AnhRecord{}};
        auto pos = std::lower_bound(slots_.begin(), slots_.end(), I.level,
                                    [](const Slot& s, int k) { return s.interval.level < k; });
        if (pos != slots_.end() && pos->interval.level == I.level)
            throw std::logic_error("AoaLearner: level already occupied");
        slots_.insert(pos, std::move(slot));
    }
}

Vec AoaLearner::act() {
    if (!acted_) {
        spawn_round_experts();
        last_actions_.clear();
        std::vector<AnhRecord> records;
        records.reserve(slots_.size());
        for (const Slot& s : slots_) {
            last_actions_.push_back(s.learner->act());
            records.push_back(s.record);
        }
        last_weights_ = normalize_weights(records);
        acted_ = true;
    }
    return combine_actions(last_weights_, last_actions_);
}

void AoaLearner::observe(const LossFunction& f) {
    if (!acted_) (void)act();
    const Vec played = combine_actions(last_weights_, last_actions_);
    const double loss_played = f.value(played);

    // Experts ending this round are dropped before the bookkeeping update, so
    // they never receive a final (R, C) increment or see this loss.
    std::vector<double> expert_losses;
    expert_losses.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i)
        expert_losses.push_back(f.value(last_actions_[i]));

    std::vector<Slot> kept;
    kept.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].interval.end() == t_) continue;
        const double r = loss_played - expert_losses[i];
        slots_[i].record.R += r;
        slots_[i].record.C += std::abs(r);
        slots_[i].learner->observe(f);
        kept.push_back(std::move(slots_[i]));
    }
    slots_ = std::move(kept);
    ++t_;
    acted_ = false;
}

std::vector<ExpertMeta> AoaLearner::expert_snapshot() const {
    std::vector<ExpertMeta> out;
    out.reserve(slots_.size());
    for (const Slot& s : slots_)
        out.push_back({s.interval.start, s.interval.level, s.record.R});
    return out;
}

}  // namespace oco
