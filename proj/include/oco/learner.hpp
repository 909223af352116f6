#ifndef OCO_LEARNER_HPP
#define OCO_LEARNER_HPP

#include "oco/loss.hpp"
#include "oco/vec.hpp"

namespace oco {

// Online protocol: act() commits to a point before the round's loss is seen,
// observe() feeds the revealed loss back.
class OnlineLearner {
public:
    virtual ~OnlineLearner() = default;
    virtual Vec act() = 0;
    virtual void observe(const LossFunction& f) = 0;
    // Number of live expert instances, for trace bookkeeping.
    virtual int active_experts() const { return 1; }
};

}  // namespace oco

#endif
