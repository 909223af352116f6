#ifndef OCO_INTERVALS_HPP
#define OCO_INTERVALS_HPP

#include <vector>

namespace oco {

// Closed integer range of length 2^level; the end is derived so the length
// invariant holds by construction.
struct Interval {
    int start = 1;
    int level = 0;

    int length() const { return 1 << level; }
    int end() const { return start + length() - 1; }
    bool contains(int t) const { return start <= t && t <= end(); }

    bool operator==(const Interval&) const = default;
};

enum class IntervalSystem {
    DGC,  // level k partitions N into blocks [ (i-1)*2^k+1, i*2^k ]
    GC,   // level k partitions N \ {1..2^k-1} into blocks [ i*2^k, (i+1)*2^k-1 ]
};

// Intervals of the dense system that start at round t, restricted to lengths
// <= T. Sorted by level ascending.
std::vector<Interval> dgc_starting_at(int t, int T);

// Intervals of the original geometric covering that start at round t. Sorted
// by level ascending.
std::vector<Interval> gc_starting_at(int t);

// Partition of [r, s] into disjoint consecutive system intervals whose
// lengths double up to a peak and then at least halve. For DGC the horizon T
// bounds the interval lengths (required when r <= s <= T).
std::vector<Interval> cover(int r, int s, IntervalSystem system, int T = 0);

}  // namespace oco

#endif
