#include "oco/intervals.hpp"

#include <stdexcept>

namespace oco {

namespace {

// Longest system interval starting at pos whose end does not pass s.
// Returns level -1 if none exists (cannot happen for level 0 members).
int greedy_level(int pos, int s, IntervalSystem system, int T) {
    int best = -1;
    for (int k = 0;; ++k) {
        const long long len = 1LL << k;
        if (pos + len - 1 > s) break;
        if (system == IntervalSystem::DGC) {
            if (len > T) break;
            if ((pos - 1) % len == 0) best = k;
        } else {
            // GC level k starts at i*2^k with i >= 1
            if (pos % len == 0 && pos >= len) best = k;
        }
    }
    return best;
}

}  // namespace

std::vector<Interval> dgc_starting_at(int t, int T) {
    if (t < 1) throw std::invalid_argument("dgc_starting_at: t must be >= 1");
    if (T < t) throw std::invalid_argument("dgc_starting_at: t must not exceed T");
    std::vector<Interval> out;
    for (int k = 0; (1LL << k) <= T; ++k) {
        if ((t - 1) % (1LL << k) == 0) out.push_back({t, k});
    }
    return out;
}

std::vector<Interval> gc_starting_at(int t) {
    if (t < 1) throw std::invalid_argument("gc_starting_at: t must be >= 1");
    std::vector<Interval> out;
    for (int k = 0; (1LL << k) <= t; ++k) {
        if (t % (1LL << k) == 0) out.push_back({t, k});
    }
    return out;
}

std::vector<Interval> cover(int r, int s, IntervalSystem system, int T) {
    if (r < 1 || r > s) throw std::invalid_argument("cover: need 1 <= r <= s");
    if (system == IntervalSystem::DGC) {
        if (T < s) throw std::invalid_argument("cover: DGC requires horizon T >= s");
    } else {
        T = 0;
    }
    std::vector<Interval> out;
    int pos = r;
    while (pos <= s) {
        const int k = greedy_level(pos, s, system, T);
        if (k < 0) throw std::logic_error("cover: no system interval starts here");
        out.push_back({pos, k});
        pos += 1 << k;
    }
    return out;
}

}  // namespace oco
