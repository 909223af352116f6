#ifndef OCO_BOUNDS_HPP
#define OCO_BOUNDS_HPP

namespace oco {

// c(t) = 1 + ln t + ln(1 + log2 T) + ln((5 + 3 ln(1+t)) / 2); the closed-form
// upper bound, which only tightens dominance checks.
double bound_c(int t, int T);

// Same expression with log2 s in place of log2 T.
double bound_c_prime(int s);

// k = floor(log2(1 + 4P/(7D)) / 2) + 1
int step_size_grid_index(double P, double D);

// Strongly adaptive regret of AOD: 8 (sqrt(3 c(T)) + DG) sqrt(tau).
double bound_thm3(int tau, int T, double D, double G);

// Dynamic regret of AOD:
// (3DG/2 + (5G/2) sqrt(D P) + sqrt(6 c(T) (1 + 2P/D))) sqrt(T).
double bound_thm4(int T, double P, double D, double G);

// Interval dynamic regret of AOA over [r, s] of length len:
// (14 sqrt(c'(s)) + 3 (1 + 2 ln(k+1)) + 23 DG) sqrt(len) + 5 G sqrt(D P len).
double bound_thm5(int len, int s, double P, double D, double G);

// Dynamic regret of Ader:
// (3G/4) sqrt(2T (7D^2 + 4DP)) + (sqrt(2T)/4) (1 + 2 ln(k+1)).
double bound_thm7(int T, double P, double D, double G);

// Cited sleeping-coin-betting meta-algorithm bound, used only as a named
// reference constant: (4DG/(sqrt(2)-1) + 8 sqrt(7 ln T + 5)) sqrt(tau).
double bound_thm6(int tau, int T, double D, double G);

// Meta-regret of AOD over a prefix of length n ending at round t:
// sqrt(3 n c(t)).
double bound_meta_regret(int n, int t, int T);

}  // namespace oco

#endif
