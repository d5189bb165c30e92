#pragma once

// Closed-form brackets for r_<(NM_n, K_3) and r_<(NM_m, K_{n+1}).

namespace ordram {

struct Bracket {
  long long lo = 0;
  long long hi = 0;
  /// The quadratic had no real root and hi is the trivial cap instead.
  bool fallback = false;
};

/// r_<(NM_n, K_3). n >= 1.
Bracket nm_k3_bounds(int n);

/// r_<(NM_m, K_{n+1}). m, n >= 1.
Bracket nm_kn_bounds(int m, int n);

}  // namespace ordram
