#pragma once

#include <vector>

namespace blmab {

// A slice template: R PRBs per round, reserved for L consecutive rounds.
// Ids are 0-based in code; all file outputs print them 1-based.
struct SliceTemplate {
  int id = 0;
  int resources = 0;  // R, in PRBs per round
  int duration = 0;   // L, lock-up length in rounds

  bool operator==(const SliceTemplate&) const = default;
};

// Per-tenant traffic profile.  arrival_rate is in requests per round;
// util_max_frac caps the fraction of the granted PRBs the tenant actually
// uses in a round (1.0 = may use everything it asked for).
struct TenantProfile {
  int id = 0;
  double arrival_rate = 0.0;
  double util_max_frac = 1.0;

  bool operator==(const TenantProfile&) const = default;
};

// A pending slice request.  Rounds are 1-based.
struct SliceRequest {
  int tenant = 0;
  int template_id = 0;
  int arrival_round = 0;

  bool operator==(const SliceRequest&) const = default;
};

// An active granted slice.  remaining counts the rounds still to run
// including the current one; the slice expires once it reaches 0.
// cost is the admission cost fixed at grant time and charged against the
// budget for every active round.
struct LockUp {
  int tenant = 0;
  int template_id = 0;
  int start_round = 0;
  int remaining = 0;
  int cost = 0;

  bool operator==(const LockUp&) const = default;
};

enum class UtilModel {
  uniform,      // used PRBs uniform on [0, R]
  frac_spread,  // per-tenant cap f_i drawn once, then uniform on [0, f_i*R]
};

enum class TieBreak {
  lowest_id,
  random,
};

enum class EucbSolver {
  enumerate,  // exact search over budget-feasible subsets
  dp,         // exact dynamic program over integer PRB weights
};

}  // namespace blmab
