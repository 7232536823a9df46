#pragma once

#include "cantorval/classifier.hpp"
#include "cantorval/digit_set.hpp"
#include "cantorval/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cantorval {

// Finite-depth observations around one gap of the base-depth cover.
// "adjacent" flags certify a sub-interval of A_p touching the gap
// endpoint; "nearby" flags report gaps / certified intervals inside the
// probe window (endpoint ± 1/base^(base_depth-1)) on the respective side.
struct GapProbe {
  bool left_adjacent_certified = false;
  bool right_adjacent_certified = false;
  bool left_nearby_gap = false;
  bool right_nearby_gap = false;
  bool left_nearby_certified = false;
  bool right_nearby_certified = false;
};

// Structural fingerprint of A_p at finite depth: necessary consequences
// of each topological type, never a proof of one.
struct Signature {
  int base_depth = 3;
  int probe_depth = 6;
  bool is_full_hull = false;
  std::size_t gap_count = 0;
  bool has_certified_interval = false;
  std::vector<GapProbe> gap_probes; // one per gap of the base-depth cover
};

Signature signature(const DigitSet& a, int base_depth, int probe_depth,
                    std::size_t budget = 0);

// Do the finite-depth observations match the predicted type? These are
// necessary conditions only: a false result refutes, a true one merely
// fails to refute.
bool signature_matches(TopologicalType t, const Signature& s);

enum class RowStatus { Consistent, Inconsistent, Skipped, Unverified };

struct SweepRow {
  DiffSpec spec;
  TopologicalType type = TopologicalType::FullInterval;
  RowStatus status = RowStatus::Unverified;
  std::optional<Signature> sig;
};

struct SweepReport {
  int p_max = 3;
  int base_depth = 3;
  int probe_depth = 6;
  std::vector<SweepRow> rows;
  std::size_t tally[5] = {0, 0, 0, 0, 0}; // indexed by TopologicalType
  std::size_t consistent = 0;
  std::size_t inconsistent = 0;
  std::size_t skipped = 0;

  bool ok() const { return inconsistent == 0; }
};

// Classifies every valid DiffSpec with 3 <= p <= p_max in lexicographic
// (p, l1, r1, l2, r2) order, checks the partition and mirror invariants,
// and (when verify is set) checks each difference set's signature against
// the predicted type. Budget overruns mark a row Skipped, never abort.
SweepReport sweep(int p_max, int base_depth = 3, int probe_depth = 6, bool verify = true,
                  std::size_t budget = 0);

// Exhaustive witness of A_p - B_p = (A-B)_p at grid level: the depth-n
// word sums of A-B equal all differences of depth-n word sums of A and B.
bool prop_dod_grid_check(const DigitSet& a, const DigitSet& b, int n);

} // namespace cantorval
