#include "cantorval/verifier.hpp"

#include "cantorval/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace cantorval {

namespace {

std::int64_t pow_i64(int base, int exp) {
  std::int64_t v = 1;
  while (exp-- > 0) v *= base;
  return v;
}

// Certified cells at one depth as [first,last] grid-numerator runs:
// maximal stretches of consecutive word sums (length >= 2).
std::vector<std::pair<std::int64_t, std::int64_t>> certified_runs(
    const std::vector<std::int64_t>& sums) {
  std::vector<std::pair<std::int64_t, std::int64_t>> runs;
  std::size_t i = 0;
  while (i < sums.size()) {
    std::size_t j = i;
    while (j + 1 < sums.size() && sums[j + 1] == sums[j] + 1) ++j;
    if (j > i) runs.emplace_back(sums[i], sums[j]);
    i = j + 1;
  }
  return runs;
}

} // namespace

Signature signature(const DigitSet& a, int base_depth, int probe_depth, std::size_t budget) {
  if (base_depth < 1 || probe_depth < base_depth)
    throw precondition_error("signature needs 1 <= base_depth <= probe_depth");
  if (!a.within_base())
    throw precondition_error("signature requires digits within (-base, base)");

  const int p = a.base();
  Signature s;
  s.base_depth = base_depth;
  s.probe_depth = probe_depth;

  ScaledCover base_cover = cover_scaled(a, base_depth, budget);
  s.is_full_hull = base_cover.runs.size() == 1;
  s.gap_count = base_cover.runs.size() - 1;

  // Bi-obtainable cells are genuine sub-intervals of A_p only under the
  // closure property (without it they do not propagate to deeper depths).
  // Under it, a cell exists at depth d iff two consecutive integers are
  // both depth-d word sums, i.e. iff 1 is a depth-d word sum of the
  // self-difference digit set.
  const bool closure = has_closure_property(a);
  if (closure) {
    std::unordered_set<int> self_diff;
    for (int x : a.digits())
      for (int y : a.digits()) self_diff.insert(x - y);
    RepSearch diff_search{std::vector<int>(self_diff.begin(), self_diff.end()), p};
    for (int d = 1; d <= probe_depth && !s.has_certified_interval; ++d)
      s.has_certified_interval = diff_search.representable(1, d);
  }

  if (s.gap_count == 0) return s;

  ScaledCover probe_cover = cover_scaled(a, probe_depth, budget);
  std::vector<std::pair<std::int64_t, std::int64_t>> cert_runs;
  if (closure) cert_runs = certified_runs(word_sums(a.digits(), p, probe_depth));
  RepSearch rep{a.digits(), p};

  // Everything below compares values scaled to the probe denominator
  // p^probe * (p-1). Base-cover numerators are over p^base * (p-1).
  const std::int64_t to_probe = pow_i64(p, probe_depth - base_depth);
  // Accumulation window width 1/p^(base_depth-1) in probe scale.
  const std::int64_t window = pow_i64(p, probe_depth - base_depth + 1) * (p - 1);
  // Adjacency window width 1/p^base_depth: an adjacent sub-interval of A_p
  // spans at least one base-depth cell past the gap endpoint.
  const std::int64_t window_adj = pow_i64(p, probe_depth - base_depth) * (p - 1);
  // Certified-run numerators are over p^probe; scale by (p-1).
  const std::int64_t cert_scale = p - 1;

  // Probe gaps as sorted (lo, hi) numerator pairs over the probe scale.
  std::vector<std::pair<std::int64_t, std::int64_t>> probe_gaps;
  probe_gaps.reserve(probe_cover.runs.size());
  for (std::size_t i = 0; i + 1 < probe_cover.runs.size(); ++i)
    probe_gaps.emplace_back(probe_cover.runs[i].second, probe_cover.runs[i + 1].first);

  // Grid numerator of value v (over probe scale) at depth d <= probe:
  // v corresponds to k/p^d iff p^(probe-d)*(p-1) divides v.
  auto grid_at_depth = [&](std::int64_t v, int d) -> std::optional<std::int64_t> {
    std::int64_t unit = pow_i64(p, probe_depth - d) * (p - 1);
    if (v % unit != 0) return std::nullopt;
    return v / unit;
  };

  // Any probe gap intersecting the open window (wlo, whi), other than the
  // one holding the excluded point (doubled numerator excl2)?
  auto other_gap_in = [&](std::int64_t wlo, std::int64_t whi, std::int64_t excl2) {
    auto it = std::partition_point(probe_gaps.begin(), probe_gaps.end(),
                                   [&](const auto& g) { return g.second <= wlo; });
    for (; it != probe_gaps.end() && it->first < whi; ++it) {
      if (2 * it->first < excl2 && excl2 < 2 * it->second) continue; // the gap itself
      return true;
    }
    return false;
  };

  // Any certified interval intersecting the open window (wlo, whi)?
  // Certified runs are closed [a,b] over p^probe; scale to probe units.
  auto cert_in = [&](std::int64_t wlo, std::int64_t whi) {
    auto it = std::partition_point(cert_runs.begin(), cert_runs.end(), [&](const auto& c) {
      return c.second * cert_scale <= wlo;
    });
    return it != cert_runs.end() && it->first * cert_scale < whi;
  };

  // No probe gap intersects the open window (wlo, whi)?
  auto gap_free = [&](std::int64_t wlo, std::int64_t whi) {
    auto it = std::partition_point(probe_gaps.begin(), probe_gaps.end(),
                                   [&](const auto& g) { return g.second <= wlo; });
    return it == probe_gaps.end() || it->first >= whi;
  };

  for (std::size_t gi = 0; gi + 1 < base_cover.runs.size(); ++gi) {
    GapProbe probe;
    const std::int64_t gl = base_cover.runs[gi].second * to_probe;    // left endpoint
    const std::int64_t gr = base_cover.runs[gi + 1].first * to_probe; // right endpoint
    const std::int64_t mid2 = gl + gr; // doubled midpoint, inside this gap

    // Certified sub-intervals touching the endpoints exactly (possible
    // only when the endpoint is a finite grid point of the word sums).
    bool touch_left = false, touch_right = false;
    for (int d = 1; closure && d <= probe_depth && !(touch_left && touch_right); ++d) {
      if (!touch_left) {
        if (auto k = grid_at_depth(gl, d))
          touch_left = rep.representable(*k - 1, d) && rep.representable(*k, d);
      }
      if (!touch_right) {
        if (auto k = grid_at_depth(gr, d))
          touch_right = rep.representable(*k, d) && rep.representable(*k + 1, d);
      }
    }

    // A gap endpoint whose expansion needs an infinite extreme-digit tail
    // is never a finite grid point, so certificates can approach but not
    // touch it. The windowed form captures adjacency in that case: one
    // base-depth cell past the endpoint is free of gaps and backed by a
    // certificate.
    probe.left_adjacent_certified =
        touch_left || (gap_free(gl - window_adj, gl) && cert_in(gl - window_adj, gl));
    probe.right_adjacent_certified =
        touch_right || (gap_free(gr, gr + window_adj) && cert_in(gr, gr + window_adj));

    probe.left_nearby_gap = other_gap_in(gl - window, gl, mid2);
    probe.right_nearby_gap = other_gap_in(gr, gr + window, mid2);
    probe.left_nearby_certified = cert_in(gl - window, gl);
    probe.right_nearby_certified = cert_in(gr, gr + window);

    s.gap_probes.push_back(probe);
  }
  return s;
}

bool signature_matches(TopologicalType t, const Signature& s) {
  auto all_gaps = [&](auto&& pred) {
    return std::all_of(s.gap_probes.begin(), s.gap_probes.end(), pred);
  };
  switch (t) {
    case TopologicalType::FullInterval:
      return s.is_full_hull && s.gap_count == 0;
    case TopologicalType::CantorSet:
      return s.gap_count > 0 && !s.has_certified_interval;
    case TopologicalType::LCantorval:
      return s.gap_count > 0 && all_gaps([](const GapProbe& g) {
               return g.right_adjacent_certified && g.left_nearby_gap && g.left_nearby_certified;
             });
    case TopologicalType::RCantorval:
      return s.gap_count > 0 && all_gaps([](const GapProbe& g) {
               return g.left_adjacent_certified && g.right_nearby_gap && g.right_nearby_certified;
             });
    case TopologicalType::MCantorval:
      return s.gap_count > 0 && all_gaps([](const GapProbe& g) {
               return g.left_nearby_gap && g.right_nearby_gap;
             });
  }
  throw error("unreachable topological type");
}

SweepReport sweep(int p_max, int base_depth, int probe_depth, bool verify, std::size_t budget) {
  if (p_max < 3) throw invalid_spec_error("sweep needs p_max >= 3");
  SweepReport report;
  report.p_max = p_max;
  report.base_depth = base_depth;
  report.probe_depth = probe_depth;

  for (int p = 3; p <= p_max; ++p) {
    for (int l1 = 1; l1 < p; ++l1) {
      for (int r1 = 1; l1 + r1 < p; ++r1) {
        for (int l2 = 1; l2 < p; ++l2) {
          for (int r2 = 1; l2 + r2 < p; ++r2) {
            SweepRow row;
            row.spec = DiffSpec{l1, r1, l2, r2, p};
            row.type = classify(row.spec);
            report.tally[static_cast<int>(row.type)]++;

            // Partition and mirror invariants hold for every row.
            auto branches = classification_branches(row.spec);
            bool exactly_one = std::count(branches.begin(), branches.end(), true) == 1;
            bool mirror_ok = row.type == mirror(classify(row.spec.swapped()));

            if (!verify) {
              row.status = RowStatus::Unverified;
              if (!exactly_one || !mirror_ok) {
                row.status = RowStatus::Inconsistent;
                report.inconsistent++;
              }
              report.rows.push_back(std::move(row));
              continue;
            }

            DigitSet diff = minkowski_diff(a_set(row.spec.first()), a_set(row.spec.second()));
            try {
              Signature sig = signature(diff, base_depth, probe_depth, budget);
              bool consistent = exactly_one && mirror_ok && signature_matches(row.type, sig);
              row.sig = std::move(sig);
              row.status = consistent ? RowStatus::Consistent : RowStatus::Inconsistent;
              (consistent ? report.consistent : report.inconsistent)++;
            } catch (const budget_error&) {
              row.status = RowStatus::Skipped;
              report.skipped++;
            }
            report.rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return report;
}

bool prop_dod_grid_check(const DigitSet& a, const DigitSet& b, int n) {
  if (a.base() != b.base()) throw base_mismatch_error("grid check needs equal bases");
  if (n < 1 || n > 4) throw precondition_error("grid check supports depths 1..4");

  std::vector<std::int64_t> sums_a = word_sums(a.digits(), a.base(), n);
  std::vector<std::int64_t> sums_b = word_sums(b.digits(), b.base(), n);
  std::vector<std::int64_t> expected;
  expected.reserve(sums_a.size() * sums_b.size());
  for (std::int64_t x : sums_a)
    for (std::int64_t y : sums_b) expected.push_back(x - y);
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

  DigitSet diff = minkowski_diff(a, b);
  return expected == word_sums(diff.digits(), diff.base(), n);
}

} // namespace cantorval
