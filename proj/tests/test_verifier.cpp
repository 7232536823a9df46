#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorval/errors.hpp"
#include "cantorval/verifier.hpp"

#include <algorithm>

using namespace cantorval;

namespace {

DigitSet diff_set(const DiffSpec& s) {
  return minkowski_diff(a_set(s.first()), a_set(s.second()));
}

Signature swapped_sides(Signature s) {
  std::reverse(s.gap_probes.begin(), s.gap_probes.end());
  for (auto& g : s.gap_probes) {
    std::swap(g.left_adjacent_certified, g.right_adjacent_certified);
    std::swap(g.left_nearby_gap, g.right_nearby_gap);
    std::swap(g.left_nearby_certified, g.right_nearby_certified);
  }
  return s;
}

bool probes_equal(const Signature& a, const Signature& b) {
  if (a.is_full_hull != b.is_full_hull || a.gap_count != b.gap_count ||
      a.has_certified_interval != b.has_certified_interval)
    return false;
  if (a.gap_probes.size() != b.gap_probes.size()) return false;
  for (std::size_t i = 0; i < a.gap_probes.size(); ++i) {
    const auto& x = a.gap_probes[i];
    const auto& y = b.gap_probes[i];
    if (x.left_adjacent_certified != y.left_adjacent_certified ||
        x.right_adjacent_certified != y.right_adjacent_certified ||
        x.left_nearby_gap != y.left_nearby_gap || x.right_nearby_gap != y.right_nearby_gap ||
        x.left_nearby_certified != y.left_nearby_certified ||
        x.right_nearby_certified != y.right_nearby_certified)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("signature of the L-Cantorval example") {
  DigitSet d = diff_set({3, 2, 1, 3, 7});
  Signature s = signature(d, 3, 6);
  CHECK_FALSE(s.is_full_hull);
  CHECK(s.gap_count > 0);
  CHECK(s.has_certified_interval);
  for (const auto& g : s.gap_probes) {
    CHECK(g.right_adjacent_certified);
    CHECK(g.left_nearby_gap);
    CHECK(g.left_nearby_certified);
  }
  CHECK(signature_matches(TopologicalType::LCantorval, s));
  CHECK_FALSE(signature_matches(TopologicalType::FullInterval, s));
  CHECK_FALSE(signature_matches(TopologicalType::CantorSet, s));
}

TEST_CASE("signature of a full interval difference") {
  DigitSet d{3, {-2, 0, 2}};
  for (int base = 1; base <= 4; ++base) {
    Signature s = signature(d, base, base + 3);
    CHECK(s.is_full_hull);
    CHECK(s.gap_count == 0);
    CHECK(signature_matches(TopologicalType::FullInterval, s));
  }
}

TEST_CASE("signature of the ternary Cantor set") {
  DigitSet d{3, {0, 2}};
  Signature s = signature(d, 2, 4);
  CHECK_FALSE(s.is_full_hull);
  CHECK(s.gap_count == 3);
  CHECK_FALSE(s.has_certified_interval);
  for (const auto& g : s.gap_probes) {
    CHECK(g.left_nearby_gap);
    CHECK(g.right_nearby_gap);
    CHECK_FALSE(g.left_adjacent_certified);
    CHECK_FALSE(g.right_adjacent_certified);
    CHECK_FALSE(g.left_nearby_certified);
    CHECK_FALSE(g.right_nearby_certified);
  }
  CHECK(signature_matches(TopologicalType::CantorSet, s));
  CHECK_FALSE(signature_matches(TopologicalType::LCantorval, s));
  CHECK_FALSE(signature_matches(TopologicalType::RCantorval, s));
}

TEST_CASE("signature of the M-Cantorval example") {
  DigitSet d = diff_set({2, 2, 2, 2, 7});
  Signature s = signature(d, 3, 6);
  CHECK(s.gap_count > 0);
  CHECK(s.has_certified_interval);
  for (const auto& g : s.gap_probes) {
    CHECK(g.left_nearby_gap);
    CHECK(g.right_nearby_gap);
  }
  CHECK(signature_matches(TopologicalType::MCantorval, s));
}

TEST_CASE("mirrored digit sets have side-swapped signatures") {
  for (DiffSpec spec : {DiffSpec{3, 2, 1, 3, 7}, DiffSpec{2, 2, 2, 2, 7}, DiffSpec{1, 1, 1, 1, 5}}) {
    DigitSet d = diff_set(spec);
    DigitSet neg = scale(-1, d);
    Signature s = signature(d, 3, 5);
    Signature m = signature(neg, 3, 5);
    CHECK(probes_equal(m, swapped_sides(s)));
  }
}

TEST_CASE("signature rejects widened digit sets and bad depths") {
  CHECK_THROWS_AS(signature(DigitSet{3, {0, 4}}, 2, 4), precondition_error);
  CHECK_THROWS_AS(signature(DigitSet{3, {0, 2}}, 3, 2), precondition_error);
}

TEST_CASE("sweep at p_max 3") {
  SweepReport r = sweep(3, 3, 6, true);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].spec == DiffSpec{1, 1, 1, 1, 3});
  CHECK(r.rows[0].type == TopologicalType::FullInterval);
  CHECK(r.rows[0].status == RowStatus::Consistent);
  CHECK(r.ok());
}

TEST_CASE("sweep at p_max 4 contains the worked examples, all consistent") {
  SweepReport r = sweep(4, 3, 6, true);
  // (p-1)(p-2)/2 pairs per side: 1 at p=3, 3 at p=4.
  CHECK(r.rows.size() == 1 + 9);
  CHECK(r.ok());
  CHECK(r.skipped == 0);
  bool saw_full = false, saw_cantor = false;
  for (const auto& row : r.rows) {
    if (row.spec == DiffSpec{1, 1, 2, 1, 4}) {
      saw_full = true;
      CHECK(row.type == TopologicalType::FullInterval);
    }
    if (row.spec == DiffSpec{1, 1, 1, 1, 4}) {
      saw_cantor = true;
      CHECK(row.type == TopologicalType::CantorSet);
    }
    CHECK(row.status == RowStatus::Consistent);
  }
  CHECK(saw_full);
  CHECK(saw_cantor);
}

TEST_CASE("sweep without verification classifies only") {
  SweepReport r = sweep(5, 3, 6, false);
  CHECK(r.ok());
  for (const auto& row : r.rows) CHECK(row.status == RowStatus::Unverified);
  std::size_t total = 0;
  for (std::size_t t : r.tally) total += t;
  CHECK(total == r.rows.size());
}

TEST_CASE("sweep rows are ordered lexicographically") {
  SweepReport r = sweep(5, 3, 6, false);
  auto key = [](const DiffSpec& s) {
    return std::tuple{s.p, s.l1, s.r1, s.l2, s.r2};
  };
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    CHECK(key(r.rows[i - 1].spec) < key(r.rows[i].spec));
}

TEST_CASE("cantor rows plant a gap inside every cover interval two levels down") {
  for (int p = 3; p <= 7; ++p) {
    for (int l1 = 1; l1 < p; ++l1)
      for (int r1 = 1; l1 + r1 < p; ++r1)
        for (int l2 = 1; l2 < p; ++l2)
          for (int r2 = 1; l2 + r2 < p; ++r2) {
            DiffSpec spec{l1, r1, l2, r2, p};
            if (classify(spec) != TopologicalType::CantorSet) continue;
            DigitSet d = diff_set(spec);
            for (int n = 1; n <= 4; ++n) {
              ScaledCover coarse = cover_scaled(d, n);
              ScaledCover fine = cover_scaled(d, n + 2);
              const std::int64_t scale = static_cast<std::int64_t>(p) * p;
              for (const auto& run : coarse.runs) {
                bool has_gap = false;
                for (std::size_t i = 0; i + 1 < fine.runs.size() && !has_gap; ++i) {
                  std::int64_t gap_lo = fine.runs[i].second;
                  std::int64_t gap_hi = fine.runs[i + 1].first;
                  has_gap = run.first * scale <= gap_lo && gap_hi <= run.second * scale;
                }
                CHECK(has_gap);
              }
            }
          }
  }
}

TEST_CASE("grid-level difference identity") {
  DigitSet a{3, {0, 2}};
  CHECK(prop_dod_grid_check(a, a, 2));
  DigitSet z{5, {0}};
  CHECK(prop_dod_grid_check(z, z, 1));
  CHECK(prop_dod_grid_check(a_set({3, 2, 7}), a_set({1, 3, 7}), 2));
  CHECK_THROWS_AS(prop_dod_grid_check(a, DigitSet{5, {0, 1}}, 2), base_mismatch_error);
  CHECK_THROWS_AS(prop_dod_grid_check(a, a, 9), precondition_error);
}

TEST_CASE("grid-level difference identity, exhaustive over base 3") {
  // Every nonempty subset pair of <-2,2> at depths 1..3.
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < 32; ++mask) {
    std::vector<int> digits;
    for (int bit = 0; bit < 5; ++bit)
      if (mask & (1 << bit)) digits.push_back(bit - 2);
    subsets.push_back(std::move(digits));
  }
  for (const auto& da : subsets)
    for (const auto& db : subsets)
      for (int n = 1; n <= 3; ++n)
        CHECK(prop_dod_grid_check(DigitSet{3, da}, DigitSet{3, db}, n));
}
