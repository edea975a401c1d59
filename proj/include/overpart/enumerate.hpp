#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "overpart/bigint.hpp"
#include "overpart/family.hpp"
#include "overpart/overpartition.hpp"

namespace overpart {

namespace detail {

template <class Visitor>
void emit_overline_patterns(const std::vector<std::pair<int, int>>& runs, Visitor& visit) {
  // Bit i of the mask overlines the i-th distinct value, largest first, so
  // (3,1) (3o,1) (3,1o) (3o,1o) come out in that order.
  const std::size_t d = runs.size();
  const std::uint64_t patterns = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    std::vector<Entry> entries;
    entries.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
      const bool bar = (mask >> i) & 1U;
      entries.push_back({runs[i].first, runs[i].second - (bar ? 1 : 0), bar});
    }
    visit(OverPartition(std::move(entries)));
  }
}

template <class Visitor>
void descend(int remaining, int max_value, std::vector<std::pair<int, int>>& runs, Visitor& visit) {
  if (remaining == 0) {
    emit_overline_patterns(runs, visit);
    return;
  }
  for (int v = std::min(remaining, max_value); v >= 1; --v) {
    for (int m = remaining / v; m >= 1; --m) {
      runs.emplace_back(v, m);
      descend(remaining - m * v, v - 1, runs, visit);
      runs.pop_back();
    }
  }
}

}  // namespace detail

/// Visits every overpartition of n exactly once.
///
/// Order: underlying partitions in decreasing lexicographic order, and for a
/// fixed underlying partition the overline patterns as a binary counter whose
/// lowest bit belongs to the largest value. For n=4 this is the order
/// (4), (4o), (3,1), (3o,1), (3,1o), (3o,1o), (2,2), (2o,2), ...
template <class Visitor>
void for_each_overpartition(int n, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<std::pair<int, int>> runs;
  detail::descend(n, n, runs, visit);
}

template <class Visitor>
void for_each_in_family(const FamilySpec& fam, int n, Visitor&& visit) {
  for_each_overpartition(n, [&](const OverPartition& pi) {
    if (is_member(pi, fam)) visit(pi);
  });
}

inline std::vector<OverPartition> overpartitions(int n) {
  std::vector<OverPartition> out;
  for_each_overpartition(n, [&](const OverPartition& pi) { out.push_back(pi); });
  return out;
}

inline std::vector<OverPartition> family_members(const FamilySpec& fam, int n) {
  std::vector<OverPartition> out;
  for_each_in_family(fam, n, [&](const OverPartition& pi) { out.push_back(pi); });
  return out;
}

inline BigInt count_family(const FamilySpec& fam, int n) {
  // A machine word cannot overflow while counting one object at a time.
  std::uint64_t c = 0;
  for_each_in_family(fam, n, [&](const OverPartition&) { ++c; });
  return BigInt(c);
}

struct SignedCount {
  int n = 0;
  BigInt value;
};

/// b_e(k,n) - b_o(k,n) or c_e(n) - c_o(n), by direct enumeration.
inline SignedCount signed_count(const SignedSpec& spec, int n) {
  const FamilySpec base = spec.kind == SignedKind::poex_prime ? FamilySpec{FamilyId::poex}
                                                              : FamilySpec{FamilyId::sptko, spec.k};
  std::int64_t total = 0;
  for_each_overpartition(n, [&](const OverPartition& pi) {
    const Stats st = stats(pi);
    if (!is_member(pi, st, base)) return;
    total += spec.kind == SignedKind::poex_prime ? st.sign_parts : st.sign_spt;
  });
  return {n, BigInt(total)};
}

struct CountTable {
  FamilySpec family;
  std::vector<std::pair<int, BigInt>> rows;
};

inline CountTable count_table(const FamilySpec& fam, int n_max) {
  CountTable t{fam, {}};
  for (int n = 0; n <= n_max; ++n) t.rows.emplace_back(n, count_family(fam, n));
  return t;
}

/// Memoized counts keyed by family and n. Not thread-safe.
class CountCache {
 public:
  const BigInt& count(const FamilySpec& fam, int n) {
    const auto key = std::make_pair(family_name(fam), n);
    auto it = counts_.find(key);
    if (it == counts_.end()) it = counts_.emplace(key, count_family(fam, n)).first;
    return it->second;
  }

  const BigInt& signed_value(const SignedSpec& spec, int n) {
    const auto key = std::make_pair(signed_name(spec), n);
    auto it = counts_.find(key);
    if (it == counts_.end()) it = counts_.emplace(key, signed_count(spec, n).value).first;
    return it->second;
  }

 private:
  std::map<std::pair<std::string, int>, BigInt> counts_;
};

}  // namespace overpart
