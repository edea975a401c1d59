#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "overpart/enumerate.hpp"
#include "overpart/qseries.hpp"

namespace overpart {

// Series source used by the self-test; swappable so a corrupted oracle can be
// shown to fail.
using SeriesSource = std::function<Series(const FamilySpec&, int z, int order)>;

struct OracleMismatch {
  std::string family;  // family name, or signed name for z = -1
  int n = 0;
  BigInt enumerated;
  BigInt series;
};

struct SelftestResult {
  int checks = 0;
  std::vector<OracleMismatch> mismatches;

  [[nodiscard]] bool passed() const { return mismatches.empty(); }
};

/// Compares enumeration counts with series coefficients for every family
/// (parameterized ones for k = 1..k_max) and both signed refinements, for
/// n = 0..n_max.
inline SelftestResult selftest(int n_max, int k_max, int order, const SeriesSource& source = family_series) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (order < n_max) throw std::invalid_argument("order must be at least n_max");
  order = std::max(order, 1);

  SelftestResult result;
  const auto compare = [&](const std::string& name, int n, const BigInt& e, const BigInt& s) {
    ++result.checks;
    if (e != s) result.mismatches.push_back({name, n, e, s});
  };

  std::vector<FamilySpec> families;
  std::vector<SignedSpec> signed_specs{{SignedKind::poex_prime}};
  for (FamilyId id : kAllFamilies) {
    FamilySpec f{id, 1};
    if (!f.parameterized()) {
      families.push_back(f);
      continue;
    }
    for (int k = 1; k <= k_max; ++k) families.push_back({id, k});
  }
  for (int k = 1; k <= k_max; ++k) signed_specs.push_back({SignedKind::sptko_prime, k});

  for (const FamilySpec& f : families) {
    const Series s = source(f, 1, order);
    for (int n = 0; n <= n_max; ++n) compare(family_name(f), n, count_family(f, n), s[n]);
  }
  for (const SignedSpec& sp : signed_specs) {
    const FamilySpec base = sp.kind == SignedKind::poex_prime ? FamilySpec{FamilyId::poex}
                                                              : FamilySpec{FamilyId::sptko, sp.k};
    const Series s = source(base, -1, order);
    for (int n = 0; n <= n_max; ++n) compare(signed_name(sp), n, signed_count(sp, n).value, s[n]);
  }
  return result;
}

}  // namespace overpart
