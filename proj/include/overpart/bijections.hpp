#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "overpart/family.hpp"
#include "overpart/overpartition.hpp"

namespace overpart {

enum class Theorem { t1, t2, t3, t4e, t4o };

// Which summand of the domain union an element was drawn from.
enum class SourceTag { n, n_minus_1, n_minus_2 };

enum class Variant { e, o };

inline std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t1: return "T1";
    case Theorem::t2: return "T2";
    case Theorem::t3: return "T3";
    case Theorem::t4e: return "T4e";
    case Theorem::t4o: return "T4o";
  }
  return "?";
}

inline std::optional<Theorem> parse_theorem(std::string_view s) {
  if (s == "T1") return Theorem::t1;
  if (s == "T2") return Theorem::t2;
  if (s == "T3") return Theorem::t3;
  if (s == "T4e") return Theorem::t4e;
  if (s == "T4o") return Theorem::t4o;
  return std::nullopt;
}

inline std::string source_name(SourceTag t) {
  switch (t) {
    case SourceTag::n: return "N";
    case SourceTag::n_minus_1: return "N-1";
    case SourceTag::n_minus_2: return "N-2";
  }
  return "?";
}

inline std::optional<SourceTag> parse_source(std::string_view s) {
  if (s == "N") return SourceTag::n;
  if (s == "N-1" || s == "N_MINUS_1") return SourceTag::n_minus_1;
  if (s == "N-2" || s == "N_MINUS_2") return SourceTag::n_minus_2;
  return std::nullopt;
}

inline int source_offset(SourceTag t) {
  return t == SourceTag::n ? 0 : (t == SourceTag::n_minus_1 ? 1 : 2);
}

/// One application of a map: where the input came from, which branch fired,
/// and where the image landed.
struct MapTrace {
  Theorem theorem = Theorem::t1;
  SourceTag source = SourceTag::n;
  std::string branch;
  OverPartition input;
  OverPartition output;
  std::string target;
  // See sign_flipped().
  bool sign_flip = false;

  friend bool operator==(const MapTrace&, const MapTrace&) = default;
};

/// Thrown when a map is applied outside its domain. The message names the
/// violated clause.
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Codomain component identifiers.
namespace target {
inline constexpr std::string_view pex = "PEX";
inline constexpr std::string_view pe = "PE";
inline constexpr std::string_view pe_copy1 = "PE-copy1";
inline constexpr std::string_view pe_copy2 = "PE-copy2";
inline constexpr std::string_view poex = "POEX";
inline constexpr std::string_view ce = "CE";
inline constexpr std::string_view co = "CO";
inline constexpr std::string_view sptko_n = "SPTKO-N";
inline constexpr std::string_view sptko_n_minus_2 = "SPTKO-N-2";
}  // namespace target

/// Family a codomain component stands for.
inline FamilySpec target_family(std::string_view tag) {
  if (tag == target::pex) return {FamilyId::pex};
  if (tag == target::pe || tag == target::pe_copy1 || tag == target::pe_copy2) return {FamilyId::pe};
  if (tag == target::poex) return {FamilyId::poex};
  if (tag == target::ce) return {FamilyId::ce};
  if (tag == target::co) return {FamilyId::co};
  if (tag == target::sptko_n || tag == target::sptko_n_minus_2) return {FamilyId::sptko, 1};
  throw std::invalid_argument("unknown target tag: " + std::string(tag));
}

/// Sign statistic of an image: parts above s for Spt targets, number of parts
/// for Poex, Ce and Co. Pe and Pex targets carry none.
inline std::optional<int> sign_of_target(const OverPartition& out, std::string_view tag) {
  const FamilyId id = target_family(tag).id;
  if (id == FamilyId::pe || id == FamilyId::pex) return std::nullopt;
  const Stats st = stats(out);
  return id == FamilyId::sptko ? st.sign_spt : st.sign_parts;
}

/// Whether the input's parts-above-s parity differs from the image's sign
/// statistic; false when the target carries none.
inline bool sign_flipped(const OverPartition& in, const OverPartition& out, std::string_view tag) {
  const auto sign = sign_of_target(out, tag);
  return sign && stats(in).sign_spt != *sign;
}

/// A guarded branch of a piecewise map.
struct Branch {
  std::string_view id;
  std::string_view target;
  std::function<bool(const Stats&, SourceTag)> guard;
  std::function<OverPartition(const OverPartition&, const Stats&)> apply;
};

namespace detail {

inline OverPartition replace_s_by_overlined_below(const OverPartition& pi, const Stats& st) {
  return pi.with_plain_removed(*st.s).with_overlined_added(*st.s - 1);
}

inline OverPartition replace_s_by_plain_above(const OverPartition& pi, const Stats& st) {
  return pi.with_plain_removed(*st.s).with_plain_added(*st.s + 1);
}

inline bool is_n(SourceTag t) { return t == SourceTag::n; }
inline bool is_n2(SourceTag t) { return t == SourceTag::n_minus_2; }

inline const std::vector<Branch>& t1_branches() {
  static const std::vector<Branch> table = {
      {"f1", target::pex, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s > 1; },
       [](const OverPartition& pi, const Stats&) { return pi; }},
      {"f2", target::pex, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s == 1; },
       [](const OverPartition& pi, const Stats&) { return pi.with_plain_removed(1).with_overlined_added(1); }},
      {"f3", target::pex,
       [](const Stats& st, SourceTag t) {
         return t == SourceTag::n_minus_1 && (st.s2_infinite() || st.s2 - *st.s > 1);
       },
       [](const OverPartition& pi, const Stats& st) {
         return pi.with_plain_removed(*st.s).with_overlined_added(*st.s + 1);
       }},
      {"f4", target::pex,
       [](const Stats& st, SourceTag t) {
         return t == SourceTag::n_minus_1 && !st.s2_infinite() && st.s2 - *st.s == 1;
       },
       replace_s_by_plain_above},
  };
  return table;
}

inline const std::vector<Branch>& t2_branches() {
  static const std::vector<Branch> table = {
      {"A", target::pe_copy1, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s == 1; },
       [](const OverPartition& pi, const Stats&) { return pi.with_plain_removed(1); }},
      {"B", target::poex, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s > 1 && *st.s % 2 == 0; },
       replace_s_by_overlined_below},
      {"C", target::pe_copy2, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s > 1 && *st.s % 2 == 1; },
       replace_s_by_overlined_below},
      {"D", target::poex, [](const Stats& st, SourceTag t) { return is_n2(t) && *st.s % 2 == 0; },
       replace_s_by_plain_above},
      {"E", target::pe_copy2, [](const Stats& st, SourceTag t) { return is_n2(t) && *st.s % 2 == 1; },
       replace_s_by_plain_above},
  };
  return table;
}

// The s2 entry counts as plain whenever it has a plain copy: in canonical
// order that copy is the part immediately after s.
inline bool s2_plain_part(const Stats& st) { return st.s2_plain > 0; }

inline const std::vector<Branch>& t3_branches() {
  static const std::vector<Branch> table = {
      {"odd-plain", target::sptko_n_minus_2,
       [](const Stats& st, SourceTag t) { return is_n(t) && *st.s == 1 && !st.s2_infinite() && s2_plain_part(st); },
       [](const OverPartition& pi, const Stats& st) {
         return pi.with_plain_removed(1).with_plain_removed(st.s2).with_plain_added(st.s2 - 1);
       }},
      {"odd-overlined", target::sptko_n,
       [](const Stats& st, SourceTag t) {
         return is_n(t) && *st.s == 1 && !st.s2_infinite() && !s2_plain_part(st) && st.s2_overlined;
       },
       [](const OverPartition& pi, const Stats& st) {
         return pi.with_plain_removed(1).with_overlined_removed(st.s2).with_plain_added(st.s2 + 1);
       }},
      {"even-N", target::poex, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s % 2 == 0; },
       replace_s_by_overlined_below},
      {"even-N-2", target::poex, [](const Stats& st, SourceTag t) { return is_n2(t) && *st.s % 2 == 0; },
       replace_s_by_plain_above},
  };
  return table;
}

template <Variant V>
const std::vector<Branch>& t4_branches() {
  static constexpr std::string_view case1_target = V == Variant::e ? target::co : target::ce;
  static const std::vector<Branch> table = {
      {"CaseI-N", case1_target, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s % 2 == 0; },
       replace_s_by_overlined_below},
      {"CaseI-N-2", case1_target, [](const Stats& st, SourceTag t) { return is_n2(t) && *st.s % 2 == 0; },
       replace_s_by_plain_above},
      {"CaseII-N-s1", target::pe, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s == 1; },
       [](const OverPartition& pi, const Stats&) { return pi.with_plain_removed(1); }},
      {"CaseII-N", target::pe, [](const Stats& st, SourceTag t) { return is_n(t) && *st.s > 1 && *st.s % 2 == 1; },
       replace_s_by_overlined_below},
      {"CaseII-N-2", target::pe, [](const Stats& st, SourceTag t) { return is_n2(t) && *st.s % 2 == 1; },
       replace_s_by_plain_above},
  };
  return table;
}

}  // namespace detail

inline const std::vector<Branch>& branches(Theorem t) {
  switch (t) {
    case Theorem::t1: return detail::t1_branches();
    case Theorem::t2: return detail::t2_branches();
    case Theorem::t3: return detail::t3_branches();
    case Theorem::t4e: return detail::t4_branches<Variant::e>();
    case Theorem::t4o: return detail::t4_branches<Variant::o>();
  }
  throw std::invalid_argument("unknown theorem");
}

/// The family each summand of a theorem's domain union is drawn from.
inline FamilySpec domain_family(Theorem t) {
  switch (t) {
    case Theorem::t1: return {FamilyId::sptk, 1};
    case Theorem::t2:
    case Theorem::t3: return {FamilyId::sptko, 1};
    case Theorem::t4e: return {FamilyId::bek, 1};
    case Theorem::t4o: return {FamilyId::bok, 1};
  }
  throw std::invalid_argument("unknown theorem");
}

inline std::vector<SourceTag> domain_sources(Theorem t) {
  if (t == Theorem::t1) return {SourceTag::n, SourceTag::n_minus_1};
  return {SourceTag::n, SourceTag::n_minus_2};
}

/// Ids of every branch whose guard holds; a well-formed map yields exactly one.
inline std::vector<std::string_view> applicable_branches(Theorem t, const OverPartition& pi, SourceTag source) {
  const Stats st = stats(pi);
  std::vector<std::string_view> out;
  if (!st.s) return out;
  for (const Branch& b : branches(t))
    if (b.guard(st, source)) out.push_back(b.id);
  return out;
}

namespace detail {

inline void require_domain(Theorem t, const OverPartition& pi, SourceTag source, int n) {
  const auto allowed = domain_sources(t);
  if (std::find(allowed.begin(), allowed.end(), source) == allowed.end())
    throw precondition_error("source " + source_name(source) + " is not part of the " + theorem_name(t) + " domain");
  const int expected = n - source_offset(source);
  if (pi.weight() != expected)
    throw precondition_error("input " + format(pi) + " has weight " + std::to_string(pi.weight()) +
                             ", expected " + std::to_string(expected) + " for source " + source_name(source));
  const FamilySpec fam = domain_family(t);
  if (auto why = membership_violation(pi, fam))
    throw precondition_error("input " + format(pi) + " is not in " + family_name(fam) + "(" +
                             std::to_string(expected) + "): " + *why);
}

inline MapTrace run(Theorem t, const OverPartition& pi, SourceTag source, int n) {
  require_domain(t, pi, source, n);
  const Stats st = stats(pi);
  for (const Branch& b : branches(t)) {
    if (!b.guard(st, source)) continue;
    MapTrace trace{t, source, std::string(b.id), pi, b.apply(pi, st), std::string(b.target), false};
    trace.sign_flip = sign_flipped(pi, trace.output, trace.target);
    return trace;
  }
  throw precondition_error("no " + theorem_name(t) + " branch applies to " + format(pi));
}

}  // namespace detail

/// Spt1(n) u Spt1(n-1) -> Pex(n).
inline MapTrace map_t1(const OverPartition& pi, SourceTag source, int n) {
  return detail::run(Theorem::t1, pi, source, n);
}

/// Inverse of map_t1, reading the branch off the smallest part of mu.
inline std::pair<OverPartition, SourceTag> inv_t1(const OverPartition& mu, int n) {
  if (n < 2) throw precondition_error("T1 requires n > 1");
  if (mu.weight() != n)
    throw precondition_error("input " + format(mu) + " has weight " + std::to_string(mu.weight()) + ", expected " +
                             std::to_string(n));
  if (auto why = membership_violation(mu, {FamilyId::pex}))
    throw precondition_error("input " + format(mu) + " is not in pex(" + std::to_string(n) + "): " + *why);

  // f2: the only image type carrying an overlined 1.
  if (mu.has_overlined(1)) return {mu.with_overlined_removed(1).with_plain_added(1), SourceTag::n};

  const Entry& low = mu.entries().back();
  const int m = low.value;
  if (low.plain == 0)  // f3: smallest part overlined only
    return {mu.with_overlined_removed(m).with_plain_added(m - 1), SourceTag::n_minus_1};
  if (low.plain == 1 && !low.overlined)  // f1
    return {mu, SourceTag::n};
  // f4: plain m repeated, or plain m next to an overlined m
  return {mu.with_plain_removed(m).with_plain_added(m - 1), SourceTag::n_minus_1};
}

/// Spt1_o(n) u Spt1_o(n-2) -> Pe(n-1) u Pe(n-1) u Poex(n-1).
inline MapTrace map_t2(const OverPartition& pi, SourceTag source, int n) {
  return detail::run(Theorem::t2, pi, source, n);
}

/// Sign-reversing pairing of the s = 1 elements of Spt1_o(n).
inline MapTrace map_t3_odd(const OverPartition& pi, int n) {
  detail::require_domain(Theorem::t3, pi, SourceTag::n, n);
  const Stats st = stats(pi);
  if (*st.s != 1) throw precondition_error("input " + format(pi) + " has s=" + std::to_string(*st.s) + ", expected 1");
  return detail::run(Theorem::t3, pi, SourceTag::n, n);
}

/// Even-s elements of Spt1_o(n) u Spt1_o(n-2) -> Poex(n-1).
inline MapTrace map_t3_even(const OverPartition& pi, SourceTag source, int n) {
  detail::require_domain(Theorem::t3, pi, source, n);
  const Stats st = stats(pi);
  if (*st.s % 2 != 0)
    throw precondition_error("input " + format(pi) + " has odd s=" + std::to_string(*st.s) + ", expected even");
  return detail::run(Theorem::t3, pi, source, n);
}

/// Dispatches to map_t3_odd or map_t3_even by the parity of s.
inline MapTrace map_t3(const OverPartition& pi, SourceTag source, int n) {
  detail::require_domain(Theorem::t3, pi, source, n);
  const Stats st = stats(pi);
  if (*st.s % 2 == 0) return map_t3_even(pi, source, n);
  if (source != SourceTag::n || *st.s != 1)
    throw precondition_error("input " + format(pi) + " with odd s=" + std::to_string(*st.s) + " from source " +
                             source_name(source) + " is an image of the pairing, not a source");
  return map_t3_odd(pi, n);
}

/// B_e(1,n) u B_e(1,n-2) -> Pe(n-1) u C_o(n-1), or the B_o / C_e mirror.
inline MapTrace map_t4(const OverPartition& pi, SourceTag source, int n, Variant variant) {
  return detail::run(variant == Variant::e ? Theorem::t4e : Theorem::t4o, pi, source, n);
}

/// Applies the map of any theorem; T3 dispatches on the parity of s.
inline MapTrace apply_map(Theorem t, const OverPartition& pi, SourceTag source, int n) {
  switch (t) {
    case Theorem::t1: return map_t1(pi, source, n);
    case Theorem::t2: return map_t2(pi, source, n);
    case Theorem::t3: return map_t3(pi, source, n);
    case Theorem::t4e: return map_t4(pi, source, n, Variant::e);
    case Theorem::t4o: return map_t4(pi, source, n, Variant::o);
  }
  throw std::invalid_argument("unknown theorem");
}

}  // namespace overpart
