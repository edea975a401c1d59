#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <stdexcept>

#include "overpart/overpartition.hpp"

namespace overpart {

enum class FamilyId { pbar, sptk, sptko, pe, pex, poex, bek, bok, ce, co };

// k is only read for sptk, sptko, bek and bok.
struct FamilySpec {
  FamilyId id = FamilyId::pbar;
  int k = 1;

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return a.id == b.id && (!a.parameterized() || a.k == b.k);
  }

  [[nodiscard]] bool parameterized() const noexcept {
    return id == FamilyId::sptk || id == FamilyId::sptko || id == FamilyId::bek || id == FamilyId::bok;
  }
};

inline constexpr FamilyId kAllFamilies[] = {FamilyId::pbar, FamilyId::sptk, FamilyId::sptko, FamilyId::pe,
                                            FamilyId::pex,  FamilyId::poex, FamilyId::bek,   FamilyId::bok,
                                            FamilyId::ce,   FamilyId::co};

class unknown_family : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Short names: pbar, spt<k>, spt<k>o, pe, pex, poex, be<k>, bo<k>, ce, co.
inline std::string family_name(const FamilySpec& fam) {
  const std::string k = std::to_string(fam.k);
  switch (fam.id) {
    case FamilyId::pbar: return "pbar";
    case FamilyId::sptk: return "spt" + k;
    case FamilyId::sptko: return "spt" + k + "o";
    case FamilyId::pe: return "pe";
    case FamilyId::pex: return "pex";
    case FamilyId::poex: return "poex";
    case FamilyId::bek: return "be" + k;
    case FamilyId::bok: return "bo" + k;
    case FamilyId::ce: return "ce";
    case FamilyId::co: return "co";
  }
  return "?";
}

namespace detail {

inline std::optional<int> parse_k(std::string_view digits) {
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  int k = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    k = k * 10 + (c - '0');
  }
  if (k < 1) return std::nullopt;
  return k;
}

}  // namespace detail

/// Accepts the short names above; `sptk`, `sptko`, `bek`, `bok` take
/// `default_k`.
inline FamilySpec parse_family(std::string_view name, int default_k = 1) {
  if (default_k < 1) throw std::invalid_argument("k must be at least 1");
  if (name == "pbar") return {FamilyId::pbar};
  if (name == "pe") return {FamilyId::pe};
  if (name == "pex") return {FamilyId::pex};
  if (name == "poex") return {FamilyId::poex};
  if (name == "ce") return {FamilyId::ce};
  if (name == "co") return {FamilyId::co};
  if (name == "sptk") return {FamilyId::sptk, default_k};
  if (name == "sptko") return {FamilyId::sptko, default_k};
  if (name == "bek") return {FamilyId::bek, default_k};
  if (name == "bok") return {FamilyId::bok, default_k};

  auto with_k = [&](std::string_view prefix, std::string_view suffix, FamilyId id) -> std::optional<FamilySpec> {
    if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (!name.starts_with(prefix) || !name.ends_with(suffix)) return std::nullopt;
    auto k = detail::parse_k(name.substr(prefix.size(), name.size() - prefix.size() - suffix.size()));
    if (!k) return std::nullopt;
    return FamilySpec{id, *k};
  };
  if (name.ends_with("o")) {
    if (auto f = with_k("spt", "o", FamilyId::sptko)) return *f;
  }
  if (auto f = with_k("spt", "", FamilyId::sptk)) return *f;
  if (auto f = with_k("be", "", FamilyId::bek)) return *f;
  if (auto f = with_k("bo", "", FamilyId::bok)) return *f;
  throw unknown_family("unknown family: " + std::string(name));
}

// Signed refinements: b_e(k,n) - b_o(k,n) and c_e(n) - c_o(n).
enum class SignedKind { sptko_prime, poex_prime };

struct SignedSpec {
  SignedKind kind = SignedKind::poex_prime;
  int k = 1;
};

inline std::string signed_name(const SignedSpec& spec) {
  return spec.kind == SignedKind::poex_prime ? "poex-prime" : "spt" + std::to_string(spec.k) + "o-prime";
}

/// `poex-prime`, `spt<k>o-prime`, or `sptko-prime` with `default_k`.
inline std::optional<SignedSpec> parse_signed(std::string_view name, int default_k = 1) {
  if (name == "poex-prime") return SignedSpec{SignedKind::poex_prime};
  if (name == "sptko-prime") return SignedSpec{SignedKind::sptko_prime, default_k};
  constexpr std::string_view suffix = "o-prime";
  if (name.starts_with("spt") && name.ends_with(suffix) && name.size() > 3 + suffix.size()) {
    if (auto k = detail::parse_k(name.substr(3, name.size() - 3 - suffix.size())))
      return SignedSpec{SignedKind::sptko_prime, *k};
  }
  return std::nullopt;
}

/// Returns the first violated clause of the family definition, or nullopt
/// when `pi` is a member.
inline std::optional<std::string> membership_violation(const OverPartition& pi, const Stats& st,
                                                       const FamilySpec& fam) {
  const auto& es = pi.entries();
  const auto all_values = [&](auto pred) {
    return std::all_of(es.begin(), es.end(), [&](const Entry& e) { return pred(e.value); });
  };
  const auto no_plain_one = [&]() -> std::optional<std::string> {
    if (pi.plain_count(1) != 0) return "contains a non-overlined 1";
    return std::nullopt;
  };
  const auto spt_clause = [&]() -> std::optional<std::string> {
    if (!st.s) return "has no non-overlined part";
    if (st.s_multiplicity != fam.k)
      return "smallest non-overlined part " + std::to_string(*st.s) + " appears " +
             std::to_string(st.s_multiplicity) + " times, expected " + std::to_string(fam.k);
    for (const Entry& e : es)
      if (e.overlined && e.value <= *st.s)
        return "overlined part " + std::to_string(e.value) + " is not bigger than s=" + std::to_string(*st.s);
    return std::nullopt;
  };
  const auto spto_clause = [&]() -> std::optional<std::string> {
    if (auto v = spt_clause()) return v;
    for (const Entry& e : es)
      if (e.value != *st.s && (e.value - *st.s) % 2 == 0)
        return "part " + std::to_string(e.value) + " has the same parity as s=" + std::to_string(*st.s);
    return std::nullopt;
  };
  const auto odd_clause = [&]() -> std::optional<std::string> {
    if (!all_values([](int v) { return v % 2 == 1; })) return "has an even part";
    return no_plain_one();
  };

  switch (fam.id) {
    case FamilyId::pbar: return std::nullopt;
    case FamilyId::sptk: return spt_clause();
    case FamilyId::sptko: return spto_clause();
    case FamilyId::pe:
      if (!all_values([](int v) { return v % 2 == 0; })) return "has an odd part";
      return std::nullopt;
    case FamilyId::pex: return no_plain_one();
    case FamilyId::poex: return odd_clause();
    case FamilyId::bek:
      if (auto v = spto_clause()) return v;
      if (st.parts_above_s % 2 != 0) return "odd number of parts greater than s";
      return std::nullopt;
    case FamilyId::bok:
      if (auto v = spto_clause()) return v;
      if (st.parts_above_s % 2 == 0) return "even number of parts greater than s";
      return std::nullopt;
    case FamilyId::ce:
      if (auto v = odd_clause()) return v;
      if (st.num_parts % 2 != 0) return "odd number of parts";
      return std::nullopt;
    case FamilyId::co:
      if (auto v = odd_clause()) return v;
      if (st.num_parts % 2 == 0) return "even number of parts";
      return std::nullopt;
  }
  return "unknown family";
}

inline std::optional<std::string> membership_violation(const OverPartition& pi, const FamilySpec& fam) {
  return membership_violation(pi, stats(pi), fam);
}

inline bool is_member(const OverPartition& pi, const Stats& st, const FamilySpec& fam) {
  return !membership_violation(pi, st, fam).has_value();
}

inline bool is_member(const OverPartition& pi, const FamilySpec& fam) { return is_member(pi, stats(pi), fam); }

}  // namespace overpart
