#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace overpart {

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class invariant_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One distinct part value: `plain` non-overlined copies plus at most one
// overlined copy.
struct Entry {
  int value = 0;
  int plain = 0;
  bool overlined = false;

  [[nodiscard]] constexpr int copies() const noexcept { return plain + (overlined ? 1 : 0); }

  friend constexpr bool operator==(const Entry&, const Entry&) = default;
  friend constexpr auto operator<=>(const Entry&, const Entry&) = default;
};

// A single part copy, as it appears in a flat listing.
struct Part {
  int value = 0;
  bool overlined = false;

  friend constexpr bool operator==(const Part&, const Part&) = default;
};

/// Run-length canonical overpartition.
///
/// Entries are kept with strictly decreasing values and no empty entry, so
/// "at most one overlined copy per value" holds structurally. The empty
/// overpartition is the unique overpartition of 0. Values are immutable; the
/// `with_*` members return modified copies and re-merge entries as needed.
class OverPartition {
 public:
  OverPartition() = default;

  /// Validates `entries`; throws invariant_error unless they are already in
  /// canonical form.
  explicit OverPartition(std::vector<Entry> entries) : entries_(std::move(entries)) { validate(); }

  /// Builds from an unordered multiset of part copies. Throws invariant_error
  /// on a non-positive value or a second overlined copy of a value.
  static OverPartition from_parts(std::span<const Part> parts) {
    std::vector<Part> sorted(parts.begin(), parts.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Part& a, const Part& b) { return a.value > b.value; });
    std::vector<Entry> entries;
    for (const Part& p : sorted) {
      if (p.value <= 0) throw invariant_error("part value must be positive: " + std::to_string(p.value));
      if (entries.empty() || entries.back().value != p.value) entries.push_back({p.value, 0, false});
      Entry& e = entries.back();
      if (p.overlined) {
        if (e.overlined) throw invariant_error("duplicate overlined copy of " + std::to_string(p.value));
        e.overlined = true;
      } else {
        ++e.plain;
      }
    }
    OverPartition out;
    out.entries_ = std::move(entries);
    return out;
  }

  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

  [[nodiscard]] std::int64_t weight() const noexcept {
    std::int64_t w = 0;
    for (const Entry& e : entries_) w += std::int64_t{e.value} * e.copies();
    return w;
  }

  [[nodiscard]] int num_parts() const noexcept {
    int c = 0;
    for (const Entry& e : entries_) c += e.copies();
    return c;
  }

  [[nodiscard]] const Entry* find(int value) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, int v) { return e.value > v; });
    return (it != entries_.end() && it->value == value) ? &*it : nullptr;
  }

  [[nodiscard]] bool contains_value(int value) const noexcept { return find(value) != nullptr; }

  [[nodiscard]] int plain_count(int value) const noexcept {
    const Entry* e = find(value);
    return e ? e->plain : 0;
  }

  [[nodiscard]] bool has_overlined(int value) const noexcept {
    const Entry* e = find(value);
    return e && e->overlined;
  }

  /// Flat listing in canonical order: decreasing value, overlined copy first.
  [[nodiscard]] std::vector<Part> parts() const {
    std::vector<Part> out;
    for (const Entry& e : entries_) {
      if (e.overlined) out.push_back({e.value, true});
      for (int i = 0; i < e.plain; ++i) out.push_back({e.value, false});
    }
    return out;
  }

  [[nodiscard]] OverPartition with_plain_added(int value) const {
    if (value <= 0) throw invariant_error("part value must be positive: " + std::to_string(value));
    OverPartition out = *this;
    out.slot(value).plain += 1;
    return out;
  }

  [[nodiscard]] OverPartition with_overlined_added(int value) const {
    if (value <= 0) throw invariant_error("part value must be positive: " + std::to_string(value));
    OverPartition out = *this;
    Entry& e = out.slot(value);
    if (e.overlined) throw invariant_error("duplicate overlined copy of " + std::to_string(value));
    e.overlined = true;
    return out;
  }

  [[nodiscard]] OverPartition with_plain_removed(int value) const {
    if (plain_count(value) == 0) throw invariant_error("no plain copy of " + std::to_string(value) + " to remove");
    OverPartition out = *this;
    out.slot(value).plain -= 1;
    out.prune(value);
    return out;
  }

  [[nodiscard]] OverPartition with_overlined_removed(int value) const {
    if (!has_overlined(value)) throw invariant_error("no overlined copy of " + std::to_string(value) + " to remove");
    OverPartition out = *this;
    out.slot(value).overlined = false;
    out.prune(value);
    return out;
  }

  friend bool operator==(const OverPartition&, const OverPartition&) = default;
  friend auto operator<=>(const OverPartition& a, const OverPartition& b) { return a.entries_ <=> b.entries_; }

 private:
  void validate() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const Entry& e = entries_[i];
      if (e.value <= 0) throw invariant_error("part value must be positive: " + std::to_string(e.value));
      if (e.plain < 0) throw invariant_error("negative plain count for " + std::to_string(e.value));
      if (e.copies() == 0) throw invariant_error("empty entry for " + std::to_string(e.value));
      if (i > 0 && entries_[i - 1].value <= e.value) throw invariant_error("entry values must be strictly decreasing");
    }
  }

  Entry& slot(int value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, int v) { return e.value > v; });
    if (it == entries_.end() || it->value != value) it = entries_.insert(it, Entry{value, 0, false});
    return *it;
  }

  void prune(int value) {
    std::erase_if(entries_, [value](const Entry& e) { return e.value == value && e.copies() == 0; });
  }

  std::vector<Entry> entries_;
};

// ---------------------------------------------------------------------------
// Text format: `[]` or comma separated `<digits>` / `<digits>o` tokens.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline OverPartition parse(std::string_view text) {
  const std::string_view body = detail::trim(text);
  if (body == "[]") return {};
  if (body.empty()) throw parse_error("empty literal (use [] for the empty overpartition)");

  std::vector<Part> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = body.find(',', pos);
    std::string_view token = detail::trim(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    bool overlined = false;
    if (!token.empty() && token.back() == 'o') {
      overlined = true;
      token.remove_suffix(1);
    }
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw parse_error("malformed token in literal: '" + std::string(body) + "'");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw parse_error("part value out of range: '" + std::string(token) + "'");
    if (value == 0) throw parse_error("part value must be positive");
    parts.push_back({value, overlined});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return OverPartition::from_parts(parts);
  } catch (const invariant_error& e) {
    throw parse_error(e.what());
  }
}

inline std::string format(const OverPartition& pi) {
  if (pi.empty()) return "[]";
  std::string out;
  for (const Part& p : pi.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p.value);
    if (p.overlined) out += 'o';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct Stats {
  std::int64_t weight = 0;
  int num_parts = 0;
  // Smallest value carrying a plain copy; absent when every copy is overlined.
  std::optional<int> s;
  // Plain copies of s.
  int s_multiplicity = 0;
  // Smallest value strictly above s, or kInfinity. Only meaningful with s.
  int s2 = kInfinity;
  // Whether the s2 entry carries an overlined copy, and how many plain ones.
  bool s2_overlined = false;
  int s2_plain = 0;
  // Part copies (plain and overlined) with value > s.
  int parts_above_s = 0;
  int sign_spt = 1;
  int sign_parts = 1;

  [[nodiscard]] bool s2_infinite() const noexcept { return s2 == kInfinity; }
};

inline Stats stats(const OverPartition& pi) {
  Stats st;
  st.weight = pi.weight();
  st.num_parts = pi.num_parts();
  st.sign_parts = (st.num_parts % 2 == 0) ? 1 : -1;

  const auto& es = pi.entries();
  // Entries are in decreasing order; the last one with a plain copy is s.
  auto it = std::find_if(es.rbegin(), es.rend(), [](const Entry& e) { return e.plain > 0; });
  if (it == es.rend()) return st;

  st.s = it->value;
  st.s_multiplicity = it->plain;
  const auto s_index = static_cast<std::size_t>(std::distance(it, es.rend()) - 1);
  for (std::size_t i = 0; i < s_index; ++i) st.parts_above_s += es[i].copies();
  if (s_index > 0) {
    const Entry& next = es[s_index - 1];
    st.s2 = next.value;
    st.s2_overlined = next.overlined;
    st.s2_plain = next.plain;
  }
  st.sign_spt = (st.parts_above_s % 2 == 0) ? 1 : -1;
  return st;
}

}  // namespace overpart
