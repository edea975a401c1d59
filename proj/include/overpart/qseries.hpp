#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "overpart/bigint.hpp"
#include "overpart/family.hpp"

namespace overpart {

/// Formal power series in q truncated after q^order.
class Series {
 public:
  explicit Series(int order) : coeffs_(checked_length(order)) {}

  Series(int order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != checked_length(order))
      throw std::invalid_argument("series needs exactly order+1 coefficients");
  }

  static Series one(int order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const BigInt& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] BigInt& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  friend Series operator+(const Series& a, const Series& b) {
    require_same_order(a, b);
    Series out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    require_same_order(a, b);
    Series out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
  }

  // Cauchy product, truncated.
  friend Series operator*(const Series& a, const Series& b) {
    require_same_order(a, b);
    const int n = a.order();
    Series out(n);
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  friend bool operator==(const Series&, const Series&) = default;

  /// In-place multiplication by (1 + z q^j) / (1 - z q^j), in O(order).
  Series& multiply_part_factor(int j, int z) {
    if (j < 1) throw std::invalid_argument("part value must be positive");
    if (z != 1 && z != -1) throw std::invalid_argument("z must be +1 or -1");
    const int n = order();
    for (int i = j; i <= n; ++i) coeffs_[i] += z * coeffs_[i - j];  // divide by 1 - z q^j
    for (int i = n; i >= j; --i) coeffs_[i] += z * coeffs_[i - j];  // multiply by 1 + z q^j
    return *this;
  }

  // Adds q^shift * other into *this.
  Series& add_shifted(const Series& other, int shift) {
    require_same_order(*this, other);
    for (int i = 0; i + shift <= order(); ++i) coeffs_[i + shift] += other.coeffs_[i];
    return *this;
  }

 private:
  static std::size_t checked_length(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
  }

  static void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
      throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                  std::to_string(b.order()));
  }

  std::vector<BigInt> coeffs_;
};

/// Truncated expansion 1 + 2 * sum_{m>=1} z^m q^{jm}, one overlinable part j.
inline Series part_factor(int j, int z, int order) {
  if (j < 1) throw std::invalid_argument("part value must be positive");
  if (z != 1 && z != -1) throw std::invalid_argument("z must be +1 or -1");
  Series s = Series::one(order);
  int sign = 1;
  for (int m = 1; j * m <= order; ++m) {
    sign *= z;
    s[j * m] = 2 * sign;
  }
  return s;
}

inline constexpr int kDefaultOrder = 200;

/// Default truncation order; OVERPART_ORDER overrides it.
inline int default_order() {
  if (const char* env = std::getenv("OVERPART_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("OVERPART_ORDER must be a positive integer, got '") + env + "'");
  }
  return kDefaultOrder;
}

namespace detail {

inline Series halve(const Series& s) {
  Series out(s.order());
  for (int i = 0; i <= s.order(); ++i) {
    if (s[i] % 2 != 0) throw std::logic_error("signed decomposition is not integral at q^" + std::to_string(i));
    out[i] = s[i] / 2;
  }
  return out;
}

// sum_{s>=1} q^{ks} prod_{j>s, j in allowed(s)} factor(j, z).
// With opposite_parity, allowed(s) is the j of the other parity than s.
inline Series smallest_part_sum(int k, int z, int order, bool opposite_parity) {
  Series total(order);
  Series above_all = Series::one(order);
  Series above_odd = Series::one(order);
  Series above_even = Series::one(order);
  for (int s = order; s >= 1; --s) {
    if (std::int64_t{k} * s <= order) {
      const Series& tail = !opposite_parity ? above_all : (s % 2 == 0 ? above_odd : above_even);
      total.add_shifted(tail, k * s);
    }
    if (!opposite_parity)
      above_all.multiply_part_factor(s, z);
    else
      (s % 2 == 0 ? above_even : above_odd).multiply_part_factor(s, z);
  }
  return total;
}

inline Series product_over(int order, int z, int first, int step) {
  Series out = Series::one(order);
  for (int j = first; j <= order; j += step) out.multiply_part_factor(j, z);
  return out;
}

}  // namespace detail

/// Generating function whose q^n coefficient counts the family. With z = -1
/// (SPTKO and POEX only) each object is weighted by (-1)^(parts above s),
/// respectively (-1)^(number of parts).
inline Series family_series(const FamilySpec& fam, int z, int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  if (z != 1 && z != -1) throw std::invalid_argument("z must be +1 or -1");
  if (z == -1 && fam.id != FamilyId::sptko && fam.id != FamilyId::poex)
    throw std::invalid_argument("family " + family_name(fam) + " has no signed statistic");
  if (fam.parameterized() && fam.k < 1) throw std::invalid_argument("k must be at least 1");

  const auto poex = [&](int zz) {
    Series s = detail::product_over(order, zz, 3, 2);
    Series lone_one = Series::one(order);
    lone_one[1] = zz;
    return lone_one * s;
  };

  switch (fam.id) {
    case FamilyId::pbar: return detail::product_over(order, 1, 1, 1);
    case FamilyId::sptk: return detail::smallest_part_sum(fam.k, 1, order, false);
    case FamilyId::sptko: return detail::smallest_part_sum(fam.k, z, order, true);
    case FamilyId::pe: return detail::product_over(order, 1, 2, 2);
    case FamilyId::pex: {
      Series lone_one = Series::one(order);
      lone_one[1] = 1;
      return lone_one * detail::product_over(order, 1, 2, 1);
    }
    case FamilyId::poex: return poex(z);
    case FamilyId::bek:
    case FamilyId::bok: {
      const Series plus = detail::smallest_part_sum(fam.k, 1, order, true);
      const Series minus = detail::smallest_part_sum(fam.k, -1, order, true);
      return detail::halve(fam.id == FamilyId::bek ? plus + minus : plus - minus);
    }
    case FamilyId::ce:
    case FamilyId::co: {
      const Series plus = poex(1);
      const Series minus = poex(-1);
      return detail::halve(fam.id == FamilyId::ce ? plus + minus : plus - minus);
    }
  }
  throw std::invalid_argument("unknown family");
}

inline Series signed_series(const SignedSpec& spec, int order) {
  return spec.kind == SignedKind::poex_prime ? family_series({FamilyId::poex}, -1, order)
                                             : family_series({FamilyId::sptko, spec.k}, -1, order);
}

}  // namespace overpart
