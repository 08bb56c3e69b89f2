#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schreier/error.hpp"

namespace schreier {

using Element = std::uint32_t;

/// Largest element that still fits the 64-bit characteristic mask. Bit i of a
/// mask stands for element i; bit 0 is never set.
inline constexpr Element kMaskMaxElement = 63;

/// A finite set of positive integers kept in sorted, duplicate-free form.
///
/// Sets whose largest element is at most 63 also carry their characteristic
/// bitmask, which the enumeration engine and the family predicates use as a
/// fast path. The element sequence is the canonical public form.
class FinSet {
 public:
  FinSet() = default;

  /// Canonicalizes `elements` (sort + dedupe). Throws OutOfRange on a zero.
  explicit FinSet(std::vector<Element> elements);
  FinSet(std::initializer_list<Element> elements);

  static FinSet from_mask(std::uint64_t mask);

  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// Throw Undefined on the empty set.
  Element min() const;
  Element max() const;

  bool contains(Element x) const noexcept;

  /// Present iff max() <= 63 (or the set is empty).
  std::optional<std::uint64_t> mask() const noexcept {
    if (has_mask_) return mask_;
    return std::nullopt;
  }

  /// "{}" or "{a1,a2,...}" in ascending order.
  std::string to_string() const;

  friend bool operator==(const FinSet& a, const FinSet& b) noexcept {
    return a.elements_ == b.elements_;
  }

 private:
  void refresh_mask() noexcept;

  std::vector<Element> elements_;
  std::uint64_t mask_ = 0;
  bool has_mask_ = true;
};

/// Strict weak order matching ascending characteristic-bitmask value: the
/// set holding the largest element of the symmetric difference is greater.
/// Defined for all sets, including those without a mask.
bool bitmask_less(const FinSet& a, const FinSet& b) noexcept;

struct BitmaskLess {
  bool operator()(const FinSet& a, const FinSet& b) const noexcept {
    return bitmask_less(a, b);
  }
};

enum class FamilyKind { BirdA, K, KPrime, KPQ };

const char* to_string(FamilyKind kind) noexcept;

/// Identifies one of the four families together with its parameters.
/// Invariants (checked on construction): n >= 1; for KPQ, p >= 1 and q >= 2.
/// For the other kinds p and q are stored as 0.
class FamilyId {
 public:
  static FamilyId bird_a(std::uint32_t n);
  static FamilyId k(std::uint32_t n);
  static FamilyId k_prime(std::uint32_t n);
  static FamilyId k_pq(std::uint32_t n, std::uint32_t p, std::uint32_t q);
  static FamilyId make(FamilyKind kind, std::uint32_t n, std::uint32_t p = 0,
                       std::uint32_t q = 0);

  FamilyKind kind() const noexcept { return kind_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Same kind and parameters, different n.
  FamilyId with_n(std::uint32_t n) const;

  bool same_template(const FamilyId& other) const noexcept {
    return kind_ == other.kind_ && p_ == other.p_ && q_ == other.q_;
  }

  /// e.g. "K(5)" or "Kpq(7,1,3)".
  std::string to_string() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;

 private:
  FamilyId(FamilyKind kind, std::uint32_t n, std::uint32_t p, std::uint32_t q)
      : kind_(kind), n_(n), p_(p), q_(q) {}

  FamilyKind kind_;
  std::uint32_t n_;
  std::uint32_t p_;
  std::uint32_t q_;
};

bool is_schreier(const FinSet& a) noexcept;

/// Second largest element. Throws Undefined when |A| < 2.
Element max2(const FinSet& a);

/// {a + r : a in A}. Throws OutOfRange if a shifted element would leave the
/// positive integers.
FinSet shift(const FinSet& a, std::int64_t r);

bool in_family(const FinSet& a, const FamilyId& f) noexcept;

namespace bits {

inline constexpr std::uint64_t ground_mask(std::uint32_t n) noexcept {
  // bits 1..n
  return (n >= 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n + 1)) - 1)) &
         ~std::uint64_t{1};
}

inline constexpr int size(std::uint64_t m) noexcept { return std::popcount(m); }
inline constexpr int min(std::uint64_t m) noexcept { return std::countr_zero(m); }
inline constexpr int max(std::uint64_t m) noexcept {
  return 63 - std::countl_zero(m);
}

/// Requires popcount(m) >= 2.
inline constexpr int max2(std::uint64_t m) noexcept {
  return max(m & ~(std::uint64_t{1} << max(m)));
}

inline constexpr bool is_schreier(std::uint64_t m) noexcept {
  return m == 0 || min(m) >= size(m);
}

inline constexpr bool in_k(std::uint64_t m) noexcept {
  // bit 0 is never set, so max(m) - 1 == 0 fails the membership test.
  return m == 0 ||
         (((m >> (max(m) - 1)) & 1U) != 0 && max(m) > 1 && is_schreier(m));
}

inline constexpr bool in_family(std::uint64_t m, FamilyKind kind,
                                std::uint32_t n, std::uint32_t p,
                                std::uint32_t q) noexcept {
  if ((m & ~ground_mask(n)) != 0) return false;
  switch (kind) {
    case FamilyKind::BirdA:
      return n <= 63 && ((m >> n) & 1U) != 0 && is_schreier(m);
    case FamilyKind::K:
      return in_k(m);
    case FamilyKind::KPrime:
      return size(m) <= 1 || in_k(m);
    case FamilyKind::KPQ: {
      if (m == 0) return true;
      const int card = size(m);
      return card >= 2 && static_cast<std::uint32_t>(max(m) - max2(m)) == p &&
             card >= static_cast<int>(q) && min(m) >= card;
    }
  }
  return false;
}

inline bool in_family(std::uint64_t m, const FamilyId& f) noexcept {
  return in_family(m, f.kind(), f.n(), f.p(), f.q());
}

}  // namespace bits

}  // namespace schreier
