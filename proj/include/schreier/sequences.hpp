#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "schreier/bigint.hpp"
#include "schreier/finset.hpp"

namespace schreier {

/// F(1) = F(2) = 1. Throws InvalidArgument for n = 0.
BigInt fibonacci(std::uint64_t n);

/// C(m, k) by the multiplicative formula with exact division at every step.
/// Zero whenever m < 0, k < 0 or k > m.
BigInt binomial(std::int64_t m, std::int64_t k);

BigInt count_A(std::uint64_t n);
BigInt count_K(std::uint64_t n);
BigInt count_K_prime(std::uint64_t n);

/// |Kpq(n)| by the recurrence
///   1                                              1 <= n <= p + 2q - 3
///   |Kpq(n-1)| + |Kpq(n-2)| + C(n-p-q, q-2) - 1    otherwise
/// evaluated bottom-up with two rolling values.
BigInt count_K_pq(std::uint64_t n, std::uint32_t p, std::uint32_t q);

/// Recurrence-side size of any family.
BigInt count_recurrence(const FamilyId& f);

/// Cardinalities of one family template for n = 1..max_n().
class SequenceTable {
 public:
  SequenceTable(FamilyKind kind, std::uint32_t p, std::uint32_t q,
                std::vector<BigInt> values);

  FamilyKind kind() const noexcept { return kind_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint64_t max_n() const noexcept { return values_.size(); }

  /// 1-based. Throws OutOfRange outside [1, max_n()].
  const BigInt& at(std::uint64_t n) const;
  const std::vector<BigInt>& values() const noexcept { return values_; }

  friend bool operator==(const SequenceTable&, const SequenceTable&) = default;

 private:
  FamilyKind kind_;
  std::uint32_t p_;
  std::uint32_t q_;
  std::vector<BigInt> values_;
};

/// Checks template parameters the same way FamilyId does. p and q are
/// ignored (stored as 0) for kinds other than KPQ.
SequenceTable build_table(FamilyKind kind, std::uint32_t p, std::uint32_t q,
                          std::uint64_t max_n);

/// Thread-safe per-(kind, p, q) memo. Tables only ever grow.
class CardinalityMemo {
 public:
  BigInt count(const FamilyId& f);
  SequenceTable table(FamilyKind kind, std::uint32_t p, std::uint32_t q,
                      std::uint64_t max_n);

 private:
  using Key = std::tuple<FamilyKind, std::uint32_t, std::uint32_t>;
  const std::vector<BigInt>& extend(const Key& key, std::uint64_t max_n);

  std::mutex mutex_;
  std::map<Key, std::vector<BigInt>> tables_;
};

/// Header line "#family <kind> <p> <q>" followed by "n value" lines, LF
/// terminated. Kinds without parameters write "-" for p and q. The file is
/// written to a temporary sibling and renamed into place.
void cache_store(const SequenceTable& table, const std::filesystem::path& path);

/// Throws IoFailure if the file cannot be read, CorruptCache if the header
/// does not match the requested template or any entry breaks the family's
/// base case or recurrence.
SequenceTable cache_load(FamilyKind kind, std::uint32_t p, std::uint32_t q,
                         const std::filesystem::path& path);

}  // namespace schreier
