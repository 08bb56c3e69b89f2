#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "schreier/bigint.hpp"
#include "schreier/finset.hpp"

namespace schreier {

/// Total orders over the subsets of [n].
///
/// BitmaskAscending visits subsets by the integer value of their
/// characteristic mask. Note that plain colex order over all subsets is the
/// same order, so Colex here is the graded variant: by cardinality first,
/// then colex within each cardinality.
enum class EnumerationOrder { BitmaskAscending, Colex };

inline constexpr std::uint32_t kDefaultEnumerationCap = 30;
/// Masks reserve bit 0, so n can go up to 63 before the scan runs out of bits.
inline constexpr std::uint32_t kMaxEnumerationCap = 63;

/// Replacement membership test, used by harness self-tests to inject broken
/// predicates. Receives the subset mask (bit i = element i).
using MembershipPredicate =
    std::function<bool(std::uint64_t mask, const FamilyId& family)>;

struct ScanOptions {
  std::uint32_t cap = kDefaultEnumerationCap;
  /// Empty means the library's own predicate.
  MembershipPredicate predicate;
  /// 0 picks std::thread::hardware_concurrency(). Only counting runs in
  /// parallel; enumeration order never depends on this.
  unsigned threads = 0;
};

/// Lazy scan over the subsets of [n] accepted by a filter.
class SubsetScan {
 public:
  using Filter = std::function<bool(std::uint64_t)>;

  SubsetScan(std::uint32_t n, EnumerationOrder order, Filter filter);

  /// Next accepted subset, or nullopt once exhausted.
  std::optional<FinSet> next();

 private:
  bool advance(std::uint64_t& out);

  std::uint32_t n_;
  EnumerationOrder order_;
  Filter filter_;
  // BitmaskAscending: next raw index in [0, 2^n); element i is bit i of
  // (index << 1). Colex: current cardinality and Gosper word.
  std::uint64_t index_ = 0;
  std::uint32_t cardinality_ = 0;
  std::uint64_t word_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Throws LimitExceeded when n is above options.cap (or above 63).
SubsetScan scan_family(const FamilyId& f, EnumerationOrder order,
                       const ScanOptions& options = {});

/// Members of f_large that are not members of f_small. The two ids must share
/// kind and parameters, with f_small.n() == f_large.n() - 1; otherwise
/// ParameterMismatch.
SubsetScan scan_difference(const FamilyId& f_large, const FamilyId& f_small,
                           EnumerationOrder order,
                           const ScanOptions& options = {});

std::vector<FinSet> enumerate_family(
    const FamilyId& f, EnumerationOrder order = EnumerationOrder::BitmaskAscending,
    const ScanOptions& options = {});

std::vector<FinSet> enumerate_difference(
    const FamilyId& f_large, const FamilyId& f_small,
    EnumerationOrder order = EnumerationOrder::BitmaskAscending,
    const ScanOptions& options = {});

/// Counts the members of f without materializing them. The range [0, 2^n) is
/// split into contiguous chunks counted on separate threads.
BigInt count_family_bruteforce(const FamilyId& f, const ScanOptions& options = {});

}  // namespace schreier
