#pragma once

#include <cstdint>
#include <vector>

#include "schreier/enumeration.hpp"
#include "schreier/finset.hpp"

namespace schreier {

// Forward and inverse maps from the bijective proofs that |K(n)| = F(n) and
// the order-two recurrence for |Kpq(n)|. Every map checks its domain and
// throws DomainViolation instead of producing a set outside the codomain.

/// K(n-1) -> K(n+1) \ K(n):
///   A != {} : (A \ {max A}) + 1  union  {n, n+1}
///   A == {} : {n, n+1}
/// Requires n >= 2.
FinSet thm1_forward(const FinSet& a, std::uint32_t n);

/// Inverse of thm1_forward. With E = (B \ {n, n+1}) - 1 it returns
/// E union {max E + 1}, or {} when B = {n, n+1}.
FinSet thm1_inverse(const FinSet& b, std::uint32_t n);

/// Kpq(n-2) \ {{}} -> S, the part of Kpq(n) \ Kpq(n-1) with |A| >= q+1:
///   (A \ {max A}) + 1  union  {n-p, n}
/// Requires n > p + 2q - 3.
FinSet thm2_forward(const FinSet& a, std::uint32_t n, std::uint32_t p,
                    std::uint32_t q);

/// Inverse of thm2_forward: B = (A \ {n-p, n}) - 1, l = max B, returns
/// B union {l + p}.
FinSet thm2_inverse(const FinSet& a, std::uint32_t n, std::uint32_t p,
                    std::uint32_t q);

/// Split of Kpq(n) \ Kpq(n-1) by cardinality. Sets of size >= q+1 go to
/// s_members and everything else to t_members; for the true family every
/// t member has size exactly q. Both lists are in bitmask-ascending order.
struct Partition {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::vector<FinSet> s_members;
  std::vector<FinSet> t_members;
};

/// Requires n >= 2. Throws LimitExceeded above options.cap.
Partition partition_difference(std::uint32_t n, std::uint32_t p, std::uint32_t q,
                               const ScanOptions& options = {});

/// D union {n-p, n} for every (q-2)-subset D of {q, ..., n-p-1}, in
/// bitmask-ascending order. Empty when n <= p + 2q - 3, so the length always
/// equals binomial(n-p-q, q-2).
std::vector<FinSet> construct_T(std::uint32_t n, std::uint32_t p, std::uint32_t q);

/// p + 2q - 3: Kpq(n) = {{}} for 1 <= n <= this bound.
inline constexpr std::uint64_t kpq_base_bound(std::uint32_t p, std::uint32_t q) {
  return std::uint64_t{p} + 2 * std::uint64_t{q} - 3;
}

}  // namespace schreier
