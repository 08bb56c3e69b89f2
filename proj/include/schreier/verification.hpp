#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "schreier/enumeration.hpp"
#include "schreier/finset.hpp"

namespace schreier {

enum class CheckStatus { Pass, Fail };

struct Counterexample {
  /// Instance that failed; p and q are 0 for checks that do not use them.
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  /// Offending set, when the failure can be pinned to one.
  std::optional<FinSet> witness;
  std::string expected;
  std::string actual;
  std::string detail;
};

/// Outcome of one theorem-level check. A Fail always carries the smallest
/// failing instance: lowest n first, then the first set in bitmask-ascending
/// order.
struct VerificationReport {
  std::string check_name;
  std::string parameter_ranges;
  std::uint64_t cases_run = 0;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Counterexample> first_counterexample;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
};

/// cap and predicate are forwarded to every brute-force scan.
using VerifyOptions = ScanOptions;

/// |K(n)| == F(n) for n = 1..max_n.
VerificationReport verify_theorem1(std::uint32_t max_n, const VerifyOptions& options = {});

/// |K'(n)| == F(n) + n for n = 1..max_n.
VerificationReport verify_corollary(std::uint32_t max_n, const VerifyOptions& options = {});

/// For n = 1..max_n: brute force agrees with the recurrence; Kpq(n) = {{}} in
/// the base range; past it |S| = |Kpq(n-2)| - 1 and |T| = C(n-p-q, q-2).
VerificationReport verify_theorem2(std::uint32_t p, std::uint32_t q,
                                   std::uint32_t max_n,
                                   const VerifyOptions& options = {});

/// Runs both bijections over their whole domains: codomain membership, both
/// round trips, collision freedom, the gap (n-p, n) of every K_{n,p,q} image,
/// and exactness of the S/T partition against construct_T. The K_n map
/// is exercised for n = 2..min(max_n, cap - 1) so that its codomain, which
/// lives in [n+1], stays under the cap.
VerificationReport verify_bijections(std::uint32_t p, std::uint32_t q,
                                     std::uint32_t max_n,
                                     const VerifyOptions& options = {});

/// Multi-line "key: value" record ending in a blank line.
std::string to_text(const VerificationReport& report);
/// One JSON object, no trailing newline.
std::string to_json(const VerificationReport& report);

/// Deliberately broken membership predicates for harness self-tests.
enum class Fault {
  None,
  /// Schreier condition tightened to min A > |A|.
  StrictSchreier,
  /// K' loses its singletons.
  DropSingletons,
  /// Kpq compares max A - max2 A against p + 1 instead of p.
  GapOffByOne,
  /// Kpq drops the |A| >= q lower bound.
  IgnoreLowerBound,
};

/// Empty predicate for Fault::None.
MembershipPredicate fault_predicate(Fault fault);

/// Names used on the command line: "strict-schreier", "drop-singletons",
/// "gap-off-by-one", "ignore-lower-bound". Throws InvalidArgument otherwise.
Fault parse_fault(const std::string& name);

}  // namespace schreier
