#include "schreier/verification.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "schreier/bijections.hpp"
#include "schreier/sequences.hpp"

namespace schreier {

namespace {

using Family = std::vector<FinSet>;
using Found = std::optional<Counterexample>;

std::string str(const BigInt& v) { return v.str(); }

void sort_bitmask(Family& f) { std::sort(f.begin(), f.end(), BitmaskLess{}); }

bool contains_sorted(const Family& sorted, const FinSet& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, BitmaskLess{});
}

/// First set, in bitmask order, that lies in exactly one of the two families.
std::optional<std::pair<FinSet, bool>> first_difference(Family actual,
                                                        Family expected) {
  sort_bitmask(actual);
  sort_bitmask(expected);
  std::optional<std::pair<FinSet, bool>> best;
  auto consider = [&](const FinSet& s, bool in_actual) {
    if (!best || bitmask_less(s, best->first)) best = {s, in_actual};
  };
  for (const auto& s : actual)
    if (!contains_sorted(expected, s)) { consider(s, true); break; }
  for (const auto& s : expected)
    if (!contains_sorted(actual, s)) { consider(s, false); break; }
  return best;
}

Counterexample make_cx(std::uint32_t n, std::uint32_t p, std::uint32_t q,
                       std::string expected, std::string actual, std::string detail,
                       std::optional<FinSet> witness = std::nullopt) {
  return Counterexample{n, p, q, std::move(witness), std::move(expected),
                        std::move(actual), std::move(detail)};
}

/// Attach the first set separating the scanned family from the one the proof
/// constructs, or a set the construction itself rejected.
template <class Construct>
void attach_witness(Counterexample& cx, const Family& scanned, Construct construct) {
  Family rebuilt;
  try {
    rebuilt = construct();
  } catch (const Error& e) {
    cx.detail += "; reconstruction failed: " + std::string(e.what());
    return;
  }
  if (auto diff = first_difference(scanned, std::move(rebuilt))) {
    cx.witness = diff->first;
    cx.detail += diff->second ? "; witness is scanned but not constructed"
                              : "; witness is constructed but not scanned";
  }
}

VerificationReport finish(std::string name, std::string ranges, std::uint64_t cases,
                          Found cx) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.parameter_ranges = std::move(ranges);
  r.cases_run = cases;
  r.status = cx ? CheckStatus::Fail : CheckStatus::Pass;
  r.first_counterexample = std::move(cx);
  return r;
}

void check_range(std::uint32_t max_n, std::uint32_t min_n, const VerifyOptions& options) {
  if (max_n < min_n)
    throw Error(ErrorCode::InvalidArgument,
                "max_n must be >= " + std::to_string(min_n));
  const std::uint32_t cap = std::min(options.cap, kMaxEnumerationCap);
  if (max_n > cap)
    throw Error(ErrorCode::LimitExceeded,
                "max_n = " + std::to_string(max_n) +
                    " exceeds the enumeration cap of " + std::to_string(cap));
}

void check_pq(std::uint32_t p, std::uint32_t q) { (void)FamilyId::k_pq(1, p, q); }

std::string range_text(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return "none";
  return std::to_string(lo) + ".." + std::to_string(hi);
}

// K(n) rebuilt as K(n-1) plus the thm1 image of K(n-2).
Family rebuild_k(std::uint32_t n, const VerifyOptions& options) {
  if (n <= 2) return {FinSet{}};
  Family out = enumerate_family(FamilyId::k(n - 1), EnumerationOrder::BitmaskAscending, options);
  for (const auto& a : enumerate_family(FamilyId::k(n - 2), EnumerationOrder::BitmaskAscending, options))
    out.push_back(thm1_forward(a, n - 1));
  return out;
}

// Kpq(n) rebuilt as Kpq(n-1) plus S (image of Kpq(n-2) \ {{}}) plus T.
Family rebuild_kpq(std::uint32_t n, std::uint32_t p, std::uint32_t q,
                   const VerifyOptions& options) {
  if (n <= kpq_base_bound(p, q)) return {FinSet{}};
  Family out = enumerate_family(FamilyId::k_pq(n - 1, p, q),
                                EnumerationOrder::BitmaskAscending, options);
  for (const auto& a : enumerate_family(FamilyId::k_pq(n - 2, p, q),
                                        EnumerationOrder::BitmaskAscending, options))
    if (!a.empty()) out.push_back(thm2_forward(a, n, p, q));
  for (auto& t : construct_T(n, p, q)) out.push_back(std::move(t));
  return out;
}

// Applies a map, turning a DomainViolation into a counterexample.
template <class Map>
std::optional<FinSet> apply(Map map, const FinSet& arg, Found& cx, std::uint32_t n,
                            std::uint32_t p, std::uint32_t q) {
  try {
    return map(arg);
  } catch (const Error& e) {
    cx = make_cx(n, p, q, "in domain", "rejected", e.what(), arg);
    return std::nullopt;
  }
}

/// Shared bijection harness: forward lands in the codomain, round trips are
/// identities, images are collision-free and cover the codomain.
template <class Forward, class Inverse, class Extra>
Found check_bijection(const Family& domain, Family codomain, Forward forward,
                      Inverse inverse, Extra extra, const std::string& label,
                      std::uint32_t n, std::uint32_t p, std::uint32_t q) {
  Found cx;
  sort_bitmask(codomain);
  Family images;
  images.reserve(domain.size());
  for (const auto& a : domain) {
    auto b = apply(forward, a, cx, n, p, q);
    if (!b) return cx;
    if (!contains_sorted(codomain, *b))
      return make_cx(n, p, q, "image in codomain", b->to_string(),
                     label + " forward image leaves the codomain", a);
    if (auto why = extra(a, *b))
      return make_cx(n, p, q, "structural property", b->to_string(),
                     label + ": " + *why, a);
    auto back = apply(inverse, *b, cx, n, p, q);
    if (!back) return cx;
    if (!(*back == a))
      return make_cx(n, p, q, a.to_string(), back->to_string(),
                     label + " inverse(forward(A)) != A", a);
    images.push_back(std::move(*b));
  }
  sort_bitmask(images);
  for (std::size_t i = 1; i < images.size(); ++i)
    if (images[i] == images[i - 1])
      return make_cx(n, p, q, "distinct images", images[i].to_string(),
                     label + " forward map collides", images[i]);
  if (images.size() != codomain.size()) {
    Counterexample c = make_cx(n, p, q, std::to_string(codomain.size()),
                               std::to_string(images.size()),
                               label + " forward map is not onto");
    if (auto diff = first_difference(images, codomain)) c.witness = diff->first;
    return c;
  }
  for (const auto& b : codomain) {
    auto a = apply(inverse, b, cx, n, p, q);
    if (!a) return cx;
    auto again = apply(forward, *a, cx, n, p, q);
    if (!again) return cx;
    if (!(*again == b))
      return make_cx(n, p, q, b.to_string(), again->to_string(),
                     label + " forward(inverse(B)) != B", b);
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_theorem1(std::uint32_t max_n, const VerifyOptions& options) {
  check_range(max_n, 1, options);
  std::uint64_t cases = 0;
  Found cx;
  for (std::uint32_t n = 1; n <= max_n && !cx; ++n) {
    ++cases;
    const FamilyId f = FamilyId::k(n);
    const BigInt actual = count_family_bruteforce(f, options);
    const BigInt expected = fibonacci(n);
    if (actual != expected) {
      cx = make_cx(n, 0, 0, str(expected), str(actual), "|K(n)| != F(n)");
      attach_witness(*cx, enumerate_family(f, EnumerationOrder::BitmaskAscending, options),
                     [&] { return rebuild_k(n, options); });
    }
  }
  return finish("theorem1", "n=" + range_text(1, max_n), cases, std::move(cx));
}

VerificationReport verify_corollary(std::uint32_t max_n, const VerifyOptions& options) {
  check_range(max_n, 1, options);
  std::uint64_t cases = 0;
  Found cx;
  for (std::uint32_t n = 1; n <= max_n && !cx; ++n) {
    ++cases;
    const FamilyId f = FamilyId::k_prime(n);
    const BigInt actual = count_family_bruteforce(f, options);
    const BigInt expected = fibonacci(n) + n;
    if (actual != expected) {
      cx = make_cx(n, 0, 0, str(expected), str(actual), "|K'(n)| != F(n) + n");
      attach_witness(*cx, enumerate_family(f, EnumerationOrder::BitmaskAscending, options), [&] {
        Family out = enumerate_family(FamilyId::k(n), EnumerationOrder::BitmaskAscending, options);
        for (Element i = 1; i <= n; ++i) out.push_back(FinSet{i});
        return out;
      });
    }
  }
  return finish("corollary", "n=" + range_text(1, max_n), cases, std::move(cx));
}

VerificationReport verify_theorem2(std::uint32_t p, std::uint32_t q, std::uint32_t max_n,
                                   const VerifyOptions& options) {
  check_pq(p, q);
  check_range(max_n, 1, options);
  const std::uint64_t bound = kpq_base_bound(p, q);
  std::uint64_t cases = 0;
  Found cx;
  for (std::uint32_t n = 1; n <= max_n && !cx; ++n) {
    ++cases;
    const FamilyId f = FamilyId::k_pq(n, p, q);
    const BigInt actual = count_family_bruteforce(f, options);
    const BigInt expected = count_K_pq(n, p, q);
    if (actual != expected) {
      cx = make_cx(n, p, q, str(expected), str(actual),
                   "brute force disagrees with the recurrence");
      attach_witness(*cx, enumerate_family(f, EnumerationOrder::BitmaskAscending, options),
                     [&] { return rebuild_kpq(n, p, q, options); });
      break;
    }
    if (n <= bound) {
      for (const auto& a : enumerate_family(f, EnumerationOrder::BitmaskAscending, options)) {
        if (!a.empty()) {
          cx = make_cx(n, p, q, "{{}}", "contains " + a.to_string(),
                       "base range must hold only the empty set", a);
          break;
        }
      }
      continue;
    }
    const Partition part = partition_difference(n, p, q, options);
    const BigInt s_expected =
        count_family_bruteforce(FamilyId::k_pq(n - 2, p, q), options) - 1;
    if (BigInt(part.s_members.size()) != s_expected) {
      cx = make_cx(n, p, q, str(s_expected), std::to_string(part.s_members.size()),
                   "|S| != |Kpq(n-2)| - 1");
      attach_witness(*cx, part.s_members, [&] {
        Family out;
        for (const auto& a : enumerate_family(FamilyId::k_pq(n - 2, p, q),
                                              EnumerationOrder::BitmaskAscending, options))
          if (!a.empty()) out.push_back(thm2_forward(a, n, p, q));
        return out;
      });
      break;
    }
    const BigInt t_expected =
        binomial(static_cast<std::int64_t>(n) - p - q, static_cast<std::int64_t>(q) - 2);
    if (BigInt(part.t_members.size()) != t_expected) {
      cx = make_cx(n, p, q, str(t_expected), std::to_string(part.t_members.size()),
                   "|T| != C(n-p-q, q-2)");
      attach_witness(*cx, part.t_members, [&] { return construct_T(n, p, q); });
    }
  }
  return finish("theorem2",
                "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                    " n=" + range_text(1, max_n) + " base=" + range_text(1, bound),
                cases, std::move(cx));
}

VerificationReport verify_bijections(std::uint32_t p, std::uint32_t q,
                                     std::uint32_t max_n, const VerifyOptions& options) {
  check_pq(p, q);
  check_range(max_n, 2, options);
  const std::uint32_t cap = std::min(options.cap, kMaxEnumerationCap);
  const std::uint32_t thm1_hi = std::min(max_n, cap - 1);
  const std::uint64_t bound = kpq_base_bound(p, q);
  constexpr auto order = EnumerationOrder::BitmaskAscending;
  std::uint64_t cases = 0;
  Found cx;

  for (std::uint32_t n = 2; n <= thm1_hi && !cx; ++n) {
    ++cases;
    const Family domain = enumerate_family(FamilyId::k(n - 1), order, options);
    const Family codomain =
        enumerate_difference(FamilyId::k(n + 1), FamilyId::k(n), order, options);
    cx = check_bijection(
        domain, codomain, [n](const FinSet& a) { return thm1_forward(a, n); },
        [n](const FinSet& b) { return thm1_inverse(b, n); },
        [](const FinSet& a, const FinSet& b) -> std::optional<std::string> {
          if (a.empty()) return std::nullopt;
          // min pi(A) = min A + 1 >= |A| + 1 = |pi(A)|
          if (b.min() != a.min() + 1 || b.size() != a.size() + 1 || b.min() < b.size())
            return "Schreier chain min pi(A) = min A + 1 >= |A| + 1 = |pi(A)| broken";
          return std::nullopt;
        },
        "thm1", n, 0, 0);
  }

  for (std::uint32_t n = static_cast<std::uint32_t>(bound) + 1; n <= max_n && !cx; ++n) {
    ++cases;
    Family domain;
    for (auto& a : enumerate_family(FamilyId::k_pq(n - 2, p, q), order, options))
      if (!a.empty()) domain.push_back(std::move(a));
    const Partition part = partition_difference(n, p, q, options);
    cx = check_bijection(
        domain, part.s_members,
        [=](const FinSet& a) { return thm2_forward(a, n, p, q); },
        [=](const FinSet& b) { return thm2_inverse(b, n, p, q); },
        [=](const FinSet&, const FinSet& b) -> std::optional<std::string> {
          for (Element e : b.elements())
            if (e > n - p && e < n) return "image meets the open interval (n-p, n)";
          return std::nullopt;
        },
        "thm2", n, p, q);
    if (cx) break;

    // Partition exactness against an independent difference scan and against
    // the direct construction of T.
    const Family diff =
        enumerate_difference(FamilyId::k_pq(n, p, q), FamilyId::k_pq(n - 1, p, q), order, options);
    Family both = part.s_members;
    both.insert(both.end(), part.t_members.begin(), part.t_members.end());
    if (auto d = first_difference(both, diff)) {
      cx = make_cx(n, p, q, "S u T = Kpq(n) \\ Kpq(n-1)", d->first.to_string(),
                   "partition is not exact", d->first);
      break;
    }
    Family s_sorted = part.s_members;
    sort_bitmask(s_sorted);
    for (const auto& t : part.t_members) {
      if (contains_sorted(s_sorted, t)) {
        cx = make_cx(n, p, q, "disjoint S and T", t.to_string(), "S and T overlap", t);
        break;
      }
      if (t.size() != q) {
        cx = make_cx(n, p, q, std::to_string(q), std::to_string(t.size()),
                     "T member has the wrong size", t);
        break;
      }
    }
    if (cx) break;
    if (auto d = first_difference(part.t_members, construct_T(n, p, q))) {
      cx = make_cx(n, p, q, "T = construct_T(n, p, q)", d->first.to_string(),
                   "T differs from its direct construction", d->first);
      break;
    }
    if (p == 1 && q == 2) {
      // The K_n difference family is the whole of S u T here, and T
      // collapses to the single set {n-1, n}.
      const Family thm1_diff =
          enumerate_difference(FamilyId::k(n), FamilyId::k(n - 1), order, options);
      if (auto d = first_difference(both, thm1_diff)) {
        cx = make_cx(n, p, q, "S u T = K(n) \\ K(n-1)", d->first.to_string(),
                     "p=1, q=2 partition differs from the K_n difference", d->first);
        break;
      }
      const Family t = construct_T(n, 1, 2);
      if (t.size() != 1 || !(t.front() == FinSet{n - 1, n})) {
        cx = make_cx(n, p, q, "{{n-1,n}}", std::to_string(t.size()) + " sets",
                     "construct_T(n, 1, 2) must be exactly {n-1, n}");
        break;
      }
    }
  }

  return finish("bijections",
                "thm1 n=" + range_text(2, thm1_hi) + "; thm2 p=" + std::to_string(p) +
                    " q=" + std::to_string(q) + " n=" + range_text(bound + 1, max_n),
                cases, std::move(cx));
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "check: " << report.check_name << '\n'
      << "ranges: " << report.parameter_ranges << '\n'
      << "cases: " << report.cases_run << '\n'
      << "status: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  if (const auto& cx = report.first_counterexample) {
    out << "counterexample: n=" << cx->n;
    if (cx->q != 0) out << " p=" << cx->p << " q=" << cx->q;
    out << '\n';
    if (cx->witness) out << "witness: " << cx->witness->to_string() << '\n';
    out << "expected: " << cx->expected << '\n'
        << "actual: " << cx->actual << '\n'
        << "detail: " << cx->detail << '\n';
  }
  out << '\n';
  return out.str();
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check_name;
  j["ranges"] = report.parameter_ranges;
  j["cases"] = report.cases_run;
  j["status"] = report.passed() ? "PASS" : "FAIL";
  if (const auto& cx = report.first_counterexample) {
    nlohmann::ordered_json c;
    c["n"] = cx->n;
    if (cx->q != 0) {
      c["p"] = cx->p;
      c["q"] = cx->q;
    }
    if (cx->witness) {
      c["witness"] = std::vector<Element>(cx->witness->elements().begin(),
                                          cx->witness->elements().end());
    } else {
      c["witness"] = nullptr;
    }
    c["expected"] = cx->expected;
    c["actual"] = cx->actual;
    c["detail"] = cx->detail;
    j["counterexample"] = std::move(c);
  }
  return j.dump();
}

MembershipPredicate fault_predicate(Fault fault) {
  switch (fault) {
    case Fault::None:
      return {};
    case Fault::StrictSchreier:
      return [](std::uint64_t m, const FamilyId& f) {
        if (m != 0 && bits::min(m) == bits::size(m)) return false;
        return bits::in_family(m, f);
      };
    case Fault::DropSingletons:
      return [](std::uint64_t m, const FamilyId& f) {
        if (f.kind() == FamilyKind::KPrime && bits::size(m) == 1) return false;
        return bits::in_family(m, f);
      };
    case Fault::GapOffByOne:
      return [](std::uint64_t m, const FamilyId& f) {
        if (f.kind() != FamilyKind::KPQ) return bits::in_family(m, f);
        return bits::in_family(m, FamilyKind::KPQ, f.n(), f.p() + 1, f.q());
      };
    case Fault::IgnoreLowerBound:
      return [](std::uint64_t m, const FamilyId& f) {
        if (f.kind() != FamilyKind::KPQ) return bits::in_family(m, f);
        return bits::in_family(m, FamilyKind::KPQ, f.n(), f.p(), 2);
      };
  }
  return {};
}

Fault parse_fault(const std::string& name) {
  if (name == "none") return Fault::None;
  if (name == "strict-schreier") return Fault::StrictSchreier;
  if (name == "drop-singletons") return Fault::DropSingletons;
  if (name == "gap-off-by-one") return Fault::GapOffByOne;
  if (name == "ignore-lower-bound") return Fault::IgnoreLowerBound;
  throw Error(ErrorCode::InvalidArgument, "unknown fault '" + name + "'");
}

}  // namespace schreier
