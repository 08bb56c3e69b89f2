#include "schreier/bijections.hpp"

#include <string>

namespace schreier {

namespace {

[[noreturn]] void domain_violation(const std::string& map, const FinSet& set,
                                   const std::string& why) {
  throw Error(ErrorCode::DomainViolation,
              map + ": " + set.to_string() + " " + why);
}

FinSet without(const FinSet& a, std::initializer_list<Element> drop) {
  std::vector<Element> kept;
  kept.reserve(a.size());
  for (Element e : a.elements()) {
    bool dropped = false;
    for (Element d : drop) dropped = dropped || e == d;
    if (!dropped) kept.push_back(e);
  }
  return FinSet(std::move(kept));
}

FinSet with(const FinSet& a, std::initializer_list<Element> add) {
  std::vector<Element> all(a.elements().begin(), a.elements().end());
  all.insert(all.end(), add);
  return FinSet(std::move(all));
}

void check_pq(std::uint32_t p, std::uint32_t q) {
  if (p < 1 || q < 2)
    throw Error(ErrorCode::InvalidArgument, "need p >= 1 and q >= 2");
}

}  // namespace

FinSet thm1_forward(const FinSet& a, std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "thm1_forward needs n >= 2");
  if (!in_family(a, FamilyId::k(n - 1)))
    domain_violation("thm1_forward", a, "is not in K(" + std::to_string(n - 1) + ")");
  if (a.empty()) return FinSet{n, n + 1};
  return with(shift(without(a, {a.max()}), 1), {n, n + 1});
}

FinSet thm1_inverse(const FinSet& b, std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "thm1_inverse needs n >= 2");
  if (!in_family(b, FamilyId::k(n + 1)) || in_family(b, FamilyId::k(n)))
    domain_violation("thm1_inverse", b,
                     "is not in K(" + std::to_string(n + 1) + ") \\ K(" +
                         std::to_string(n) + ")");
  // Members of the difference contain n and n+1, so |b| == 2 means b = {n, n+1}.
  if (b.size() == 2) return FinSet{};
  const FinSet e = shift(without(b, {n, n + 1}), -1);
  return with(e, {e.max() + 1});
}

FinSet thm2_forward(const FinSet& a, std::uint32_t n, std::uint32_t p,
                    std::uint32_t q) {
  check_pq(p, q);
  if (n <= kpq_base_bound(p, q))
    domain_violation("thm2_forward", a,
                     "needs n > p + 2q - 3, got n = " + std::to_string(n));
  const FamilyId domain = FamilyId::k_pq(n - 2, p, q);
  if (a.empty() || !in_family(a, domain))
    domain_violation("thm2_forward", a,
                     "is not in " + domain.to_string() + " \\ {{}}");
  return with(shift(without(a, {a.max()}), 1), {n - p, n});
}

FinSet thm2_inverse(const FinSet& a, std::uint32_t n, std::uint32_t p,
                    std::uint32_t q) {
  check_pq(p, q);
  if (n < 2 || !in_family(a, FamilyId::k_pq(n, p, q)) ||
      in_family(a, FamilyId::k_pq(n - 1, p, q)) || a.size() < q + 1)
    domain_violation("thm2_inverse", a,
                     "is not in S for (n, p, q) = (" + std::to_string(n) + ", " +
                         std::to_string(p) + ", " + std::to_string(q) + ")");
  const FinSet b = shift(without(a, {n - p, n}), -1);
  const Element l = b.max();
  return with(b, {l + p});
}

Partition partition_difference(std::uint32_t n, std::uint32_t p, std::uint32_t q,
                               const ScanOptions& options) {
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "partition_difference needs n >= 2");
  Partition out{n, p, q, {}, {}};
  auto scan = scan_difference(FamilyId::k_pq(n, p, q), FamilyId::k_pq(n - 1, p, q),
                              EnumerationOrder::BitmaskAscending, options);
  while (auto a = scan.next()) {
    if (a->size() >= q + 1)
      out.s_members.push_back(std::move(*a));
    else
      out.t_members.push_back(std::move(*a));
  }
  return out;
}

std::vector<FinSet> construct_T(std::uint32_t n, std::uint32_t p, std::uint32_t q) {
  check_pq(p, q);
  std::vector<FinSet> out;
  if (n <= kpq_base_bound(p, q)) return out;
  // D ranges over k-subsets of {q, ..., n-p-1}, stepped in colex order so the
  // output comes out bitmask-ascending (the fixed tail {n-p, n} dominates).
  const std::uint32_t k = q - 2;
  const std::uint32_t lo = q;
  const std::uint32_t hi = n - p - 1;  // n - p >= 2q - 2 >= q here
  const std::uint32_t width = hi >= lo ? hi - lo + 1 : 0;
  if (k > width) return out;
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Element> elems;
    elems.reserve(k + 2);
    for (auto i : idx) elems.push_back(lo + i);
    elems.push_back(n - p);
    elems.push_back(n);
    out.emplace_back(std::move(elems));
    std::uint32_t j = 0;
    while (j < k && idx[j] + 1 == (j + 1 < k ? idx[j + 1] : width)) ++j;
    if (j == k) break;
    ++idx[j];
    for (std::uint32_t i = 0; i < j; ++i) idx[i] = i;
  }
  return out;
}

}  // namespace schreier
