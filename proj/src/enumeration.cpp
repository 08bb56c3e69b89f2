#include "schreier/enumeration.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace schreier {

namespace {

void check_cap(std::uint32_t n, const ScanOptions& options) {
  const std::uint32_t cap = std::min(options.cap, kMaxEnumerationCap);
  if (n > cap)
    throw Error(ErrorCode::LimitExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                    std::to_string(cap));
}

SubsetScan::Filter member_filter(const FamilyId& f, const ScanOptions& options) {
  if (options.predicate)
    return [f, pred = options.predicate](std::uint64_t m) { return pred(m, f); };
  return [f](std::uint64_t m) { return bits::in_family(m, f); };
}

template <class Pred>
std::uint64_t count_range(std::uint64_t begin, std::uint64_t end, Pred pred) {
  std::uint64_t total = 0;
  for (std::uint64_t i = begin; i < end; ++i) total += pred(i << 1) ? 1 : 0;
  return total;
}

template <class Pred>
std::uint64_t count_parallel(std::uint32_t n, unsigned threads, Pred pred) {
  const std::uint64_t total = std::uint64_t{1} << n;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  // Small scans are not worth a thread.
  if (n < 20 || threads == 1) return count_range(0, total, pred);
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::future<std::uint64_t>> parts;
  for (std::uint64_t begin = 0; begin < total; begin += chunk) {
    const std::uint64_t end = std::min(total, begin + chunk);
    parts.push_back(std::async(std::launch::async,
                               [=] { return count_range(begin, end, pred); }));
  }
  std::uint64_t sum = 0;
  for (auto& part : parts) sum += part.get();
  return sum;
}

}  // namespace

SubsetScan::SubsetScan(std::uint32_t n, EnumerationOrder order, Filter filter)
    : n_(n), order_(order), filter_(std::move(filter)) {
  if (n_ > kMaxEnumerationCap)
    throw Error(ErrorCode::LimitExceeded, "subset scans need n <= 63");
}

bool SubsetScan::advance(std::uint64_t& out) {
  if (done_) return false;
  const std::uint64_t limit = std::uint64_t{1} << n_;
  if (order_ == EnumerationOrder::BitmaskAscending) {
    if (index_ >= limit) {
      done_ = true;
      return false;
    }
    out = index_++ << 1;
    return true;
  }
  if (!started_) {
    started_ = true;
    cardinality_ = 0;
    word_ = 0;
    out = 0;
    return true;
  }
  if (word_ != 0) {
    // Gosper: next word with the same popcount.
    const std::uint64_t lowest = word_ & (~word_ + 1);
    const std::uint64_t ripple = word_ + lowest;
    word_ = (((ripple ^ word_) >> 2) / lowest) | ripple;
  }
  if (word_ == 0 || word_ >= limit) {
    if (++cardinality_ > n_) {
      done_ = true;
      return false;
    }
    word_ = (std::uint64_t{1} << cardinality_) - 1;
  }
  out = word_ << 1;
  return true;
}

std::optional<FinSet> SubsetScan::next() {
  std::uint64_t m = 0;
  while (advance(m)) {
    if (filter_(m)) return FinSet::from_mask(m);
  }
  return std::nullopt;
}

SubsetScan scan_family(const FamilyId& f, EnumerationOrder order,
                       const ScanOptions& options) {
  check_cap(f.n(), options);
  return SubsetScan(f.n(), order, member_filter(f, options));
}

SubsetScan scan_difference(const FamilyId& f_large, const FamilyId& f_small,
                           EnumerationOrder order, const ScanOptions& options) {
  if (!f_large.same_template(f_small) || f_small.n() + 1 != f_large.n())
    throw Error(ErrorCode::ParameterMismatch,
                "difference of " + f_large.to_string() + " and " +
                    f_small.to_string() +
                    " needs the same family with n differing by one");
  check_cap(f_large.n(), options);
  auto in_large = member_filter(f_large, options);
  auto in_small = member_filter(f_small, options);
  return SubsetScan(f_large.n(), order,
                    [in_large = std::move(in_large),
                     in_small = std::move(in_small)](std::uint64_t m) {
                      return in_large(m) && !in_small(m);
                    });
}

namespace {

std::vector<FinSet> drain(SubsetScan scan) {
  std::vector<FinSet> out;
  while (auto s = scan.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<FinSet> enumerate_family(const FamilyId& f, EnumerationOrder order,
                                     const ScanOptions& options) {
  return drain(scan_family(f, order, options));
}

std::vector<FinSet> enumerate_difference(const FamilyId& f_large,
                                         const FamilyId& f_small,
                                         EnumerationOrder order,
                                         const ScanOptions& options) {
  return drain(scan_difference(f_large, f_small, order, options));
}

BigInt count_family_bruteforce(const FamilyId& f, const ScanOptions& options) {
  check_cap(f.n(), options);
  const std::uint32_t n = f.n();
  std::uint64_t count = 0;
  if (options.predicate) {
    count = count_parallel(n, options.threads, [&](std::uint64_t m) {
      return options.predicate(m, f);
    });
  } else {
    // Subsets of [n] never leave the ground set, so the range check in
    // bits::in_family is skipped here.
    const auto p = f.p();
    const auto q = f.q();
    switch (f.kind()) {
      case FamilyKind::BirdA:
        count = count_parallel(n, options.threads, [n](std::uint64_t m) {
          return ((m >> n) & 1U) != 0 && bits::is_schreier(m);
        });
        break;
      case FamilyKind::K:
        count = count_parallel(n, options.threads,
                               [](std::uint64_t m) { return bits::in_k(m); });
        break;
      case FamilyKind::KPrime:
        count = count_parallel(n, options.threads, [](std::uint64_t m) {
          return bits::size(m) <= 1 || bits::in_k(m);
        });
        break;
      case FamilyKind::KPQ:
        count = count_parallel(n, options.threads, [n, p, q](std::uint64_t m) {
          return bits::in_family(m, FamilyKind::KPQ, n, p, q);
        });
        break;
    }
  }
  return BigInt(count);
}

}  // namespace schreier
