#include "schreier/sequences.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

#include "schreier/bijections.hpp"

namespace schreier {

namespace {

void check_template(FamilyKind kind, std::uint32_t p, std::uint32_t q) {
  if (kind == FamilyKind::KPQ) (void)FamilyId::k_pq(1, p, q);
}

// One step of the Kpq recurrence for n > p + 2q - 3.
BigInt kpq_step(const BigInt& prev1, const BigInt& prev2, std::uint64_t n,
                std::uint32_t p, std::uint32_t q) {
  const auto m = static_cast<std::int64_t>(n) - p - q;
  return prev1 + prev2 + binomial(m, static_cast<std::int64_t>(q) - 2) - 1;
}

std::vector<BigInt> compute_values(FamilyKind kind, std::uint32_t p,
                                   std::uint32_t q, std::uint64_t from,
                                   std::vector<BigInt> values,
                                   std::uint64_t max_n) {
  values.reserve(max_n);
  for (std::uint64_t n = from; n <= max_n; ++n) {
    BigInt v;
    switch (kind) {
      case FamilyKind::BirdA:
      case FamilyKind::K:
        v = n <= 2 ? BigInt(1) : values[n - 2] + values[n - 3];
        break;
      case FamilyKind::KPrime:
        // F(n) + n obeys v(n) = v(n-1) + v(n-2) - n + 3.
        v = n == 1 ? BigInt(2)
            : n == 2 ? BigInt(3)
                     : values[n - 2] + values[n - 3] + 3 - BigInt(n);
        break;
      case FamilyKind::KPQ:
        v = n <= kpq_base_bound(p, q) ? BigInt(1)
                                      : kpq_step(values[n - 2], values[n - 3], n, p, q);
        break;
    }
    values.push_back(std::move(v));
  }
  return values;
}

std::string header_line(FamilyKind kind, std::uint32_t p, std::uint32_t q) {
  std::string line = "#family ";
  line += to_string(kind);
  if (kind == FamilyKind::KPQ)
    line += ' ' + std::to_string(p) + ' ' + std::to_string(q);
  else
    line += " - -";
  return line;
}

[[noreturn]] void corrupt(const std::filesystem::path& path, const std::string& why) {
  throw Error(ErrorCode::CorruptCache, path.string() + ": " + why);
}

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

BigInt fibonacci(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "fibonacci needs n >= 1");
  // Fast doubling from the top bit down: (a, b) = (F(k), F(k+1)).
  BigInt a = 0;
  BigInt b = 1;
  for (int bit = 63 - std::countl_zero(n); bit >= 0; --bit) {
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return a;
}

BigInt binomial(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  BigInt c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    c *= m - i;
    c /= i + 1;  // exact: c is C(m, i+1) after this line
  }
  return c;
}

BigInt count_A(std::uint64_t n) { return fibonacci(n); }

BigInt count_K(std::uint64_t n) { return fibonacci(n); }

BigInt count_K_prime(std::uint64_t n) { return fibonacci(n) + n; }

BigInt count_K_pq(std::uint64_t n, std::uint32_t p, std::uint32_t q) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "count_K_pq needs n >= 1");
  check_template(FamilyKind::KPQ, p, q);
  const std::uint64_t bound = kpq_base_bound(p, q);
  if (n <= bound) return 1;
  BigInt prev2 = 1;  // |Kpq(bound - 1)|, in the base range since bound >= 2
  BigInt prev1 = 1;  // |Kpq(bound)|
  for (std::uint64_t m = bound + 1; m <= n; ++m) {
    BigInt next = kpq_step(prev1, prev2, m, p, q);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

BigInt count_recurrence(const FamilyId& f) {
  switch (f.kind()) {
    case FamilyKind::BirdA: return count_A(f.n());
    case FamilyKind::K: return count_K(f.n());
    case FamilyKind::KPrime: return count_K_prime(f.n());
    case FamilyKind::KPQ: return count_K_pq(f.n(), f.p(), f.q());
  }
  return 0;
}

SequenceTable::SequenceTable(FamilyKind kind, std::uint32_t p, std::uint32_t q,
                             std::vector<BigInt> values)
    : kind_(kind),
      p_(kind == FamilyKind::KPQ ? p : 0),
      q_(kind == FamilyKind::KPQ ? q : 0),
      values_(std::move(values)) {
  check_template(kind_, p_, q_);
}

const BigInt& SequenceTable::at(std::uint64_t n) const {
  if (n < 1 || n > values_.size())
    throw Error(ErrorCode::OutOfRange, "table has no entry for n = " + std::to_string(n));
  return values_[n - 1];
}

SequenceTable build_table(FamilyKind kind, std::uint32_t p, std::uint32_t q,
                          std::uint64_t max_n) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "max_n must be >= 1");
  if (kind != FamilyKind::KPQ) p = q = 0;
  check_template(kind, p, q);
  return SequenceTable(kind, p, q, compute_values(kind, p, q, 1, {}, max_n));
}

const std::vector<BigInt>& CardinalityMemo::extend(const Key& key,
                                                   std::uint64_t max_n) {
  auto& values = tables_[key];
  if (values.size() < max_n) {
    const auto [kind, p, q] = key;
    const std::uint64_t from = values.size() + 1;
    values = compute_values(kind, p, q, from, std::move(values), max_n);
  }
  return values;
}

BigInt CardinalityMemo::count(const FamilyId& f) {
  std::lock_guard lock(mutex_);
  return extend({f.kind(), f.p(), f.q()}, f.n())[f.n() - 1];
}

SequenceTable CardinalityMemo::table(FamilyKind kind, std::uint32_t p,
                                     std::uint32_t q, std::uint64_t max_n) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "max_n must be >= 1");
  if (kind != FamilyKind::KPQ) p = q = 0;
  check_template(kind, p, q);
  std::lock_guard lock(mutex_);
  const auto& values = extend({kind, p, q}, max_n);
  return SequenceTable(kind, p, q,
                       std::vector<BigInt>(values.begin(), values.begin() +
                                                               static_cast<std::ptrdiff_t>(max_n)));
}

void cache_store(const SequenceTable& table, const std::filesystem::path& path) {
  std::ostringstream body;
  body << header_line(table.kind(), table.p(), table.q()) << '\n';
  for (std::uint64_t n = 1; n <= table.max_n(); ++n)
    body << n << ' ' << table.at(n) << '\n';

  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + tmp.string());
    out << body.str();
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoFailure, "cannot move cache into " + path.string());
  }
}

SequenceTable cache_load(FamilyKind kind, std::uint32_t p, std::uint32_t q,
                         const std::filesystem::path& path) {
  if (kind != FamilyKind::KPQ) p = q = 0;
  check_template(kind, p, q);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());

  std::string line;
  if (!std::getline(in, line)) corrupt(path, "missing header");
  if (line != header_line(kind, p, q))
    corrupt(path, "header '" + line + "' does not match '" +
                      header_line(kind, p, q) + "'");

  std::vector<BigInt> values;
  while (std::getline(in, line)) {
    const auto space = line.find(' ');
    if (space == std::string::npos) corrupt(path, "malformed line '" + line + "'");
    const std::string index = line.substr(0, space);
    const std::string value = line.substr(space + 1);
    if (!is_decimal(index) || !is_decimal(value))
      corrupt(path, "malformed line '" + line + "'");
    if (index != std::to_string(values.size() + 1))
      corrupt(path, "entries must be contiguous from n = 1, found n = " + index);
    values.emplace_back(value);
  }
  if (in.bad()) throw Error(ErrorCode::IoFailure, "read failed for " + path.string());
  if (values.empty()) corrupt(path, "no entries");

  // Every entry must agree with the base case and the recurrence applied to
  // the entries before it.
  std::vector<BigInt> prefix;
  for (std::uint64_t n = 1; n <= values.size(); ++n) {
    prefix = compute_values(kind, p, q, n, std::move(prefix), n);
    if (prefix.back() != values[n - 1])
      corrupt(path, "entry n = " + std::to_string(n) + " fails the recurrence check");
  }
  return SequenceTable(kind, p, q, std::move(values));
}

}  // namespace schreier
