#include "schreier/finset.hpp"

#include <algorithm>
#include <limits>

#include "schreier/detail/predicates.hpp"

namespace schreier {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Undefined: return "UNDEFINED";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::DomainViolation: return "DOMAIN_VIOLATION";
    case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::ParameterMismatch: return "PARAMETER_MISMATCH";
    case ErrorCode::IoFailure: return "IO_FAILURE";
    case ErrorCode::CorruptCache: return "CORRUPT_CACHE";
  }
  return "UNKNOWN";
}

FinSet::FinSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!elements_.empty() && elements_.front() == 0)
    throw Error(ErrorCode::OutOfRange, "set elements must be positive integers");
  refresh_mask();
}

FinSet::FinSet(std::initializer_list<Element> elements)
    : FinSet(std::vector<Element>(elements)) {}

FinSet FinSet::from_mask(std::uint64_t mask) {
  if (mask & 1U)
    throw Error(ErrorCode::OutOfRange, "bit 0 does not name a positive integer");
  FinSet s;
  s.elements_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::uint64_t m = mask; m != 0; m &= m - 1)
    s.elements_.push_back(static_cast<Element>(std::countr_zero(m)));
  s.mask_ = mask;
  s.has_mask_ = true;
  return s;
}

void FinSet::refresh_mask() noexcept {
  mask_ = 0;
  has_mask_ = elements_.empty() || elements_.back() <= kMaskMaxElement;
  if (!has_mask_) return;
  for (Element e : elements_) mask_ |= std::uint64_t{1} << e;
}

Element FinSet::min() const {
  if (elements_.empty()) throw Error(ErrorCode::Undefined, "min of the empty set");
  return elements_.front();
}

Element FinSet::max() const {
  if (elements_.empty()) throw Error(ErrorCode::Undefined, "max of the empty set");
  return elements_.back();
}

bool FinSet::contains(Element x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string FinSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  out += '}';
  return out;
}

bool bitmask_less(const FinSet& a, const FinSet& b) noexcept {
  const auto ea = a.elements();
  const auto eb = b.elements();
  auto ia = ea.rbegin();
  auto ib = eb.rbegin();
  for (; ia != ea.rend() && ib != eb.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == ea.rend() && ib != eb.rend();
}

const char* to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::BirdA: return "A";
    case FamilyKind::K: return "K";
    case FamilyKind::KPrime: return "Kprime";
    case FamilyKind::KPQ: return "Kpq";
  }
  return "?";
}

FamilyId FamilyId::make(FamilyKind kind, std::uint32_t n, std::uint32_t p,
                        std::uint32_t q) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (kind == FamilyKind::KPQ) {
    if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be >= 1");
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
    return FamilyId(kind, n, p, q);
  }
  return FamilyId(kind, n, 0, 0);
}

FamilyId FamilyId::bird_a(std::uint32_t n) { return make(FamilyKind::BirdA, n); }
FamilyId FamilyId::k(std::uint32_t n) { return make(FamilyKind::K, n); }
FamilyId FamilyId::k_prime(std::uint32_t n) { return make(FamilyKind::KPrime, n); }
FamilyId FamilyId::k_pq(std::uint32_t n, std::uint32_t p, std::uint32_t q) {
  return make(FamilyKind::KPQ, n, p, q);
}

FamilyId FamilyId::with_n(std::uint32_t n) const { return make(kind_, n, p_, q_); }

std::string FamilyId::to_string() const {
  std::string out = schreier::to_string(kind_);
  out += '(' + std::to_string(n_);
  if (kind_ == FamilyKind::KPQ)
    out += ',' + std::to_string(p_) + ',' + std::to_string(q_);
  out += ')';
  return out;
}

bool is_schreier(const FinSet& a) noexcept {
  return a.empty() || a.elements().front() >= a.size();
}

Element max2(const FinSet& a) {
  if (a.size() < 2)
    throw Error(ErrorCode::Undefined,
                "max2 needs at least two elements, got " + a.to_string());
  return a.elements()[a.size() - 2];
}

FinSet shift(const FinSet& a, std::int64_t r) {
  std::vector<Element> out;
  out.reserve(a.size());
  for (Element e : a.elements()) {
    const std::int64_t v = static_cast<std::int64_t>(e) + r;
    if (v < 1 || v > std::numeric_limits<Element>::max())
      throw Error(ErrorCode::OutOfRange, "shifting " + a.to_string() + " by " +
                                             std::to_string(r) +
                                             " leaves the positive integers");
    out.push_back(static_cast<Element>(v));
  }
  return FinSet(std::move(out));
}

bool in_family(const FinSet& a, const FamilyId& f) noexcept {
  if (auto m = a.mask()) return bits::in_family(*m, f);
  return detail::in_family_sequence(a.elements(), f);
}

}  // namespace schreier
