#include "schreier/schreier.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "schreier/bijections.hpp"
#include "schreier/enumeration.hpp"
#include "schreier/output.hpp"
#include "schreier/sequences.hpp"
#include "schreier/verification.hpp"

using namespace schreier;

struct schreier_set {
  FinSet value;
};

struct schreier_set_list {
  std::vector<schreier_set> items;
};

struct schreier_scan {
  SubsetScan scan;
};

struct schreier_partition {
  schreier_set_list s;
  schreier_set_list t;
};

struct schreier_table {
  SequenceTable value;
};

struct schreier_report {
  VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

schreier_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SCHREIER_INVALID_ARGUMENT;
    case ErrorCode::Undefined: return SCHREIER_UNDEFINED;
    case ErrorCode::OutOfRange: return SCHREIER_OUT_OF_RANGE;
    case ErrorCode::DomainViolation: return SCHREIER_DOMAIN_VIOLATION;
    case ErrorCode::LimitExceeded: return SCHREIER_LIMIT_EXCEEDED;
    case ErrorCode::ParameterMismatch: return SCHREIER_PARAMETER_MISMATCH;
    case ErrorCode::IoFailure: return SCHREIER_IO_FAILURE;
    case ErrorCode::CorruptCache: return SCHREIER_CORRUPT_CACHE;
  }
  return SCHREIER_INTERNAL;
}

schreier_status fail(schreier_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
schreier_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return SCHREIER_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SCHREIER_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(SCHREIER_INTERNAL, e.what());
  } catch (...) {
    return fail(SCHREIER_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

FamilyKind to_kind(schreier_family_kind kind) {
  switch (kind) {
    case SCHREIER_FAMILY_BIRD_A: return FamilyKind::BirdA;
    case SCHREIER_FAMILY_K: return FamilyKind::K;
    case SCHREIER_FAMILY_K_PRIME: return FamilyKind::KPrime;
    case SCHREIER_FAMILY_K_PQ: return FamilyKind::KPQ;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family kind");
}

schreier_family_kind from_kind(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::BirdA: return SCHREIER_FAMILY_BIRD_A;
    case FamilyKind::K: return SCHREIER_FAMILY_K;
    case FamilyKind::KPrime: return SCHREIER_FAMILY_K_PRIME;
    case FamilyKind::KPQ: return SCHREIER_FAMILY_K_PQ;
  }
  return SCHREIER_FAMILY_K;
}

FamilyId to_family(const schreier_family* f) {
  require(f != nullptr, "family is null");
  return FamilyId::make(to_kind(f->kind), f->n, f->p, f->q);
}

OutputFormat to_format(schreier_format format) {
  switch (format) {
    case SCHREIER_FORMAT_PLAIN: return OutputFormat::Plain;
    case SCHREIER_FORMAT_CSV: return OutputFormat::Csv;
    case SCHREIER_FORMAT_JSONL: return OutputFormat::Jsonl;
    case SCHREIER_FORMAT_BFILE: return OutputFormat::Bfile;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown output format");
}

EnumerationOrder to_order(schreier_order order) {
  switch (order) {
    case SCHREIER_ORDER_BITMASK_ASCENDING: return EnumerationOrder::BitmaskAscending;
    case SCHREIER_ORDER_COLEX: return EnumerationOrder::Colex;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown enumeration order");
}

Fault to_fault(schreier_fault fault) {
  switch (fault) {
    case SCHREIER_FAULT_NONE: return Fault::None;
    case SCHREIER_FAULT_STRICT_SCHREIER: return Fault::StrictSchreier;
    case SCHREIER_FAULT_DROP_SINGLETONS: return Fault::DropSingletons;
    case SCHREIER_FAULT_GAP_OFF_BY_ONE: return Fault::GapOffByOne;
    case SCHREIER_FAULT_IGNORE_LOWER_BOUND: return Fault::IgnoreLowerBound;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown fault");
}

ScanOptions to_options(const schreier_scan_options* options) {
  ScanOptions out;
  if (!options) return out;
  if (options->cap != 0) out.cap = options->cap;
  if (options->predicate) {
    out.predicate = [fn = options->predicate, user = options->user_data](
                        std::uint64_t mask, const FamilyId& f) {
      const schreier_family c{from_kind(f.kind()), f.n(), f.p(), f.q()};
      return fn(mask, &c, user) != 0;
    };
  } else {
    out.predicate = fault_predicate(to_fault(options->fault));
  }
  return out;
}

const FinSet& value_of(const schreier_set* s) {
  require(s != nullptr, "set is null");
  return s->value;
}

schreier_set* new_set(FinSet value) { return new schreier_set{std::move(value)}; }

schreier_set_list to_list(std::vector<FinSet> sets) {
  schreier_set_list list;
  list.items.reserve(sets.size());
  for (auto& s : sets) list.items.push_back(schreier_set{std::move(s)});
  return list;
}

template <class Fn>
schreier_status string_out(char** out, Fn&& fn) noexcept {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = dup_string(fn());
  });
}

template <class Verify>
schreier_status report_out(schreier_report** out, Verify&& verify) noexcept {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new schreier_report{verify()};
  });
}

}  // namespace

extern "C" {

const char* schreier_status_name(schreier_status status) {
  switch (status) {
    case SCHREIER_OK: return "OK";
    case SCHREIER_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case SCHREIER_UNDEFINED: return "UNDEFINED";
    case SCHREIER_OUT_OF_RANGE: return "OUT_OF_RANGE";
    case SCHREIER_DOMAIN_VIOLATION: return "DOMAIN_VIOLATION";
    case SCHREIER_LIMIT_EXCEEDED: return "LIMIT_EXCEEDED";
    case SCHREIER_PARAMETER_MISMATCH: return "PARAMETER_MISMATCH";
    case SCHREIER_IO_FAILURE: return "IO_FAILURE";
    case SCHREIER_CORRUPT_CACHE: return "CORRUPT_CACHE";
    case SCHREIER_NO_MEMORY: return "NO_MEMORY";
    case SCHREIER_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* schreier_last_error(void) { return g_last_error.c_str(); }

void schreier_string_free(char* s) { std::free(s); }

uint32_t schreier_default_enumeration_cap(void) { return kDefaultEnumerationCap; }

schreier_status schreier_format_parse(const char* name, schreier_format* out) {
  return guarded([&] {
    require(name && out, "null argument");
    switch (parse_output_format(name)) {
      case OutputFormat::Plain: *out = SCHREIER_FORMAT_PLAIN; break;
      case OutputFormat::Csv: *out = SCHREIER_FORMAT_CSV; break;
      case OutputFormat::Jsonl: *out = SCHREIER_FORMAT_JSONL; break;
      case OutputFormat::Bfile: *out = SCHREIER_FORMAT_BFILE; break;
    }
  });
}

schreier_status schreier_family_kind_parse(const char* name, schreier_family_kind* out) {
  return guarded([&] {
    require(name && out, "null argument");
    const std::string s = name;
    if (s == "A") *out = SCHREIER_FAMILY_BIRD_A;
    else if (s == "K") *out = SCHREIER_FAMILY_K;
    else if (s == "Kprime") *out = SCHREIER_FAMILY_K_PRIME;
    else if (s == "Kpq") *out = SCHREIER_FAMILY_K_PQ;
    else throw Error(ErrorCode::InvalidArgument, "unknown family '" + s + "'");
  });
}

schreier_status schreier_fault_parse(const char* name, schreier_fault* out) {
  return guarded([&] {
    require(name && out, "null argument");
    switch (parse_fault(name)) {
      case Fault::None: *out = SCHREIER_FAULT_NONE; break;
      case Fault::StrictSchreier: *out = SCHREIER_FAULT_STRICT_SCHREIER; break;
      case Fault::DropSingletons: *out = SCHREIER_FAULT_DROP_SINGLETONS; break;
      case Fault::GapOffByOne: *out = SCHREIER_FAULT_GAP_OFF_BY_ONE; break;
      case Fault::IgnoreLowerBound: *out = SCHREIER_FAULT_IGNORE_LOWER_BOUND; break;
    }
  });
}

schreier_status schreier_set_create(const uint32_t* elements, size_t count,
                                    schreier_set** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(elements != nullptr || count == 0, "elements is null");
    *out = nullptr;
    *out = new_set(FinSet(std::vector<Element>(elements, elements + count)));
  });
}

schreier_status schreier_set_from_mask(uint64_t mask, schreier_set** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new_set(FinSet::from_mask(mask));
  });
}

void schreier_set_destroy(schreier_set* set) { delete set; }

size_t schreier_set_size(const schreier_set* set) { return set ? set->value.size() : 0; }

size_t schreier_set_elements(const schreier_set* set, uint32_t* buffer, size_t capacity) {
  if (!set || !buffer) return 0;
  const auto elems = set->value.elements();
  const size_t n = std::min(capacity, elems.size());
  std::copy_n(elems.begin(), n, buffer);
  return n;
}

int schreier_set_equal(const schreier_set* a, const schreier_set* b) {
  return a && b && a->value == b->value;
}

schreier_status schreier_set_to_string(const schreier_set* set, char** out) {
  return string_out(out, [&] { return value_of(set).to_string(); });
}

schreier_status schreier_set_format(const schreier_set* set, schreier_format format,
                                    char** out) {
  return string_out(out, [&] { return format_set(value_of(set), to_format(format)); });
}

schreier_status schreier_set_stream_header(schreier_format format, char** out) {
  return string_out(out, [&] { return set_stream_header(to_format(format)); });
}

int schreier_is_schreier(const schreier_set* set) {
  return set ? is_schreier(set->value) : 0;
}

schreier_status schreier_max2(const schreier_set* set, uint32_t* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = max2(value_of(set));
  });
}

schreier_status schreier_shift(const schreier_set* set, int64_t r, schreier_set** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new_set(shift(value_of(set), r));
  });
}

schreier_status schreier_in_family(const schreier_set* set, const schreier_family* family,
                                   int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = in_family(value_of(set), to_family(family)) ? 1 : 0;
  });
}

size_t schreier_set_list_size(const schreier_set_list* list) {
  return list ? list->items.size() : 0;
}

const schreier_set* schreier_set_list_at(const schreier_set_list* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return &list->items[index];
}

void schreier_set_list_destroy(schreier_set_list* list) { delete list; }

schreier_status schreier_scan_open(const schreier_family* family, schreier_order order,
                                   const schreier_scan_options* options,
                                   schreier_scan** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new schreier_scan{scan_family(to_family(family), to_order(order),
                                         to_options(options))};
  });
}

schreier_status schreier_scan_open_difference(const schreier_family* large,
                                              const schreier_family* small,
                                              schreier_order order,
                                              const schreier_scan_options* options,
                                              schreier_scan** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new schreier_scan{scan_difference(to_family(large), to_family(small),
                                             to_order(order), to_options(options))};
  });
}

schreier_status schreier_scan_next(schreier_scan* scan, schreier_set** out) {
  return guarded([&] {
    require(scan && out, "null argument");
    *out = nullptr;
    if (auto s = scan->scan.next()) *out = new_set(std::move(*s));
  });
}

void schreier_scan_destroy(schreier_scan* scan) { delete scan; }

schreier_status schreier_count_bruteforce(const schreier_family* family,
                                          const schreier_scan_options* options, char** out) {
  return string_out(out, [&] {
    return count_family_bruteforce(to_family(family), to_options(options)).str();
  });
}

schreier_status schreier_fibonacci(uint64_t n, char** out) {
  return string_out(out, [&] { return fibonacci(n).str(); });
}

schreier_status schreier_binomial(int64_t m, int64_t k, char** out) {
  return string_out(out, [&] { return binomial(m, k).str(); });
}

schreier_status schreier_count_recurrence(const schreier_family* family, char** out) {
  return string_out(out, [&] { return count_recurrence(to_family(family)).str(); });
}

schreier_status schreier_table_build(const schreier_family* family, uint64_t max_n,
                                     schreier_table** out) {
  return guarded([&] {
    require(family && out, "null argument");
    *out = nullptr;
    *out = new schreier_table{build_table(to_kind(family->kind), family->p, family->q, max_n)};
  });
}

schreier_status schreier_table_load(const schreier_family* family, const char* path,
                                    schreier_table** out) {
  return guarded([&] {
    require(family && path && out, "null argument");
    *out = nullptr;
    *out = new schreier_table{cache_load(to_kind(family->kind), family->p, family->q, path)};
  });
}

schreier_status schreier_table_store(const schreier_table* table, const char* path) {
  return guarded([&] {
    require(table && path, "null argument");
    cache_store(table->value, path);
  });
}

uint64_t schreier_table_max_n(const schreier_table* table) {
  return table ? table->value.max_n() : 0;
}

schreier_status schreier_table_value(const schreier_table* table, uint64_t n, char** out) {
  return string_out(out, [&] {
    require(table != nullptr, "table is null");
    return table->value.at(n).str();
  });
}

schreier_status schreier_table_format(const schreier_table* table, schreier_format format,
                                      char** out) {
  return string_out(out, [&] {
    require(table != nullptr, "table is null");
    return format_table(table->value, to_format(format));
  });
}

void schreier_table_destroy(schreier_table* table) { delete table; }

schreier_status schreier_thm1_forward(const schreier_set* a, uint32_t n, schreier_set** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new_set(thm1_forward(value_of(a), n));
  });
}

schreier_status schreier_thm1_inverse(const schreier_set* b, uint32_t n, schreier_set** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new_set(thm1_inverse(value_of(b), n));
  });
}

schreier_status schreier_thm2_forward(const schreier_set* a, uint32_t n, uint32_t p,
                                      uint32_t q, schreier_set** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new_set(thm2_forward(value_of(a), n, p, q));
  });
}

schreier_status schreier_thm2_inverse(const schreier_set* a, uint32_t n, uint32_t p,
                                      uint32_t q, schreier_set** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new_set(thm2_inverse(value_of(a), n, p, q));
  });
}

schreier_status schreier_partition_compute(uint32_t n, uint32_t p, uint32_t q,
                                           const schreier_scan_options* options,
                                           schreier_partition** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    Partition part = partition_difference(n, p, q, to_options(options));
    *out = new schreier_partition{to_list(std::move(part.s_members)),
                                  to_list(std::move(part.t_members))};
  });
}

const schreier_set_list* schreier_partition_s(const schreier_partition* part) {
  return part ? &part->s : nullptr;
}

const schreier_set_list* schreier_partition_t(const schreier_partition* part) {
  return part ? &part->t : nullptr;
}

void schreier_partition_destroy(schreier_partition* part) { delete part; }

schreier_status schreier_construct_t(uint32_t n, uint32_t p, uint32_t q,
                                     schreier_set_list** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    *out = new schreier_set_list{to_list(construct_T(n, p, q))};
  });
}

schreier_status schreier_verify_theorem1(uint32_t max_n, const schreier_scan_options* options,
                                         schreier_report** out) {
  return report_out(out, [&] { return verify_theorem1(max_n, to_options(options)); });
}

schreier_status schreier_verify_corollary(uint32_t max_n, const schreier_scan_options* options,
                                          schreier_report** out) {
  return report_out(out, [&] { return verify_corollary(max_n, to_options(options)); });
}

schreier_status schreier_verify_theorem2(uint32_t p, uint32_t q, uint32_t max_n,
                                         const schreier_scan_options* options,
                                         schreier_report** out) {
  return report_out(out, [&] { return verify_theorem2(p, q, max_n, to_options(options)); });
}

schreier_status schreier_verify_bijections(uint32_t p, uint32_t q, uint32_t max_n,
                                           const schreier_scan_options* options,
                                           schreier_report** out) {
  return report_out(out,
                    [&] { return verify_bijections(p, q, max_n, to_options(options)); });
}

int schreier_report_passed(const schreier_report* report) {
  return report && report->value.passed();
}

uint64_t schreier_report_cases_run(const schreier_report* report) {
  return report ? report->value.cases_run : 0;
}

const char* schreier_report_check_name(const schreier_report* report) {
  return report ? report->value.check_name.c_str() : "";
}

uint32_t schreier_report_counterexample_n(const schreier_report* report) {
  if (!report || !report->value.first_counterexample) return 0;
  return report->value.first_counterexample->n;
}

schreier_status schreier_report_witness(const schreier_report* report, schreier_set** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = nullptr;
    const auto& cx = report->value.first_counterexample;
    if (cx && cx->witness) *out = new_set(*cx->witness);
  });
}

schreier_status schreier_report_format(const schreier_report* report, schreier_format format,
                                       char** out) {
  return string_out(out, [&] {
    require(report != nullptr, "report is null");
    return format_report(report->value, to_format(format));
  });
}

void schreier_report_destroy(schreier_report* report) { delete report; }

}  // extern "C"
