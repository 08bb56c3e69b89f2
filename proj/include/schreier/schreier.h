/*
 * C interface to the Schreier-family library.
 *
 * All objects are opaque handles created by a schreier_*_create / _open /
 * _compute / _build / _load call and released with the matching _destroy.
 * Every fallible call returns a schreier_status; on failure the calling
 * thread's schreier_last_error() holds a human-readable message until the
 * next failing call on that thread.
 *
 * Strings returned through `char** out` are heap allocated and must be
 * released with schreier_string_free. Big integers cross the boundary as
 * base-10 strings.
 *
 * Set masks use bit i for element i; bit 0 is never set.
 */
#ifndef SCHREIER_SCHREIER_H
#define SCHREIER_SCHREIER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SCHREIER_BUILDING_LIBRARY)
#    define SCHREIER_API __declspec(dllexport)
#  else
#    define SCHREIER_API __declspec(dllimport)
#  endif
#else
#  define SCHREIER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum schreier_status {
  SCHREIER_OK = 0,
  SCHREIER_INVALID_ARGUMENT = 1,
  SCHREIER_UNDEFINED = 2,
  SCHREIER_OUT_OF_RANGE = 3,
  SCHREIER_DOMAIN_VIOLATION = 4,
  SCHREIER_LIMIT_EXCEEDED = 5,
  SCHREIER_PARAMETER_MISMATCH = 6,
  SCHREIER_IO_FAILURE = 7,
  SCHREIER_CORRUPT_CACHE = 8,
  SCHREIER_NO_MEMORY = 9,
  SCHREIER_INTERNAL = 10
} schreier_status;

typedef enum schreier_family_kind {
  SCHREIER_FAMILY_BIRD_A = 0, /* n in A, min A >= |A| */
  SCHREIER_FAMILY_K = 1,      /* {} or (max A - 1 in A, min A >= |A|) */
  SCHREIER_FAMILY_K_PRIME = 2,/* |A| <= 1 or as K */
  SCHREIER_FAMILY_K_PQ = 3    /* {} or (max A - max2 A = p, min A >= |A| >= q) */
} schreier_family_kind;

/* p and q are read only for SCHREIER_FAMILY_K_PQ. */
typedef struct schreier_family {
  schreier_family_kind kind;
  uint32_t n;
  uint32_t p;
  uint32_t q;
} schreier_family;

typedef enum schreier_order {
  SCHREIER_ORDER_BITMASK_ASCENDING = 0,
  SCHREIER_ORDER_COLEX = 1 /* by cardinality, then colex */
} schreier_order;

typedef enum schreier_format {
  SCHREIER_FORMAT_PLAIN = 0,
  SCHREIER_FORMAT_CSV = 1,
  SCHREIER_FORMAT_JSONL = 2,
  SCHREIER_FORMAT_BFILE = 3
} schreier_format;

typedef enum schreier_fault {
  SCHREIER_FAULT_NONE = 0,
  SCHREIER_FAULT_STRICT_SCHREIER = 1,
  SCHREIER_FAULT_DROP_SINGLETONS = 2,
  SCHREIER_FAULT_GAP_OFF_BY_ONE = 3,
  SCHREIER_FAULT_IGNORE_LOWER_BOUND = 4
} schreier_fault;

/* Non-zero when the subset `mask` belongs to `family`. */
typedef int (*schreier_predicate_fn)(uint64_t mask, const schreier_family* family,
                                     void* user_data);

/* Enumeration settings shared by scans, counts, partitions and verifiers.
 * cap == 0 means the default cap (30). A non-null predicate replaces the
 * built-in membership test and takes precedence over fault. */
typedef struct schreier_scan_options {
  uint32_t cap;
  schreier_fault fault;
  schreier_predicate_fn predicate;
  void* user_data;
} schreier_scan_options;

typedef struct schreier_set schreier_set;
typedef struct schreier_set_list schreier_set_list;
typedef struct schreier_scan schreier_scan;
typedef struct schreier_partition schreier_partition;
typedef struct schreier_table schreier_table;
typedef struct schreier_report schreier_report;

/* ---- errors, strings ---------------------------------------------------- */

SCHREIER_API const char* schreier_status_name(schreier_status status);
SCHREIER_API const char* schreier_last_error(void);
SCHREIER_API void schreier_string_free(char* s);
SCHREIER_API uint32_t schreier_default_enumeration_cap(void);

/* Parses "plain", "csv", "jsonl", "bfile". */
SCHREIER_API schreier_status schreier_format_parse(const char* name, schreier_format* out);
/* Parses "A", "K", "Kprime", "Kpq". */
SCHREIER_API schreier_status schreier_family_kind_parse(const char* name,
                                                        schreier_family_kind* out);
/* Parses "none", "strict-schreier", "drop-singletons", "gap-off-by-one",
 * "ignore-lower-bound". */
SCHREIER_API schreier_status schreier_fault_parse(const char* name, schreier_fault* out);

/* ---- sets ---------------------------------------------------------------- */

/* Elements may be unsorted and repeated; zero is rejected (OUT_OF_RANGE). */
SCHREIER_API schreier_status schreier_set_create(const uint32_t* elements, size_t count,
                                                 schreier_set** out);
SCHREIER_API schreier_status schreier_set_from_mask(uint64_t mask, schreier_set** out);
SCHREIER_API void schreier_set_destroy(schreier_set* set);

SCHREIER_API size_t schreier_set_size(const schreier_set* set);
/* Copies min(size, capacity) elements in ascending order. */
SCHREIER_API size_t schreier_set_elements(const schreier_set* set, uint32_t* buffer,
                                          size_t capacity);
SCHREIER_API int schreier_set_equal(const schreier_set* a, const schreier_set* b);
/* "{a1,a2,...}". */
SCHREIER_API schreier_status schreier_set_to_string(const schreier_set* set, char** out);
/* One line in the given format (bfile is rejected). */
SCHREIER_API schreier_status schreier_set_format(const schreier_set* set,
                                                 schreier_format format, char** out);
/* Header line for a stream of formatted sets; "" when the format has none. */
SCHREIER_API schreier_status schreier_set_stream_header(schreier_format format, char** out);

SCHREIER_API int schreier_is_schreier(const schreier_set* set);
SCHREIER_API schreier_status schreier_max2(const schreier_set* set, uint32_t* out);
SCHREIER_API schreier_status schreier_shift(const schreier_set* set, int64_t r,
                                            schreier_set** out);
SCHREIER_API schreier_status schreier_in_family(const schreier_set* set,
                                                const schreier_family* family, int* out);

/* ---- set lists (borrowed elements stay valid until the list is destroyed) */

SCHREIER_API size_t schreier_set_list_size(const schreier_set_list* list);
SCHREIER_API const schreier_set* schreier_set_list_at(const schreier_set_list* list,
                                                      size_t index);
SCHREIER_API void schreier_set_list_destroy(schreier_set_list* list);

/* ---- enumeration ----------------------------------------------------------- */

SCHREIER_API schreier_status schreier_scan_open(const schreier_family* family,
                                                schreier_order order,
                                                const schreier_scan_options* options,
                                                schreier_scan** out);
SCHREIER_API schreier_status schreier_scan_open_difference(
    const schreier_family* large, const schreier_family* small, schreier_order order,
    const schreier_scan_options* options, schreier_scan** out);
/* Sets *out to the next member (caller owns it) or to NULL when exhausted. */
SCHREIER_API schreier_status schreier_scan_next(schreier_scan* scan, schreier_set** out);
SCHREIER_API void schreier_scan_destroy(schreier_scan* scan);

SCHREIER_API schreier_status schreier_count_bruteforce(const schreier_family* family,
                                                       const schreier_scan_options* options,
                                                       char** out);

/* ---- sequences -------------------------------------------------------------- */

SCHREIER_API schreier_status schreier_fibonacci(uint64_t n, char** out);
SCHREIER_API schreier_status schreier_binomial(int64_t m, int64_t k, char** out);
SCHREIER_API schreier_status schreier_count_recurrence(const schreier_family* family,
                                                       char** out);

/* family->n is ignored; max_n sets the length. */
SCHREIER_API schreier_status schreier_table_build(const schreier_family* family,
                                                  uint64_t max_n, schreier_table** out);
SCHREIER_API schreier_status schreier_table_load(const schreier_family* family,
                                                 const char* path, schreier_table** out);
SCHREIER_API schreier_status schreier_table_store(const schreier_table* table,
                                                  const char* path);
SCHREIER_API uint64_t schreier_table_max_n(const schreier_table* table);
SCHREIER_API schreier_status schreier_table_value(const schreier_table* table, uint64_t n,
                                                  char** out);
SCHREIER_API schreier_status schreier_table_format(const schreier_table* table,
                                                   schreier_format format, char** out);
SCHREIER_API void schreier_table_destroy(schreier_table* table);

/* ---- bijections ------------------------------------------------------------- */

SCHREIER_API schreier_status schreier_thm1_forward(const schreier_set* a, uint32_t n,
                                                   schreier_set** out);
SCHREIER_API schreier_status schreier_thm1_inverse(const schreier_set* b, uint32_t n,
                                                   schreier_set** out);
SCHREIER_API schreier_status schreier_thm2_forward(const schreier_set* a, uint32_t n,
                                                   uint32_t p, uint32_t q,
                                                   schreier_set** out);
SCHREIER_API schreier_status schreier_thm2_inverse(const schreier_set* a, uint32_t n,
                                                   uint32_t p, uint32_t q,
                                                   schreier_set** out);

SCHREIER_API schreier_status schreier_partition_compute(uint32_t n, uint32_t p, uint32_t q,
                                                        const schreier_scan_options* options,
                                                        schreier_partition** out);
/* Borrowed; valid until the partition is destroyed. */
SCHREIER_API const schreier_set_list* schreier_partition_s(const schreier_partition* part);
SCHREIER_API const schreier_set_list* schreier_partition_t(const schreier_partition* part);
SCHREIER_API void schreier_partition_destroy(schreier_partition* part);

SCHREIER_API schreier_status schreier_construct_t(uint32_t n, uint32_t p, uint32_t q,
                                                  schreier_set_list** out);

/* ---- verification ----------------------------------------------------------- */

SCHREIER_API schreier_status schreier_verify_theorem1(uint32_t max_n,
                                                      const schreier_scan_options* options,
                                                      schreier_report** out);
SCHREIER_API schreier_status schreier_verify_corollary(uint32_t max_n,
                                                       const schreier_scan_options* options,
                                                       schreier_report** out);
SCHREIER_API schreier_status schreier_verify_theorem2(uint32_t p, uint32_t q, uint32_t max_n,
                                                      const schreier_scan_options* options,
                                                      schreier_report** out);
SCHREIER_API schreier_status schreier_verify_bijections(uint32_t p, uint32_t q,
                                                        uint32_t max_n,
                                                        const schreier_scan_options* options,
                                                        schreier_report** out);

SCHREIER_API int schreier_report_passed(const schreier_report* report);
SCHREIER_API uint64_t schreier_report_cases_run(const schreier_report* report);
SCHREIER_API const char* schreier_report_check_name(const schreier_report* report);
/* Counterexample instance n, or 0 when the report passed. */
SCHREIER_API uint32_t schreier_report_counterexample_n(const schreier_report* report);
/* Witness set (caller owns it) or NULL when there is none. */
SCHREIER_API schreier_status schreier_report_witness(const schreier_report* report,
                                                     schreier_set** out);
/* Plain or jsonl. */
SCHREIER_API schreier_status schreier_report_format(const schreier_report* report,
                                                    schreier_format format, char** out);
SCHREIER_API void schreier_report_destroy(schreier_report* report);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* SCHREIER_SCHREIER_H */
