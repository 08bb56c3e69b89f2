// Command-line front end. Talks to the library only through schreier.h.
//
// Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage or limit error.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "schreier/schreier.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr const char* kCapEnv = "SCHREIER_ENUM_CAP";

struct UsageError {
  std::string message;
};

struct CString {
  char* p = nullptr;
  ~CString() { schreier_string_free(p); }
};

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Destroy(p); }
};

void check(schreier_status status) {
  if (status != SCHREIER_OK) throw UsageError{schreier_last_error()};
}

void emit(const char* s) { std::fputs(s, stdout); }

struct FamilyArgs {
  std::string family;
  std::optional<uint32_t> p;
  std::optional<uint32_t> q;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family,
                  "A = Bird's family A_n, K = K_n, Kprime = K'_n, Kpq = K_{n,p,q}")
      ->required()
      ->check(CLI::IsMember({"A", "K", "Kprime", "Kpq"}));
  cmd->add_option("--p", args.p, "gap max A - max2 A (Kpq only, >= 1)");
  cmd->add_option("--q", args.q, "minimum size (Kpq only, >= 2)");
}

schreier_family make_family(const FamilyArgs& args, uint32_t n) {
  schreier_family f{};
  check(schreier_family_kind_parse(args.family.c_str(), &f.kind));
  f.n = n;
  if (f.kind == SCHREIER_FAMILY_K_PQ) {
    if (!args.p || !args.q) throw UsageError{"--family Kpq needs --p and --q"};
    f.p = *args.p;
    f.q = *args.q;
  } else if (args.p || args.q) {
    throw UsageError{"--p and --q only apply to --family Kpq"};
  }
  return f;
}

schreier_scan_options scan_options() {
  schreier_scan_options options{};
  options.cap = schreier_default_enumeration_cap();
  if (const char* env = std::getenv(kCapEnv)) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v == 0 || v > 63)
      throw UsageError{std::string(kCapEnv) + " must be an integer in [1, 63]"};
    options.cap = static_cast<uint32_t>(v);
  }
  return options;
}

schreier_format parse_format(const std::string& name) {
  schreier_format f{};
  check(schreier_format_parse(name.c_str(), &f));
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count, enumerate and verify Schreier-type set families"};
  app.require_subcommand(1);

  FamilyArgs family;
  uint32_t n = 0;
  uint32_t max_n = 0;
  std::string method = "recurrence";
  std::string format = "plain";
  std::string order = "bitmask";
  std::string check_name;
  std::string fault = "none";
  uint32_t p = 1;
  uint32_t q = 2;

  auto* count = app.add_subcommand("count", "Print the exact size of a family");
  add_family_flags(count, family);
  count->add_option("--n", n, "ground set [n]")->required();
  count->add_option("--method", method, "enum (brute force) or recurrence")
      ->check(CLI::IsMember({"enum", "recurrence"}));

  auto* enumerate = app.add_subcommand("enumerate", "List the members of a family");
  add_family_flags(enumerate, family);
  enumerate->add_option("--n", n, "ground set [n]")->required();
  enumerate->add_option("--format", format, "plain, csv or jsonl");
  enumerate->add_option("--order", order, "bitmask or colex")
      ->check(CLI::IsMember({"bitmask", "colex"}));

  auto* table = app.add_subcommand("table", "Print family sizes for n = 1..max-n");
  add_family_flags(table, family);
  table->add_option("--max-n", max_n, "last n")->required();
  table->add_option("--format", format, "plain, csv, jsonl or bfile");

  auto* verify = app.add_subcommand("verify", "Check a theorem against brute force");
  verify->add_option("check", check_name, "thm1, corollary, thm2 or bijections")
      ->required()
      ->check(CLI::IsMember({"thm1", "corollary", "thm2", "bijections"}));
  verify->add_option("--p", p, "gap parameter for thm2/bijections (default 1)");
  verify->add_option("--q", q, "size parameter for thm2/bijections (default 2)");
  verify->add_option("--max-n", max_n, "last n")->required();
  verify->add_option("--format", format, "plain or jsonl");
  // Harness self-test only: swaps in a deliberately broken predicate.
  verify->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const schreier_format fmt = parse_format(format);

    if (count->parsed()) {
      const schreier_family f = make_family(family, n);
      CString out;
      if (method == "enum") {
        const schreier_scan_options options = scan_options();
        check(schreier_count_bruteforce(&f, &options, &out.p));
      } else {
        check(schreier_count_recurrence(&f, &out.p));
      }
      std::printf("%s\n", out.p);
      return 0;
    }

    if (enumerate->parsed()) {
      const schreier_family f = make_family(family, n);
      const schreier_scan_options options = scan_options();
      Handle<schreier_scan, schreier_scan_destroy> scan;
      check(schreier_scan_open(
          &f, order == "colex" ? SCHREIER_ORDER_COLEX : SCHREIER_ORDER_BITMASK_ASCENDING,
          &options, &scan.p));
      CString header;
      check(schreier_set_stream_header(fmt, &header.p));
      // Probe the format before printing anything.
      {
        Handle<schreier_set, schreier_set_destroy> probe;
        check(schreier_set_create(nullptr, 0, &probe.p));
        CString line;
        check(schreier_set_format(probe.p, fmt, &line.p));
      }
      emit(header.p);
      while (true) {
        Handle<schreier_set, schreier_set_destroy> s;
        check(schreier_scan_next(scan.p, &s.p));
        if (!s.p) break;
        CString line;
        check(schreier_set_format(s.p, fmt, &line.p));
        emit(line.p);
      }
      return 0;
    }

    if (table->parsed()) {
      const schreier_family f = make_family(family, 1);
      Handle<schreier_table, schreier_table_destroy> t;
      check(schreier_table_build(&f, max_n, &t.p));
      CString out;
      check(schreier_table_format(t.p, fmt, &out.p));
      emit(out.p);
      return 0;
    }

    if (verify->parsed()) {
      schreier_scan_options options = scan_options();
      check(schreier_fault_parse(fault.c_str(), &options.fault));
      Handle<schreier_report, schreier_report_destroy> report;
      if (check_name == "thm1")
        check(schreier_verify_theorem1(max_n, &options, &report.p));
      else if (check_name == "corollary")
        check(schreier_verify_corollary(max_n, &options, &report.p));
      else if (check_name == "thm2")
        check(schreier_verify_theorem2(p, q, max_n, &options, &report.p));
      else
        check(schreier_verify_bijections(p, q, max_n, &options, &report.p));
      CString out;
      check(schreier_report_format(report.p, fmt, &out.p));
      emit(out.p);
      return schreier_report_passed(report.p) ? 0 : kExitFail;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitUsage;
  }
  return kExitUsage;
}
