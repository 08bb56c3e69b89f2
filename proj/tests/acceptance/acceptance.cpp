// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 0 only
// when every criterion passes.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "schreier/bijections.hpp"
#include "schreier/enumeration.hpp"
#include "schreier/sequences.hpp"
#include "schreier/verification.hpp"

using namespace schreier;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Captured {
  int exit_code = -1;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string cmd = "'" SCHREIER_CLI_PATH "' " + args + " 2>/dev/null";
  Captured c;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string n_text(std::uint64_t n) { return "n=" + std::to_string(n); }

Outcome criterion1() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 20; ++n)
    o.require(count_family_bruteforce(FamilyId::k(n)) == fibonacci(n), "|K| " + n_text(n));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 20; ++n)
    o.require(count_family_bruteforce(FamilyId::k_prime(n)) == fibonacci(n) + n,
              "|K'| " + n_text(n));
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (std::uint32_t p = 1; p <= 3; ++p) {
    for (std::uint32_t q = 2; q <= 4; ++q) {
      const std::string tag = " p=" + std::to_string(p) + " q=" + std::to_string(q);
      std::vector<BigInt> brute(19);
      for (std::uint32_t n = 1; n <= 18; ++n) {
        brute[n] = count_family_bruteforce(FamilyId::k_pq(n, p, q));
        o.require(brute[n] == count_K_pq(n, p, q), "count " + n_text(n) + tag);
        if (n <= kpq_base_bound(p, q)) {
          o.require(enumerate_family(FamilyId::k_pq(n, p, q)) == std::vector<FinSet>{{}},
                    "base range " + n_text(n) + tag);
        } else {
          const auto part = partition_difference(n, p, q);
          o.require(BigInt(part.s_members.size()) == brute[n - 2] - 1, "|S| " + n_text(n) + tag);
          o.require(BigInt(part.t_members.size()) ==
                        binomial(static_cast<std::int64_t>(n) - p - q, q - 2),
                    "|T| " + n_text(n) + tag);
        }
      }
    }
  }
  return o;
}

template <class Fwd, class Inv>
void check_bijection(Outcome& o, const std::vector<FinSet>& domain,
                     const std::vector<FinSet>& codomain, Fwd fwd, Inv inv,
                     const std::string& tag) {
  std::vector<FinSet> images;
  images.reserve(domain.size());
  for (const auto& a : domain) {
    images.push_back(fwd(a));
    o.require(inv(images.back()) == a, "inverse(forward) " + tag + " " + a.to_string());
  }
  for (const auto& b : codomain)
    o.require(fwd(inv(b)) == b, "forward(inverse) " + tag + " " + b.to_string());
  std::sort(images.begin(), images.end(), BitmaskLess{});
  o.require(std::adjacent_find(images.begin(), images.end()) == images.end(),
            "collision " + tag);
  o.require(images == codomain, "image != codomain " + tag);
}

Outcome criterion4() {
  Outcome o;
  for (std::uint32_t n = 2; n <= 14; ++n) {
    check_bijection(
        o, enumerate_family(FamilyId::k(n - 1)),
        enumerate_difference(FamilyId::k(n + 1), FamilyId::k(n)),
        [n](const FinSet& a) { return thm1_forward(a, n); },
        [n](const FinSet& b) { return thm1_inverse(b, n); }, "thm1 " + n_text(n));
  }
  for (std::uint32_t p = 1; p <= 3; ++p) {
    for (std::uint32_t q = 2; q <= 4; ++q) {
      for (std::uint32_t n = kpq_base_bound(p, q) + 1; n <= 14; ++n) {
        const std::string tag = "thm2 " + n_text(n) + " p=" + std::to_string(p) +
                                " q=" + std::to_string(q);
        std::vector<FinSet> domain;
        for (auto& a : enumerate_family(FamilyId::k_pq(n - 2, p, q)))
          if (!a.empty()) domain.push_back(std::move(a));
        const auto s = partition_difference(n, p, q).s_members;
        auto fwd = [=](const FinSet& a) { return thm2_forward(a, n, p, q); };
        check_bijection(o, domain, s, fwd,
                        [=](const FinSet& b) { return thm2_inverse(b, n, p, q); }, tag);
        for (const auto& a : domain)
          for (Element e : fwd(a).elements())
            o.require(!(e > n - p && e < n), "gap interval " + tag);
      }
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 500; ++n)
    o.require(count_K_pq(n, 1, 2) == count_K(n), "Kpq(n,1,2) vs K " + n_text(n));
  // The range reaches past the 64-bit Fibonacci limit.
  o.require(count_K(500) > BigInt(std::numeric_limits<std::uint64_t>::max()),
            "no big-integer values reached");
  o.require(count_K(500) == oracle::fibonacci_iterative(500), "F(500) disagrees with oracle");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::string gold = read_file(SCHREIER_GOLDEN_DIR "/A000045_b.txt");
  o.require(!gold.empty(), "golden file missing");
  const auto r = run_cli("table --family K --max-n 20 --format bfile");
  o.require(r.exit_code == 0, "cli exit " + std::to_string(r.exit_code));
  o.require(r.out == gold, "cli b-file differs from golden");
  std::ostringstream lib;
  for (std::uint32_t n = 1; n <= 20; ++n) lib << n << ' ' << oracle::fibonacci_naive(n) << '\n';
  o.require(lib.str() == gold, "golden differs from oracle");
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const BigInt c = fibonacci(n + 1) * fibonacci(n - 1) - fibonacci(n) * fibonacci(n);
    o.require(c == (n % 2 == 0 ? 1 : -1), "Cassini " + n_text(n));
  }
  o.require(binomial(0, 0) == 1 && binomial(3, 1) == 3 && binomial(-1, 0) == 0 &&
                binomial(4, 5) == 0 && binomial(4, -1) == 0,
            "binomial conventions");
  const auto pascal = oracle::pascal(60);
  for (std::int64_t m = 0; m < 60; ++m)
    for (std::int64_t k = 0; k <= m; ++k)
      o.require(binomial(m, k) == pascal[m][k], "binomial vs Pascal");

  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Element> e;
    for (int i = 0, k = static_cast<int>(rng() % 10); i < k; ++i) e.push_back(1 + rng() % 90);
    const FinSet a(e);
    std::vector<Element> noisy = e;
    noisy.insert(noisy.end(), e.begin(), e.end());
    std::shuffle(noisy.begin(), noisy.end(), rng);
    o.require(FinSet(noisy) == a, "canonicalization " + a.to_string());
    o.require(std::is_sorted(a.elements().begin(), a.elements().end()), "sorted");
    const std::int64_t r = static_cast<std::int64_t>(rng() % 31) - 15;
    if (a.empty() || static_cast<std::int64_t>(a.min()) + r >= 1)
      o.require(shift(shift(a, r), -r) == a, "shift round trip " + a.to_string());
  }

  for (std::uint32_t p = 1; p <= 4; ++p)
    for (std::uint32_t n = p; n <= 18; ++n)
      o.require(count_family_bruteforce(FamilyId::k_pq(n, p, 2)) == fibonacci(n - p + 1) &&
                    count_K_pq(n, p, 2) == fibonacci(n - p + 1),
                "q=2 identity " + n_text(n) + " p=" + std::to_string(p));
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto expect_fail = [&](const VerificationReport& r, std::uint64_t n, const FinSet& witness,
                         const std::string& tag) {
    o.require(!r.passed(), tag + " passed");
    if (r.passed()) return;
    o.require(r.first_counterexample->n == n,
              tag + " reported " + n_text(r.first_counterexample->n));
    o.require(r.first_counterexample->witness == witness, tag + " witness");
  };
  auto opts = [](Fault f) {
    VerifyOptions v;
    v.predicate = fault_predicate(f);
    return v;
  };
  expect_fail(verify_theorem1(18, opts(Fault::StrictSchreier)), 3, FinSet({2, 3}),
              "strict-schreier/thm1");
  expect_fail(verify_corollary(18, opts(Fault::DropSingletons)), 1, FinSet({1}),
              "drop-singletons/corollary");
  expect_fail(verify_theorem2(1, 3, 14, opts(Fault::GapOffByOne)), 5, FinSet({3, 4, 5}),
              "gap-off-by-one/thm2");
  expect_fail(verify_theorem2(2, 3, 14, opts(Fault::IgnoreLowerBound)), 4, FinSet({2, 4}),
              "ignore-lower-bound/thm2");
  o.require(!verify_bijections(1, 3, 12, opts(Fault::StrictSchreier)).passed(),
            "strict-schreier/bijections passed");

  const auto cli = run_cli("verify thm1 --max-n 12 --inject-fault strict-schreier");
  o.require(cli.exit_code == 1, "cli exit " + std::to_string(cli.exit_code));
  o.require(cli.out.find("counterexample: n=3") != std::string::npos &&
                cli.out.find("witness: {2,3}") != std::string::npos,
            "cli report lacks the counterexample");
  const auto gap = run_cli("verify thm2 --p 1 --q 3 --max-n 12 --inject-fault gap-off-by-one");
  o.require(gap.exit_code == 1, "cli thm2 exit " + std::to_string(gap.exit_code));
  o.require(run_cli("verify thm1 --max-n 12").exit_code == 0, "clean run did not pass");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "brute-force |K_n| = F(n), n = 1..20", 10, criterion1},
      {2, "brute-force |K'_n| = F(n) + n, n = 1..20", 10, criterion2},
      {3, "K_{n,p,q} grid: counts, base range, |S| and |T|", 120, criterion3},
      {4, "bijection round trips, collisions, gap interval", 60, criterion4},
      {5, "count_K_pq(n,1,2) = count_K(n), n = 1..500", 0, criterion5},
      {6, "b-file for K, n = 1..20, matches A000045 golden", 0, criterion6},
      {7, "property suite", 0, criterion7},
      {8, "injected faults give FAIL, minimal counterexample, exit 1", 0, criterion8},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.note = "over time limit of " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    all = all && o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << timing
              << ")";
    if (!o.ok) std::cout << ": " << o.note;
    std::cout << '\n';
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
