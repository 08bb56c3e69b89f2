#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "schreier/sequences.hpp"

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

Run run(const std::string& args, const std::string& env = "") {
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("schreier_cli_err_" + std::to_string(::getpid()));
  const std::string cmd =
      env + " '" SCHREIER_CLI_PATH "' " + args + " 2>'" + err_path.string() + "'";
  Run r{-1, {}, {}};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::ostringstream s;
  s << in.rdbuf();
  r.err = s.str();
  std::filesystem::remove(err_path);
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SCHREIER_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(CliCount, Examples) {
  auto r = run("count --family K --n 5 --method enum");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "5\n");
  r = run("count --family Kpq --p 1 --q 3 --n 5 --method recurrence");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "2\n");
  r = run("count --family K --n 40 --method enum");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("cap"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("30"), std::string::npos) << r.err;
}

TEST(CliCount, BigValuesInFullDecimal) {
  const auto r = run("count --family K --n 500");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "13942322456169788013972438287040728395007025658769730726410896294832557162286"
            "3290691557658876222521294125\n");
}

TEST(CliCount, CapOverrideFromEnvironment) {
  EXPECT_EQ(run("count --family K --n 12 --method enum", "SCHREIER_ENUM_CAP=10").exit_code, 2);
  const auto ok = run("count --family K --n 31 --method enum", "SCHREIER_ENUM_CAP=31");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.out, "1346269\n");
  EXPECT_EQ(run("count --family K --n 3 --method enum", "SCHREIER_ENUM_CAP=abc").exit_code, 2);
  EXPECT_EQ(run("count --family K --n 3 --method enum", "SCHREIER_ENUM_CAP=64").exit_code, 2);
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run("count --family K").exit_code, 2);
  EXPECT_EQ(run("count --family Z --n 3").exit_code, 2);
  EXPECT_EQ(run("count --family Kpq --n 3 --p 1").exit_code, 2);
  EXPECT_EQ(run("count --family K --n 3 --p 1").exit_code, 2);
  EXPECT_EQ(run("count --family K --n 0").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(CliEnumerate, Examples) {
  auto r = run("enumerate --family K --n 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{}\n{2,3}\n");
  r = run("enumerate --family A --n 2");
  EXPECT_EQ(r.out, "{2}\n");
  r = run("enumerate --family Kpq --p 1 --q 3 --n 4");
  EXPECT_EQ(r.out, "{}\n");
}

TEST(CliEnumerate, FormatsAndOrders) {
  auto r = run("enumerate --family K --n 5 --format csv");
  EXPECT_EQ(r.out, "size,elements\n0,\"\"\n2,\"2 3\"\n2,\"3 4\"\n2,\"4 5\"\n3,\"3 4 5\"\n");
  r = run("enumerate --family K --n 3 --format jsonl");
  EXPECT_EQ(r.out, "{\"size\":0,\"elements\":[]}\n{\"size\":2,\"elements\":[2,3]}\n");
  r = run("enumerate --family A --n 5 --order colex");
  EXPECT_EQ(r.out, "{5}\n{2,5}\n{3,5}\n{4,5}\n{3,4,5}\n");
  EXPECT_EQ(run("enumerate --family K --n 3 --format bfile").exit_code, 2);
  EXPECT_EQ(run("enumerate --family K --n 31").exit_code, 2);
}

TEST(CliTable, Examples) {
  auto r = run("table --family K --max-n 6 --format bfile");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n");
  r = run("table --family Kprime --max-n 3 --format csv");
  EXPECT_EQ(r.out, "n,value\n1,2\n2,3\n3,5\n");
  EXPECT_EQ(run("table --family K --max-n 0").exit_code, 2);
  r = run("table --family Kpq --p 1 --q 3 --max-n 2 --format jsonl");
  EXPECT_EQ(r.out, "{\"n\":1,\"value\":\"1\"}\n{\"n\":2,\"value\":\"1\"}\n");
}

TEST(CliTable, GoldenBFiles) {
  EXPECT_EQ(run("table --family K --max-n 20 --format bfile").out, golden("A000045_b.txt"));
  EXPECT_EQ(run("table --family Kprime --max-n 20 --format bfile").out, golden("A002062_b.txt"));
}

TEST(CliTable, BFileRoundTripsThroughCacheLoad) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("schreier_cli_bfile_" + std::to_string(::getpid()) + ".txt");
  const auto r = run("table --family Kpq --p 2 --q 3 --max-n 80 --format bfile");
  ASSERT_EQ(r.exit_code, 0);
  std::ofstream(path, std::ios::binary) << "#family Kpq 2 3\n" << r.out;
  const auto loaded = schreier::cache_load(schreier::FamilyKind::KPQ, 2, 3, path);
  EXPECT_EQ(loaded, schreier::build_table(schreier::FamilyKind::KPQ, 2, 3, 80));
  std::filesystem::remove(path);
}

TEST(CliVerify, Examples) {
  auto r = run("verify thm1 --max-n 18");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("status: PASS"), std::string::npos);
  r = run("verify thm2 --p 2 --q 3 --max-n 14");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("status: PASS"), std::string::npos);
  EXPECT_EQ(run("verify thm2 --p 0 --q 3 --max-n 10").exit_code, 2);
}

TEST(CliVerify, ExitCodeContract) {
  EXPECT_EQ(run("verify corollary --max-n 10").exit_code, 0);
  EXPECT_EQ(run("verify bijections --p 1 --q 3 --max-n 12").exit_code, 0);
  const auto fail = run("verify thm1 --max-n 10 --inject-fault strict-schreier");
  EXPECT_EQ(fail.exit_code, 1);
  EXPECT_NE(fail.out.find("witness: {2,3}"), std::string::npos);
  EXPECT_EQ(run("verify thm1 --max-n 40").exit_code, 2);
  EXPECT_EQ(run("verify thm1 --max-n 5 --inject-fault bogus").exit_code, 2);
  EXPECT_EQ(run("verify nonsense --max-n 5").exit_code, 2);
  EXPECT_EQ(run("verify thm1").exit_code, 2);
}

TEST(CliVerify, JsonReport) {
  const auto r = run("verify corollary --max-n 5 --format jsonl");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("{\"check\":\"corollary\"", 0), 0U) << r.out;
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(Cli, Deterministic) {
  for (const char* args : {"enumerate --family Kpq --p 2 --q 3 --n 14 --order colex",
                           "table --family Kprime --max-n 60 --format jsonl",
                           "verify thm2 --p 1 --q 3 --max-n 12 --inject-fault gap-off-by-one",
                           "count --family Kpq --p 3 --q 4 --n 26 --method enum"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.exit_code, b.exit_code) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}
