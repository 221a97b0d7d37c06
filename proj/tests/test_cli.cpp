#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  int exit = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  std::string command = std::string(CRITIDEALS_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, IdealFixtures) {
  CliRun j = cli("ideal --family J:5,4,3 --j 9");
  EXPECT_EQ(j.exit, 0);
  EXPECT_EQ(j.out, "x1*x2*x3*x4 - x1*x2 - x1*x4 - x3*x4 + 1\nx6*x7*x8 - x6 - x8\nx9*x10 - 1\n");
  EXPECT_EQ(cli("ideal --family star:4 --j 3").out, "x1\nx2\nx3\nx4\n");
  EXPECT_EQ(cli("ideal --family path:5 --j 4").out, "1\n");
}

TEST(Cli, IdealJsonTwinAndProvenance) {
  CliRun r = cli("ideal --family star:3 --j 4 --format json --provenance");
  EXPECT_EQ(r.exit, 0);
  EXPECT_EQ(r.out,
            R"({"tree":"n4:4.4","ideals":[{"j":4,"generators":[{"polynomial":"x1*x2*x3*x4 - x1*x2 - x1*x3 - x2*x3","matching":"1!,2!,3!,4!"}]}]})"
            "\n");
  CliRun text = cli("ideal --family star:3 --j 4 --provenance");
  EXPECT_EQ(text.out, "x1*x2*x3*x4 - x1*x2 - x1*x3 - x2*x3\t[1!,2!,3!,4!]\n");
}

TEST(Cli, GammaAndCriticalGroup) {
  EXPECT_EQ(cli("gamma --family c5:7").out, "nu2=9 gamma=9\n");
  CliRun g = cli("critgroup --family c5:6 --arithmetical");
  EXPECT_EQ(g.exit, 0);
  EXPECT_EQ(g.out.substr(0, g.out.find('\n')), "Z_2 ⊕ Z_2");
  EXPECT_EQ(cli("critgroup --family c5:7 --arithmetical --format json").out, "{\"torsion\":[4],\"free_rank\":1}\n");
}

TEST(Cli, MatchingsAndFamily) {
  EXPECT_EQ(cli("matchings --family star:3 --j 4 --minimal").out, "1!,2!,3!,4!\n");
  EXPECT_EQ(cli("family --family star:3").out, "4\n1 4\n2 4\n3 4\n");
  EXPECT_EQ(cli("family --family wired:4,2 --format json").out,
            R"({"family":"wired:4,2","n":6,"edges":[[1,2,1],[1,3,1],[1,4,1],[1,5,1],[2,6,3],[3,6,3],[4,6,3],[5,6,3]]})"
            "\n");
}

TEST(Cli, InputFileMatchesFamily) {
  auto path = std::filesystem::temp_directory_path() / "critideals_cli_tree.txt";
  std::ofstream(path) << cli("family --family J:5,4,3").out;
  EXPECT_EQ(cli("ideal --input " + path.string() + " --j 9").out, cli("ideal --family J:5,4,3 --j 9").out);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("ideal --family path:5 --j 9").exit, 2);
  EXPECT_EQ(cli("ideal --family path:5 --j 0").exit, 2);
  EXPECT_EQ(cli("ideal --family blob:5").exit, 2);
  EXPECT_EQ(cli("ideal --j 3").exit, 2);
  EXPECT_EQ(cli("ideal --family path:3 --input x --j 1").exit, 2);
  EXPECT_EQ(cli("ideal --input /nonexistent/tree.txt").exit, 2);
  EXPECT_EQ(cli("bogus").exit, 2);
  EXPECT_EQ(cli("verify --suite nonsense").exit, 2);
  EXPECT_EQ(cli("verify --suite oracle --max-n 40").exit, 2);
  EXPECT_EQ(cli("gamma --family c5:7 --max-pairs 1").exit, 3);
  EXPECT_EQ(cli("--help").exit, 0);
}

TEST(Cli, VerifyOracleSweepPasses) {
  CliRun r = cli("verify --suite oracle --max-n 6");
  EXPECT_EQ(r.exit, 0);
  EXPECT_EQ(r.out.find("\"fail\""), std::string::npos);
}

TEST(Cli, ByteDeterminism) {
  for (const char* args : {"verify --suite groebner --max-n 5 --seed 42", "verify --suite conjecture --max-n 5",
                           "ideal --family c5:6 --format json --provenance", "verify --suite wired"}) {
    CliRun a = cli(args);
    CliRun b = cli(args);
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
