#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct run_cli {
  int code = -1;
  std::string out;
};

run_cli run(const std::string& bin, const std::string& args) {
  run_cli r;
  const std::string cmd = "\"" + bin + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

run_cli cli(const std::string& args) { return run(QUADCRIT_BIN, args); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("quadcrit_test_" + name)).string();
}

}  // namespace

TEST(Cli, ClassifyParabolaExample) {
  const run_cli r = cli("classify --map \"0.5,0,0,0,1,0,0,1,0,0,0,0\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"class\": \"Parabola\""), std::string::npos);
  EXPECT_NE(r.out.find("\"case\": 6"), std::string::npos);
  EXPECT_NE(r.out.find("\"gamma\": 18"), std::string::npos);
}

TEST(Cli, ClassifyHenonIsEmpty) {
  const run_cli r = cli("classify --map \"-1.4,0,0,0,1,1,0,0,0,0.3,0,0\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"class\": \"Empty\""), std::string::npos);
  EXPECT_NE(r.out.find("\"F\": \"-3/10\""), std::string::npos);
}

TEST(Cli, ReportsAreByteIdentical) {
  const run_cli a = cli("classify --example 4");
  const run_cli b = cli("classify --map 1,0,1,2,0,0,0,2,0,0,-2,0");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("classify --map \"0,0,0,1,0,0,0,0,0,0,1,0\"").code, 3);
  EXPECT_EQ(cli("classify --map \"1,2,x\"").code, 2);
  EXPECT_EQ(cli("classify --bogus").code, 2);
  EXPECT_EQ(cli("sample --example 1 --which j0").code, 4);
  EXPECT_EQ(cli("sample --example 1 --which j1").code, 4);
  EXPECT_EQ(cli("regions --example 1 --bbox 1,0,0,1").code, 2);
  EXPECT_EQ(cli("render --example 3 --out /nonexistent/dir/x.svg").code, 5);
  EXPECT_EQ(cli("classify --batch /nonexistent/file").code, 5);
}

TEST(Cli, Preimages) {
  run_cli r = cli("preimages --example 7b --point 0,0");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"count\": \"infinite\""), std::string::npos);
  r = cli("preimages --example 8b --point -1,0");
  EXPECT_NE(r.out.find("\"count\": 0"), std::string::npos);
  r = cli("preimages --example 3 --point 0,0");
  EXPECT_NE(r.out.find("\"count\": 4"), std::string::npos);
}

TEST(Cli, SampleCsv) {
  const std::string path = temp_path("deltoid.csv");
  ASSERT_EQ(cli("sample --example 3 --which j1 --n 360 --out " + path).code, 0);
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content.rfind("branch,t,x,y\n", 0), 0u);
  EXPECT_EQ(std::count(content.begin(), content.end(), '\n'), 361);
  EXPECT_EQ(content.find('\r'), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, DiskImageUsesExampleDisk) {
  const run_cli r = cli("sample --example 1 --which disk-image --n 4");
  ASSERT_EQ(r.code, 0);
  // t = 0 maps (2.5, 0) to (1 - 1.4 * 6.25, 0.75).
  EXPECT_NE(r.out.find("0,0,-7.75,0.75"), std::string::npos);
}

TEST(Cli, RegionsHenonAllOne) {
  const run_cli r = cli("regions --example 1 --bbox -2,2,-2,2 --grid 16");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "i,j,x,y,count");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "1");
  }
  EXPECT_EQ(rows, 256);
}

TEST(Cli, RenderSvg) {
  const std::string path = temp_path("deltoid.svg");
  ASSERT_EQ(cli("render --example 3 --bbox -4,4,-4,4 --show j0,j1,disk --out " + path).code, 0);
  std::ifstream in(path);
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"red\""), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"green\""), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"blue\""), std::string::npos);
  std::size_t circles = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 3u);
  EXPECT_EQ(svg.find("href"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, BatchMode) {
  const std::string path = temp_path("batch.txt");
  {
    std::ofstream out(path);
    out << "1,0,-1,2,0,0,0,2,0,0,-2,0\n# comment\n1,0,0,0,0,0,0,0,1,0,0,0\n";
  }
  const run_cli r = cli("classify --batch " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_NE(r.out.find("\"class\":\"RealEllipse\""), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ExamplesFlag) {
  const run_cli r = cli("--examples");
  ASSERT_EQ(r.code, 0);
  std::size_t n = 0;
  for (std::size_t p = r.out.find("\"reproduced\": true"); p != std::string::npos;
       p = r.out.find("\"reproduced\": true", p + 1)) {
    ++n;
  }
  EXPECT_EQ(n, 15u);
}

TEST(Cli, VerifyRandomPasses) {
  const run_cli r = cli("verify --random 1000 --seed 42");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"ok\": true"), std::string::npos);
}

TEST(Cli, VerifySingleMapListsZeroResiduals) {
  const run_cli r = cli("verify --example 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"name\": \"XX.0134\""), std::string::npos);
  EXPECT_EQ(r.out.find("\"residual\": \"-"), std::string::npos);
}

TEST(Cli, SeedEnvironmentOverride) {
  const run_cli a = run(QUADCRIT_BIN, "verify --random 5 --seed 1");
  const std::string env_cmd = std::string("env QUADCRIT_SEED=7 ");
  FILE* pipe = popen((env_cmd + "\"" + QUADCRIT_BIN + "\" verify --random 5 --seed 1").c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  EXPECT_NE(a.out.find("\"seed\": 1"), std::string::npos);
  EXPECT_NE(out.find("\"seed\": 7"), std::string::npos);
}

TEST(Cli, FaultyBuildFailsVerification) {
  const run_cli r = run(QUADCRIT_FAULTY_BIN, "verify --random 10 --seed 42");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("identity "), std::string::npos);
  EXPECT_NE(r.out.find("\"map\""), std::string::npos);
}
