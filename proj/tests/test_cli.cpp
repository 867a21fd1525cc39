#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bilipkit/io.hpp"
#include "bilipkit/sampled_map.hpp"

#ifdef BILIPKIT_CLI_PATH

using namespace bilipkit;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bilipkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(BILIPKIT_CLI_PATH) + " " + args + " 2>" +
                            (dir_ / "stderr.txt").string() + " >" + (dir_ / "stdout.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateRayIsCollinear) {
  ASSERT_EQ(run("generate ray --dim 3 --n 100 -o " + path("ray.csv")), 0);
  const PointCloud c = io::read_cloud_file(path("ray.csv"));
  ASSERT_EQ(c.size(), 100u);
  ASSERT_EQ(c.dim(), 3u);
  const Point u = c[0] / c[0].norm();
  for (const Point& p : c.points()) {
    EXPECT_NEAR(dot(p, u), p.norm(), 1e-12 * p.norm());
  }
}

TEST_F(Cli, InvertScalingIsHalving) {
  ASSERT_EQ(run("generate scaling --lambda 2 --origin --unbounded --n 50 -o " + path("f.csv")), 0);
  ASSERT_EQ(run("invert " + path("f.csv") + " -o " + path("g.csv")), 0);
  const SampledMap g = io::read_map_files(path("g.csv"));
  EXPECT_EQ(g.size(), 50u);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_LE(distance(g.codomain()[i], g.domain()[i] / 2.0), 1e-10 * (1.0 + g.domain()[i].norm()));
  }
  ASSERT_EQ(run("invert " + path("g.csv") + " -o " + path("h.csv")), 0);
  const SampledMap f = io::read_map_files(path("f.csv"));
  const SampledMap h = io::read_map_files(path("h.csv"));
  EXPECT_EQ(h.flags(), f.flags());
  ASSERT_EQ(h.size(), f.size());
  // The origin pair moves from the front to the back on each inversion of an unbounded map.
  for (std::size_t i = 1; i < f.size(); ++i) {
    EXPECT_LE(distance(h.domain()[i - 1], f.domain()[i]), 1e-10 * f.domain()[i].norm());
  }
}

TEST_F(Cli, OriginNotFixedIsHypothesisViolation) {
  std::ofstream(path("bad.csv")) << "x1,x2,y1,y2\n0,0,1,1\n1,0,2,0\n";
  std::ofstream(path("bad.csv.meta.json"))
      << R"({"q1":2,"q2":2,"fixes_origin":true,"avoids_origin":false,"unbounded_domain":false,"ambient":"Affine"})";
  EXPECT_EQ(run("invert " + path("bad.csv") + " -o " + path("out.csv")), 3);
}

TEST_F(Cli, DistortionConstants) {
  ASSERT_EQ(run("generate identity --n 100 -o " + path("id.csv")), 0);
  ASSERT_EQ(run("distortion " + path("id.csv") + " -o " + path("id.json")), 0);
  EXPECT_EQ(io::Json::parse(slurp(path("id.json")))["bilip_constant"], 1.0);
  ASSERT_EQ(run("generate scaling --lambda 2 --n 100 -o " + path("two.csv")), 0);
  ASSERT_EQ(run("distortion " + path("two.csv") + " -o " + path("two.json")), 0);
  EXPECT_EQ(io::Json::parse(slurp(path("two.json")))["bilip_constant"], 2.0);
}

TEST_F(Cli, DistortionShellEmpty) {
  ASSERT_EQ(run("generate identity --n 20 -o " + path("id.csv")), 0);
  EXPECT_EQ(run("distortion " + path("id.csv") + " --shell 1e6:inf"), 4);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  for (const char* tag : {"a", "b"}) {
    const std::string t(tag);
    ASSERT_EQ(run("generate shear --n 300 --seed 5 --probes 4 -o " + path("m" + t + ".csv")), 0);
    ASSERT_EQ(run("distortion " + path("m" + t + ".csv") + " --strategy random --pairs 20000 --seed 5 -o " +
                  path("d" + t + ".json")),
              0);
    ASSERT_EQ(run("generate random --dim 3 --n 200 --seed 9 -o " + path("c" + t + ".csv")), 0);
    ASSERT_EQ(run("cones " + path("c" + t + ".csv") + " --kind origin -o " + path("k" + t + ".csv")), 0);
  }
  for (const char* stem : {"m", "d", "c", "k"}) {
    const std::string s(stem);
    EXPECT_EQ(slurp(path(s + "a.csv.meta.json")), slurp(path(s + "b.csv.meta.json")));
    EXPECT_EQ(slurp(path(s + "a.csv")), slurp(path(s + "b.csv")));
    EXPECT_EQ(slurp(path(s + "a.json")), slurp(path(s + "b.json")));
  }
}

TEST_F(Cli, ConesExchangeAndCompare) {
  ASSERT_EQ(run("generate shifted-line --tmax 1000 --n 100 -o " + path("line.csv")), 0);
  EXPECT_EQ(run("cones " + path("line.csv") + " --exchange --band 1 --center 100 -o " + path("x.json")), 0);
  EXPECT_EQ(io::Json::parse(slurp(path("x.json")))["passed"], true);
  ASSERT_EQ(run("generate shifted-line --tmax 10000 --offset 2 --n 100 -o " + path("line2.csv")), 0);
  ASSERT_EQ(run("generate shifted-line --tmax 10000 --n 100 -o " + path("line1.csv")), 0);
  ASSERT_EQ(run("cones " + path("line1.csv") + " --compare " + path("line2.csv") + " -o " +
                path("cmp.json")),
            0);
  EXPECT_LE(io::Json::parse(slurp(path("cmp.json")))["angular_hausdorff"].get<double>(), 1e-3);
}

TEST_F(Cli, BetaRenormalized) {
  std::ofstream(path("y.csv")) << "x1,x2\n0.5,0\n0,0\n";
  ASSERT_EQ(run("beta " + path("y.csv") + " --renormalize-beta -o " + path("b.csv")), 0);
  const PointCloud b = io::read_cloud_file(path("b.csv"));
  EXPECT_NEAR(b[0][0], 0.8, 1e-15);
  EXPECT_NEAR(b[0][2], 0.6, 1e-15);
  EXPECT_EQ(b[1], (Point{0.0, 0.0, 1.0}));
  std::ofstream(path("far.csv")) << "x1,x2\n0.6,0\n";
  EXPECT_EQ(run("beta " + path("far.csv")), 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("generate no-such-fixture"), 2);
  EXPECT_EQ(run("distortion"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("verify nope"), 2);
}

TEST_F(Cli, VerifyIdentitiesPasses) {
  ASSERT_EQ(run("verify identities --seed 0 -o " + path("v.json")), 0);
  EXPECT_EQ(io::Json::parse(slurp(path("v.json")))["passed"], true);
}

#endif
