#include <gtest/gtest.h>

#include <filesystem>
#include <limits>
#include <sstream>

#include "bilipkit/errors.hpp"
#include "bilipkit/io.hpp"
#include "bilipkit/registry.hpp"

using namespace bilipkit;
namespace fs = std::filesystem;

TEST(FormatDouble, RoundTripsExactly) {
  for (double v : {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, 1e-300, 5e-324, 1.7976931348623157e308,
                   -2.5e-7, 123456789.125}) {
    EXPECT_EQ(io::parse_double(io::format_double(v)), v) << io::format_double(v);
  }
  EXPECT_EQ(io::format_double(0.5), "0.5");
  EXPECT_THROW(io::parse_double("1.0x"), ParseError);
  EXPECT_THROW(io::parse_double(""), ParseError);
}

TEST(CloudCsv, RoundTrip) {
  const PointCloud c({Point{1.0, -2.5}, Point{1.0 / 3.0, 1e-20}});
  std::stringstream ss;
  io::write_cloud_csv(ss, c);
  EXPECT_EQ(ss.str().substr(0, 6), "x1,x2\n");
  const PointCloud back = io::read_cloud_csv(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], c[0]);
  EXPECT_EQ(back[1], c[1]);
}

TEST(CloudCsv, Malformed) {
  std::stringstream bad_header("y1,y2\n1,2\n");
  EXPECT_THROW(io::read_cloud_csv(bad_header), ParseError);
  std::stringstream ragged("x1,x2\n1,2\n3\n");
  EXPECT_THROW(io::read_cloud_csv(ragged), ParseError);
  std::stringstream junk("x1\nabc\n");
  EXPECT_THROW(io::read_cloud_csv(junk), ParseError);
}

TEST(MapFiles, RoundTripWithSidecar) {
  const fs::path dir = fs::temp_directory_path() / "bilipkit_test_io";
  fs::create_directories(dir);
  SamplerConfig cfg;
  cfg.count = 40;
  cfg.seed = 3;
  cfg.include_origin = true;
  cfg.unbounded_domain = true;
  const SampledMap m = sample_analytic(shear_map(), cfg);
  const fs::path csv = dir / "shear.csv";
  io::write_map_files(csv, m);
  EXPECT_TRUE(fs::exists(io::sidecar_path(csv)));
  const SampledMap back = io::read_map_files(csv);
  EXPECT_EQ(back.flags(), m.flags());
  ASSERT_EQ(back.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_EQ(back.domain()[i], m.domain()[i]);
    EXPECT_EQ(back.codomain()[i], m.codomain()[i]);
  }
  fs::remove_all(dir);
}

TEST(MapMetadata, MissingKeyRejected) {
  io::Json j = io::map_metadata(sample_analytic(identity_map(2), SamplerConfig{}));
  j.erase("ambient");
  EXPECT_THROW(io::parse_map_metadata(j), ParseError);
}

TEST(ReportJson, InfinityAsString) {
  DistortionReport r;
  r.L_expand = 1.0;
  r.L_contract = std::numeric_limits<double>::infinity();
  r.bilip_constant = r.L_contract;
  r.strategy = "all";
  const io::Json j = io::report_json(r, io::ShellRange{1.0, std::numeric_limits<double>::infinity()});
  EXPECT_EQ(j["L_contract"], "inf");
  EXPECT_EQ(j["shell"]["r_max"], "inf");
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(io::dump(j).back(), '\n');
}
