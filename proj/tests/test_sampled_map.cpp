#include <gtest/gtest.h>

#include <cmath>

#include "bilipkit/errors.hpp"
#include "bilipkit/registry.hpp"
#include "bilipkit/sampled_map.hpp"
#include "bilipkit/transforms.hpp"

using namespace bilipkit;

namespace {

PointCloud cloud(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Point> pts;
  for (auto r : rows) pts.emplace_back(r);
  return PointCloud(std::move(pts));
}

MapFlags fixing(bool unbounded) {
  MapFlags f;
  f.fixes_origin = true;
  f.unbounded_domain = unbounded;
  return f;
}

}  // namespace

TEST(SampledMap, Invariants) {
  EXPECT_THROW(SampledMap(cloud({{1, 0}}), cloud({{1, 0}}), MapFlags{false, true, false}),
               HypothesisError);
  EXPECT_THROW(SampledMap(cloud({{1, 0}, {2, 0}}), cloud({{1, 0}}), MapFlags{false, true, false}),
               HypothesisError);
  // Origin in the domain but not fixed.
  EXPECT_THROW(SampledMap(cloud({{0, 0}, {1, 0}}), cloud({{1, 1}, {2, 0}}), fixing(false)),
               HypothesisError);
  // Neither origin flag.
  EXPECT_THROW(SampledMap(cloud({{1, 0}, {2, 0}}), cloud({{1, 0}, {2, 0}}), MapFlags{}),
               HypothesisError);
  // Sphere ambient needs unit vectors.
  MapFlags s;
  s.ambient = Ambient::Sphere;
  EXPECT_THROW(SampledMap(cloud({{1, 0}, {2, 0}}), cloud({{1, 0}, {0, 1}}), s), HypothesisError);
}

TEST(InvertMap, ScalingBecomesHalving) {
  // 2x sampled at (1,0), (2,0), (0,0): conjugating by inversions gives y -> y / 2.
  const SampledMap m(cloud({{1, 0}, {2, 0}, {0, 0}}), cloud({{2, 0}, {4, 0}, {0, 0}}), fixing(true));
  const SampledMap inv = invert_map(m);
  ASSERT_EQ(inv.size(), 3u);
  EXPECT_EQ(inv.domain()[0], (Point{1.0, 0.0}));
  EXPECT_EQ(inv.codomain()[0], (Point{0.5, 0.0}));
  EXPECT_EQ(inv.domain()[1], (Point{0.5, 0.0}));
  EXPECT_EQ(inv.codomain()[1], (Point{0.25, 0.0}));
  EXPECT_TRUE(inv.domain()[2].is_zero());
  EXPECT_TRUE(inv.codomain()[2].is_zero());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    EXPECT_LE(distance(inv.codomain()[i], inv.domain()[i] / 2.0), 1e-15);
  }
  EXPECT_TRUE(inv.flags().fixes_origin);
  EXPECT_TRUE(inv.flags().unbounded_domain);
}

TEST(InvertMap, FlagsSwap) {
  const SampledMap m(cloud({{1, 0}, {2, 0}, {0, 0}}), cloud({{2, 0}, {4, 0}, {0, 0}}), fixing(false));
  const SampledMap inv = invert_map(m);
  EXPECT_EQ(inv.size(), 2u);
  EXPECT_TRUE(inv.flags().avoids_origin);
  EXPECT_FALSE(inv.flags().fixes_origin);
  EXPECT_TRUE(inv.flags().unbounded_domain);
}

TEST(InvertMap, InvolutionOnRegistryMaps) {
  for (const AnalyticMap& f : standard_registry()) {
    if (!f.globally_defined()) continue;
    SamplerConfig cfg;
    cfg.count = 60;
    cfg.seed = 4;
    cfg.unbounded_domain = true;
    const SampledMap m = sample_analytic(f, cfg);
    const SampledMap twice = invert_map(invert_map(m));
    ASSERT_EQ(twice.size(), m.size()) << f.name;
    EXPECT_EQ(twice.flags(), m.flags()) << f.name;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double s = 1.0 + m.domain()[i].norm();
      EXPECT_LE(distance(twice.domain()[i], m.domain()[i]), 1e-14 * s);
      EXPECT_LE(distance(twice.codomain()[i], m.codomain()[i]), 1e-14 * (1.0 + m.codomain()[i].norm()));
    }
  }
}

TEST(InvertMap, IdentityStaysIdentity) {
  SamplerConfig cfg;
  cfg.count = 50;
  cfg.dim = 3;
  cfg.seed = 2;
  const SampledMap inv = invert_map(sample_analytic(identity_map(3), cfg));
  for (std::size_t i = 0; i < inv.size(); ++i) {
    EXPECT_EQ(inv.domain()[i], inv.codomain()[i]);
  }
}

TEST(InvertMap, NonzeroPointToOriginRejected) {
  MapFlags f;
  f.avoids_origin = true;
  // The guard already rejects this at construction.
  EXPECT_THROW(SampledMap(cloud({{1, 0}, {2, 0}}), cloud({{0, 0}, {2, 0}}), f), HypothesisError);
}

TEST(Compactify, IdentityOnLine) {
  const SampledMap m(cloud({{-1}, {0}, {1}}), cloud({{-1}, {0}, {1}}), fixing(true));
  const SampledMap c = compactify_map(m);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.flags().ambient, Ambient::Sphere);
  const double want[4][2] = {{-1, 0}, {0, -1}, {1, 0}, {0, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(c.domain()[i][0], want[i][0], 1e-16);
    EXPECT_NEAR(c.domain()[i][1], want[i][1], 1e-16);
    EXPECT_EQ(c.domain()[i], c.codomain()[i]);
  }
}

TEST(Compactify, DoublingOnLine) {
  MapFlags f;
  f.avoids_origin = true;
  const SampledMap m(cloud({{1}, {2}}), cloud({{2}, {4}}), f);
  const SampledMap c = compactify_map(m);
  ASSERT_EQ(c.size(), 2u);
  // sigma(1) = (1, 0), sigma(2) = (4/5, 3/5), sigma(4) = (8/17, 15/17).
  EXPECT_NEAR(c.domain()[0][0], 1.0, 1e-16);
  EXPECT_NEAR(c.domain()[0][1], 0.0, 1e-16);
  EXPECT_NEAR(c.codomain()[0][0], 0.8, 1e-16);
  EXPECT_NEAR(c.codomain()[0][1], 0.6, 1e-16);
  EXPECT_NEAR(c.domain()[1][0], 0.8, 1e-16);
  EXPECT_NEAR(c.codomain()[1][0], 8.0 / 17.0, 1e-16);
  EXPECT_NEAR(c.codomain()[1][1], 15.0 / 17.0, 1e-16);
}

TEST(Compactify, PolePairOnlyWhenUnbounded) {
  MapFlags f;
  f.avoids_origin = true;
  f.unbounded_domain = true;
  const SampledMap m(cloud({{1, 0}, {2, 0}}), cloud({{2, 0}, {4, 0}}), f);
  const SampledMap c = compactify_map(m);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.domain()[2], (Point{0.0, 0.0, 1.0}));
  EXPECT_EQ(c.codomain()[2], (Point{0.0, 0.0, 1.0}));
}

TEST(Restrict, BoundarySemantics) {
  MapFlags f;
  f.avoids_origin = true;
  f.unbounded_domain = true;
  const SampledMap m(cloud({{0.5, 0}, {1, 0}, {2, 0}}), cloud({{0.5, 0}, {1, 0}, {2, 0}}), f);
  const SampledMap all = restrict_map(m, 0.0);
  EXPECT_EQ(all.size(), 3u);
  EXPECT_TRUE(all.flags().unbounded_domain);
  EXPECT_THROW(restrict_map(m, 0.9, 1.1), EmptyRestriction);
  const SampledMap inner = restrict_map(m, 0.5, 2.0);
  EXPECT_EQ(inner.size(), 2u);
  EXPECT_FALSE(inner.flags().unbounded_domain);
}

TEST(Restrict, ShellsPartitionTheCloud) {
  SamplerConfig cfg;
  cfg.count = 300;
  cfg.seed = 9;
  const SampledMap m = sample_analytic(shear_map(), cfg);
  const double cuts[] = {0.0, 0.1, 1.0, 10.0, std::numeric_limits<double>::infinity()};
  std::size_t total = 0;
  for (int k = 0; k < 4; ++k) {
    total += restrict_map(m, cuts[k], cuts[k + 1]).size();
  }
  EXPECT_EQ(total, m.size());
}

TEST(Sampler, Deterministic) {
  SamplerConfig cfg;
  cfg.count = 100;
  cfg.seed = 7;
  const SampledMap a = sample_analytic(identity_map(2), cfg);
  const SampledMap b = sample_analytic(identity_map(2), cfg);
  ASSERT_EQ(a.size(), 100u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.domain()[i], b.domain()[i]);
    EXPECT_EQ(a.domain()[i], a.codomain()[i]);
  }
}

TEST(Sampler, DiagonalSandwich) {
  SamplerConfig cfg;
  cfg.count = 1000;
  cfg.seed = 1;
  const AnalyticMap f = diagonal_map_1_3();
  ASSERT_EQ(*f.true_bilip_constant, 3.0);
  const SampledMap m = sample_analytic(f, cfg);
  for (std::size_t i = 0; i + 1 < m.size(); i += 2) {
    const double dx = distance(m.domain()[i], m.domain()[i + 1]);
    const double dy = distance(m.codomain()[i], m.codomain()[i + 1]);
    EXPECT_LE(dy, 3.0 * dx * (1 + 1e-12));
    EXPECT_GE(dy, dx / 3.0 * (1 - 1e-12));
  }
}

TEST(Sampler, RejectsRadiiOutsideDomain) {
  SamplerConfig cfg;
  cfg.count = 10;
  EXPECT_THROW(sample_analytic(radial_power_map(1.25, 2), cfg), DomainError);
  EXPECT_THROW(find_registry_map("nope"), DomainError);
}
