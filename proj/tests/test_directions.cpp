#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "lta/directions.hpp"
#include "lta/errors.hpp"
#include "lta/kernels.hpp"
#include "test_util.hpp"

using namespace lta;

namespace {

void expect_valid(const DirectionSet& dirs) {
  ASSERT_GE(dirs.size(), 1u);
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    double sq = 0.0;
    for (double x : dirs[k]) {
      EXPECT_GE(x, 0.0);
      sq += x * x;
    }
    EXPECT_NEAR(std::sqrt(sq), 1.0, 1e-12);
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<oracle::Point> as_points(const DirectionSet& d) {
  std::vector<oracle::Point> out;
  for (std::size_t k = 0; k < d.size(); ++k) out.push_back(testutil::vec(d[k]));
  return out;
}

std::vector<oracle::Point> axes(std::size_t m) {
  std::vector<oracle::Point> out;
  for (std::size_t j = 0; j < m; ++j) {
    oracle::Point e(m, 0.0);
    e[j] = 1.0;
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST(DirectionVector, Invariants) {
  EXPECT_NO_THROW(DirectionVector({1.0, 0.0}));
  EXPECT_THROW(DirectionVector({1.0, 1.0}), ContractError);
  EXPECT_THROW(DirectionVector({-1.0, 0.0}), ContractError);
  EXPECT_THROW(DirectionSet(2, {0.6, 0.6}), ContractError);
}

TEST(WeightToDirection, Examples) {
  EXPECT_EQ(weight_to_direction(std::vector<double>{1, 0, 0}), DirectionVector({1, 0, 0}));
  const auto a = weight_to_direction(std::vector<double>{1, 1});
  EXPECT_NEAR(a[0], std::sqrt(2.0) / 2, 1e-12);
  EXPECT_NEAR(a[1], std::sqrt(2.0) / 2, 1e-12);
  const auto b = weight_to_direction(std::vector<double>{2, 0, 2});
  EXPECT_NEAR(b[0], std::sqrt(2.0) / 2, 1e-12);
  EXPECT_EQ(b[1], 0.0);
  EXPECT_NEAR(b[2], std::sqrt(2.0) / 2, 1e-12);
  EXPECT_THROW(weight_to_direction(std::vector<double>{0, 0}), ContractError);
  EXPECT_THROW(weight_to_direction(std::vector<double>{1, -1}), ContractError);
}

TEST(Das, Examples) {
  const auto d = gen_das(3, 2);
  EXPECT_EQ(d.size(), 6u);
  expect_valid(d);
  const auto pts = as_points(d);
  for (const auto& e : axes(3)) EXPECT_NE(std::find(pts.begin(), pts.end(), e), pts.end());
  const double h = std::sqrt(2.0) / 2;
  bool found_half = false;
  for (const auto& p : pts) found_half = found_half || (std::abs(p[0] - h) < 1e-15 && std::abs(p[1] - h) < 1e-15);
  EXPECT_TRUE(found_half);
  EXPECT_EQ(gen_das(3, 12).size(), 91u);
  EXPECT_EQ(gen_das(2, 4).size(), 5u);
  EXPECT_THROW(gen_das(3, 0), ContractError);
}

TEST(Das, CountsMatchBinomial) {
  for (std::size_t m = 2; m <= 7; ++m) {
    for (std::size_t H = 1; H <= 12; ++H) {
      const std::uint64_t expected = binomial(H + m - 1, m - 1);
      EXPECT_EQ(das_count(m, H), expected);
      if (expected <= 20000) EXPECT_EQ(gen_das(m, H).size(), expected);
    }
  }
  EXPECT_THROW(das_count(200, 1u << 30), SizeError);
}

TEST(Das, LexicographicAndDeterministic) {
  const auto d = gen_das(3, 4);
  EXPECT_EQ(d, gen_das(3, 4));
  // Consecutive lattice weights compare lexicographically in ascending order.
  for (std::size_t k = 1; k < d.size(); ++k) {
    const auto a = testutil::vec(d[k - 1]), b = testutil::vec(d[k]);
    std::vector<double> wa(a.size()), wb(b.size());
    double sa = 0, sb = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      sa += a[j];
      sb += b[j];
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
      wa[j] = std::round(4 * a[j] / sa);
      wb[j] = std::round(4 * b[j] / sb);
    }
    EXPECT_LT(wa, wb);
  }
}

TEST(Unv, Examples) {
  Rng rng(42);
  const auto d = gen_unv(3, 5, rng);
  EXPECT_EQ(d.size(), 5u);
  expect_valid(d);
  Rng a(7), b(7);
  EXPECT_EQ(gen_unv(4, 50, a), gen_unv(4, 50, b));
}

TEST(Unv, MeanAngleOnQuarterCircle) {
  Rng rng(1);
  const std::size_t n = 10000;
  const auto d = gen_unv(2, n, rng);
  double mean = 0.0;
  for (std::size_t k = 0; k < n; ++k) mean += std::atan2(d[k][1], d[k][0]);
  mean /= static_cast<double>(n);
  // Uniform on [0, pi/2]: standard deviation (pi/2)/sqrt(12).
  const double se = (std::numbers::pi / 2) / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
  EXPECT_NEAR(mean, std::numbers::pi / 4, 3 * se);
}

TEST(Jas, HandEvaluatedRecursion) {
  const auto w = simplex_weight_from_uniforms(std::vector<double>{0.25});
  const auto lambda = weight_to_direction(w);
  EXPECT_NEAR(lambda[0], 0.9487, 1e-4);
  EXPECT_NEAR(lambda[1], 0.3162, 1e-4);
}

TEST(Jas, InvariantsAndDeterminism) {
  Rng rng(1);
  expect_valid(gen_jas(3, 1000, rng));
  Rng a(3), b(3);
  EXPECT_EQ(gen_jas(5, 40, a), gen_jas(5, 40, b));
}

TEST(Mss, AxesOnlyWhenNEqualsM) {
  const auto d = gen_mss(gen_das(3, 12), 3);
  EXPECT_EQ(as_points(d), axes(3));
}

TEST(Mss, CenterDirectionPickedFirst) {
  const double c = 1.0 / std::sqrt(3.0);
  const auto base = gen_das(3, 3);  // contains the normalized (1,1,1)
  const auto d = gen_mss(base, 4);
  EXPECT_NEAR(d[3][0], c, 1e-15);
  EXPECT_NEAR(d[3][1], c, 1e-15);
  EXPECT_NEAR(d[3][2], c, 1e-15);
}

TEST(Mss, MatchesBruteForceMaxMin) {
  Rng rng(5);
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto base = gen_unv(m, 300, rng);
    const auto d = gen_mss(base, 25);
    EXPECT_EQ(as_points(d), oracle::mss_bruteforce(axes(m), as_points(base), 25));
  }
}

TEST(Mss, ClosureAndMonotoneSpacing) {
  Rng rng(6);
  const auto base = gen_unv(3, 200, rng);
  const auto pts = as_points(base);
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t n = 3; n <= 40; ++n) {
    const auto d = gen_mss(base, n);
    EXPECT_EQ(d.size(), n);
    expect_valid(d);
    double min_pair = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = testutil::vec(d[i]);
      const bool is_axis = std::count(p.begin(), p.end(), 1.0) == 1;
      EXPECT_TRUE(is_axis || std::find(pts.begin(), pts.end(), p) != pts.end());
      for (std::size_t j = 0; j < i; ++j) min_pair = std::min(min_pair, oracle::distance(p, testutil::vec(d[j])));
    }
    EXPECT_LE(min_pair, previous);
    previous = min_pair;
  }
}

TEST(Mss, Errors) {
  EXPECT_THROW(gen_mss(gen_das(3, 1), 5), SizeError);
  EXPECT_THROW(gen_mss(gen_das(3, 4), 2), ContractError);
}

TEST(Mss, Variants) {
  const auto d = gen_mss_d(3, 20, 12);
  EXPECT_EQ(d.size(), 20u);
  expect_valid(d);
  EXPECT_EQ(as_points(d), as_points(gen_mss(gen_das(3, 12), 20)));
  EXPECT_EQ(d.provenance().generator, "mss-d");
  Rng a(8), b(8);
  const auto u = gen_mss_u(3, 20, 500, a);
  EXPECT_EQ(u, gen_mss_u(3, 20, 500, b));
  expect_valid(u);
  Rng c(8);
  EXPECT_EQ(as_points(gen_mss_u(3, 3, 100, c)), axes(3));
}

TEST(Mss, DefaultLatticeLevelCoversPool) {
  EXPECT_EQ(default_pool_size(30), 3000u);
  EXPECT_EQ(default_pool_size(5000), 100000u);
  const std::size_t H = das_level_for_count(3, 3000);
  EXPECT_GE(das_count(3, H), 3000u);
  EXPECT_LT(das_count(3, H - 1), 3000u);
}

TEST(KMeans, Invariants) {
  Rng rng(1);
  const std::size_t pool = 10000;
  Rng pool_rng(1);
  const auto pool_set = gen_unv(3, pool, pool_rng);
  const auto d = gen_kmeans_u(3, 91, pool, rng);
  EXPECT_EQ(d.size(), 91u);
  expect_valid(d);
  const auto pts = as_points(pool_set);
  std::set<oracle::Point> seen;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto p = testutil::vec(d[k]);
    EXPECT_NE(std::find(pts.begin(), pts.end(), p), pts.end());
    EXPECT_TRUE(seen.insert(p).second);
  }
}

TEST(KMeans, SingleClusterIsNearestToMean) {
  Rng rng(3), pool_rng(3);
  const std::size_t pool = 200;
  const auto pool_set = gen_unv(3, pool, pool_rng);
  const auto d = gen_kmeans_u(3, 1, pool, rng);
  oracle::Point mean(3, 0.0);
  for (std::size_t i = 0; i < pool; ++i) {
    for (std::size_t j = 0; j < 3; ++j) mean[j] += pool_set[i][j] / static_cast<double>(pool);
  }
  const auto pts = as_points(pool_set);
  EXPECT_EQ(testutil::vec(d[0]), pts[oracle::nearest(pts, mean)]);
}

TEST(KMeans, DeterministicAndValidated) {
  Rng a(9), b(9);
  EXPECT_EQ(gen_kmeans_u(4, 12, 500, a), gen_kmeans_u(4, 12, 500, b));
  Rng c(9);
  EXPECT_THROW(gen_kmeans_u(3, 10, 99, c), ContractError);
}

TEST(Kernels, MinDistanceAndAssignmentAgree) {
  Rng rng(10);
  const auto pool = gen_unv(3, 5000, rng);
  const auto centroids = gen_unv(3, 40, rng);
  std::vector<double> d1(pool.size(), 1e9), d2(pool.size(), 1e9);
  kernels::serial::update_min_distance(pool.flat(), 3, centroids[0], d1);
  kernels::omp::update_min_distance(pool.flat(), 3, centroids[0], d2);
  EXPECT_EQ(d1, d2);
  std::vector<std::size_t> l1(pool.size()), l2(pool.size());
  std::vector<double> e1(pool.size()), e2(pool.size());
  kernels::serial::assign_nearest(pool.flat(), centroids.flat(), 3, l1, e1);
  kernels::omp::assign_nearest(pool.flat(), centroids.flat(), 3, l2, e2);
  EXPECT_EQ(l1, l2);
  EXPECT_EQ(e1, e2);
}

TEST(DirectionSet, EditingAndProvenance) {
  DirectionSet d(2, Provenance{"test", {{"n", 2}}, 5});
  d.push_back(std::vector<double>{1.0, 0.0});
  d.push_back(std::vector<double>{0.0, 1.0});
  EXPECT_EQ(d.size(), 2u);
  d.erase(0);
  EXPECT_EQ(testutil::vec(d[0]), (oracle::Point{0.0, 1.0}));
  EXPECT_THROW(d.erase(3), std::out_of_range);
  EXPECT_THROW(d.push_back(std::vector<double>{1.0, 0.0, 0.0}), ContractError);
  EXPECT_EQ(d.provenance().generator, "test");
  EXPECT_EQ(d.provenance().seed, std::optional<std::uint64_t>(5));
}
