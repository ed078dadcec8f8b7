#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lta/errors.hpp"
#include "lta/hypervolume.hpp"
#include "lta/kernels.hpp"
#include "test_util.hpp"

using namespace lta;

namespace {

const SolutionSet kThree{{0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}};
const ReferencePoint kUnit{1.0, 1.0};

}  // namespace

TEST(Hypervolume, Examples) {
  EXPECT_DOUBLE_EQ(hypervolume(SolutionSet{{0.5, 0.5}}, kUnit), 0.25);
  EXPECT_NEAR(hypervolume(kThree, kUnit), oracle::hv_2d_sweep(testutil::rows(kThree), {1.0, 1.0}), 1e-15);
  EXPECT_NEAR(hypervolume(kThree, kUnit), 0.375, 1e-15);
  EXPECT_NEAR(hypervolume(SolutionSet{{0.0, 0.0, 0.0}}, ReferencePoint::uniform(3, 1.2)), 1.728, 1e-12);
}

TEST(Hypervolume, PointNotDominatingReferenceIsContractError) {
  EXPECT_THROW(hypervolume(SolutionSet{{0.5, 1.0}}, kUnit), ContractError);
  EXPECT_THROW(hypervolume(SolutionSet{{0.5, 0.5, 0.5}}, kUnit), ContractError);
  EXPECT_THROW(hvc_all(SolutionSet{{1.5, 0.5}}, kUnit), ContractError);
}

TEST(Hypervolume, EmptySetIsZero) { EXPECT_EQ(hypervolume(SolutionSet(2), kUnit), 0.0); }

TEST(Hypervolume, MatchesSweepOn2D) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto set = testutil::random_front(2, 2 + static_cast<std::size_t>(trial % 49), rng);
    const ReferencePoint ref{1.2, 1.2};
    EXPECT_NEAR(hypervolume(set, ref), oracle::hv_2d_sweep(testutil::rows(set), {1.2, 1.2}), 1e-12);
  }
}

TEST(Hypervolume, MatchesGridOracleInHigherDimensions) {
  Rng rng(22);
  for (std::size_t m = 3; m <= 5; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = m == 5 ? 5 : 8;
      const auto set = testutil::random_front(m, n, rng);
      const auto ref = ReferencePoint::uniform(m, 1.1);
      const oracle::Point r(m, 1.1);
      EXPECT_NEAR(hypervolume(set, ref), oracle::hv_grid(testutil::rows(set), r), 1e-12) << "m=" << m;
    }
  }
}

TEST(Hypervolume, PairInclusionExclusion) {
  Rng rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t m = 2; m <= 6; ++m) {
    for (int trial = 0; trial < 50; ++trial) {
      oracle::Point a(m), b(m);
      for (std::size_t j = 0; j < m; ++j) {
        a[j] = u(rng);
        b[j] = u(rng);
      }
      const oracle::Point r(m, 1.0);
      const auto set = SolutionSet::from_rows({a, b});
      EXPECT_NEAR(hypervolume(set, ReferencePoint(r)), oracle::hv_pair(a, b, r), 1e-12);
    }
  }
}

TEST(Hypervolume, DominatedMembersAreIgnored) {
  const SolutionSet with_dominated{{0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}, {0.6, 0.6}};
  EXPECT_NEAR(hypervolume(with_dominated, kUnit), 0.375, 1e-15);
  const auto hvc = hvc_all(with_dominated, kUnit);
  EXPECT_EQ(hvc[3], 0.0);
}

TEST(Hypervolume, PermutationInvarianceAndMonotonicity) {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 2 + static_cast<std::size_t>(trial % 4);
    const auto set = testutil::random_front(m, 12, rng);
    const auto ref = ReferencePoint::uniform(m, 1.2);
    std::vector<std::size_t> perm(set.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double hv = hypervolume(set, ref);
    EXPECT_NEAR(hypervolume(set.subset(perm), ref), hv, 1e-12 * hv);
    const auto hvc = hvc_all(set, ref);
    const auto hvc_perm = hvc_all(set.subset(perm), ref);
    for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_NEAR(hvc_perm[i], hvc[perm[i]], 1e-12 * hv);
    // Growing the set never shrinks the volume.
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::vector<std::size_t> prefix(perm.begin(), perm.begin() + static_cast<long>(i) + 1);
      std::vector<std::size_t> shorter(perm.begin(), perm.begin() + static_cast<long>(i));
      EXPECT_GE(hypervolume(set.subset(prefix), ref), hypervolume(set.subset(shorter), ref));
    }
  }
}

TEST(Contribution, Examples) {
  EXPECT_NEAR(hvc_exact(ObjectivePoint{0.5, 0.5}, kThree, kUnit), 0.0625, 1e-15);
  const double via_difference =
      oracle::hv_2d_sweep(testutil::rows(kThree), {1, 1}) - oracle::hv_2d_sweep({{0.25, 0.75}, {0.75, 0.25}}, {1, 1});
  EXPECT_NEAR(hvc_exact(ObjectivePoint{0.5, 0.5}, kThree, kUnit), via_difference, 1e-15);
  EXPECT_DOUBLE_EQ(hvc_exact(ObjectivePoint{0.5, 0.5}, SolutionSet{{0.5, 0.5}}, kUnit), 0.25);
  EXPECT_EQ(hvc_exact(ObjectivePoint{0.9, 0.9}, SolutionSet{{0.5, 0.5}}, kUnit), 0.0);
}

TEST(Contribution, NonMemberAddsVolumeDifference) {
  const SolutionSet base{{0.25, 0.75}, {0.75, 0.25}};
  EXPECT_NEAR(hvc_exact(ObjectivePoint{0.5, 0.5}, base, kUnit), 0.0625, 1e-15);
}

TEST(Contribution, AllExamples) {
  const auto hvc = hvc_all(kThree, kUnit);
  ASSERT_EQ(hvc.size(), 3u);
  for (double v : hvc) EXPECT_NEAR(v, 0.0625, 1e-15);
  EXPECT_EQ(hvc_all(SolutionSet{{0.5, 0.5}}, kUnit), std::vector<double>{0.25});
}

TEST(Contribution, HvcAllEqualsOneAtATimeExactly) {
  Rng rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + static_cast<std::size_t>(trial % 4);
    const auto set = testutil::random_front(m, 15, rng);
    const auto ref = ReferencePoint::uniform(m, 1.2);
    const auto all = hvc_all(set, ref);
    for (std::size_t i = 0; i < set.size(); ++i) {
      EXPECT_EQ(all[i], hvc_exact(set[i], set, ref));
      EXPECT_GT(all[i], 0.0);
    }
  }
}

TEST(Contribution, MatchesDifferenceOfGridVolumes) {
  Rng rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const auto set = testutil::random_front(3, 7, rng);
    const oracle::Point r(3, 1.2);
    const auto pts = testutil::rows(set);
    const double total = oracle::hv_grid(pts, r);
    const auto hvc = hvc_all(set, ReferencePoint(r));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto rest = pts;
      rest.erase(rest.begin() + static_cast<long>(i));
      EXPECT_NEAR(hvc[i], total - oracle::hv_grid(rest, r), 1e-12);
    }
  }
}

TEST(Contribution, SerialAndParallelKernelsAgreeBitwise) {
  Rng rng(27);
  for (int trial = 0; trial < 5; ++trial) {
    const auto set = testutil::random_front(3, 40, rng);
    const auto ref = ReferencePoint::uniform(3, 1.2);
    EXPECT_EQ(kernels::serial::hvc_all(set, ref), kernels::omp::hvc_all(set, ref));
  }
}

TEST(MonteCarlo, SingleBox) {
  Rng rng(28);
  const auto est = mc_hypervolume(SolutionSet{{0.5, 0.5}}, kUnit, 100000, rng);
  // Every sample lands inside the box [s, r], so the estimate is exact.
  EXPECT_NEAR(est.estimate, 0.25, 4 * est.standard_error + 1e-15);
}

TEST(MonteCarlo, AgreesWithExactIn3D) {
  Rng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    const auto set = testutil::random_front(3, 20, rng);
    const auto ref = ReferencePoint::uniform(3, 1.2);
    const auto est = mc_hypervolume(set, ref, 100000, rng);
    EXPECT_LE(std::abs(est.estimate - hypervolume(set, ref)), 4 * est.standard_error);
  }
}

TEST(MonteCarlo, StandardErrorScaling) {
  Rng rng(30);
  const auto set = testutil::random_front(3, 10, rng);
  const auto ref = ReferencePoint::uniform(3, 1.2);
  const auto small = mc_hypervolume(set, ref, 100000, rng);
  const auto large = mc_hypervolume(set, ref, 1000000, rng);
  EXPECT_NEAR(small.standard_error / large.standard_error, std::sqrt(10.0), 0.1);
}

TEST(MonteCarlo, NeedsEnoughSamples) {
  Rng rng(31);
  EXPECT_THROW(mc_hypervolume(SolutionSet{{0.5, 0.5}}, kUnit, 999, rng), ContractError);
}
