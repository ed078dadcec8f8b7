#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "lta/directions.hpp"
#include "lta/errors.hpp"
#include "lta/hypervolume.hpp"
#include "lta/kernels.hpp"
#include "lta/trainer.hpp"
#include "test_util.hpp"

using namespace lta;

TEST(PearsonQ, Examples) {
  const std::vector<double> a{1, 2, 3};
  EXPECT_NEAR(pearson_q(a, std::vector<double>{10, 20, 30}), 1.0, 1e-15);
  EXPECT_NEAR(pearson_q(a, std::vector<double>{3, 2, 1}), -1.0, 1e-15);
  EXPECT_EQ(pearson_q(a, std::vector<double>{5, 5, 5}), 0.0);
  EXPECT_THROW(pearson_q(a, std::vector<double>{1, 2}), ContractError);
}

TEST(PearsonQ, MatchesOracleAndAffineProperties) {
  Rng rng(1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 30);
    std::vector<double> x(n), y(n), xa(n), yn(n);
    const double scale = 0.1 + std::abs(g(rng)), offset = g(rng);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = g(rng);
      y[i] = 0.5 * x[i] + g(rng);
      xa[i] = scale * x[i] + offset;
      yn[i] = -scale * y[i];
    }
    const double q = pearson_q(x, y);
    EXPECT_GE(q, -1.0);
    EXPECT_LE(q, 1.0);
    EXPECT_NEAR(q, oracle::pearson(x, y), 1e-9);
    EXPECT_NEAR(pearson_q(xa, y), q, 1e-12);
    EXPECT_NEAR(pearson_q(x, yn), -q, 1e-12);
  }
}

namespace {

TrainingCorpus single_set_corpus(SolutionSet s, ReferencePoint r) {
  TrainingCorpus c;
  c.sets.push_back(make_training_set(std::move(s), std::move(r)));
  c.manifest.m = c.sets.front().solutions.dim();
  c.manifest.count = 1;
  c.manifest.set_size = c.sets.front().solutions.size();
  return c;
}

}  // namespace

TEST(QOfDirections, PositivelyOrderedPairIsOne) {
  const double h = std::sqrt(2.0) / 2;
  const auto corpus = single_set_corpus(SolutionSet{{0.1, 0.7}, {0.6, 0.2}}, ReferencePoint{1, 1});
  EXPECT_NEAR(q_of_directions(DirectionSet(2, {h, h}), corpus), 1.0, 1e-12);
}

TEST(QOfDirections, CopiesAverageToSameValue) {
  const auto corpus = generate_corpus(3, 1, 20, 4);
  TrainingCorpus copies = corpus;
  copies.sets.push_back(corpus.sets[0]);
  copies.sets.push_back(corpus.sets[0]);
  Rng rng(2);
  const auto dirs = gen_unv(3, 10, rng);
  EXPECT_NEAR(q_of_directions(dirs, copies), q_of_directions(dirs, corpus), 1e-15);
}

TEST(GenerateCorpus, Example) {
  const auto corpus = generate_corpus(3, 4, 10, 9);
  ASSERT_EQ(corpus.sets.size(), 4u);
  EXPECT_EQ(corpus.manifest.sets[0].shape, FrontShape::kTriangular);
  EXPECT_EQ(corpus.manifest.sets[1].shape, FrontShape::kTriangular);
  EXPECT_EQ(corpus.manifest.sets[2].shape, FrontShape::kInverted);
  EXPECT_EQ(corpus.manifest.sets[3].shape, FrontShape::kInverted);
  std::set<double> ps;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& info = corpus.manifest.sets[i];
    EXPECT_GE(info.p, 0.5);
    EXPECT_LE(info.p, 2.0);
    EXPECT_EQ(info.seed, derive_seed(9, i));
    ps.insert(info.p);
    const auto& set = corpus.sets[i];
    EXPECT_EQ(set.solutions.size(), 10u);
    EXPECT_EQ(set.ref, ReferencePoint::uniform(3, 1.2));
    for (double v : set.hvc) EXPECT_GT(v, 0.0);
    EXPECT_EQ(set.hvc, hvc_all(set.solutions, set.ref));
  }
  EXPECT_EQ(ps.size(), 4u);
}

TEST(GenerateCorpus, OddCountAndReplay) {
  const auto corpus = generate_corpus(2, 5, 8, 17);
  std::size_t triangular = 0;
  for (const auto& s : corpus.manifest.sets) triangular += s.shape == FrontShape::kTriangular;
  EXPECT_EQ(triangular, 3u);
  for (std::size_t i = 0; i < corpus.sets.size(); ++i) {
    const auto again = regenerate_set(corpus.manifest, i);
    EXPECT_EQ(again.solutions, corpus.sets[i].solutions);
    EXPECT_EQ(again.hvc, corpus.sets[i].hvc);
  }
  EXPECT_EQ(generate_corpus(2, 5, 8, 17).sets[4].solutions, corpus.sets[4].solutions);
  auto tampered = corpus.manifest;
  tampered.sets[1].p += 0.01;
  EXPECT_THROW(regenerate_set(tampered, 1), ValidationError);
}

TEST(VerifyHvc, DetectsCorruption) {
  auto set = generate_corpus(3, 1, 12, 3).sets[0];
  EXPECT_NO_THROW(verify_hvc(set));
  set.hvc[5] *= 1.0 + 1e-6;
  EXPECT_THROW(verify_hvc(set), ValidationError);
  set.hvc.pop_back();
  EXPECT_THROW(verify_hvc(set), ValidationError);
}

TEST(LtaTrain, ZeroIterationsReturnsInitialUnvSet) {
  const auto corpus = generate_corpus(3, 2, 10, 1);
  Rng rng(5), reference(5);
  const auto result = lta_train(corpus, 8, 0, rng);
  EXPECT_EQ(result.learned.flat().size(), 24u);
  const auto unv = gen_unv(3, 8, reference);
  EXPECT_TRUE(std::equal(unv.flat().begin(), unv.flat().end(), result.learned.flat().begin()));
  ASSERT_EQ(result.q_history.size(), 1u);
  EXPECT_EQ(result.q_history[0].iteration, 0u);
  EXPECT_NEAR(result.q_history[0].q, q_of_directions(unv, corpus), 1e-12);
}

TEST(LtaTrain, MonotoneDeterministicAndSized) {
  const auto corpus = generate_corpus(3, 4, 20, 2);
  Rng a(7), b(7);
  std::vector<std::size_t> seen;
  const auto r1 = lta_train(corpus, 10, 150, a, [&](std::size_t it, double) { seen.push_back(it); });
  const auto r2 = lta_train(corpus, 10, 150, b);
  EXPECT_EQ(r1.learned, r2.learned);
  ASSERT_EQ(r1.q_history.size(), 151u);
  EXPECT_EQ(seen.size(), 151u);
  EXPECT_EQ(r1.learned.size(), 10u);
  for (std::size_t t = 1; t < r1.q_history.size(); ++t) {
    EXPECT_EQ(r1.q_history[t].iteration, t);
    EXPECT_GE(r1.q_history[t].q, r1.q_history[t - 1].q);
    EXPECT_EQ(r1.q_history[t].q, r2.q_history[t].q);
  }
  EXPECT_EQ(r1.learned.provenance().generator, "lta");
  EXPECT_NEAR(r1.q_history.back().q, q_of_directions(r1.learned, corpus), 1e-9);
  EXPECT_THROW(lta_train(corpus, 1, 10, a), ContractError);
}

TEST(LtaState, FastPathEqualsFromScratch) {
  Rng rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t m = 2 + static_cast<std::size_t>(trial % 3);
    const auto corpus = generate_corpus(m, 1 + static_cast<std::size_t>(trial % 3), 5 + static_cast<std::size_t>(trial % 16), rng());
    auto dirs = gen_unv(m, 2 + static_cast<std::size_t>(trial % 9), rng);
    LtaState state(corpus, dirs);
    EXPECT_NEAR(state.q(), q_of_directions(dirs, corpus), 1e-9);
    for (int step = 0; step < 5; ++step) {
      const auto lambda = sample_unv(m, rng);
      auto extended = state.directions();
      extended.push_back(lambda);
      const auto q = state.propose(lambda);
      ASSERT_EQ(q.size(), extended.size());
      for (std::size_t k = 0; k < q.size(); ++k) {
        auto reduced = extended;
        reduced.erase(k);
        EXPECT_NEAR(q[k], q_of_directions(reduced, corpus), 1e-9);
      }
      // Removing the new column reproduces the previous value exactly.
      EXPECT_EQ(q.back(), state.q());
      const auto best = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
      state.remove(best, q[best]);
      EXPECT_EQ(state.q(), q[best]);
    }
  }
}

TEST(Kernels, ScoreRemovalsSerialMatchesParallel) {
  const auto corpus = generate_corpus(3, 6, 25, 12);
  Rng rng(13);
  const auto dirs = gen_unv(3, 12, rng);
  std::vector<LengthMatrix> a, b;
  for (const auto& s : corpus.sets) {
    a.emplace_back(s.solutions, s.ref, dirs);
    b.emplace_back(s.solutions, s.ref, dirs);
  }
  std::vector<kernels::ScoringTarget> ta, tb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ta.push_back({&a[i], corpus.sets[i].hvc});
    tb.push_back({&b[i], corpus.sets[i].hvc});
  }
  const auto lambda = sample_unv(3, rng);
  kernels::serial::append_all(ta, lambda);
  kernels::omp::append_all(tb, lambda);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(std::equal(a[i].row_sums().begin(), a[i].row_sums().end(), b[i].row_sums().begin()));
  }
  std::vector<double> s1(a.size() * 13), s2(a.size() * 13);
  kernels::serial::score_removals(ta, s1);
  kernels::omp::score_removals(tb, s2);
  EXPECT_EQ(s1, s2);
}

TEST(LtaTrain, PerIterationCostScalesGently) {
  const auto corpus = generate_corpus(3, 10, 50, 21);
  auto per_iteration = [&](std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 3; ++rep) {
      Rng rng(1);
      LtaState state(corpus, gen_unv(3, n, rng));
      const auto start = std::chrono::steady_clock::now();
      for (int it = 0; it < 100; ++it) state.step(sample_unv(3, rng));
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      best = std::min(best, elapsed.count() / 100.0);
    }
    return best;
  };
  const double t20 = per_iteration(20);
  const double t40 = per_iteration(40);
  EXPECT_LE(t40 / t20, 8.0) << "t(n=20)=" << t20 << "s t(n=40)=" << t40 << "s";
}
