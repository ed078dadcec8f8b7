#include "lta/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lta/errors.hpp"
#include "lta/hypervolume.hpp"
#include "lta/kernels.hpp"

namespace lta {

double pearson_q(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) detail::contract_failure("pearson_q: columns of different length");
  detail::require(x.size() >= 2, "pearson_q needs at least two rows");
  const auto n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

TrainingSet make_training_set(SolutionSet solutions, ReferencePoint ref) {
  auto hvc = hvc_all(solutions, ref);
  return TrainingSet{std::move(solutions), std::move(hvc), std::move(ref)};
}

void verify_hvc(const TrainingSet& set, double relative_tolerance) {
  if (set.hvc.size() != set.solutions.size()) {
    throw ValidationError("contribution cache has " + std::to_string(set.hvc.size()) + " entries for " +
                          std::to_string(set.solutions.size()) + " solutions");
  }
  const auto exact = hvc_all(set.solutions, set.ref);
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double scale = std::max(std::abs(exact[i]), std::numeric_limits<double>::min());
    if (!(std::abs(set.hvc[i] - exact[i]) <= relative_tolerance * scale)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "contribution cache entry " << i << " is " << set.hvc[i] << ", exact value " << exact[i];
      throw ValidationError(msg.str());
    }
  }
}

namespace {

SolutionSet draw_set(FrontShape shape, std::size_t m, std::size_t set_size, std::uint64_t seed, double& p_out) {
  Rng rng(seed);
  std::uniform_real_distribution<double> curvature(0.5, 2.0);
  p_out = curvature(rng);
  return sample_front(FrontSpec{shape, p_out, m}, set_size, rng);
}

}  // namespace

TrainingCorpus generate_corpus(std::size_t m, std::size_t count, std::size_t set_size, std::uint64_t seed) {
  detail::require(count >= 1, "generate_corpus needs L >= 1");
  detail::require(set_size >= 2, "generate_corpus needs N >= 2");
  TrainingCorpus corpus;
  corpus.manifest = CorpusManifest{m, count, set_size, seed, 1.2, {}};
  corpus.manifest.sets.resize(count);
  corpus.sets.reserve(count);
  const std::size_t triangular = (count + 1) / 2;
  for (std::size_t i = 0; i < count; ++i) {
    auto& info = corpus.manifest.sets[i];
    info.shape = i < triangular ? FrontShape::kTriangular : FrontShape::kInverted;
    info.seed = derive_seed(seed, i);
  }
  for (std::size_t i = 0; i < count; ++i) {
    auto& info = corpus.manifest.sets[i];
    auto points = draw_set(info.shape, m, set_size, info.seed, info.p);
    corpus.sets.push_back(make_training_set(std::move(points), ReferencePoint::uniform(m, corpus.manifest.reference_value)));
  }
  return corpus;
}

TrainingSet regenerate_set(const CorpusManifest& manifest, std::size_t index) {
  if (index >= manifest.sets.size()) throw std::out_of_range("regenerate_set: index out of range");
  const auto& info = manifest.sets[index];
  double p = 0.0;
  auto points = draw_set(info.shape, manifest.m, manifest.set_size, info.seed, p);
  if (p != info.p) throw ValidationError("manifest curvature does not match the regenerated set " + std::to_string(index));
  return make_training_set(std::move(points), ReferencePoint::uniform(manifest.m, manifest.reference_value));
}

double q_of_directions(const DirectionSet& directions, const TrainingCorpus& corpus) {
  detail::require(!directions.empty(), "q_of_directions needs directions");
  detail::require(!corpus.sets.empty(), "q_of_directions needs a non-empty corpus");
  double total = 0.0;
  for (const auto& set : corpus.sets) {
    std::vector<double> approx(set.solutions.size());
    for (std::size_t i = 0; i < approx.size(); ++i) {
      approx[i] = r2hvc(set.solutions[i], set.solutions, directions, set.ref);
    }
    total += pearson_q(set.hvc, approx);
  }
  return total / static_cast<double>(corpus.sets.size());
}

LtaState::LtaState(const TrainingCorpus& corpus, DirectionSet initial)
    : corpus_(&corpus), directions_(std::move(initial)) {
  detail::require(!corpus.sets.empty(), "training needs a non-empty corpus");
  detail::require(directions_.size() >= 1, "training needs an initial direction set");
  matrices_.reserve(corpus.sets.size());
  double total = 0.0;
  for (const auto& set : corpus.sets) {
    if (set.solutions.dim() != directions_.dim()) detail::contract_failure("corpus and direction dimensions differ");
    matrices_.emplace_back(set.solutions, set.ref, directions_);
    total += pearson_q(set.hvc, matrices_.back().values());
  }
  q_ = total / static_cast<double>(corpus.sets.size());
}

std::vector<double> LtaState::propose(std::span<const double> lambda) {
  directions_.push_back(lambda);
  std::vector<kernels::ScoringTarget> targets;
  targets.reserve(matrices_.size());
  for (std::size_t s = 0; s < matrices_.size(); ++s) {
    targets.push_back({&matrices_[s], corpus_->sets[s].hvc});
  }
  kernels::omp::append_all(targets, lambda);

  const std::size_t K = directions_.size();
  std::vector<double> table(targets.size() * K);
  kernels::omp::score_removals(targets, table);

  std::vector<double> q(K, 0.0);
  for (std::size_t s = 0; s < targets.size(); ++s) {
    for (std::size_t k = 0; k < K; ++k) q[k] += table[s * K + k];
  }
  for (double& v : q) v /= static_cast<double>(targets.size());
  return q;
}

void LtaState::remove(std::size_t k, double q_after) {
  directions_.erase(k);
  for (auto& matrix : matrices_) matrix.drop(k);
  q_ = q_after;
}

double LtaState::step(std::span<const double> lambda) {
  const auto q = propose(lambda);
  const auto best = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
  remove(best, q[best]);
  return q_;
}

TrainingResult lta_train(const TrainingCorpus& corpus, std::size_t n, std::size_t max_iterations, Rng& rng,
                         const IterationObserver& observer) {
  detail::require(n >= 2, "lta_train needs n >= 2");
  const std::size_t m = corpus.dim();
  LtaState state(corpus, gen_unv(m, n, rng));
  TrainingResult result{DirectionSet(m), {}, TrainingConfig{n, max_iterations, 0}};
  result.q_history.reserve(max_iterations + 1);
  result.q_history.push_back({0, state.q()});
  if (observer) observer(0, state.q());
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    const auto lambda = sample_unv(m, rng);
    const double q = state.step(lambda);
    result.q_history.push_back({it, q});
    if (observer) observer(it, q);
  }
  result.learned = state.directions();
  result.learned.provenance() = Provenance{
      "lta", {{"m", static_cast<std::int64_t>(m)}, {"n", static_cast<std::int64_t>(n)},
              {"max_iterations", static_cast<std::int64_t>(max_iterations)},
              {"L", static_cast<std::int64_t>(corpus.sets.size())}},
      std::nullopt};
  return result;
}

}  // namespace lta
