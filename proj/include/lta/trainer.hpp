/**
 * @file trainer.hpp
 * @brief Pearson objective over training corpora and the steady-state
 *        direction-set learner.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lta/directions.hpp"
#include "lta/objective_space.hpp"
#include "lta/r2hvc.hpp"

namespace lta {

/// Sample Pearson correlation; 0 when either column has zero variance.
double pearson_q(std::span<const double> x, std::span<const double> y);

/// Provenance of one corpus member, enough to regenerate it.
struct CorpusSetInfo {
  FrontShape shape = FrontShape::kTriangular;
  double p = 1.0;
  std::uint64_t seed = 0;
};

struct TrainingSet {
  SolutionSet solutions;
  std::vector<double> hvc;
  ReferencePoint ref;
};

/// Builds a training set and computes its exact contributions.
TrainingSet make_training_set(SolutionSet solutions, ReferencePoint ref);

/// Recomputes the contributions and throws ValidationError unless every
/// cached entry matches within `relative_tolerance`.
void verify_hvc(const TrainingSet& set, double relative_tolerance = 1e-9);

struct CorpusManifest {
  std::size_t m = 3;
  std::size_t count = 0;  // L
  std::size_t set_size = 0;  // N
  std::uint64_t base_seed = 0;
  /// Reference point is (reference_value, ..., reference_value).
  double reference_value = 1.2;
  std::vector<CorpusSetInfo> sets;
};

struct TrainingCorpus {
  std::vector<TrainingSet> sets;
  CorpusManifest manifest;

  std::size_t dim() const { return sets.empty() ? 0 : sets.front().solutions.dim(); }
};

/// ceil(L/2) triangular then floor(L/2) inverted sets; set i is drawn from
/// an rng seeded with derive_seed(seed, i): first p ~ U[0.5, 2], then the points.
TrainingCorpus generate_corpus(std::size_t m, std::size_t count, std::size_t set_size,
                               std::uint64_t seed);

/// Set i of a corpus rebuilt from its manifest entry.
TrainingSet regenerate_set(const CorpusManifest& manifest, std::size_t index);

/// Mean over sets of pearson_q(hvc, r2hvc under `directions`), evaluated
/// point by point without the length cache.
double q_of_directions(const DirectionSet& directions, const TrainingCorpus& corpus);

struct QRecord {
  std::size_t iteration = 0;
  double q = 0.0;
};

struct TrainingConfig {
  std::size_t n = 0;
  std::size_t max_iterations = 0;
  std::uint64_t seed = 0;
};

struct TrainingResult {
  DirectionSet learned;
  std::vector<QRecord> q_history;
  TrainingConfig config;
};

/**
 * Incremental state of the learner: one length cache per training set bound
 * to the current direction set.
 */
class LtaState {
 public:
  LtaState(const TrainingCorpus& corpus, DirectionSet initial);

  const DirectionSet& directions() const { return directions_; }
  double q() const { return q_; }

  /// Appends `lambda` and returns, for every column k of the enlarged set,
  /// the averaged Q with column k removed. Must be followed by remove().
  std::vector<double> propose(std::span<const double> lambda);

  /// Removes column k; `q_after` is the value propose() reported for k.
  void remove(std::size_t k, double q_after);

  /// propose + argmax (lowest index on ties) + remove; returns the new Q.
  double step(std::span<const double> lambda);

 private:
  const TrainingCorpus* corpus_;
  DirectionSet directions_;
  std::vector<LengthMatrix> matrices_;
  double q_ = 0.0;
};

using IterationObserver = std::function<void(std::size_t iteration, double q)>;

/// Initialise with n UNV vectors, then per iteration append one UNV vector
/// and drop the column whose removal maximises Q. Both draws use `rng`.
TrainingResult lta_train(const TrainingCorpus& corpus, std::size_t n, std::size_t max_iterations,
                         Rng& rng, const IterationObserver& observer = {});

}  // namespace lta
