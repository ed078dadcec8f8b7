#include "lta/objective_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lta/errors.hpp"

namespace lta {

namespace {

void require_finite(std::span<const double> coords, const char* what) {
  for (double c : coords) {
    if (!std::isfinite(c)) detail::contract_failure(std::string(what) + ": non-finite coordinate");
  }
}

bool has_identical_rows(std::span<const double> data, std::size_t m) {
  const std::size_t n = data.size() / m;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return data.subspan(i * m, m); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ra = row(a), rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  for (std::size_t k = 1; k < n; ++k) {
    auto a = row(order[k - 1]), b = row(order[k]);
    if (std::equal(a.begin(), a.end(), b.begin())) return true;
  }
  return false;
}

double max_norm_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

}  // namespace

ObjectivePoint::ObjectivePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  detail::require(coords_.size() >= 2, "objective point needs m >= 2");
  require_finite(coords_, "objective point");
}

ReferencePoint::ReferencePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  detail::require(coords_.size() >= 2, "reference point needs m >= 2");
  require_finite(coords_, "reference point");
}

ReferencePoint ReferencePoint::uniform(std::size_t m, double value) {
  return ReferencePoint(std::vector<double>(m, value));
}

SolutionSet::SolutionSet(std::size_t m) : m_(m) {
  detail::require(m >= 1, "solution set dimension must be positive");
}

SolutionSet::SolutionSet(std::size_t m, std::vector<double> row_major, Check check)
    : m_(m), data_(std::move(row_major)) {
  detail::require(m >= 1, "solution set dimension must be positive");
  if (data_.size() % m_ != 0) detail::contract_failure("solution set data is not a multiple of m");
  require_finite(data_, "solution set");
  if (has_identical_rows(data_, m_)) detail::contract_failure("solution set contains identical points");
  if (check == Check::kNondominated && !validate_nondominated(*this)) {
    detail::contract_failure("solution set is not mutually non-dominated");
  }
}

SolutionSet::SolutionSet(std::initializer_list<std::initializer_list<double>> rows, Check check)
    : SolutionSet(from_rows(std::vector<std::vector<double>>(rows.begin(), rows.end()), check)) {}

SolutionSet SolutionSet::from_rows(const std::vector<std::vector<double>>& rows, Check check) {
  detail::require(!rows.empty(), "from_rows needs at least one row to infer m");
  const std::size_t m = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * m);
  for (const auto& r : rows) {
    if (r.size() != m) detail::contract_failure("rows of unequal dimension");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SolutionSet(m, std::move(flat), check);
}

std::optional<std::size_t> SolutionSet::find(std::span<const double> p) const {
  if (p.size() != m_) return std::nullopt;
  for (std::size_t i = 0; i < size(); ++i) {
    auto row = (*this)[i];
    if (std::equal(row.begin(), row.end(), p.begin())) return i;
  }
  return std::nullopt;
}

SolutionSet SolutionSet::without(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("SolutionSet::without index out of range");
  SolutionSet out(m_);
  out.data_.reserve(data_.size() - m_);
  out.data_.insert(out.data_.end(), data_.begin(), data_.begin() + i * m_);
  out.data_.insert(out.data_.end(), data_.begin() + (i + 1) * m_, data_.end());
  return out;
}

SolutionSet SolutionSet::subset(std::span<const std::size_t> indices) const {
  std::vector<double> flat;
  flat.reserve(indices.size() * m_);
  for (std::size_t i : indices) {
    if (i >= size()) throw std::out_of_range("SolutionSet::subset index out of range");
    auto row = (*this)[i];
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SolutionSet(m_, std::move(flat));
}

std::vector<double> SolutionSet::nadir() const {
  detail::require(!empty(), "nadir of an empty set");
  std::vector<double> out((*this)[0].begin(), (*this)[0].end());
  for (std::size_t i = 1; i < size(); ++i) {
    auto row = (*this)[i];
    for (std::size_t j = 0; j < m_; ++j) out[j] = std::max(out[j], row[j]);
  }
  return out;
}

void FrontSpec::validate() const {
  detail::require(m >= 2, "front dimension must be >= 2");
  detail::require(p >= 0.5 && p <= 2.0, "front curvature p must lie in [0.5, 2]");
}

bool weakly_dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) detail::contract_failure("dominance test on points of different dimension");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) detail::contract_failure("dominance test on points of different dimension");
  bool strict = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
    if (a[j] < b[j]) strict = true;
  }
  return strict;
}

bool validate_nondominated(const SolutionSet& set) {
  const std::size_t n = set.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && dominates(set[a], set[b])) return false;
    }
  }
  return true;
}

std::vector<double> simplex_weight_from_uniforms(std::span<const double> uniforms) {
  const std::size_t m = uniforms.size() + 1;
  detail::require(m >= 2, "simplex weight needs m >= 2");
  std::vector<double> w(m, 0.0);
  double used = 0.0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    // w_{k+1} = (1 - sum_{j<=k} w_j) * (1 - u^(1/(m-k-1)))
    const double root = std::pow(uniforms[k], 1.0 / static_cast<double>(m - k - 1));
    w[k] = (1.0 - used) * (1.0 - root);
    used += w[k];
  }
  w[m - 1] = 1.0 - used;
  if (w[m - 1] < 0.0) w[m - 1] = 0.0;
  return w;
}

std::vector<double> sample_simplex_weight(std::size_t m, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> u(m - 1);
  for (double& x : u) x = unit(rng);
  return simplex_weight_from_uniforms(u);
}

std::vector<double> project_to_front(std::span<const double> weight, const FrontSpec& spec) {
  double norm = 0.0;
  for (double w : weight) norm += std::pow(w, spec.p);
  norm = std::pow(norm, 1.0 / spec.p);
  std::vector<double> f(weight.size());
  for (std::size_t j = 0; j < weight.size(); ++j) {
    const double g = weight[j] / norm;
    f[j] = spec.shape == FrontShape::kTriangular ? g : 1.0 - g;
  }
  return f;
}

SolutionSet sample_front(const FrontSpec& spec, std::size_t count, Rng& rng) {
  return detail::sample_front_from(spec, count, [&rng](std::size_t m) { return sample_simplex_weight(m, rng); });
}

namespace detail {

SolutionSet sample_front_from(const FrontSpec& spec, std::size_t count, const WeightSource& weights) {
  spec.validate();
  detail::require(count >= 2, "sample_front needs N >= 2");
  const std::size_t m = spec.m;
  constexpr double kMinSeparation = 1e-12;
  const std::size_t max_attempts = 100 * count;

  std::vector<double> flat;
  flat.reserve(count * m);
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; accepted < count; ++attempt) {
    if (attempt >= max_attempts) {
      throw SamplingError("sample_front: could not draw " + std::to_string(count) +
                          " distinct points in " + std::to_string(max_attempts) + " attempts");
    }
    const auto f = project_to_front(weights(m), spec);
    bool ok = true;
    for (std::size_t i = 0; i < accepted && ok; ++i) {
      std::span<const double> other(flat.data() + i * m, m);
      if (max_norm_distance(f, other) < kMinSeparation || dominates(f, other) ||
          dominates(other, f)) {
        ok = false;
      }
    }
    if (!ok) continue;
    flat.insert(flat.end(), f.begin(), f.end());
    ++accepted;
  }
  return SolutionSet(m, std::move(flat));
}

}  // namespace detail

ReferencePoint reference_from_factor(const SolutionSet& set, double factor) {
  detail::require(factor > 1.0, "reference factor must exceed 1");
  auto nadir = set.nadir();
  for (double& v : nadir) {
    if (!(v > 0.0)) detail::contract_failure("reference_from_factor: non-positive nadir coordinate");
    v *= factor;
  }
  return ReferencePoint(std::move(nadir));
}

bool strictly_bounded_by(const SolutionSet& set, const ReferencePoint& ref) {
  if (set.dim() != ref.dim()) detail::contract_failure("reference point dimension mismatch");
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto s = set[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!(s[j] < ref[j])) return false;
    }
  }
  return true;
}

}  // namespace lta
