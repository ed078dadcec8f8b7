// lta_cli: direction-vector generation, corpus building, training and evaluation.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lta/directions.hpp"
#include "lta/errors.hpp"
#include "lta/eval.hpp"
#include "lta/hypervolume.hpp"
#include "lta/io.hpp"
#include "lta/parallel.hpp"
#include "lta/r2hvc.hpp"
#include "lta/trainer.hpp"
#include "lta/version.hpp"
#include "svg_plot.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Seed handling: randomized commands take --seed; when it is omitted a fresh
// one is drawn and recorded in the output.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number '" + cell + "' in '" + text + "'");
    }
  }
  return out;
}

void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
}

void write_text(const fs::path& path, const std::string& text) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lta::ValidationError(path.string() + ": cannot open for writing");
  out << text;
}

lta::ReferencePoint resolve_reference(const lta::SolutionSet& set, const std::string& ref_text, double factor) {
  if (!ref_text.empty()) {
    lta::ReferencePoint ref(parse_list(ref_text));
    if (ref.dim() != set.dim()) {
      throw lta::ValidationError("reference point has " + std::to_string(ref.dim()) + " coordinates, set has m=" +
                                 std::to_string(set.dim()));
    }
    return ref;
  }
  return lta::reference_from_factor(set, factor);
}

void require_bounded(const lta::SolutionSet& set, const lta::ReferencePoint& ref, const std::string& what) {
  if (!lta::strictly_bounded_by(set, ref)) throw lta::ValidationError(what + ": a point does not dominate the reference point");
}

// ---------------------------------------------------------------- gen-dirs

struct GenDirsArgs {
  std::string method;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t H = 0;
  std::size_t pool = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_gen_dirs(const GenDirsArgs& a) {
  if (a.m < 2) throw UsageError("--m must be at least 2");
  const bool lattice = a.method == "das";
  if (lattice && a.H == 0) throw UsageError("das needs --H >= 1");
  if (!lattice && a.n == 0) throw UsageError(a.method + " needs --n >= 1");
  if ((a.method == "mss-d" || a.method == "mss-u") && a.n < a.m) throw UsageError(a.method + " needs --n >= --m");

  json config{{"command", "gen-dirs"}, {"method", a.method}, {"m", a.m}};
  std::optional<lta::DirectionSet> dirs;
  if (lattice) {
    config["H"] = a.H;
    dirs = lta::gen_das(a.m, a.H);
  } else if (a.method == "mss-d") {
    const std::size_t pool = a.pool ? a.pool : lta::default_pool_size(a.n);
    const std::size_t H = a.H ? a.H : lta::das_level_for_count(a.m, pool);
    config["n"] = a.n;
    config["H"] = H;
    dirs = lta::gen_mss_d(a.m, a.n, H);
  } else {
    const std::uint64_t seed = resolve_seed(a.seed);
    lta::Rng rng(seed);
    config["n"] = a.n;
    config["seed"] = seed;
    if (a.method == "unv") {
      dirs = lta::gen_unv(a.m, a.n, rng);
    } else if (a.method == "jas") {
      dirs = lta::gen_jas(a.m, a.n, rng);
    } else {
      const std::size_t pool = a.pool ? a.pool : lta::default_pool_size(a.n);
      if (a.method == "kmeans-u" && pool < 10 * a.n) throw UsageError("kmeans-u needs --pool >= 10 n");
      if (pool < a.n) throw UsageError("--pool must be at least --n");
      config["pool"] = pool;
      dirs = a.method == "mss-u" ? lta::gen_mss_u(a.m, a.n, pool, rng) : lta::gen_kmeans_u(a.m, a.n, pool, rng);
    }
    dirs->provenance().seed = seed;
  }
  lta::io::write_direction_set(a.out, *dirs, config);
  std::cout << dirs->size() << " directions written to " << a.out << '\n';
  return 0;
}

// -------------------------------------------------------------- gen-corpus

struct GenCorpusArgs {
  std::size_t m = 3;
  std::size_t L = 0;
  std::size_t N = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_gen_corpus(const GenCorpusArgs& a) {
  if (a.m < 2 || a.L == 0 || a.N < 2) throw UsageError("gen-corpus needs --m >= 2, --L >= 1, --N >= 2");
  const std::uint64_t seed = resolve_seed(a.seed);
  const auto corpus = lta::generate_corpus(a.m, a.L, a.N, seed);
  const json config{{"command", "gen-corpus"}, {"m", a.m}, {"L", a.L}, {"N", a.N}, {"seed", seed}};
  lta::io::write_corpus(a.out, corpus, config);
  std::cout << a.L << " sets written to " << a.out << '\n';
  return 0;
}

// ------------------------------------------------------------------- train

struct TrainArgs {
  std::string corpus;
  std::size_t n = 0;
  std::size_t max_iterations = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string q_history;
  std::optional<std::size_t> single_set;
  bool skip_hvc_check = false;
  std::size_t log_every = 0;
};

int run_train(const TrainArgs& a) {
  if (a.n < 2) throw UsageError("--n must be at least 2");
  auto corpus = lta::io::read_corpus(a.corpus, !a.skip_hvc_check);
  if (a.single_set) {
    if (*a.single_set >= corpus.sets.size()) throw UsageError("--set index out of range");
    auto chosen = std::move(corpus.sets[*a.single_set]);
    corpus.sets.clear();
    corpus.sets.push_back(std::move(chosen));
  }
  const std::uint64_t seed = resolve_seed(a.seed);
  lta::Rng rng(seed);
  lta::IterationObserver observer;
  if (a.log_every) {
    observer = [&a](std::size_t it, double q) {
      if (it % a.log_every == 0) std::cerr << "iteration " << it << " Q=" << q << '\n';
    };
  }
  auto result = lta::lta_train(corpus, a.n, a.max_iterations, rng, observer);
  result.config.seed = seed;
  result.learned.provenance().seed = seed;

  const fs::path out(a.out);
  const fs::path history = a.q_history.empty() ? out.parent_path() / "q_history.csv" : fs::path(a.q_history);
  json config{{"command", "train"},
              {"corpus", fs::path(a.corpus).lexically_normal().generic_string()},
              {"corpus_seed", corpus.manifest.base_seed},
              {"m", corpus.dim()},
              {"L", corpus.sets.size()},
              {"N", corpus.manifest.set_size},
              {"n", a.n},
              {"max_iterations", a.max_iterations},
              {"seed", seed},
              {"q_history", history.filename().generic_string()}};
  if (a.single_set) config["set"] = *a.single_set;
  auto doc = lta::io::direction_set_to_json(result.learned, config);
  doc["initial_q"] = result.q_history.front().q;
  doc["final_q"] = result.q_history.back().q;
  lta::io::write_json(out, doc);
  lta::io::write_q_history(history, result.q_history);
  std::cout << "Q " << lta::io::format_double(result.q_history.front().q) << " -> "
            << lta::io::format_double(result.q_history.back().q) << '\n';
  return 0;
}

// ---------------------------------------------------------------- eval-cir

struct EvalCirArgs {
  std::vector<std::string> fronts;
  std::size_t m = 3;
  std::size_t M = 100;
  std::size_t N = 100;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> dirs;
  std::vector<std::string> names;
  bool self_check = false;
  std::string out;
  std::string csv;
};

int run_eval_cir(const EvalCirArgs& a) {
  if (a.M == 0 || a.N < 2) throw UsageError("eval-cir needs --M >= 1 and --N >= 2");
  if (a.dirs.empty() && !a.self_check) throw UsageError("eval-cir needs --dirs or --self-check");
  if (!a.names.empty() && a.names.size() != a.dirs.size()) throw UsageError("--name must be given once per --dirs");

  std::vector<std::string> methods;
  std::vector<lta::DirectionSet> sets;
  for (std::size_t i = 0; i < a.dirs.size(); ++i) {
    sets.push_back(lta::io::read_direction_set(a.dirs[i]));
    if (sets.back().dim() != a.m) {
      throw lta::ValidationError(a.dirs[i] + ": direction dimension " + std::to_string(sets.back().dim()) +
                                 " does not match --m " + std::to_string(a.m));
    }
    methods.push_back(a.names.empty() ? fs::path(a.dirs[i]).stem().string() : a.names[i]);
  }
  if (a.self_check) methods.push_back("exact");

  std::vector<lta::FrontFamily> fronts;
  if (a.fronts.empty()) {
    fronts = lta::standard_fronts(a.m);
  } else {
    for (const auto& name : a.fronts) fronts.push_back(lta::front_family(name, a.m));
  }

  const std::uint64_t seed = resolve_seed(a.seed);
  json config{{"command", "eval-cir"}, {"m", a.m}, {"M", a.M}, {"N", a.N}, {"seed", seed}, {"self_check", a.self_check}};
  json fronts_json = json::array();
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    fronts_json.push_back({{"name", fronts[f].name},
                           {"shape", fronts[f].spec.shape == lta::FrontShape::kTriangular ? "triangular" : "inverted"},
                           {"p", fronts[f].spec.p},
                           {"seed", lta::derive_seed(seed, f)}});
  }
  config["fronts"] = fronts_json;
  json method_files = json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    method_files.push_back({{"name", methods[i]},
                            {"file", fs::path(a.dirs[i]).filename().generic_string()},
                            {"generator", sets[i].provenance().generator},
                            {"n", sets[i].size()},
                            {"seed", sets[i].provenance().seed ? json(*sets[i].provenance().seed) : json(nullptr)}});
  }
  config["methods"] = method_files;

  // scores[method][front]
  std::vector<std::vector<double>> scores(methods.size(), std::vector<double>(fronts.size()));
  json results = json::array();
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    const auto suite = lta::make_cir_suite(fronts[f].spec, a.M, a.N, lta::derive_seed(seed, f));
    for (std::size_t k = 0; k < methods.size(); ++k) {
      const bool exact = k == sets.size();
      const auto outcome = exact ? lta::cir_with([](const lta::SolutionSet& s, const lta::ReferencePoint& r) {
                                     return lta::hvc_all(s, r);
                                   }, suite)
                                 : lta::cir(sets[k], suite);
      scores[k][f] = outcome.rate;
      std::string bits;
      for (char c : outcome.correct) bits += c ? '1' : '0';
      results.push_back({{"method", methods[k]}, {"front", fronts[f].name}, {"cir", outcome.rate}, {"correct", bits}});
    }
  }
  const auto table = lta::rank_methods(scores, true);
  json averages = json::object();
  for (std::size_t k = 0; k < methods.size(); ++k) {
    double mean = 0.0;
    for (double s : scores[k]) mean += s;
    averages[methods[k]] = {{"mean_cir", mean / static_cast<double>(fronts.size())}, {"average_rank", table.average[k]}};
  }

  json report{{"tool_version", lta::kVersion}, {"config", config}, {"results", results}, {"summary", averages}};
  lta::io::write_json(a.out, report);

  const fs::path csv_path = a.csv.empty() ? fs::path(a.out).replace_extension(".csv") : fs::path(a.csv);
  std::ostringstream csv;
  csv << "method,instance,cir,rank\n";
  for (std::size_t k = 0; k < methods.size(); ++k) {
    for (std::size_t f = 0; f < fronts.size(); ++f) {
      csv << methods[k] << ',' << fronts[f].name << ',' << lta::io::format_double(scores[k][f]) << ','
          << lta::io::format_double(table.ranks[k][f]) << '\n';
    }
  }
  write_text(csv_path, csv.str());

  for (std::size_t k = 0; k < methods.size(); ++k) {
    std::cout << methods[k];
    for (std::size_t f = 0; f < fronts.size(); ++f) std::cout << ' ' << fronts[f].name << '=' << scores[k][f];
    std::cout << " avg_rank=" << table.average[k] << '\n';
  }
  return 0;
}

// ------------------------------------------------------------------- gahss

struct GahssArgs {
  std::string candidates;
  std::string front;
  std::size_t m = 3;
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
  std::string dirs;
  std::size_t k = 0;
  std::string ref;
  double ref_factor = 1.2;
  std::string out;
  std::string report;
};

int run_gahss(const GahssArgs& a) {
  json config{{"command", "gahss"}, {"k", a.k}};
  std::optional<lta::SolutionSet> candidates;
  if (!a.candidates.empty()) {
    candidates = lta::io::read_solution_set(a.candidates, lta::SolutionSet::Check::kNondominated);
    config["candidates"] = fs::path(a.candidates).filename().generic_string();
  } else {
    if (a.front.empty() || a.count == 0) throw UsageError("gahss needs --candidates or --front with --count");
    const std::uint64_t seed = resolve_seed(a.seed);
    const auto family = lta::front_family(a.front, a.m);
    lta::Rng rng(seed);
    candidates = lta::sample_front(family.spec, a.count, rng);
    config["front"] = a.front;
    config["m"] = a.m;
    config["count"] = a.count;
    config["seed"] = seed;
  }
  const auto dirs = lta::io::read_direction_set(a.dirs);
  if (dirs.dim() != candidates->dim()) {
    throw lta::ValidationError(a.dirs + ": direction dimension " + std::to_string(dirs.dim()) +
                               " does not match candidate dimension " + std::to_string(candidates->dim()));
  }
  if (a.k == 0) throw UsageError("--k must be at least 1");
  if (a.k > candidates->size()) throw UsageError("--k exceeds the number of candidates");
  const auto ref = resolve_reference(*candidates, a.ref, a.ref_factor);
  require_bounded(*candidates, ref, "candidates");
  if (a.ref.empty()) config["ref_factor"] = a.ref_factor;
  config["directions"] = fs::path(a.dirs).filename().generic_string();

  const auto result = lta::gahss(*candidates, a.k, dirs, ref);
  const auto subset = candidates->subset(result.selected);
  lta::io::write_solution_set(a.out, subset);

  const fs::path report_path = a.report.empty() ? fs::path(a.out).replace_extension(".json") : fs::path(a.report);
  config["out"] = fs::path(a.out).filename().generic_string();
  json report{{"tool_version", lta::kVersion},
              {"config", config},
              {"selected", result.selected},
              {"hypervolume", result.hypervolume},
              {"reference", result.reference},
              {"candidate_count", result.candidate_count},
              {"directions", {{"generator", dirs.provenance().generator},
                              {"n", dirs.size()},
                              {"seed", dirs.provenance().seed ? json(*dirs.provenance().seed) : json(nullptr)}}}};
  lta::io::write_json(report_path, report);
  std::cout << lta::io::format_double(result.hypervolume) << '\n';
  return 0;
}

// ---------------------------------------------------------------- hv / hvc

struct HvArgs {
  std::string set;
  std::string ref;
  double ref_factor = 0.0;
  std::string dirs;
  std::string out;
};

lta::ReferencePoint hv_reference(const lta::SolutionSet& set, const HvArgs& a) {
  if (a.ref.empty() && a.ref_factor <= 0.0) throw UsageError("give --ref or --ref-factor");
  const auto ref = resolve_reference(set, a.ref, a.ref_factor);
  require_bounded(set, ref, a.set);
  return ref;
}

int run_hv(const HvArgs& a) {
  const auto set = lta::io::read_solution_set(a.set);
  const auto ref = hv_reference(set, a);
  std::cout << lta::io::format_double(lta::hypervolume(set, ref)) << '\n';
  return 0;
}

int run_hvc(const HvArgs& a) {
  const auto set = lta::io::read_solution_set(a.set, lta::SolutionSet::Check::kNondominated);
  const auto ref = hv_reference(set, a);
  std::vector<double> values;
  if (a.dirs.empty()) {
    values = lta::hvc_all(set, ref);
  } else {
    const auto dirs = lta::io::read_direction_set(a.dirs);
    if (dirs.dim() != set.dim()) {
      throw lta::ValidationError(a.dirs + ": direction dimension " + std::to_string(dirs.dim()) +
                                 " does not match set dimension " + std::to_string(set.dim()));
    }
    values = lta::r2hvc_all(set, dirs, ref);
  }
  if (a.out.empty()) {
    for (double v : values) std::cout << lta::io::format_double(v) << '\n';
  } else {
    lta::io::write_values(a.out, values);
  }
  return 0;
}

// -------------------------------------------------------------------- plot

struct PlotArgs {
  std::vector<std::string> q_history;
  std::string cir_csv;
  std::string out;
};

int run_plot(const PlotArgs& a) {
  if (a.q_history.empty() == a.cir_csv.empty()) throw UsageError("plot needs exactly one of --q-history or --cir");
  std::string svg;
  if (!a.q_history.empty()) {
    std::vector<lta::plot::Series> series;
    for (const auto& path : a.q_history) {
      lta::plot::Series s{fs::path(path).parent_path().filename().string(), {}, {}};
      if (s.label.empty()) s.label = fs::path(path).stem().string();
      for (const auto& r : lta::io::read_q_history(path)) {
        s.x.push_back(static_cast<double>(r.iteration));
        s.y.push_back(r.q);
      }
      series.push_back(std::move(s));
    }
    svg = lta::plot::line_chart("Training objective", "iteration", "Q", series);
  } else {
    std::ifstream in(a.cir_csv);
    if (!in) throw lta::ValidationError(a.cir_csv + ": cannot open");
    std::string line;
    std::getline(in, line);
    if (line.rfind("method,instance,cir", 0) != 0) throw lta::ValidationError(a.cir_csv + ": not a CIR summary");
    std::vector<std::string> methods;
    std::vector<lta::plot::BarGroup> groups;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::stringstream ss(line);
      std::string method, instance, value;
      std::getline(ss, method, ',');
      std::getline(ss, instance, ',');
      std::getline(ss, value, ',');
      auto mit = std::find(methods.begin(), methods.end(), method);
      const auto mi = static_cast<std::size_t>(mit - methods.begin());
      if (mit == methods.end()) methods.push_back(method);
      auto git = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.label == instance; });
      if (git == groups.end()) {
        groups.push_back({instance, {}});
        git = groups.end() - 1;
      }
      if (git->values.size() <= mi) git->values.resize(mi + 1, 0.0);
      git->values[mi] = parse_list(value).at(0);
    }
    for (auto& g : groups) g.values.resize(methods.size(), 0.0);
    svg = lta::plot::bar_chart("Correct identification rate", "CIR", methods, groups);
  }
  write_text(a.out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learned direction vectors for hypervolume contribution approximation"};
  app.set_version_flag("--version", std::string(lta::kVersion));
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  GenDirsArgs gd;
  auto* gen_dirs = app.add_subcommand("gen-dirs", "Generate a direction vector set");
  gen_dirs->add_option("--method", gd.method, "Generator")
      ->required()
      ->check(CLI::IsMember({"das", "unv", "jas", "mss-d", "mss-u", "kmeans-u"}));
  gen_dirs->add_option("--m", gd.m, "Number of objectives")->required();
  gen_dirs->add_option("--n", gd.n, "Number of vectors (all methods except das)");
  gen_dirs->add_option("--H", gd.H, "Lattice level (das; base lattice for mss-d)");
  gen_dirs->add_option("--pool", gd.pool, "Candidate pool size (mss-d, mss-u, kmeans-u)");
  gen_dirs->add_option("--seed", gd.seed, "Random seed");
  gen_dirs->add_option("--out", gd.out, "Output JSON")->required();

  GenCorpusArgs gc;
  auto* gen_corpus = app.add_subcommand("gen-corpus", "Sample a training corpus with cached contributions");
  gen_corpus->add_option("--m", gc.m, "Number of objectives")->required();
  gen_corpus->add_option("--L", gc.L, "Number of solution sets")->required();
  gen_corpus->add_option("--N", gc.N, "Solutions per set")->required();
  gen_corpus->add_option("--seed", gc.seed, "Random seed");
  gen_corpus->add_option("--out", gc.out, "Output directory")->required();

  TrainArgs tr;
  auto* train = app.add_subcommand("train", "Learn a direction vector set");
  train->add_option("--corpus", tr.corpus, "Corpus directory")->required();
  train->add_option("--n", tr.n, "Direction set size")->required();
  train->add_option("--max-iterations", tr.max_iterations, "Iterations")->required();
  train->add_option("--seed", tr.seed, "Random seed");
  train->add_option("--out", tr.out, "Output JSON")->required();
  train->add_option("--q-history", tr.q_history, "Learning curve CSV (default: q_history.csv next to --out)");
  train->add_option("--set", tr.single_set, "Train on this single corpus set only");
  train->add_flag("--skip-hvc-check", tr.skip_hvc_check, "Trust cached contributions without recomputing them");
  train->add_option("--log-every", tr.log_every, "Print Q to stderr every k iterations");

  EvalCirArgs ec;
  auto* eval_cir = app.add_subcommand("eval-cir", "Correct identification rate of direction sets");
  eval_cir->add_option("--front", ec.fronts, "Front family (repeatable; default all six)")
      ->check(CLI::IsMember({"linear-triangular", "concave-triangular", "convex-triangular", "linear-inverted",
                             "convex-inverted", "concave-inverted"}));
  eval_cir->add_option("--m", ec.m, "Number of objectives");
  eval_cir->add_option("--M", ec.M, "Test sets per front");
  eval_cir->add_option("--N", ec.N, "Solutions per test set");
  eval_cir->add_option("--seed", ec.seed, "Random seed");
  eval_cir->add_option("--dirs", ec.dirs, "Direction set JSON (repeatable)");
  eval_cir->add_option("--name", ec.names, "Method label per --dirs");
  eval_cir->add_flag("--self-check", ec.self_check, "Also score the exact contribution");
  eval_cir->add_option("--out", ec.out, "Report JSON")->required();
  eval_cir->add_option("--csv", ec.csv, "Score and rank grid (default: report path with .csv)");

  GahssArgs gh;
  auto* gahss_cmd = app.add_subcommand("gahss", "Greedy approximated hypervolume subset selection");
  gahss_cmd->add_option("--candidates", gh.candidates, "Candidate set CSV");
  gahss_cmd->add_option("--front", gh.front, "Sample candidates from this front family instead");
  gahss_cmd->add_option("--m", gh.m, "Number of objectives for --front");
  gahss_cmd->add_option("--count", gh.count, "Number of sampled candidates for --front");
  gahss_cmd->add_option("--seed", gh.seed, "Random seed for --front");
  gahss_cmd->add_option("--dirs", gh.dirs, "Direction set JSON")->required();
  gahss_cmd->add_option("--k", gh.k, "Subset size")->required();
  gahss_cmd->add_option("--ref", gh.ref, "Reference point, comma separated");
  gahss_cmd->add_option("--ref-factor", gh.ref_factor, "Reference = factor * nadir when --ref is absent");
  gahss_cmd->add_option("--out", gh.out, "Selected subset CSV")->required();
  gahss_cmd->add_option("--report", gh.report, "Report JSON (default: --out with .json)");

  HvArgs hv_args;
  auto* hv = app.add_subcommand("hv", "Exact hypervolume of a solution set");
  hv->add_option("--set", hv_args.set, "Solution set CSV")->required();
  hv->add_option("--ref", hv_args.ref, "Reference point, comma separated");
  hv->add_option("--ref-factor", hv_args.ref_factor, "Reference = factor * nadir");

  HvArgs hvc_args;
  auto* hvc = app.add_subcommand("hvc", "Per-solution contributions (exact, or approximate with --dirs)");
  hvc->add_option("--set", hvc_args.set, "Solution set CSV")->required();
  hvc->add_option("--ref", hvc_args.ref, "Reference point, comma separated");
  hvc->add_option("--ref-factor", hvc_args.ref_factor, "Reference = factor * nadir");
  hvc->add_option("--dirs", hvc_args.dirs, "Direction set JSON for the line-based approximation");
  hvc->add_option("--out", hvc_args.out, "Write values here instead of stdout");

  PlotArgs pl;
  auto* plot = app.add_subcommand("plot", "Render learning curves or CIR summaries to SVG");
  plot->add_option("--q-history", pl.q_history, "q_history.csv (repeatable)");
  plot->add_option("--cir", pl.cir_csv, "CIR grid CSV from eval-cir");
  plot->add_option("--out", pl.out, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    lta::set_num_threads(threads);
    if (*gen_dirs) return run_gen_dirs(gd);
    if (*gen_corpus) return run_gen_corpus(gc);
    if (*train) return run_train(tr);
    if (*eval_cir) return run_eval_cir(ec);
    if (*gahss_cmd) return run_gahss(gh);
    if (*hv) return run_hv(hv_args);
    if (*hvc) return run_hvc(hvc_args);
    if (*plot) return run_plot(pl);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lta::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const lta::ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const lta::SizeError& e) {
    std::cerr << "size error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const lta::SamplingError& e) {
    std::cerr << "sampling error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
