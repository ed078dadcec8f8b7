#include "lta/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lta/errors.hpp"
#include "lta/version.hpp"

namespace lta::io {

namespace {

[[noreturn]] void invalid(const fs::path& path, const std::string& what) {
  throw ValidationError(path.string() + ": " + what);
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(path.string() + ": cannot open for writing");
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const fs::path& path, std::size_t line_no, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(value)) {
    invalid(path, "line " + std::to_string(line_no) + ": not a finite number: '" + t + "'");
  }
  return value;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid(path, "cannot open");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

const char* shape_name(FrontShape shape) {
  return shape == FrontShape::kTriangular ? "triangular" : "inverted";
}

FrontShape parse_shape(const std::string& name) {
  if (name == "triangular") return FrontShape::kTriangular;
  if (name == "inverted") return FrontShape::kInverted;
  throw ValidationError("unknown front shape '" + name + "'");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_solution_set(const fs::path& path, const SolutionSet& set) {
  auto out = open_out(path);
  for (std::size_t j = 0; j < set.dim(); ++j) out << (j ? "," : "") << 'f' << (j + 1);
  out << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto row = set[i];
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_double(row[j]);
    out << '\n';
  }
}

SolutionSet read_solution_set(const fs::path& path, SolutionSet::Check check) {
  const auto lines = read_lines(path);
  if (lines.empty()) invalid(path, "empty file");
  const auto header = split(lines.front(), ',');
  const std::size_t m = header.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (trim(header[j]) != "f" + std::to_string(j + 1)) invalid(path, "header must be f1,...,fm");
  }
  std::vector<double> flat;
  flat.reserve((lines.size() - 1) * m);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = split(lines[l], ',');
    if (cells.size() != m) invalid(path, "line " + std::to_string(l + 1) + ": expected " + std::to_string(m) + " columns");
    for (const auto& c : cells) flat.push_back(parse_double(path, l + 1, c));
  }
  try {
    return SolutionSet(m, std::move(flat), check);
  } catch (const ContractError& e) {
    invalid(path, e.what());
  }
}

void write_values(const fs::path& path, const std::vector<double>& values) {
  auto out = open_out(path);
  for (double v : values) out << format_double(v) << '\n';
}

std::vector<double> read_values(const fs::path& path) {
  const auto lines = read_lines(path);
  std::vector<double> out;
  out.reserve(lines.size());
  for (std::size_t l = 0; l < lines.size(); ++l) out.push_back(parse_double(path, l + 1, lines[l]));
  return out;
}

json direction_set_to_json(const DirectionSet& set, const json& config) {
  json doc;
  doc["m"] = set.dim();
  doc["n"] = set.size();
  doc["generator"] = set.provenance().generator;
  doc["seed"] = set.provenance().seed ? json(*set.provenance().seed) : json(nullptr);
  json params = json::object();
  for (const auto& [key, value] : set.provenance().params) params[key] = value;
  doc["params"] = params;
  json vectors = json::array();
  for (std::size_t k = 0; k < set.size(); ++k) {
    vectors.push_back(std::vector<double>(set[k].begin(), set[k].end()));
  }
  doc["vectors"] = std::move(vectors);
  if (!config.is_null()) {
    doc["tool_version"] = kVersion;
    doc["config"] = config;
  }
  return doc;
}

DirectionSet direction_set_from_json(const json& doc) {
  try {
    const auto m = doc.at("m").get<std::size_t>();
    const auto n = doc.at("n").get<std::size_t>();
    Provenance prov;
    prov.generator = doc.value("generator", std::string{});
    if (doc.contains("seed") && !doc.at("seed").is_null()) prov.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("params")) {
      for (const auto& [key, value] : doc.at("params").items()) prov.params.emplace_back(key, value.get<std::int64_t>());
    }
    const auto& vectors = doc.at("vectors");
    if (vectors.size() != n) throw ValidationError("direction file declares n=" + std::to_string(n) + " but lists " + std::to_string(vectors.size()) + " vectors");
    std::vector<double> flat;
    flat.reserve(n * m);
    for (const auto& v : vectors) {
      if (v.size() != m) throw ValidationError("direction vector of length " + std::to_string(v.size()) + ", expected m=" + std::to_string(m));
      for (const auto& x : v) flat.push_back(x.get<double>());
    }
    return DirectionSet(m, std::move(flat), std::move(prov));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed direction set: ") + e.what());
  } catch (const ContractError& e) {
    throw ValidationError(std::string("invalid direction set: ") + e.what());
  }
}

void write_json(const fs::path& path, const json& doc) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid(path, "cannot open");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    invalid(path, e.what());
  }
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid(path, "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_direction_set(const fs::path& path, const DirectionSet& set, const json& config) {
  write_json(path, direction_set_to_json(set, config));
}

DirectionSet read_direction_set(const fs::path& path) {
  try {
    return direction_set_from_json(read_json(path));
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind(path.string(), 0) == 0) throw;
    invalid(path, what);
  }
}

std::string set_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "set_%04zu.csv", index);
  return buf;
}

std::string hvc_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "set_%04zu.hvc.csv", index);
  return buf;
}

json manifest_to_json(const CorpusManifest& manifest, const json& config) {
  json doc;
  doc["m"] = manifest.m;
  doc["L"] = manifest.count;
  doc["N"] = manifest.set_size;
  doc["seed"] = manifest.base_seed;
  doc["reference_factor"] = manifest.reference_value;
  json sets = json::array();
  for (std::size_t i = 0; i < manifest.sets.size(); ++i) {
    const auto& s = manifest.sets[i];
    sets.push_back({{"file", set_file_name(i)}, {"hvc_file", hvc_file_name(i)}, {"shape", shape_name(s.shape)}, {"p", s.p}, {"seed", s.seed}});
  }
  doc["sets"] = std::move(sets);
  if (!config.is_null()) {
    doc["tool_version"] = kVersion;
    doc["config"] = config;
  }
  return doc;
}

CorpusManifest manifest_from_json(const json& doc) {
  try {
    CorpusManifest manifest;
    manifest.m = doc.at("m").get<std::size_t>();
    manifest.count = doc.at("L").get<std::size_t>();
    manifest.set_size = doc.at("N").get<std::size_t>();
    manifest.base_seed = doc.at("seed").get<std::uint64_t>();
    manifest.reference_value = doc.at("reference_factor").get<double>();
    for (const auto& s : doc.at("sets")) {
      manifest.sets.push_back({parse_shape(s.at("shape").get<std::string>()), s.at("p").get<double>(), s.at("seed").get<std::uint64_t>()});
    }
    if (manifest.sets.size() != manifest.count) throw ValidationError("manifest lists " + std::to_string(manifest.sets.size()) + " sets, L=" + std::to_string(manifest.count));
    return manifest;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed manifest: ") + e.what());
  }
}

void write_corpus(const fs::path& dir, const TrainingCorpus& corpus, const json& config) {
  fs::create_directories(dir);
  write_json(dir / "manifest.json", manifest_to_json(corpus.manifest, config));
  for (std::size_t i = 0; i < corpus.sets.size(); ++i) {
    write_solution_set(dir / set_file_name(i), corpus.sets[i].solutions);
    write_values(dir / hvc_file_name(i), corpus.sets[i].hvc);
  }
}

TrainingCorpus read_corpus(const fs::path& dir, bool verify_exact) {
  const auto manifest_path = dir / "manifest.json";
  if (!fs::exists(manifest_path)) invalid(manifest_path, "missing corpus manifest");
  TrainingCorpus corpus;
  try {
    corpus.manifest = manifest_from_json(read_json(manifest_path));
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind(manifest_path.string(), 0) == 0) throw;
    invalid(manifest_path, what);
  }
  const auto& manifest = corpus.manifest;
  const auto ref = ReferencePoint::uniform(manifest.m, manifest.reference_value);
  for (std::size_t i = 0; i < manifest.count; ++i) {
    const auto set_path = dir / set_file_name(i);
    const auto hvc_path = dir / hvc_file_name(i);
    auto solutions = read_solution_set(set_path);
    if (solutions.dim() != manifest.m) invalid(set_path, "dimension differs from manifest m=" + std::to_string(manifest.m));
    if (solutions.size() != manifest.set_size) invalid(set_path, "expected N=" + std::to_string(manifest.set_size) + " rows");
    if (!strictly_bounded_by(solutions, ref)) invalid(set_path, "a point does not dominate the reference point");
    if (!fs::exists(hvc_path)) invalid(hvc_path, "missing contribution cache");
    auto hvc = read_values(hvc_path);
    if (hvc.size() != solutions.size()) {
      invalid(hvc_path, "has " + std::to_string(hvc.size()) + " values for " + std::to_string(solutions.size()) + " solutions");
    }
    for (double v : hvc) {
      if (!(v >= 0.0)) invalid(hvc_path, "negative contribution");
    }
    TrainingSet set{std::move(solutions), std::move(hvc), ref};
    if (verify_exact) {
      try {
        verify_hvc(set);
      } catch (const ValidationError& e) {
        invalid(hvc_path, e.what());
      }
    }
    corpus.sets.push_back(std::move(set));
  }
  return corpus;
}

void write_q_history(const fs::path& path, const std::vector<QRecord>& history) {
  auto out = open_out(path);
  out << "iteration,Q\n";
  for (const auto& r : history) out << r.iteration << ',' << format_double(r.q) << '\n';
}

std::vector<QRecord> read_q_history(const fs::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || trim(lines.front()) != "iteration,Q") invalid(path, "header must be iteration,Q");
  std::vector<QRecord> out;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = split(lines[l], ',');
    if (cells.size() != 2) invalid(path, "line " + std::to_string(l + 1) + ": expected 2 columns");
    out.push_back({static_cast<std::size_t>(parse_double(path, l + 1, cells[0])), parse_double(path, l + 1, cells[1])});
  }
  return out;
}

}  // namespace lta::io
