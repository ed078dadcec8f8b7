/**
 * @file io.hpp
 * @brief On-disk formats: solution-set and value CSVs, direction-set JSON,
 *        training-corpus directories and learning curves.
 *
 * Doubles are written in the shortest decimal form that reads back to the
 * same value. Readers throw ValidationError naming the offending file.
 */
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "lta/directions.hpp"
#include "lta/objective_space.hpp"
#include "lta/trainer.hpp"

namespace lta::io {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double value);

/// Header `f1,...,fm`, one row per point.
void write_solution_set(const fs::path& path, const SolutionSet& set);
SolutionSet read_solution_set(const fs::path& path, SolutionSet::Check check = SolutionSet::Check::kBasic);

/// One value per row, no header.
void write_values(const fs::path& path, const std::vector<double>& values);
std::vector<double> read_values(const fs::path& path);

/// `{"m", "n", "generator", "seed", "vectors"}` plus `params`, and
/// `tool_version` / `config` when `config` is not null.
json direction_set_to_json(const DirectionSet& set, const json& config = nullptr);
DirectionSet direction_set_from_json(const json& doc);
void write_direction_set(const fs::path& path, const DirectionSet& set, const json& config = nullptr);
DirectionSet read_direction_set(const fs::path& path);

std::string set_file_name(std::size_t index);
std::string hvc_file_name(std::size_t index);

json manifest_to_json(const CorpusManifest& manifest, const json& config = nullptr);
CorpusManifest manifest_from_json(const json& doc);

/// manifest.json, set_####.csv and set_####.hvc.csv.
void write_corpus(const fs::path& dir, const TrainingCorpus& corpus, const json& config = nullptr);

/// Loads a corpus directory. Structural checks always run (row counts,
/// non-negative contributions, dimensions); `verify_exact` additionally
/// recomputes every contribution to 1e-9 relative.
TrainingCorpus read_corpus(const fs::path& dir, bool verify_exact = true);

/// Columns `iteration,Q`.
void write_q_history(const fs::path& path, const std::vector<QRecord>& history);
std::vector<QRecord> read_q_history(const fs::path& path);

void write_json(const fs::path& path, const json& doc);
json read_json(const fs::path& path);

std::string read_text(const fs::path& path);

}  // namespace lta::io
