#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domino/exact.hpp"
#include "domino/families.hpp"
#include "domino/online.hpp"

namespace domino {

/// One (instance, variant, algorithm) result row. Optima are absent when
/// the instance exceeds a solver cap.
struct RatioReport {
  std::string instance;
  Variant variant = Variant::DS;
  std::string algorithm;
  std::optional<int> alg_size;
  std::optional<int> opt_inc;
  std::optional<int> opt_off;
  int n = 0;
  int delta = 0;
  std::string notes;
};

/// Instance sources accepted by an experiment grid.
struct InstanceSource {
  enum class Kind { Family, File, Duel, Random } kind = Kind::Family;
  FamilySpec family;            // Kind::Family
  std::string path;             // Kind::File
  std::string adversary;        // Kind::Duel: "tree" | "two-layer"
  std::string duel_algorithm;   // Kind::Duel
  int duel_n = 0;               // Kind::Duel (tree)
  int duel_delta = 0;           // Kind::Duel (two-layer)
  std::string model;            // Kind::Random: "tree" | "connected" | "bipartite"
  int random_n = 0;             // Kind::Random
  int random_count = 1;         // Kind::Random
  std::uint64_t seed = 0;       // Kind::Random
};

struct ExperimentConfig {
  std::vector<InstanceSource> instances;
  std::vector<Variant> variants;
  std::vector<std::string> algorithms;  // policy names, plus "opt-inc"
  bool baseline_off = true;
  bool baseline_inc = true;
  SolverCaps caps;
  std::uint64_t seed = 1;
  std::string out;              // empty = stdout
  std::string format = "csv";   // csv | md
};

/// Parses the flat key=value config format (repeated keys for lists,
/// `#` comments). Throws ConfigError on unknown keys or bad values.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

/// Runs the grid. One row per (instance, variant, algorithm); baselines are
/// computed or marked cap-exceeded; an infeasible algorithm step becomes a
/// failure row and the run continues. Rows come out sorted by
/// (instance, variant, algorithm); output is deterministic given seeds.
std::vector<RatioReport> run_experiment(const ExperimentConfig& cfg);

enum class TableFormat { Csv, Markdown };

/// Renders rows with the columns
/// instance,variant,algorithm,alg_size,opt_inc,opt_off,ratio_inc,ratio_off,n,delta,notes.
/// Ratios are strict per-instance quotients rounded half-to-even to three
/// decimals; cells for missing optima are left empty.
std::string emit_table(const std::vector<RatioReport>& reports, TableFormat format);

}  // namespace domino
