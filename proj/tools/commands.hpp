#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <invbound/bounds.hpp>
#include <invbound/groebner.hpp>

#include "catalog.hpp"

namespace invbound::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kBudget = 3 };

enum class Format { Markdown, Csv };

struct RunConfig {
  std::optional<int> truncation;
  std::size_t max_candidates = kDefaultMaxCandidates;
  std::uint64_t step_budget = 10'000'000;
  double budget_seconds = 600;
  std::uint64_t seed = 0;
  int base_degree = 1;
  Format format = Format::Markdown;
  CoefficientField certification = CoefficientField::Rational;
  // Rows computed at once by `table`; 0 means one per hardware thread.
  unsigned jobs = 0;
};

// A catalog entry, or an ad hoc group given by generators.
struct Target {
  std::string label;
  PermGroup group;
  const CatalogEntry* entry = nullptr;
};

// Throws std::invalid_argument for unknown labels or bad generators.
Target resolve(const std::vector<CatalogEntry>& catalog, const std::string& label,
               const std::vector<std::string>& generators, int degree);

AnalyzeConfig analyze_config(const RunConfig& config);

// Names of the columns where the report disagrees with the entry.
std::vector<std::string> mismatches(const BoundReport& report, const CatalogEntry& entry);

int cmd_analyze(const Target& target, const RunConfig& config, std::ostream& out);
int cmd_table(const std::vector<CatalogEntry>& catalog, int degree, const RunConfig& config, std::ostream& out);
int cmd_molien(const Target& target, const RunConfig& config, std::ostream& out);
int cmd_verify(const Target& target, const std::string& path, const RunConfig& config, std::ostream& out);
int cmd_catalog_list(const std::vector<CatalogEntry>& catalog, bool check, std::ostream& out);

}  // namespace invbound::cli
