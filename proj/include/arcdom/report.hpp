#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcdom/graph.hpp"
#include "arcdom/rational.hpp"

namespace arcdom {

/// One row of a verification campaign. Bounds stay absent when their
/// hypotheses fail for the graph; gamma entries stay absent when a solver
/// budget was exceeded (the note records why).
struct AnalysisReport {
  std::string id;
  int n = 0, m = 0, delta = 0, max_degree = 0;
  bool connected = false, claw_free = false;
  std::optional<int> gamma, gamma_x;
  std::optional<int> bound_general;        // CSV column bound_thm3
  std::optional<Rational> bound_degree;    // CSV column bound_thm4
  std::optional<int> bound_product;        // CSV column bound_eqdel
  std::optional<int> bound_clawfree;       // 4*gamma
  std::optional<int> size_general;         // CSV column size_thm3
  std::optional<int> size_clawfree;
  bool verified = true;
  std::vector<std::string> notes;

  /// A computed bound below the exact arc-graph domination number, a
  /// construction exceeding its bound, or a failed verification.
  bool violation() const;
};

struct AnalyzeOptions {
  int gamma_set_cap = 10000;
  bool run_constructions = true;
};

AnalysisReport analyze(const Graph& g, const std::string& id,
                       const AnalyzeOptions& options = {});

std::string csv_header();
std::string csv_row(const AnalysisReport& row);

struct BenchSummary {
  int rows = 0;
  int violations = 0;
  int errors = 0;
  int tight_general = 0;   // gamma_x equals the general bound
  int tight_clawfree = 0;  // gamma_x equals 4*gamma
};

struct BenchResult {
  std::vector<AnalysisReport> rows;
  BenchSummary summary;
};

/// Analyzes the corpus with a bounded worker pool; row order follows the
/// input regardless of scheduling.
BenchResult run_bench(const std::vector<std::pair<std::string, Graph>>& corpus,
                      int jobs = 1, const AnalyzeOptions& options = {});

std::string summary_json(const BenchResult& result, std::uint64_t seed);

}  // namespace arcdom
