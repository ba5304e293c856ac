#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qsat/graph.hpp"

namespace qsat {

enum class GraphProperty { coverable, core_nonempty };

struct ScanPoint {
  int k = 0;
  int n = 0;
  double alpha = 0.0;
  long trials = 0;
  long sat = 0;        // property holds / instance SAT
  long unsat = 0;      // property fails / instance UNSAT
  long undecided = 0;  // iterative solver gave up (SAT scans only)

  // Undecided instances are excluded from the ratio's denominator but
  // reported alongside.
  double fraction() const {
    const long decided = sat + unsat;
    return decided > 0 ? static_cast<double>(sat) / decided : 0.0;
  }
  double stderr_fraction() const {
    const long decided = sat + unsat;
    if (decided <= 0) return 0.0;
    const double f = fraction();
    return std::sqrt(f * (1.0 - f) / decided);
  }
};

// Iterative-solver settings recorded with every SAT scan; zero for pure
// graph-property scans.
struct ScanSettings {
  double tol_zero = 0.0;
  double tol_gap = 0.0;
  int max_iters = 0;
  int dense_cutoff = 0;
};

struct ScanResult {
  std::string property;  // "coverable" | "core_nonempty" | "sat"
  int k = 0;
  std::vector<int> n_list;
  std::vector<double> alpha_grid;
  long trials = 0;
  std::uint64_t seed = 0;
  EnsembleMode mode = EnsembleMode::fixed_count;
  int jobs = 1;
  ScanSettings settings;
  std::vector<ScanPoint> points;  // ordered by (n, alpha)
};

// Monte Carlo estimate of a clause-graph property over an alpha grid.
// Per-trial seeds derive from (seed, point index, trial index), so results
// are identical for any jobs count.
ScanResult scan_graph_property(int k, int n, const std::vector<double>& alpha_grid,
                               long trials, GraphProperty property, std::uint64_t seed,
                               EnsembleMode mode = EnsembleMode::fixed_count,
                               int jobs = 1);

// SAT-probability scan with generic projectors: dense kernel decision for
// N <= dense_cutoff qubits, iterative smallest-eigenvalue test above, with
// UNDECIDED tallied separately.
ScanResult scan_sat_probability(int k, const std::vector<int>& n_list,
                                const std::vector<double>& alpha_grid, long trials,
                                std::uint64_t seed,
                                EnsembleMode mode = EnsembleMode::fixed_count,
                                double tol_zero = 1e-10, double tol_gap = 1e-8,
                                int max_iters = 2000, int dense_cutoff = 10,
                                int jobs = 1);

struct Crossing {
  int n = 0;
  double alpha_at_level = 0.0;  // linear interpolation of the ratio curve
  double alpha_stderr = 0.0;    // binomial error propagated through the slope
  double tick_lower = 0.0;      // largest alpha with ratio > 0.9
  double tick_upper = 0.0;      // smallest alpha with ratio < 0.1
  bool monotone = true;         // raw curve was non-increasing
};

// Per-N crossing of the ratio curve at `level` (default 1/2). Throws
// NoBracket when a curve never crosses the level.
std::vector<Crossing> estimate_crossings(const ScanResult& scan, double level = 0.5);

// CSV columns: k,N,alpha,trials,sat,unsat,undecided,fraction,stderr.
std::string scan_to_csv(const ScanResult& scan);
std::string scan_to_json(const ScanResult& scan);

const char* to_string(GraphProperty p);
const char* to_string(EnsembleMode m);

}  // namespace qsat
