#include "qsat/scan.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qsat/errors.hpp"
#include "qsat/kernel.hpp"
#include "qsat/matching.hpp"
#include "qsat/rng.hpp"

namespace qsat {

namespace {

struct PointCounts {
  std::atomic<long> sat{0}, unsat{0}, undecided{0};
};

// Runs `trials` work items per point across `jobs` threads. The verdict of
// a trial depends only on its derived seed, so scheduling cannot change
// the counts.
template <typename TrialFn>
void run_trials(std::size_t n_points, long trials, int jobs,
                std::vector<PointCounts>& counts, const TrialFn& trial) {
  const long total = static_cast<long>(n_points) * trials;
  std::atomic<long> next{0};
  const int workers = std::max(1, jobs);
  auto worker = [&] {
    for (;;) {
      const long item = next.fetch_add(1);
      if (item >= total) return;
      const std::size_t point = static_cast<std::size_t>(item) / trials;
      const long t = item % trials;
      const int outcome = trial(point, t);
      if (outcome > 0)
        counts[point].sat.fetch_add(1);
      else if (outcome < 0)
        counts[point].unsat.fetch_add(1);
      else
        counts[point].undecided.fetch_add(1);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
}

}  // namespace

const char* to_string(GraphProperty p) {
  return p == GraphProperty::coverable ? "coverable" : "core_nonempty";
}

const char* to_string(EnsembleMode m) {
  return m == EnsembleMode::fixed_count ? "fixed-count" : "binomial";
}

ScanResult scan_graph_property(int k, int n, const std::vector<double>& alpha_grid,
                               long trials, GraphProperty property, std::uint64_t seed,
                               EnsembleMode mode, int jobs) {
  if (alpha_grid.empty() || trials < 1)
    throw InvalidParameters("scan_graph_property: empty grid or no trials");

  ScanResult result;
  result.property = to_string(property);
  result.k = k;
  result.n_list = {n};
  result.alpha_grid = alpha_grid;
  result.trials = trials;
  result.seed = seed;
  result.mode = mode;
  result.jobs = jobs;

  std::vector<PointCounts> counts(alpha_grid.size());
  run_trials(alpha_grid.size(), trials, jobs, counts,
             [&](std::size_t point, long t) -> int {
               EnsembleParams params{n, k, alpha_grid[point], mode,
                                     derive_seed(derive_seed(seed, point), t)};
               const Graph g = sample_graph(params);
               const bool hit = property == GraphProperty::coverable
                                    ? is_clause_coverable(g)
                                    : hypercore(g).n_clauses() > 0;
               return hit ? 1 : -1;
             });

  for (std::size_t i = 0; i < alpha_grid.size(); ++i)
    result.points.push_back({k, n, alpha_grid[i], trials, counts[i].sat.load(),
                             counts[i].unsat.load(), counts[i].undecided.load()});
  return result;
}

ScanResult scan_sat_probability(int k, const std::vector<int>& n_list,
                                const std::vector<double>& alpha_grid, long trials,
                                std::uint64_t seed, EnsembleMode mode, double tol_zero,
                                double tol_gap, int max_iters, int dense_cutoff,
                                int jobs) {
  if (n_list.empty() || alpha_grid.empty() || trials < 1)
    throw InvalidParameters("scan_sat_probability: empty grid or no trials");
  for (int n : n_list)
    if (n > 24) throw LimitExceeded("scan_sat_probability: N exceeds 24");

  ScanResult result;
  result.property = "sat";
  result.k = k;
  result.n_list = n_list;
  result.alpha_grid = alpha_grid;
  result.trials = trials;
  result.seed = seed;
  result.mode = mode;
  result.jobs = jobs;
  result.settings = {tol_zero, tol_gap, max_iters, dense_cutoff};

  const std::size_t n_points = n_list.size() * alpha_grid.size();
  std::vector<PointCounts> counts(n_points);
  run_trials(n_points, trials, jobs, counts, [&](std::size_t point, long t) -> int {
    const int n = n_list[point / alpha_grid.size()];
    const double alpha = alpha_grid[point % alpha_grid.size()];
    const std::uint64_t trial_seed = derive_seed(derive_seed(seed, point), t);
    EnsembleParams params{n, k, alpha, mode, derive_seed(trial_seed, 0)};
    const Graph g = sample_graph(params);
    const ProjectorSet proj =
        sample_projectors(g, derive_seed(trial_seed, 1), ProjectorForm::generic);
    if (n <= dense_cutoff) {
      const KernelResult kd = kernel_dimension(g, proj);
      if (kd.marginal) return 0;
      return kd.dimension > 0 ? 1 : -1;
    }
    const SatVerdict v = decide_sat(g, proj, tol_zero, tol_gap, max_iters, 24,
                                    derive_seed(trial_seed, 2));
    if (v.verdict == Verdict::SAT) return 1;
    if (v.verdict == Verdict::UNSAT) return -1;
    return 0;
  });

  std::size_t point = 0;
  for (int n : n_list)
    for (double alpha : alpha_grid) {
      result.points.push_back({k, n, alpha, trials, counts[point].sat.load(),
                               counts[point].unsat.load(),
                               counts[point].undecided.load()});
      ++point;
    }
  return result;
}

std::vector<Crossing> estimate_crossings(const ScanResult& scan, double level) {
  if (!(level > 0.0 && level < 1.0))
    throw InvalidParameters("estimate_crossings: level must be in (0, 1)");
  std::vector<Crossing> crossings;
  for (int n : scan.n_list) {
    std::vector<const ScanPoint*> curve;
    for (const auto& p : scan.points)
      if (p.n == n) curve.push_back(&p);

    Crossing c;
    c.n = n;
    bool found = false;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
      const double f0 = curve[i]->fraction();
      const double f1 = curve[i + 1]->fraction();
      if (f1 > f0) c.monotone = false;
      if (!found && f0 >= level && f1 < level) {
        const double da = curve[i + 1]->alpha - curve[i]->alpha;
        const double df = f0 - f1;
        c.alpha_at_level = curve[i]->alpha + (f0 - level) * da / df;
        const double se =
            std::hypot(curve[i]->stderr_fraction(), curve[i + 1]->stderr_fraction());
        c.alpha_stderr = df > 0 ? se * da / df : 0.0;
        found = true;
      }
    }
    if (!found)
      throw NoBracket("estimate_crossings: curve does not cross the level for N=" +
                      std::to_string(n));
    for (const auto* p : curve)
      if (p->fraction() > 0.9) c.tick_lower = std::max(c.tick_lower, p->alpha);
    c.tick_upper = curve.back()->alpha;
    for (auto it = curve.rbegin(); it != curve.rend(); ++it)
      if ((*it)->fraction() < 0.1) c.tick_upper = (*it)->alpha;
    crossings.push_back(c);
  }
  return crossings;
}

namespace {

// Shortest round-trip decimal representation.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string scan_to_csv(const ScanResult& scan) {
  std::ostringstream out;
  out << "k,N,alpha,trials,sat,unsat,undecided,fraction,stderr\n";
  for (const auto& p : scan.points)
    out << p.k << ',' << p.n << ',' << fmt(p.alpha) << ',' << p.trials << ','
        << p.sat << ',' << p.unsat << ',' << p.undecided << ',' << fmt(p.fraction())
        << ',' << fmt(p.stderr_fraction()) << '\n';
  return out.str();
}

std::string scan_to_json(const ScanResult& scan) {
  nlohmann::json j;
  j["property"] = scan.property;
  j["k"] = scan.k;
  j["n_list"] = scan.n_list;
  j["alpha_grid"] = scan.alpha_grid;
  j["trials"] = scan.trials;
  j["seed"] = scan.seed;
  j["mode"] = to_string(scan.mode);
  j["jobs"] = scan.jobs;
  if (scan.property == "sat") {
    j["settings"] = {{"tol_zero", scan.settings.tol_zero},
                     {"tol_gap", scan.settings.tol_gap},
                     {"max_iters", scan.settings.max_iters},
                     {"dense_cutoff", scan.settings.dense_cutoff}};
  }
  auto& points = j["points"] = nlohmann::json::array();
  for (const auto& p : scan.points)
    points.push_back({{"k", p.k},
                      {"N", p.n},
                      {"alpha", p.alpha},
                      {"trials", p.trials},
                      {"sat", p.sat},
                      {"unsat", p.unsat},
                      {"undecided", p.undecided},
                      {"fraction", p.fraction()},
                      {"stderr", p.stderr_fraction()}});
  return j.dump(2);
}

}  // namespace qsat
