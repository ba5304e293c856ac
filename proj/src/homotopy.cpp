#include "qsat/homotopy.hpp"

#include <algorithm>
#include <cmath>

#include "qsat/errors.hpp"
#include "qsat/rng.hpp"

namespace qsat {

namespace {

// Jacobian of the clause overlaps with respect to the local chart
// coordinates: column q holds d c_m / d z_q, i.e. the overlap with site q
// replaced by its orthogonal frame vector. Sparse as the clause-qubit
// adjacency; stored dense at desk scale.
Eigen::MatrixXcd overlap_jacobian(int n_qubits, const std::vector<Clause>& clauses,
                                  const ProjectorSet& proj, const ProductState& s,
                                  const std::vector<Eigen::Vector2cd>& perps) {
  const int m = static_cast<int>(clauses.size());
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(m, n_qubits);
  for (int i = 0; i < m; ++i) {
    const Clause& cl = clauses[i];
    const Eigen::VectorXcd& phi = proj.states[i];
    const int local_dim = static_cast<int>(phi.size());
    for (std::size_t slot = 0; slot < cl.size(); ++slot) {
      std::complex<double> acc = 0.0;
      for (int l = 0; l < local_dim; ++l) {
        std::complex<double> term = std::conj(phi[l]);
        for (std::size_t j = 0; j < cl.size(); ++j) {
          const int bit = (l >> j) & 1;
          term *= (j == slot) ? perps[cl[j]][bit] : s.sites[cl[j]][bit];
        }
        acc += term;
      }
      jac(i, cl[slot]) += acc;
    }
  }
  return jac;
}

void advance(ProductState& s, const Eigen::VectorXcd& dz,
             const std::vector<Eigen::Vector2cd>& perps, double scale) {
  for (int q = 0; q < s.n(); ++q) {
    s.sites[q] += scale * dz[q] * perps[q];
    s.sites[q] /= s.sites[q].norm();
  }
}

struct NewtonOutcome {
  bool reached = false;
  double energy = 0.0;
  double condition = 0.0;  // first-iteration Jacobian condition estimate
};

// Damped Gauss-Newton on the clause system, rebasing the orthonormal site
// frames at every iterate. With allow_rank_deficient the least-squares
// step is used as-is (the search path); otherwise a Jacobian rank below M
// aborts the continuation.
NewtonOutcome newton_to_zero(int n_qubits, const std::vector<Clause>& clauses,
                             const ProjectorSet& proj, ProductState& s, double tol,
                             int max_iters, int max_halvings, double rank_tol,
                             bool allow_rank_deficient) {
  NewtonOutcome out;
  Eigen::VectorXcd c = clause_overlaps(clauses, proj, s);
  double energy = c.squaredNorm();
  std::vector<Eigen::Vector2cd> perps(n_qubits);

  for (int iter = 0; iter < max_iters; ++iter) {
    if (energy < tol) {
      out.reached = true;
      out.energy = energy;
      return out;
    }
    for (int q = 0; q < n_qubits; ++q) perps[q] = perp(s.sites[q]);
    const Eigen::MatrixXcd jac =
        overlap_jacobian(n_qubits, clauses, proj, s, perps);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod;
    cod.setThreshold(rank_tol);
    cod.compute(jac);
    if (iter == 0) {
      const auto diag = cod.matrixQTZ().diagonal();
      const Eigen::Index r = std::max<Eigen::Index>(cod.rank(), 1);
      const double largest = std::abs(diag[0]);
      const double smallest = std::abs(diag[r - 1]);
      out.condition = smallest > 0 ? largest / smallest : INFINITY;
    }
    if (!allow_rank_deficient && cod.rank() < static_cast<Eigen::Index>(clauses.size()))
      throw ContinuationFailure("continuation: jacobian rank-deficient");

    const Eigen::VectorXcd dz = cod.solve(-c);
    double scale = 1.0;
    bool improved = false;
    for (int h = 0; h <= max_halvings; ++h) {
      ProductState trial = s;
      advance(trial, dz, perps, scale);
      Eigen::VectorXcd c_trial = clause_overlaps(clauses, proj, trial);
      const double e_trial = c_trial.squaredNorm();
      if (e_trial < energy) {
        s = std::move(trial);
        c = std::move(c_trial);
        energy = e_trial;
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) break;  // stalled
  }
  out.reached = energy < tol;
  out.energy = energy;
  return out;
}

ProjectorSet interpolate_projectors(const ProjectorSet& start,
                                    const ProjectorSet& target, double t) {
  ProjectorSet out;
  out.k = target.k;
  out.product_form = false;
  out.states.reserve(target.states.size());
  for (std::size_t m = 0; m < target.states.size(); ++m) {
    Eigen::VectorXcd phi = (1.0 - t) * start.states[m] + t * target.states[m];
    const double nrm = phi.norm();
    if (nrm < 1e-8)
      throw ContinuationFailure("continuation: interpolated projector vanished");
    out.states.push_back(phi / nrm);
  }
  return out;
}

}  // namespace

std::pair<ProductState, HomotopyTrace> continue_product_state(
    int n_qubits, const std::vector<Clause>& clauses, const ProjectorSet& proj_target,
    const ProjectorSet& proj_start, const ProductState& s_start,
    const ContinuationOptions& opts) {
  if (proj_target.n_clauses() != static_cast<int>(clauses.size()) ||
      proj_start.n_clauses() != proj_target.n_clauses())
    throw DimensionMismatch("continuation: projector counts do not match");
  if (opts.steps < 1) throw InvalidParameters("continuation: need steps >= 1");

  ProductState s = s_start;
  HomotopyTrace trace;
  std::vector<ChartRecord> charts(n_qubits);
  for (int q = 0; q < n_qubits; ++q) charts[q] = chart_of(s.sites[q]);

  for (int step = 1; step <= opts.steps; ++step) {
    const double t = static_cast<double>(step) / opts.steps;
    const ProjectorSet proj_t = interpolate_projectors(proj_start, proj_target, t);
    const NewtonOutcome res =
        newton_to_zero(n_qubits, clauses, proj_t, s, opts.tol, opts.max_newton,
                       opts.max_halvings, opts.rank_tol, /*allow_rank_deficient=*/false);
    trace.jacobian_condition.push_back(res.condition);
    ++trace.steps;
    if (!res.reached)
      throw ContinuationFailure("continuation: corrector failed to converge at t=" +
                                std::to_string(t));
    for (int q = 0; q < n_qubits; ++q) {
      const ChartRecord rec = chart_of(s.sites[q]);
      if (rec.flipped != charts[q].flipped) ++trace.chart_flips;
      charts[q] = rec;
    }
  }
  trace.final_residual = energy_of_product_state(clauses, proj_target, s);
  return {std::move(s), std::move(trace)};
}

std::pair<ProductState, HomotopyTrace> continue_product_state(
    const Graph& g, const ProjectorSet& proj_target, const ProjectorSet& proj_start,
    const ProductState& s_start, const ContinuationOptions& opts) {
  return continue_product_state(g.n_qubits, g.clauses, proj_target, proj_start, s_start,
                                opts);
}

ProductState solve_product_state(const Graph& g, const ProjectorSet& proj_target,
                                 std::uint64_t seed, ContinuationOptions opts,
                                 int max_retries) {
  const Matching cover = max_clause_matching(g);
  if (!cover.covers_all())
    throw NotCoverable("solve_product_state: graph has no dimer covering");

  for (int attempt = 0;; ++attempt) {
    try {
      const ProjectorSet proj_start = sample_projectors(
          g, derive_seed(seed, 2 * attempt), ProjectorForm::product);
      const ProductState s0 =
          product_seed_state(g, proj_start, cover, derive_seed(seed, 2 * attempt + 1));
      return continue_product_state(g, proj_target, proj_start, s0, opts).first;
    } catch (const ContinuationFailure&) {
      if (attempt >= max_retries) throw;
      opts.steps *= 2;  // finer schedule on retry
    }
  }
}

EnumerationResult enumerate_product_states(int n_qubits,
                                           const std::vector<Clause>& clauses, int k,
                                           const ProjectorSet& proj_target,
                                           std::uint64_t seed, std::uint64_t max_states,
                                           const ContinuationOptions& opts) {
  std::vector<char> touched(n_qubits, 0);
  for (const auto& cl : clauses)
    for (int q : cl) touched[q] = 1;
  const int touched_count =
      static_cast<int>(std::count(touched.begin(), touched.end(), char{1}));
  if (static_cast<int>(clauses.size()) != touched_count)
    throw InvalidParameters(
        "enumerate_product_states: clause count must equal touched qubit count");

  const std::uint64_t count = count_dimer_coverings(n_qubits, clauses);
  if (count > max_states)
    throw LimitExceeded("enumerate_product_states: covering count exceeds max_states");
  const auto coverings = enumerate_dimer_coverings(n_qubits, clauses, count);

  const ProjectorSet proj_start =
      sample_projectors(n_qubits, clauses, k, derive_seed(seed, 0),
                        ProjectorForm::product);
  const std::uint64_t site_seed = derive_seed(seed, 1);

  EnumerationResult result;
  for (std::size_t i = 0; i < coverings.size(); ++i) {
    const ProductState s0 = product_seed_state(n_qubits, clauses, proj_start,
                                               Matching{coverings[i]}, site_seed);
    try {
      result.states.push_back(
          continue_product_state(n_qubits, clauses, proj_target, proj_start, s0, opts)
              .first);
    } catch (const ContinuationFailure&) {
      ContinuationOptions finer = opts;
      finer.steps *= 2;
      try {
        result.states.push_back(continue_product_state(n_qubits, clauses, proj_target,
                                                        proj_start, s0, finer)
                                    .first);
      } catch (const ContinuationFailure&) {
        result.failed_coverings.push_back(i);
      }
    }
  }
  return result;
}

EnumerationResult enumerate_product_states(const Graph& g,
                                           const ProjectorSet& proj_target,
                                           std::uint64_t seed, std::uint64_t max_states,
                                           const ContinuationOptions& opts) {
  return enumerate_product_states(g.n_qubits, g.clauses, g.k, proj_target, seed,
                                  max_states, opts);
}

std::optional<ProductState> multistart_product_search(
    int n_qubits, const std::vector<Clause>& clauses, const ProjectorSet& proj,
    int starts, std::uint64_t seed, double tol, int max_iters) {
  for (int attempt = 0; attempt < starts; ++attempt) {
    ProductState s = random_product_state(n_qubits, derive_seed(seed, attempt));
    const NewtonOutcome res =
        newton_to_zero(n_qubits, clauses, proj, s, tol, max_iters, 30, 1e-10,
                       /*allow_rank_deficient=*/true);
    if (res.reached) return s;
  }
  return std::nullopt;
}

std::optional<ProductState> multistart_product_search(const Graph& g,
                                                      const ProjectorSet& proj,
                                                      int starts, std::uint64_t seed,
                                                      double tol, int max_iters) {
  return multistart_product_search(g.n_qubits, g.clauses, proj, starts, seed, tol,
                                   max_iters);
}

}  // namespace qsat
