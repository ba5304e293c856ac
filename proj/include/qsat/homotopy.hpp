#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qsat/product_state.hpp"

namespace qsat {

struct ContinuationOptions {
  int steps = 200;
  double tol = 1e-10;     // residual energy target at every path point
  int max_newton = 50;    // corrector iterations per step
  int max_halvings = 30;  // step damping budget
  double rank_tol = 1e-10;
};

struct HomotopyTrace {
  int steps = 0;
  double final_residual = 0.0;
  std::vector<double> jacobian_condition;  // per-step estimate
  int chart_flips = 0;
};

// Follows a satisfying product state along the normalized straight-line
// interpolation from proj_start to proj_target. Each step rebases local
// charts at the current state, solves the linearized clause system in the
// least-norm sense, then polishes with damped Newton until the energy
// drops below tol. Throws ContinuationFailure on a rank-deficient
// Jacobian, a vanishing path point, or Newton stagnation; such points are
// non-generic and callers retry from a fresh random start.
std::pair<ProductState, HomotopyTrace> continue_product_state(
    int n_qubits, const std::vector<Clause>& clauses, const ProjectorSet& proj_target,
    const ProjectorSet& proj_start, const ProductState& s_start,
    const ContinuationOptions& opts = {});
std::pair<ProductState, HomotopyTrace> continue_product_state(
    const Graph& g, const ProjectorSet& proj_target, const ProjectorSet& proj_start,
    const ProductState& s_start, const ContinuationOptions& opts = {});

// End-to-end construction for clause-coverable graphs: seed an exact
// product solution at random product projectors and continue it to
// proj_target, retrying with a fresh start and a finer schedule on
// failure. Throws NotCoverable when no dimer covering exists.
ProductState solve_product_state(const Graph& g, const ProjectorSet& proj_target,
                                 std::uint64_t seed, ContinuationOptions opts = {},
                                 int max_retries = 5);

struct EnumerationResult {
  std::vector<ProductState> states;
  std::vector<std::size_t> failed_coverings;  // indices whose continuation failed
};

// One continued product state per dimer covering, all seeded at a common
// random product-projector point. Requires the clause count to equal the
// number of touched qubits (so that solutions are discrete) and the
// covering count to fit max_states.
EnumerationResult enumerate_product_states(int n_qubits,
                                           const std::vector<Clause>& clauses, int k,
                                           const ProjectorSet& proj_target,
                                           std::uint64_t seed, std::uint64_t max_states,
                                           const ContinuationOptions& opts = {});
EnumerationResult enumerate_product_states(const Graph& g,
                                           const ProjectorSet& proj_target,
                                           std::uint64_t seed, std::uint64_t max_states,
                                           const ContinuationOptions& opts = {});

// General-purpose search: damped Gauss-Newton on the clause system from
// `starts` random product states. Returns the first state with energy
// below tol, if any. Unlike continuation this tolerates rank-deficient
// Jacobians, so it simply stalls on infeasible systems.
std::optional<ProductState> multistart_product_search(
    int n_qubits, const std::vector<Clause>& clauses, const ProjectorSet& proj,
    int starts, std::uint64_t seed, double tol = 1e-9, int max_iters = 300);
std::optional<ProductState> multistart_product_search(const Graph& g,
                                                      const ProjectorSet& proj,
                                                      int starts, std::uint64_t seed,
                                                      double tol = 1e-9,
                                                      int max_iters = 300);

}  // namespace qsat
