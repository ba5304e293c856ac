#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qsat/graph.hpp"

namespace qsat {

enum class ProjectorForm { generic, product };

// One rank-1 projector per clause, stored as the unit vector it projects
// onto. Local index convention: bit j of an amplitude index is the basis
// state of the j-th qubit of the (sorted) clause tuple.
struct ProjectorSet {
  int k = 0;
  bool product_form = false;
  std::vector<Eigen::VectorXcd> states;  // dimension 2^k each, unit norm
  // Per-clause single-qubit factors, slot order matching the clause tuple;
  // present only when product_form is set.
  std::vector<std::vector<Eigen::Vector2cd>> local_factors;

  int n_clauses() const { return static_cast<int>(states.size()); }
};

// Haar sampling. Generic form: each state is a normalized vector of 2^k
// independent standard complex Gaussians. Product form: each state is a
// tensor product of k Haar-random single-qubit states, redrawn so that no
// two local factors on the same qubit are parallel (|overlap| within 1e-8
// of 1). Bit-reproducible for a fixed seed.
ProjectorSet sample_projectors(const Graph& g, std::uint64_t seed, ProjectorForm form);
ProjectorSet sample_projectors(int n_qubits, const std::vector<Clause>& clauses, int k,
                               std::uint64_t seed, ProjectorForm form);

// Assemble the 2^k amplitude vector of a product projector from its
// per-slot factors.
Eigen::VectorXcd assemble_product_state(const std::vector<Eigen::Vector2cd>& factors);

}  // namespace qsat
