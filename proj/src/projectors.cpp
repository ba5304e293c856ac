#include "qsat/projectors.hpp"

#include <cmath>

#include "qsat/errors.hpp"
#include "qsat/rng.hpp"

namespace qsat {

namespace {

Eigen::VectorXcd haar_vector(SplitMix64& rng, int dim) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.next_complex_normal();
  v /= v.norm();
  return v;
}

Eigen::Vector2cd haar_qubit(SplitMix64& rng) {
  Eigen::Vector2cd v(rng.next_complex_normal(), rng.next_complex_normal());
  v /= v.norm();
  return v;
}

}  // namespace

Eigen::VectorXcd assemble_product_state(const std::vector<Eigen::Vector2cd>& factors) {
  const int k = static_cast<int>(factors.size());
  Eigen::VectorXcd state(std::int64_t{1} << k);
  for (std::int64_t idx = 0; idx < state.size(); ++idx) {
    std::complex<double> amp = 1.0;
    for (int j = 0; j < k; ++j) amp *= factors[j][(idx >> j) & 1];
    state[idx] = amp;
  }
  return state;
}

ProjectorSet sample_projectors(int n_qubits, const std::vector<Clause>& clauses, int k,
                               std::uint64_t seed, ProjectorForm form) {
  ProjectorSet set;
  set.k = k;
  set.product_form = (form == ProjectorForm::product);
  set.states.reserve(clauses.size());
  SplitMix64 rng(seed);

  if (form == ProjectorForm::generic) {
    for (std::size_t m = 0; m < clauses.size(); ++m)
      set.states.push_back(haar_vector(rng, 1 << k));
    return set;
  }

  // Factors already drawn on each qubit, for the non-parallel redraw rule.
  std::vector<std::vector<Eigen::Vector2cd>> on_qubit(n_qubits);
  set.local_factors.reserve(clauses.size());
  for (const auto& clause : clauses) {
    std::vector<Eigen::Vector2cd> factors(clause.size());
    for (std::size_t j = 0; j < clause.size(); ++j) {
      const int q = clause[j];
      for (;;) {
        Eigen::Vector2cd f = haar_qubit(rng);
        bool parallel = false;
        for (const auto& prev : on_qubit[q])
          parallel |= std::abs(prev.dot(f)) >= 1.0 - 1e-8;
        if (!parallel) {
          factors[j] = f;
          on_qubit[q].push_back(f);
          break;
        }
      }
    }
    set.states.push_back(assemble_product_state(factors));
    set.local_factors.push_back(std::move(factors));
  }
  return set;
}

ProjectorSet sample_projectors(const Graph& g, std::uint64_t seed, ProjectorForm form) {
  return sample_projectors(g.n_qubits, g.clauses, g.k, seed, form);
}

}  // namespace qsat
