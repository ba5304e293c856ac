#include "qsat/product_state.hpp"

#include <cmath>

#include "qsat/errors.hpp"
#include "qsat/rng.hpp"

namespace qsat {

ChartRecord chart_of(const Eigen::Vector2cd& psi) {
  ChartRecord rec;
  rec.flipped = std::abs(psi[0]) > std::abs(psi[1]);
  rec.coord = rec.flipped ? psi[1] / psi[0] : psi[0] / psi[1];
  return rec;
}

Eigen::Vector2cd perp(const Eigen::Vector2cd& psi) {
  return {-std::conj(psi[1]), std::conj(psi[0])};
}

ProductState random_product_state(int n_qubits, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ProductState s;
  s.sites.resize(n_qubits);
  for (auto& site : s.sites) {
    site = Eigen::Vector2cd(rng.next_complex_normal(), rng.next_complex_normal());
    site /= site.norm();
  }
  return s;
}

Eigen::VectorXcd clause_overlaps(const std::vector<Clause>& clauses,
                                 const ProjectorSet& proj, const ProductState& s) {
  const int m = static_cast<int>(clauses.size());
  if (proj.n_clauses() != m)
    throw DimensionMismatch("clause_overlaps: projector count mismatch");
  Eigen::VectorXcd c(m);
  for (int i = 0; i < m; ++i) {
    const Clause& cl = clauses[i];
    const Eigen::VectorXcd& phi = proj.states[i];
    const int local_dim = static_cast<int>(phi.size());
    std::complex<double> acc = 0.0;
    for (int l = 0; l < local_dim; ++l) {
      std::complex<double> term = std::conj(phi[l]);
      for (std::size_t j = 0; j < cl.size(); ++j) term *= s.sites[cl[j]][(l >> j) & 1];
      acc += term;
    }
    c[i] = acc;
  }
  return c;
}

double energy_of_product_state(const std::vector<Clause>& clauses,
                               const ProjectorSet& proj, const ProductState& s) {
  return clause_overlaps(clauses, proj, s).squaredNorm();
}

double energy_of_product_state(const Graph& g, const ProjectorSet& proj,
                               const ProductState& s) {
  return energy_of_product_state(g.clauses, proj, s);
}

ProductState product_seed_state(int n_qubits, const std::vector<Clause>& clauses,
                                const ProjectorSet& proj_product, const Matching& cover,
                                std::uint64_t seed) {
  if (!proj_product.product_form)
    throw NotProductForm("product_seed_state: projectors must be product form");
  if (cover.clause_to_qubit.size() != clauses.size() || !cover.covers_all())
    throw NotCoverable("product_seed_state: matching does not cover all clauses");

  ProductState s = random_product_state(n_qubits, seed);
  for (std::size_t m = 0; m < clauses.size(); ++m) {
    const int q = cover.clause_to_qubit[m];
    const Clause& cl = clauses[m];
    std::size_t slot = 0;
    while (slot < cl.size() && cl[slot] != q) ++slot;
    if (slot == cl.size())
      throw NotCoverable("product_seed_state: matched qubit not in its clause");
    s.sites[q] = perp(proj_product.local_factors[m][slot]);
  }
  return s;
}

ProductState product_seed_state(const Graph& g, const ProjectorSet& proj_product,
                                const Matching& cover, std::uint64_t seed) {
  return product_seed_state(g.n_qubits, g.clauses, proj_product, cover, seed);
}

Eigen::MatrixXcd product_gram(const std::vector<ProductState>& states) {
  const int count = static_cast<int>(states.size());
  Eigen::MatrixXcd gram(count, count);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b <= a; ++b) {
      std::complex<double> g = 1.0;
      for (int q = 0; q < states[a].n(); ++q)
        g *= states[b].sites[q].dot(states[a].sites[q]);
      gram(a, b) = g;
      gram(b, a) = std::conj(g);
    }
  }
  return gram;
}

int product_span_rank(const std::vector<ProductState>& states) {
  if (states.empty()) throw InvalidParameters("product_span_rank: empty state list");
  const Eigen::MatrixXcd gram = product_gram(states);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  if (top <= 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    rank += (es.eigenvalues()[i] > 1e-10 * top);
  return rank;
}

Eigen::VectorXcd product_state_vector(const ProductState& s) {
  const int n = s.n();
  if (n > 24) throw LimitExceeded("product_state_vector: N exceeds 24");
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::VectorXcd v(dim);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::complex<double> amp = 1.0;
    for (int q = 0; q < n; ++q) amp *= s.sites[q][(idx >> q) & 1];
    v[idx] = amp;
  }
  return v;
}

bool states_equal(const ProductState& a, const ProductState& b, double tol) {
  if (a.n() != b.n()) return false;
  for (int q = 0; q < a.n(); ++q)
    if (std::abs(a.sites[q].dot(b.sites[q])) <= 1.0 - tol) return false;
  return true;
}

}  // namespace qsat
