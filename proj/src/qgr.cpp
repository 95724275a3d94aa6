#include "monent/qgr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace monent {

MultiplicityVector& MultiplicityVector::operator+=(const MultiplicityVector& o) {
  if (k.size() != o.k.size()) throw std::invalid_argument("multiplicity vectors differ in size");
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += o.k[i];
  return *this;
}

namespace {

std::vector<mpz_class> power_apply(const AdjacencyMatrix& adj, std::vector<mpz_class> x,
                                   std::size_t m, kernels::Exec exec) {
  const auto a = adj.sparse();
  std::vector<mpz_class> y(x.size());
  for (std::size_t i = 0; i < m; ++i) {
    kernels::multiply(a, x, y, exec);
    std::swap(x, y);
  }
  return x;
}

}  // namespace

MultiplicityVector twist_projective(std::size_t v, std::size_t m, const AdjacencyMatrix& adj,
                                    kernels::Exec exec) {
  if (v >= adj.dim()) throw std::out_of_range("twist_projective: vertex out of range");
  std::vector<mpz_class> e(adj.dim(), 0);
  e[v] = 1;
  // x_{k+1}[u] = sum_w A[u][w] x_k[w]: after m steps x = column v of A^m.
  return {power_apply(adj, std::move(e), m, exec)};
}

MultiplicityVector twist_structure_sheaf(std::size_t m, const AdjacencyMatrix& adj,
                                         kernels::Exec exec) {
  return {power_apply(adj, std::vector<mpz_class>(adj.dim(), 1), m, exec)};
}

mpz_class rank_of(const MultiplicityVector& mv) {
  mpz_class best = 0;
  for (const auto& x : mv.k) {
    if (x < 0) throw std::invalid_argument("negative multiplicity");
    if (x > best) best = x;
  }
  return best;
}

mpz_class complexity(const MultiplicityVector& mv) { return rank_of(mv); }

GrowthSequence rank_series(const AdjacencyMatrix& adj, std::size_t m_max,
                           kernels::Exec exec) {
  const auto a = adj.sparse();
  std::vector<mpz_class> x(adj.dim(), 1), y(adj.dim());
  GrowthSequence seq;
  seq.values.reserve(m_max + 1);
  for (std::size_t m = 0;; ++m) {
    seq.values.push_back(rank_of({x}));
    if (m == m_max) break;
    kernels::multiply(a, x, y, exec);
    std::swap(x, y);
  }
  return seq;
}

EntropyEstimate categorical_entropy(const AdjacencyMatrix& adj, std::size_t m_max,
                                    double tol, kernels::Exec exec) {
  if (m_max < 4) throw std::invalid_argument("categorical_entropy needs m_max >= 4");
  if (!(tol > 0)) throw std::invalid_argument("categorical_entropy: tol must be positive");
  EntropyEstimate e =
      log2_estimate(algebraic_entropy(rank_series(adj, m_max, exec), EstimateMethod::rank_growth));
  if (!e.minus_infinity && e.trace.size() >= 2) {
    const double last = e.trace.back().value;
    const double prev = e.trace[e.trace.size() - 2].value;
    e.converged = std::abs(last - prev) <= tol;
  }
  return e;
}

std::vector<ChainEntry> EntropyReport::chain() const {
  return {{"language", &h_top_and_language},
          {"graph", &h_graph},
          {"log2_h_alg_kQ", &log2_h_alg_kQ},
          {"rho_log2", &rho_log2},
          {"categorical", &h_categorical}};
}

EntropyReport entropy_report(const Presentation& p, const ReportSettings& s) {
  if (s.horizon < 2 || s.twist_horizon < 4) {
    throw std::invalid_argument("entropy_report: horizon >= 2 and twist horizon >= 4 required");
  }
  EntropyReport r;
  r.fingerprint = fingerprint(p);
  r.l = p.l();
  r.chain_tolerance = s.chain_tol;

  r.dimensions = count_legal_series(p, s.horizon, s.exec);
  r.h_alg_A = algebraic_entropy(r.dimensions, EstimateMethod::extrapolated);
  r.h_top_and_language = log2_estimate(r.h_alg_A);

  const UfnarovskiGraph g = build_ufnarovski(p);
  const AdjacencyMatrix adj = adjacency(g);
  r.graph_vertices = g.vertices.size();
  r.graph_edges = g.edges.size();

  r.spectral = spectral_radius(adj, s.spectral_tol, kDefaultIterationCap, s.exec);
  r.h_graph = graph_entropy(r.spectral);
  r.rho_log2 = r.h_graph;
  r.rho_log2.trace.clear();
  if (!r.rho_log2.minus_infinity) r.rho_log2.value = std::log2(r.spectral.rho);

  r.log2_h_alg_kQ = log2_estimate(
      algebraic_entropy(path_count_series(adj, s.horizon, s.exec), EstimateMethod::extrapolated));
  r.h_categorical = categorical_entropy(adj, s.twist_horizon, s.estimate_tol, s.exec);

  const auto chain = r.chain();
  const std::size_t infinite =
      std::count_if(chain.begin(), chain.end(),
                    [](const ChainEntry& c) { return c.estimate->minus_infinity; });
  r.degenerate = infinite == chain.size();
  if (infinite != 0 && !r.degenerate) {
    r.max_deviation = std::numeric_limits<double>::infinity();
  } else if (!r.degenerate) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        r.max_deviation = std::max(
            r.max_deviation, std::abs(chain[i].estimate->value - chain[j].estimate->value));
      }
    }
  }
  r.chain_consistent = r.max_deviation <= s.chain_tol;
  r.converged = r.spectral.converged &&
                (r.degenerate || std::all_of(chain.begin(), chain.end(), [](const ChainEntry& c) {
                   return c.estimate->converged;
                 }));
  return r;
}

}  // namespace monent
