#pragma once

// The semisimple category qgr(kQ_A): objects are sums of the simple
// projectives P_u, recorded by multiplicities. Serre twists, rank
// rk_O(X) = max_u k_u, categorical entropy, and the entropy report tying all
// pipelines together.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "monent/core.hpp"
#include "monent/kernels.hpp"
#include "monent/language.hpp"
#include "monent/ufnarovski.hpp"

namespace monent {

// X = sum_u P_u^{k_u}, indexed by Ufnarovski vertex.
struct MultiplicityVector {
  std::vector<mpz_class> k;

  MultiplicityVector& operator+=(const MultiplicityVector& o);
  friend MultiplicityVector operator+(MultiplicityVector a, const MultiplicityVector& b) {
    return a += b;
  }
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

// P_v(m): the multiplicity of P_u is (A^m)[u][v], the number of length-m
// paths from u to v. P_v(1) = sum over edges a -> v of P_{source(a)}.
MultiplicityVector twist_projective(std::size_t v, std::size_t m, const AdjacencyMatrix& adj,
                                    kernels::Exec exec = kernels::Exec::parallel);

// O(m), O = sum_v P_v: k_u = number of length-m paths starting at u.
MultiplicityVector twist_structure_sheaf(std::size_t m, const AdjacencyMatrix& adj,
                                         kernels::Exec exec = kernels::Exec::parallel);

// Minimal s with X a summand of O^s.
mpz_class rank_of(const MultiplicityVector& mv);
// Equal to the rank for every t; there is no t parameter.
mpz_class complexity(const MultiplicityVector& mv);

// rank(O(m)) for m = 0 .. m_max.
GrowthSequence rank_series(const AdjacencyMatrix& adj, std::size_t m_max,
                           kernels::Exec exec = kernels::Exec::parallel);

// log2 of the growth rate of rank(O(m)), m <= m_max, from exact ranks.
// `converged` requires the last two trace values to agree within tol.
EntropyEstimate categorical_entropy(const AdjacencyMatrix& adj, std::size_t m_max,
                                    double tol = kConvergenceSlack,
                                    kernels::Exec exec = kernels::Exec::parallel);

struct ReportSettings {
  std::size_t horizon = 64;        // N for the language and path counts
  std::size_t twist_horizon = 64;  // m_max
  double spectral_tol = kDefaultSpectralTol;
  double estimate_tol = kConvergenceSlack;
  double chain_tol = 2e-2;
  kernels::Exec exec = kernels::Exec::parallel;
};

struct ChainEntry {
  std::string name;
  const EntropyEstimate* estimate;
};

struct EntropyReport {
  std::string fingerprint;
  std::size_t l = 0;
  std::size_t graph_vertices = 0;
  std::size_t graph_edges = 0;
  GrowthSequence dimensions;      // a_n of A
  EntropyEstimate h_alg_A;        // growth rate, not a logarithm
  EntropyEstimate h_top_and_language;
  EntropyEstimate h_graph;
  EntropyEstimate log2_h_alg_kQ;
  EntropyEstimate rho_log2;
  EntropyEstimate h_categorical;
  SpectralResult spectral;
  bool degenerate = false;  // every pipeline reports a finite-dimensional algebra
  double chain_tolerance = 0.0;
  double max_deviation = 0.0;  // infinite when degenerate flags disagree
  bool chain_consistent = false;
  bool converged = false;

  // The base-2 entropies compared by the chain, in a fixed order.
  std::vector<ChainEntry> chain() const;
};

EntropyReport entropy_report(const Presentation& p, const ReportSettings& s = {});

}  // namespace monent
