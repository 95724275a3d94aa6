#pragma once

// The Ufnarovski graph Q_A of a monomial algebra: vertices are the legal
// words of length l, edges the legal words of length l + 1 running from
// their length-l prefix to their length-l suffix, labeled by the first
// letter. Path counts of Q_A reproduce the graded dimensions of A.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monent/core.hpp"
#include "monent/kernels.hpp"
#include "monent/language.hpp"

namespace monent {

struct UfnarovskiEdge {
  Word word;
  std::size_t source = 0;
  std::size_t target = 0;
  ArrowIndex label = 0;  // arrow of the presentation's quiver
};

struct UfnarovskiGraph {
  std::vector<Word> vertices;  // sorted
  std::vector<UfnarovskiEdge> edges;  // sorted by word
  std::size_t l = 0;

  std::optional<std::size_t> find_vertex(const Word& w) const;
};

// When p is free (l = 0) the vertices are the trivial paths and the edges
// are the arrows, so the graph is the quiver itself.
UfnarovskiGraph build_ufnarovski(const Presentation& p);

class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t dim);
  // Row-major nested initializer, for small fixed matrices.
  static AdjacencyMatrix from_rows(const std::vector<std::vector<unsigned>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const mpz_class& operator()(std::size_t u, std::size_t v) const {
    return entries_.at(u * dim_ + v);
  }
  mpz_class& operator()(std::size_t u, std::size_t v) {
    return entries_.at(u * dim_ + v);
  }
  std::size_t edge_count() const;

  // y = A x as a sparse kernel operand (rows indexed by u).
  kernels::SparseMatrix sparse() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> entries_;
};

AdjacencyMatrix adjacency(const UfnarovskiGraph& g);

struct PathCounts {
  std::vector<mpz_class> per_vertex;  // paths of length n starting at u
  mpz_class total;
};

// Row sums of A^n.
PathCounts path_counts(const AdjacencyMatrix& m, std::size_t n,
                       kernels::Exec exec = kernels::Exec::parallel);

// b_0 .. b_N, b_n = total number of length-n paths (dim (kQ)_n).
GrowthSequence path_count_series(const AdjacencyMatrix& m, std::size_t horizon,
                                 kernels::Exec exec = kernels::Exec::parallel);

struct SccEstimate {
  std::vector<std::size_t> vertices;
  double rho = 0.0;
  double lower = 0.0;  // Collatz-Wielandt bracket
  double upper = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct SpectralResult {
  double rho = 0.0;
  std::size_t scc_count = 0;               // all strongly connected components
  std::vector<SccEstimate> components;     // the ones carrying a cycle
  std::size_t iterations = 0;
  double tolerance_achieved = 0.0;
  bool converged = true;
};

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr std::size_t kDefaultIterationCap = 100000;

// Perron root via SCC condensation and power iteration on A_scc + I. Each
// component iterates until its Collatz-Wielandt bracket is narrower than
// `tol`; rho is the largest component root (0 for acyclic graphs).
SpectralResult spectral_radius(const AdjacencyMatrix& m,
                               double tol = kDefaultSpectralTol,
                               std::size_t max_iterations = kDefaultIterationCap,
                               kernels::Exec exec = kernels::Exec::parallel);

// log2 of the spectral radius, tagged minus infinity when rho = 0.
EntropyEstimate graph_entropy(const AdjacencyMatrix& m,
                              double tol = kDefaultSpectralTol);
EntropyEstimate graph_entropy(const SpectralResult& r);

// Image of each arrow x of the original quiver under the Holdaway-Smith
// map: the edges of Q_A labeled x. Arrows deleted as forbidden letters (and
// labels that occur on no edge) map to the empty sum.
struct LabelImage {
  std::string label;
  std::vector<std::size_t> edges;
};
std::vector<LabelImage> holdaway_smith(const Presentation& p,
                                       const UfnarovskiGraph& g);

struct DimensionMismatch {
  std::size_t m = 0;
  mpz_class dim_a;
  mpz_class paths;
};
struct DimensionCheck {
  bool ok = true;
  std::optional<DimensionMismatch> witness;
};

// dim A_m == number of length (m - l) paths of Q_A for l < m <= m_max.
DimensionCheck dim_identity_check(const Presentation& p, const UfnarovskiGraph& g,
                                  std::size_t m_max);

// GraphViz document; node order = vertex order, edges carry word and label.
std::string export_dot(const UfnarovskiGraph& g, const Presentation& p);

}  // namespace monent
