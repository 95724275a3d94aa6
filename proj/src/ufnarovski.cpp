#include "monent/ufnarovski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace monent {

std::optional<std::size_t> UfnarovskiGraph::find_vertex(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

UfnarovskiGraph build_ufnarovski(const Presentation& p) {
  const Quiver& q = p.quiver();
  UfnarovskiGraph g;
  g.l = p.l();
  g.vertices = enumerate_legal(p, g.l);
  std::sort(g.vertices.begin(), g.vertices.end());
  for (Word& w : enumerate_legal(p, g.l + 1)) {
    UfnarovskiEdge e;
    Word prefix = make_word(q, {w.arrows.begin(), w.arrows.end() - 1});
    Word suffix = make_word(q, {w.arrows.begin() + 1, w.arrows.end()});
    if (g.l == 0) {
      prefix = trivial_word(q.arrow(w.arrows.front()).source);
      suffix = trivial_word(q.arrow(w.arrows.front()).target);
    }
    e.source = *g.find_vertex(prefix);
    e.target = *g.find_vertex(suffix);
    e.label = w.arrows.front();
    e.word = std::move(w);
    g.edges.push_back(std::move(e));
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const UfnarovskiEdge& a, const UfnarovskiEdge& b) { return a.word < b.word; });
  return g;
}

// ---------------------------------------------------------------- matrices

AdjacencyMatrix::AdjacencyMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, 0) {}

AdjacencyMatrix AdjacencyMatrix::from_rows(
    const std::vector<std::vector<unsigned>>& rows) {
  AdjacencyMatrix m(rows.size());
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (rows[u].size() != rows.size()) {
      throw std::invalid_argument("adjacency rows must form a square matrix");
    }
    for (std::size_t v = 0; v < rows.size(); ++v) m(u, v) = rows[u][v];
  }
  return m;
}

std::size_t AdjacencyMatrix::edge_count() const {
  mpz_class total = 0;
  for (const auto& x : entries_) total += x;
  return total.get_ui();
}

kernels::SparseMatrix AdjacencyMatrix::sparse() const {
  std::vector<kernels::SparseMatrix::Triple> t;
  for (std::size_t u = 0; u < dim_; ++u) {
    for (std::size_t v = 0; v < dim_; ++v) {
      const mpz_class& x = (*this)(u, v);
      if (x == 0) continue;
      if (!x.fits_ulong_p()) throw std::overflow_error("adjacency entry too large");
      t.push_back({u, v, x.get_ui()});
    }
  }
  return kernels::SparseMatrix::from_triples(dim_, dim_, std::move(t));
}

AdjacencyMatrix adjacency(const UfnarovskiGraph& g) {
  AdjacencyMatrix m(g.vertices.size());
  for (const auto& e : g.edges) m(e.source, e.target) += 1;
  return m;
}

PathCounts path_counts(const AdjacencyMatrix& m, std::size_t n, kernels::Exec exec) {
  const auto a = m.sparse();
  std::vector<mpz_class> cur(m.dim(), 1), next(m.dim());
  for (std::size_t i = 0; i < n; ++i) {
    kernels::multiply(a, cur, next, exec);
    std::swap(cur, next);
  }
  PathCounts pc;
  pc.total = 0;
  for (const auto& x : cur) pc.total += x;
  pc.per_vertex = std::move(cur);
  return pc;
}

GrowthSequence path_count_series(const AdjacencyMatrix& m, std::size_t horizon,
                                 kernels::Exec exec) {
  GrowthSequence seq;
  seq.values = kernels::iterate_totals(m.sparse(), std::vector<mpz_class>(m.dim(), 1),
                                       horizon, exec);
  return seq;
}

// ---------------------------------------------------------------- spectrum

namespace {

// Tarjan's algorithm, iterative. Components come out in reverse topological
// order; each component's vertex list is sorted.
std::vector<std::vector<std::size_t>> strong_components(const kernels::SparseMatrix& a) {
  const std::size_t n = a.rows;
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnseen), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t k;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnseen) continue;
    std::vector<Frame> call{{root, a.row_start[root]}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.k < a.row_start[f.v + 1]) {
        std::size_t w = a.col[f.k++];
        if (index[w] == kUnseen) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, a.row_start[w]});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

SccEstimate perron_root(const kernels::SparseMatrix& a,
                        const std::vector<std::size_t>& comp, double tol,
                        std::size_t max_iterations, kernels::Exec exec) {
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
  std::vector<kernels::SparseMatrix::Triple> t;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    std::size_t u = comp[i];
    for (std::size_t k = a.row_start[u]; k < a.row_start[u + 1]; ++k) {
      auto it = local.find(a.col[k]);
      if (it != local.end()) t.push_back({i, it->second, a.weight[k]});
    }
  }
  const auto sub = kernels::SparseMatrix::from_triples(comp.size(), comp.size(), std::move(t));

  SccEstimate est;
  est.vertices = comp;
  std::vector<long double> x(comp.size(), 1.0L), y(comp.size());
  long double lower = 0, upper = 0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    kernels::multiply_shifted(sub, 1.0L, x, y, exec);
    lower = std::numeric_limits<long double>::infinity();
    upper = 0;
    long double norm = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const long double r = y[i] / x[i];
      lower = std::min(lower, r);
      upper = std::max(upper, r);
      norm = std::max(norm, y[i]);
    }
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i] / norm;
    est.iterations = it;
    if (upper - lower < tol) {
      est.converged = true;
      break;
    }
  }
  est.lower = static_cast<double>(lower - 1);
  est.upper = static_cast<double>(upper - 1);
  est.rho = static_cast<double>((lower + upper) / 2 - 1);
  return est;
}

}  // namespace

SpectralResult spectral_radius(const AdjacencyMatrix& m, double tol,
                               std::size_t max_iterations, kernels::Exec exec) {
  if (!(tol > 0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  const auto a = m.sparse();
  SpectralResult r;
  auto comps = strong_components(a);
  r.scc_count = comps.size();
  std::sort(comps.begin(), comps.end());
  for (const auto& comp : comps) {
    bool cyclic = comp.size() > 1 || m(comp.front(), comp.front()) != 0;
    if (!cyclic) continue;
    SccEstimate e = perron_root(a, comp, tol, max_iterations, exec);
    r.iterations += e.iterations;
    r.tolerance_achieved = std::max(r.tolerance_achieved, e.upper - e.lower);
    r.converged = r.converged && e.converged;
    r.rho = std::max(r.rho, e.rho);
    r.components.push_back(std::move(e));
  }
  return r;
}

EntropyEstimate graph_entropy(const SpectralResult& r) {
  EntropyEstimate e;
  e.method = EstimateMethod::spectral;
  e.horizon = r.iterations;
  e.converged = r.converged;
  if (r.rho <= 0.0 || r.components.empty()) {
    e.degenerate = true;
    e.minus_infinity = true;
    return e;
  }
  e.value = std::log2(r.rho);
  e.tail_limsup = e.value;
  return e;
}

EntropyEstimate graph_entropy(const AdjacencyMatrix& m, double tol) {
  return graph_entropy(spectral_radius(m, tol));
}

// ---------------------------------------------------------------- maps, checks

std::vector<LabelImage> holdaway_smith(const Presentation& p, const UfnarovskiGraph& g) {
  const Quiver& q = p.quiver();
  std::vector<LabelImage> out;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    LabelImage img{q.arrow(a).label, {}};
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].label == a) img.edges.push_back(e);
    }
    out.push_back(std::move(img));
  }
  for (const Arrow& removed : p.removed_arrows()) out.push_back({removed.label, {}});
  return out;
}

DimensionCheck dim_identity_check(const Presentation& p, const UfnarovskiGraph& g,
                                  std::size_t m_max) {
  const std::size_t l = g.l;
  if (m_max <= l) throw std::invalid_argument("dim_identity_check needs m_max > l");
  const GrowthSequence dims = count_legal_series(p, m_max);
  const GrowthSequence paths = path_count_series(adjacency(g), m_max - l);
  DimensionCheck check;
  for (std::size_t m = l + 1; m <= m_max; ++m) {
    if (dims[m] != paths[m - l]) {
      check.ok = false;
      check.witness = DimensionMismatch{m, dims[m], paths[m - l]};
      break;
    }
  }
  return check;
}

std::string export_dot(const UfnarovskiGraph& g, const Presentation& p) {
  const Quiver& q = p.quiver();
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph ufnarovski {\n";
  out += "  // l = " + std::to_string(g.l) + ", " + std::to_string(g.vertices.size()) +
         " vertices, " + std::to_string(g.edges.size()) + " edges\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Word& w = g.vertices[v];
    std::string name = w.empty() ? q.vertex(w.base) : word_to_text(w, q);
    out += "  v" + std::to_string(v) + " [label=" + quote(name) + "];\n";
  }
  for (const auto& e : g.edges) {
    out += "  v" + std::to_string(e.source) + " -> v" + std::to_string(e.target) +
           " [label=" + quote(q.arrow(e.label).label) +
           ", word=" + quote(word_to_text(e.word, q)) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace monent
