#include <doctest.h>

#include <cmath>
#include <set>

#include "monent/corpus.hpp"
#include "monent/ufnarovski.hpp"
#include "support.hpp"

using namespace monent;

namespace {

std::set<std::string> vertex_names(const UfnarovskiGraph& g, const Quiver& q) {
  std::set<std::string> out;
  for (const Word& w : g.vertices) out.insert(word_to_text(w, q));
  return out;
}

struct EdgeText {
  std::string word, source, target, label;
  auto operator<=>(const EdgeText&) const = default;
};

std::set<EdgeText> edge_set(const UfnarovskiGraph& g, const Quiver& q) {
  std::set<EdgeText> out;
  for (const auto& e : g.edges) {
    out.insert({word_to_text(e.word, q), word_to_text(g.vertices[e.source], q),
                word_to_text(g.vertices[e.target], q), q.arrow(e.label).label});
  }
  return out;
}

}  // namespace

TEST_CASE("three-loop graph") {
  const Presentation p = testing::fixture("three_loops.txt");
  const Quiver& q = p.quiver();
  const UfnarovskiGraph g = build_ufnarovski(p);
  CHECK(vertex_names(g, q) == std::set<std::string>{"x", "y", "z"});
  const std::set<EdgeText> expected = {
      {"xx", "x", "x", "x"}, {"yy", "y", "y", "y"}, {"zz", "z", "z", "z"},
      {"xy", "x", "y", "x"}, {"zx", "z", "x", "z"}, {"zy", "z", "y", "z"},
      {"yx", "y", "x", "y"}};
  CHECK(edge_set(g, q) == expected);
  CHECK(adjacency(g) == AdjacencyMatrix::from_rows({{1, 1, 0}, {1, 1, 0}, {1, 1, 1}}));
}

TEST_CASE("six-vertex graph with labeled edges") {
  const Presentation p = testing::fixture("six_cycle.txt");
  const Quiver& q = p.quiver();
  const UfnarovskiGraph g = build_ufnarovski(p);
  CHECK(g.l == 3);
  CHECK(vertex_names(g, q) ==
        std::set<std::string>{"xyy", "xyz", "yyz", "yzx", "zxy", "yyy"});
  const std::set<EdgeText> expected = {
      {"xyyz", "xyy", "yyz", "x"}, {"xyzx", "xyz", "yzx", "x"}, {"yyzx", "yyz", "yzx", "y"},
      {"yzxy", "yzx", "zxy", "y"}, {"zxyy", "zxy", "xyy", "z"}, {"zxyz", "zxy", "xyz", "z"},
      {"yyyz", "yyy", "yyz", "y"}, {"xyyy", "xyy", "yyy", "x"}};
  CHECK(edge_set(g, q) == expected);
}

TEST_CASE("free presentation gives the quiver back") {
  const Presentation p = testing::fixture("free_quiver.txt");
  const UfnarovskiGraph g = build_ufnarovski(p);
  CHECK(g.l == 0);
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[0] == trivial_word(0));
  REQUIRE(g.edges.size() == 4);
  for (const auto& e : g.edges) {
    const Arrow& a = p.quiver().arrow(e.label);
    CHECK(e.source == a.source);
    CHECK(e.target == a.target);
  }
}

TEST_CASE("dimension identity on a random corpus") {
  for (const Presentation& p : corpus::presentation_corpus(31, 120)) {
    const UfnarovskiGraph g = build_ufnarovski(p);
    const DimensionCheck c = dim_identity_check(p, g, p.l() + 10);
    CHECK(c.ok);
    // Edges are exactly the legal words of length l + 1.
    CHECK(g.edges.size() ==
          testing::brute_legal(p.quiver(), testing::forbidden_of(p), p.l() + 1).size());
  }
}

TEST_CASE("path counts of the three-loop graph") {
  const AdjacencyMatrix a = adjacency(build_ufnarovski(testing::fixture("three_loops.txt")));
  for (unsigned s = 0; s <= 30; ++s) {
    const PathCounts pc = path_counts(a, s);
    CHECK(pc.per_vertex[0] == testing::pow2(s));
    CHECK(pc.per_vertex[1] == testing::pow2(s));
    CHECK(pc.per_vertex[2] == testing::pow2(s + 1) - 1);
    CHECK(pc.total == testing::pow2(s + 2) - 1);
  }
  CHECK(path_counts(a, 25, kernels::Exec::serial).per_vertex ==
        path_counts(a, 25, kernels::Exec::parallel).per_vertex);
}

TEST_CASE("spectral radius") {
  const AdjacencyMatrix a = adjacency(build_ufnarovski(testing::fixture("three_loops.txt")));
  const SpectralResult r = spectral_radius(a);
  CHECK(r.converged);
  CHECK(std::abs(r.rho - 2.0) < 1e-9);
  CHECK(r.scc_count == 2);  // {x, y} and {z}

  const double phi = (1 + std::sqrt(5.0)) / 2;
  const AdjacencyMatrix f = AdjacencyMatrix::from_rows({{1, 1}, {1, 0}});
  CHECK(std::abs(spectral_radius(f).rho - phi) < 1e-9);
  CHECK(graph_entropy(f).value == doctest::Approx(std::log2(phi)).epsilon(1e-9));

  // Periodic: eigenvalues +-1, the shift by I keeps the iteration stable.
  const AdjacencyMatrix cyc = AdjacencyMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(std::abs(spectral_radius(cyc).rho - 1.0) < 1e-9);

  const AdjacencyMatrix dag = AdjacencyMatrix::from_rows({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
  const SpectralResult z = spectral_radius(dag);
  CHECK(z.rho == 0.0);
  CHECK(z.components.empty());
  const EntropyEstimate ze = graph_entropy(z);
  CHECK(ze.minus_infinity);
  CHECK(ze.degenerate);

  // Cubic x^3 = x + 1 (plastic number) for the six-vertex graph.
  const AdjacencyMatrix six = adjacency(build_ufnarovski(testing::fixture("six_cycle.txt")));
  const double rho = spectral_radius(six).rho;
  CHECK(std::abs(rho * rho * rho - rho - 1) < 1e-8);
}

TEST_CASE("spectral radius against characteristic polynomials") {
  // Irreducible 2x2 matrices: rho = (tr + sqrt(tr^2 - 4 det)) / 2.
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 1; b <= 3; ++b) {
      for (unsigned c = 1; c <= 3; ++c) {
        for (unsigned d = 0; d <= 3; ++d) {
          const AdjacencyMatrix m = AdjacencyMatrix::from_rows({{a, b}, {c, d}});
          const double t = a + d, det = double(a) * d - double(b) * c;
          const double expected = (t + std::sqrt(t * t - 4 * det)) / 2;
          CHECK(std::abs(spectral_radius(m).rho - expected) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("label images") {
  const Presentation p = parse_presentation("arrows: x, y, z, w\nforbidden: xz, yz, w\n");
  const UfnarovskiGraph g = build_ufnarovski(p);
  const auto images = holdaway_smith(p, g);
  REQUIRE(images.size() == 4);
  CHECK(images[0].label == "x");
  CHECK(images[0].edges.size() == 2);  // xx, xy
  CHECK(images[2].label == "z");
  CHECK(images[2].edges.size() == 3);  // zx, zy, zz
  CHECK(images[3].label == "w");
  CHECK(images[3].edges.empty());
}

TEST_CASE("dot export") {
  const Presentation p = testing::fixture("six_cycle.txt");
  const std::string dot = export_dot(build_ufnarovski(p), p);
  CHECK(dot.rfind("digraph ufnarovski {", 0) == 0);
  std::size_t arrows = 0, pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++arrows;
    ++pos;
  }
  CHECK(arrows == 8);
  CHECK(dot.find("word=\"zxyz\"") != std::string::npos);
  CHECK(dot == export_dot(build_ufnarovski(p), p));
}
