#include <doctest.h>

#include <cmath>

#include "monent/corpus.hpp"
#include "monent/qgr.hpp"
#include "support.hpp"

using namespace monent;

namespace {

MultiplicityVector mv(std::initializer_list<long> ks) {
  MultiplicityVector out;
  for (long k : ks) out.k.emplace_back(k);
  return out;
}

AdjacencyMatrix three_loop() {
  return adjacency(build_ufnarovski(testing::fixture("three_loops.txt")));
}

// Dense big-integer power, independent of the sparse kernels.
std::vector<std::vector<mpz_class>> dense_power(const AdjacencyMatrix& a, std::size_t m) {
  const std::size_t n = a.dim();
  std::vector<std::vector<mpz_class>> r(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (r[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += r[i][k] * a(k, j);
      }
    }
    r = std::move(next);
  }
  return r;
}

}  // namespace

TEST_CASE("twists of the simple projectives") {
  const AdjacencyMatrix a = three_loop();
  CHECK(twist_projective(0, 1, a) == mv({1, 1, 1}));
  CHECK(twist_projective(2, 1, a) == mv({0, 0, 1}));
  CHECK(twist_projective(1, 0, a) == mv({0, 1, 0}));
  CHECK(twist_structure_sheaf(1, a) == mv({2, 2, 3}));
  CHECK(twist_structure_sheaf(0, a) == mv({1, 1, 1}));
  CHECK(twist_projective(0, 1, a) + twist_projective(1, 1, a) + twist_projective(2, 1, a) ==
        mv({2, 2, 3}));

  for (unsigned m = 1; m <= 20; ++m) {
    const MultiplicityVector px = twist_projective(0, m, a);
    CHECK(px.k[0] == testing::pow2(m - 1));
    CHECK(px.k[1] == testing::pow2(m - 1));
    CHECK(px.k[2] == testing::pow2(m) - 1);
    const MultiplicityVector o = twist_structure_sheaf(m, a);
    CHECK(o.k[2] == testing::pow2(m + 1) - 1);
    CHECK(rank_of(o) == testing::pow2(m + 1) - 1);
    CHECK(complexity(o) == rank_of(o));
    // O(m) = P_x(m + 1) as objects.
    CHECK(o == twist_projective(0, m + 1, a));
  }
}

TEST_CASE("twists agree with dense matrix powers") {
  for (const Presentation& p : corpus::presentation_corpus(61, 40)) {
    const AdjacencyMatrix a = adjacency(build_ufnarovski(p));
    for (std::size_t m : {0u, 1u, 2u, 5u, 9u}) {
      const auto pw = dense_power(a, m);
      for (std::size_t v = 0; v < a.dim(); ++v) {
        const MultiplicityVector t = twist_projective(v, m, a, kernels::Exec::serial);
        for (std::size_t u = 0; u < a.dim(); ++u) CHECK(t.k[u] == pw[u][v]);
        // One more twist: P_v(m + 1) = sum over edges u -> v of P_u(m).
        MultiplicityVector step;
        step.k.assign(a.dim(), 0);
        for (std::size_t u = 0; u < a.dim(); ++u) {
          for (mpz_class c = 0; c < a(u, v); ++c) step += twist_projective(u, m, a);
        }
        CHECK(step == twist_projective(v, m + 1, a));
      }
    }
  }
}

TEST_CASE("rank bounds") {
  for (const Presentation& p : corpus::presentation_corpus(62, 60)) {
    const AdjacencyMatrix a = adjacency(build_ufnarovski(p));
    const GrowthSequence r = rank_series(a, 24);
    const GrowthSequence b = path_count_series(a, 24);
    for (std::size_t m = 0; m <= 12; ++m) {
      CHECK(r[m] <= b[m]);
      for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(b[m + n] <= r[m] * b[n]);
        CHECK(r[m + n] <= r[m] * r[n]);
      }
    }
    // Subadditivity of the rank under direct sums.
    for (std::size_t m = 0; m <= 6; ++m) {
      const auto x = twist_structure_sheaf(m, a), y = twist_structure_sheaf(m + 1, a);
      CHECK(rank_of(x + y) <= rank_of(x) + rank_of(y));
    }
  }
}

TEST_CASE("categorical entropy") {
  const EntropyEstimate h = categorical_entropy(three_loop(), 64);
  CHECK(std::abs(h.value - 1.0) < 1e-3);
  CHECK(h.converged);

  const EntropyEstimate loop = categorical_entropy(AdjacencyMatrix::from_rows({{1}}), 64);
  CHECK(std::abs(loop.value) < 1e-12);
  CHECK_FALSE(loop.minus_infinity);

  const AdjacencyMatrix g = adjacency(build_ufnarovski(testing::fixture("golden_mean.txt")));
  const EntropyEstimate hg = categorical_entropy(g, 64);
  CHECK(std::abs(hg.value - std::log2((1 + std::sqrt(5.0)) / 2)) < 1e-3);

  const EntropyEstimate dead =
      categorical_entropy(AdjacencyMatrix::from_rows({{0, 1}, {0, 0}}), 16);
  CHECK(dead.minus_infinity);
  CHECK(dead.degenerate);
  CHECK_THROWS(categorical_entropy(three_loop(), 2));
}

TEST_CASE("entropy report") {
  const ReportSettings s;
  const EntropyReport r = entropy_report(testing::fixture("three_loops.txt"), s);
  CHECK(r.graph_vertices == 3);
  CHECK(r.graph_edges == 7);
  CHECK(r.l == 1);
  CHECK(r.h_alg_A.value == doctest::Approx(2.0).epsilon(1e-4));
  for (const ChainEntry& e : r.chain()) {
    INFO(e.name);
    CHECK(std::abs(e.estimate->value - 1.0) < 1e-3);
  }
  CHECK(r.chain().size() == 5);
  CHECK(r.chain_consistent);
  CHECK(r.converged);
  CHECK_FALSE(r.degenerate);
  CHECK(r.max_deviation <= r.chain_tolerance);

  const EntropyReport f = entropy_report(testing::fixture("free_quiver.txt"), s);
  CHECK(f.l == 0);
  CHECK(f.graph_vertices == 2);
  for (const ChainEntry& e : f.chain()) CHECK(std::abs(e.estimate->value - 1.0) < 1e-3);
  CHECK(f.chain_consistent);

  const EntropyReport fin = entropy_report(parse_presentation("arrows: x, y\nforbidden: xx, xy, yx, yy\n"), s);
  CHECK(fin.degenerate);
  CHECK(fin.chain_consistent);
  for (const ChainEntry& e : fin.chain()) CHECK(e.estimate->minus_infinity);

  const EntropyReport tight = entropy_report(testing::fixture("golden_mean.txt"), {64, 64, 1e-10, 1e-3, 1e-15});
  CHECK(tight.max_deviation > tight.chain_tolerance);
  CHECK_FALSE(tight.chain_consistent);
}
