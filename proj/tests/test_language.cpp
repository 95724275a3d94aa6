#include <doctest.h>

#include <cmath>

#include "monent/corpus.hpp"
#include "monent/errors.hpp"
#include "monent/language.hpp"
#include "support.hpp"

using namespace monent;

TEST_CASE("enumeration matches brute force") {
  for (const Presentation& p : corpus::presentation_corpus(21, 80)) {
    const auto forbidden = testing::forbidden_of(p);
    CHECK(enumerate_legal(p, 0).size() == p.quiver().vertex_count());
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto words = enumerate_legal(p, n);
      const auto expected = testing::brute_legal(p.quiver(), forbidden, n);
      REQUIRE(words.size() == expected.size());
      for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i].arrows == expected[i]);
    }
  }
}

TEST_CASE("transfer-matrix counts match enumeration") {
  for (const Presentation& p : corpus::presentation_corpus(22, 80)) {
    const GrowthSequence seq = count_legal_series(p, 7);
    CHECK(seq[0] == p.quiver().vertex_count());
    for (std::size_t n = 1; n <= 7; ++n) CHECK(seq[n] == enumerate_legal(p, n).size());
    CHECK(count_legal_series(p, 7, kernels::Exec::serial).values == seq.values);
  }
}

TEST_CASE("three-loop counts are 2^(s+1) - 1") {
  const GrowthSequence seq = count_legal_series(testing::fixture("three_loops.txt"), 60);
  for (unsigned s = 0; s <= 60; ++s) CHECK(seq[s] == testing::pow2(s + 1) - 1);
}

TEST_CASE("golden mean counts are Fibonacci") {
  const GrowthSequence seq = count_legal_series(testing::fixture("golden_mean.txt"), 40);
  mpz_class a = 1, b = 2;  // F_1, F_2 shifted: a_0 = 1, a_1 = 2
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(seq[n] == a);
    mpz_class c = a + b;
    a = b;
    b = c;
  }
}

TEST_CASE("enumeration budget") {
  const Presentation p = testing::fixture("three_loops.txt");
  CHECK_THROWS_AS(enumerate_legal(p, 12, 100), BudgetExceeded);
}

TEST_CASE("submultiplicativity and Fekete bound") {
  for (const Presentation& p : corpus::presentation_corpus(23, 120)) {
    const GrowthSequence a = count_legal_series(p, 16);
    for (std::size_t m = 1; m <= 8; ++m) {
      for (std::size_t n = 1; n <= 8; ++n) CHECK(a[m + n] <= a[m] * a[n]);
    }
    if (a.vanishes()) continue;
    const double fekete = algebraic_entropy(a, EstimateMethod::fekete_inf).value;
    for (std::size_t m = 1; m <= 16; ++m) {
      CHECK(fekete <= std::pow(a[m].get_d(), 1.0 / static_cast<double>(m)) + 1e-12);
    }
  }
}

TEST_CASE("adding a forbidden factor never increases counts") {
  const Presentation base = parse_presentation("arrows: x, y, z\nforbidden: xz\n");
  const Presentation more = parse_presentation("arrows: x, y, z\nforbidden: xz, yzy\n");
  const GrowthSequence a = count_legal_series(base, 20), b = count_legal_series(more, 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(b[n] <= a[n]);
}

TEST_CASE("estimators on closed forms") {
  const GrowthSequence seq = count_legal_series(testing::fixture("three_loops.txt"), 64);
  CHECK(algebraic_entropy(seq, EstimateMethod::extrapolated).value == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(algebraic_entropy(seq, EstimateMethod::ratio).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(algebraic_entropy(seq, EstimateMethod::root).value == doctest::Approx(2.0).epsilon(2e-2));
  const auto fk = algebraic_entropy(seq, EstimateMethod::fekete_inf);
  CHECK(fk.value >= 2.0);

  const GrowthSequence fib = count_legal_series(testing::fixture("golden_mean.txt"), 64);
  const EntropyEstimate h = language_entropy(fib);
  CHECK(h.value == doctest::Approx(std::log2((1 + std::sqrt(5.0)) / 2)).epsilon(1e-9));
  CHECK(h.converged);
  CHECK_FALSE(h.minus_infinity);
}

TEST_CASE("polynomial growth extrapolates to one") {
  // a_n = n + 1 (words x^i y^j): root and ratio carry a 1/n bias.
  const Presentation p = parse_presentation("arrows: x, y\nforbidden: yx\n");
  const GrowthSequence seq = count_legal_series(p, 64);
  CHECK(seq[10] == 11);
  const double h = algebraic_entropy(seq, EstimateMethod::extrapolated).value;
  CHECK(std::abs(h - 1.0) < 1e-2);
  CHECK(std::abs(language_entropy(seq).value) < 2e-2);
}

TEST_CASE("finite-dimensional algebras are degenerate") {
  const Presentation p = parse_presentation("arrows: x\nforbidden: xxx\n");
  const GrowthSequence seq = count_legal_series(p, 10);
  CHECK(seq.vanishes());
  const EntropyEstimate e = language_entropy(seq);
  CHECK(e.degenerate);
  CHECK(e.minus_infinity);
}

TEST_CASE("method names round trip") {
  for (auto m : {EstimateMethod::root, EstimateMethod::ratio, EstimateMethod::fekete_inf,
                 EstimateMethod::extrapolated, EstimateMethod::spectral,
                 EstimateMethod::rank_growth}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_THROWS(parse_method("median"));
}

TEST_CASE("log2 of big integers") {
  CHECK(log2_of(testing::pow2(4000)) == doctest::Approx(4000.0));
  CHECK(log2_of(mpz_class(3)) == doctest::Approx(std::log2(3.0)));
}
