#pragma once

// Legal words, graded dimensions a_n = dim A_n and growth-rate estimators.

#include <gmpxx.h>

#include <cstddef>
#include <string_view>
#include <vector>

#include "monent/core.hpp"
#include "monent/kernels.hpp"

namespace monent {

// a_0 .. a_N, with a_0 = number of vertices and a_n = |L_n| for n >= 1.
struct GrowthSequence {
  std::vector<mpz_class> values;

  std::size_t horizon() const noexcept {
    return values.empty() ? 0 : values.size() - 1;
  }
  const mpz_class& operator[](std::size_t n) const { return values.at(n); }
  // True when the last entry is zero, i.e. the algebra is finite dimensional.
  bool vanishes() const noexcept { return values.empty() || values.back() == 0; }
};

enum class EstimateMethod {
  root,          // a_N^(1/N)
  ratio,         // a_N / a_{N-1}
  fekete_inf,    // min_{m <= N} a_m^(1/m), an upper bound
  extrapolated,  // Richardson step on the binomial transform, see below
  spectral,      // Perron root of an adjacency matrix
  rank_growth,   // growth of rk_O(S^m O)
};

std::string_view to_string(EstimateMethod m) noexcept;
EstimateMethod parse_method(std::string_view s);

struct TracePoint {
  std::size_t n;
  double value;
};

// An estimate of an exponential growth rate, or of its base-2 logarithm.
// A tagged minus_infinity replaces log2(0); value is then 0 and meaningless.
struct EntropyEstimate {
  double value = 0.0;
  bool minus_infinity = false;
  EstimateMethod method = EstimateMethod::root;
  std::size_t horizon = 0;
  std::vector<TracePoint> trace;
  // Max of the last third of the trace: the finite-horizon limsup.
  double tail_limsup = 0.0;
  bool degenerate = false;  // finite-dimensional: the sequence vanishes
  bool converged = true;
};

// Words of length n with no forbidden factor, lexicographic by arrow index.
// n = 0 yields one trivial word per vertex.
std::vector<Word> enumerate_legal(const Presentation& p, std::size_t n,
                                  std::size_t budget = std::size_t{1} << 22);

// Transfer matrix of the factor-avoidance automaton: states are (automaton
// state, current vertex) pairs reachable after at least one arrow; the
// start vector holds the states reached by single arrows.
struct CountingAutomaton {
  kernels::SparseMatrix step;  // next = step * current
  std::vector<mpz_class> start;
};
CountingAutomaton counting_automaton(const Presentation& p);

GrowthSequence count_legal_series(const Presentation& p, std::size_t horizon,
                                  kernels::Exec exec = kernels::Exec::parallel);

// Relative change between the last two trace values below which an
// estimate counts as converged.
inline constexpr double kConvergenceSlack = 1e-3;

// The `extrapolated` method: with B_n = sum_j C(n,j) a_j (counts of the
// shifted operator M + I, which has a unique dominant eigenvalue rho + 1)
// and R(n) = ln(B_n / B_{n-1}), the Richardson combination
// (n R(n) - h R(h)) / (n - h), h = n/2, cancels the k/n bias of polynomial
// prefactors n^k; the estimate is exp of that minus 1.
EntropyEstimate algebraic_entropy(const GrowthSequence& seq,
                                  EstimateMethod method);

// log2 of algebraic_entropy; the same number is h_top(X_F) and h(L).
EntropyEstimate language_entropy(const GrowthSequence& seq,
                                 EstimateMethod method = EstimateMethod::extrapolated);

// Converts a growth-rate estimate into its base-2 logarithm.
EntropyEstimate log2_estimate(EntropyEstimate e);

// log2 of a positive big integer, accurate to double precision.
double log2_of(const mpz_class& x);

}  // namespace monent
