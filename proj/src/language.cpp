#include "monent/language.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "monent/errors.hpp"

namespace monent {

std::string_view to_string(EstimateMethod m) noexcept {
  switch (m) {
    case EstimateMethod::root: return "root";
    case EstimateMethod::ratio: return "ratio";
    case EstimateMethod::fekete_inf: return "fekete-inf";
    case EstimateMethod::extrapolated: return "extrapolated";
    case EstimateMethod::spectral: return "spectral";
    case EstimateMethod::rank_growth: return "rank-growth";
  }
  return "?";
}

EstimateMethod parse_method(std::string_view s) {
  for (auto m : {EstimateMethod::root, EstimateMethod::ratio, EstimateMethod::fekete_inf,
                 EstimateMethod::extrapolated, EstimateMethod::spectral,
                 EstimateMethod::rank_growth}) {
    if (to_string(m) == s) return m;
  }
  throw InputError("unknown estimation method '" + std::string(s) + "'");
}

double log2_of(const mpz_class& x) {
  if (x <= 0) throw std::domain_error("log2_of: non-positive argument");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

// ---------------------------------------------------------------- words

std::vector<Word> enumerate_legal(const Presentation& p, std::size_t n,
                                  std::size_t budget) {
  const Quiver& q = p.quiver();
  const FactorAutomaton& fa = p.automaton();
  std::vector<Word> out;
  if (n == 0) {
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) out.push_back(trivial_word(v));
    return out;
  }
  std::vector<ArrowIndex> stack;
  stack.reserve(n);
  auto emit = [&] {
    if (out.size() >= budget) {
      throw BudgetExceeded("enumerate_legal: more than " + std::to_string(budget) +
                           " words of length " + std::to_string(n));
    }
    out.push_back(make_word(q, stack));
  };
  auto dfs = [&](auto&& self, FactorAutomaton::State s, VertexIndex at) -> void {
    if (stack.size() == n) {
      emit();
      return;
    }
    for (ArrowIndex a : q.out_arrows(at)) {
      auto next = fa.step(s, a);
      if (fa.dead(next)) continue;
      stack.push_back(a);
      self(self, next, q.arrow(a).target);
      stack.pop_back();
    }
  };
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    auto s = fa.step(FactorAutomaton::root(), a);
    if (fa.dead(s)) continue;
    stack.push_back(a);
    dfs(dfs, s, q.arrow(a).target);
    stack.pop_back();
  }
  return out;
}

// ---------------------------------------------------------------- counting

CountingAutomaton counting_automaton(const Presentation& p) {
  const Quiver& q = p.quiver();
  const FactorAutomaton& fa = p.automaton();
  using Key = std::pair<FactorAutomaton::State, VertexIndex>;
  std::map<Key, std::size_t> index;
  std::vector<Key> states;
  auto intern = [&](Key k) {
    auto [it, fresh] = index.emplace(k, states.size());
    if (fresh) states.push_back(k);
    return it->second;
  };

  std::vector<std::size_t> start_states;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    auto s = fa.step(FactorAutomaton::root(), a);
    if (!fa.dead(s)) start_states.push_back(intern({s, q.arrow(a).target}));
  }
  std::vector<kernels::SparseMatrix::Triple> triples;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [s, v] = states[i];
    for (ArrowIndex a : q.out_arrows(v)) {
      auto next = fa.step(s, a);
      if (fa.dead(next)) continue;
      std::size_t j = intern({next, q.arrow(a).target});
      triples.push_back({j, i, 1});
    }
  }
  CountingAutomaton ca;
  ca.step = kernels::SparseMatrix::from_triples(states.size(), states.size(),
                                                std::move(triples));
  ca.start.assign(states.size(), 0);
  for (std::size_t i : start_states) ca.start[i] += 1;
  return ca;
}

GrowthSequence count_legal_series(const Presentation& p, std::size_t horizon,
                                  kernels::Exec exec) {
  GrowthSequence seq;
  seq.values.push_back(p.quiver().vertex_count());
  if (horizon == 0) return seq;
  CountingAutomaton ca = counting_automaton(p);
  auto totals = kernels::iterate_totals(ca.step, ca.start, horizon - 1, exec);
  seq.values.insert(seq.values.end(), totals.begin(), totals.end());
  return seq;
}

// ---------------------------------------------------------------- estimators

namespace {

double nth_root(const mpz_class& x, std::size_t n) {
  if (x == 0) return 0.0;
  return std::exp2(log2_of(x) / static_cast<double>(n));
}

double ratio_of(const mpz_class& num, const mpz_class& den) {
  return std::exp2(log2_of(num) - log2_of(den));
}

void finish(EntropyEstimate& e) {
  if (e.trace.empty()) return;
  const std::size_t tail = std::max<std::size_t>(1, e.trace.size() / 3);
  e.tail_limsup = e.trace[e.trace.size() - tail].value;
  for (std::size_t i = e.trace.size() - tail; i < e.trace.size(); ++i) {
    e.tail_limsup = std::max(e.tail_limsup, e.trace[i].value);
  }
  if (e.trace.size() >= 2) {
    double last = e.trace.back().value;
    double prev = e.trace[e.trace.size() - 2].value;
    e.converged = std::abs(last - prev) <= kConvergenceSlack * std::max(1.0, std::abs(last));
  }
}

// ln B_0 .. ln B_N where B_n = sum_j C(n, j) a_j.
std::vector<double> log_binomial_transform(const std::vector<mpz_class>& a) {
  std::vector<double> out;
  out.reserve(a.size());
  std::vector<mpz_class> binom{1};
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (n > 0) {
      std::vector<mpz_class> next(n + 1);
      next[0] = 1;
      next[n] = 1;
      for (std::size_t j = 1; j < n; ++j) next[j] = binom[j - 1] + binom[j];
      binom = std::move(next);
    }
    mpz_class b = 0;
    for (std::size_t j = 0; j <= n; ++j) b += binom[j] * a[j];
    out.push_back(b > 0 ? log2_of(b) * std::log(2.0) : -INFINITY);
  }
  return out;
}

}  // namespace

EntropyEstimate algebraic_entropy(const GrowthSequence& seq, EstimateMethod method) {
  const std::size_t N = seq.horizon();
  EntropyEstimate e;
  e.method = method;
  e.horizon = N;
  if (N == 0) throw std::invalid_argument("algebraic_entropy needs horizon >= 1");
  if (seq.vanishes()) {
    e.degenerate = true;
    e.value = 0.0;
    return e;
  }
  const auto& a = seq.values;
  switch (method) {
    case EstimateMethod::root: {
      for (std::size_t n = 1; n <= N; ++n) e.trace.push_back({n, nth_root(a[n], n)});
      e.value = e.trace.back().value;
      break;
    }
    case EstimateMethod::ratio: {
      if (a[N - 1] == 0) throw std::invalid_argument("ratio estimator needs a_{N-1} > 0");
      for (std::size_t n = 1; n <= N; ++n) {
        if (a[n - 1] > 0 && a[n] > 0) e.trace.push_back({n, ratio_of(a[n], a[n - 1])});
      }
      e.value = e.trace.back().value;
      break;
    }
    case EstimateMethod::fekete_inf: {
      double best = INFINITY;
      for (std::size_t n = 1; n <= N; ++n) {
        best = std::min(best, nth_root(a[n], n));
        e.trace.push_back({n, best});
      }
      e.value = best;
      break;
    }
    case EstimateMethod::extrapolated:
    case EstimateMethod::rank_growth: {
      if (N < 2) throw std::invalid_argument("extrapolated estimator needs horizon >= 2");
      auto lb = log_binomial_transform(a);
      auto R = [&](std::size_t n) { return lb[n] - lb[n - 1]; };
      for (std::size_t n = 2; n <= N; ++n) {
        const std::size_t h = n / 2;
        const double dn = static_cast<double>(n), dh = static_cast<double>(h);
        const double log_shift = (dn * R(n) - dh * R(h)) / (dn - dh);
        e.trace.push_back({n, std::max(0.0, std::exp(log_shift) - 1.0)});
      }
      e.value = e.trace.back().value;
      break;
    }
    case EstimateMethod::spectral:
      throw std::invalid_argument("spectral estimates come from spectral_radius");
  }
  finish(e);
  return e;
}

EntropyEstimate log2_estimate(EntropyEstimate e) {
  if (e.degenerate || e.value <= 0.0) {
    e.minus_infinity = true;
    e.value = 0.0;
    e.tail_limsup = 0.0;
    return e;
  }
  e.value = std::log2(e.value);
  e.tail_limsup = e.tail_limsup > 0 ? std::log2(e.tail_limsup) : 0.0;
  std::erase_if(e.trace, [](const TracePoint& t) { return t.value <= 0.0; });
  for (auto& t : e.trace) t.value = std::log2(t.value);
  return e;
}

EntropyEstimate language_entropy(const GrowthSequence& seq, EstimateMethod method) {
  return log2_estimate(algebraic_entropy(seq, method));
}

}  // namespace monent
