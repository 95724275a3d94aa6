// One PASS/FAIL line per acceptance criterion. Expected values are the
// closed forms and literal sets written out below; the corpus criteria run
// the same suites as `monent verify` at their default settings.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>

#include "monent/corpus.hpp"
#include "monent/qgr.hpp"
#include "monent/ufnarovski.hpp"

using namespace monent;

namespace {

constexpr double kGraphTol = 1e-9;
constexpr double kEntropyTol = 1e-3;
constexpr double kChainTol = 2e-2;
constexpr double kGoldenSeconds = 5.0;
constexpr double kBijectionSeconds = 60.0;
constexpr double kGroebnerSeconds = 120.0;
constexpr std::uint64_t kSeed = 20240607;
constexpr std::size_t kCorpusSize = 200;
constexpr std::size_t kIdealInstances = 50;

struct Outcome {
  bool ok;
  std::string detail;
};

using Edges = std::set<std::tuple<std::string, std::string, std::string, std::string>>;

Edges edges_of(const UfnarovskiGraph& g, const Quiver& q) {
  Edges out;
  for (const auto& e : g.edges) {
    out.emplace(word_to_text(e.word, q), word_to_text(g.vertices[e.source], q),
                word_to_text(g.vertices[e.target], q), q.arrow(e.label).label);
  }
  return out;
}

std::set<std::string> vertices_of(const UfnarovskiGraph& g, const Quiver& q) {
  std::set<std::string> out;
  for (const Word& w : g.vertices) out.insert(word_to_text(w, q));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome three_loop_golden(const std::string& data) {
  const auto t0 = std::chrono::steady_clock::now();
  const Presentation p = load_presentation(data + "/three_loops.txt");
  const GrowthSequence a = count_legal_series(p, 20);
  bool counts = true;
  for (unsigned s = 0; s <= 20; ++s) {
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, s + 1);
    counts = counts && a[s] == expected - 1;
  }
  const UfnarovskiGraph g = build_ufnarovski(p);
  const Edges expected = {{"xx", "x", "x", "x"}, {"xy", "x", "y", "x"}, {"yx", "y", "x", "y"},
                          {"yy", "y", "y", "y"}, {"zx", "z", "x", "z"}, {"zy", "z", "y", "z"},
                          {"zz", "z", "z", "z"}};
  const bool graph = g.vertices.size() == 3 && edges_of(g, p.quiver()) == expected;
  const EntropyReport r = entropy_report(p);
  const double rho_err = std::abs(r.spectral.rho - 2.0);
  double worst = 0;
  for (const EntropyEstimate* e : {&r.h_graph, &r.h_top_and_language, &r.h_categorical}) {
    worst = std::max(worst, std::abs(e->value - 1.0));
  }
  const double secs = seconds_since(t0);
  const bool ok = counts && graph && rho_err <= kGraphTol && worst <= kEntropyTol &&
                  r.chain_consistent && secs < kGoldenSeconds;
  return {ok, std::string("counts ") + (counts ? "exact" : "wrong") + ", graph " +
                  (graph ? "exact" : "wrong") +
                  fmt(", |rho-2| = %.2e, max |h-1| = %.2e, %.2f s", rho_err, worst, secs) +
                  (r.chain_consistent ? "" : ", chain inconsistent")};
}

Outcome six_vertex_golden(const std::string& data) {
  const Presentation p = load_presentation(data + "/six_cycle.txt");
  const UfnarovskiGraph g = build_ufnarovski(p);
  const std::set<std::string> vertices = {"xyy", "xyz", "yyz", "yzx", "zxy", "yyy"};
  const Edges edges = {{"xyyz", "xyy", "yyz", "x"}, {"xyzx", "xyz", "yzx", "x"},
                       {"yyzx", "yyz", "yzx", "y"}, {"yzxy", "yzx", "zxy", "y"},
                       {"zxyy", "zxy", "xyy", "z"}, {"zxyz", "zxy", "xyz", "z"},
                       {"yyyz", "yyy", "yyz", "y"}, {"xyyy", "xyy", "yyy", "x"}};
  const bool v = vertices_of(g, p.quiver()) == vertices;
  const bool e = edges_of(g, p.quiver()) == edges;
  return {v && e, std::string("vertices ") + (v ? "equal" : "differ") + ", edges " + (e ? "equal" : "differ")};
}

Outcome from_suite(const corpus::SuiteResult& r, double limit = 0) {
  std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) +
                       " failures, " + std::to_string(r.skipped) + " skipped" +
                       fmt(", worst %.3g, %.2f s", r.worst, r.seconds);
  bool ok = r.passed();
  if (limit > 0 && r.seconds >= limit) {
    ok = false;
    detail += fmt(" (limit %.0f s)", limit);
  }
  return {ok, detail};
}

Outcome golden_mean(const std::string& data) {
  const Presentation p = load_presentation(data + "/golden_mean.txt");
  const GrowthSequence a = count_legal_series(p, 40);
  bool fib = true;
  mpz_class f1 = 1, f2 = 2;
  for (std::size_t n = 0; n <= 40; ++n) {
    fib = fib && a[n] == f1;
    mpz_class f3 = f1 + f2;
    f1 = f2;
    f2 = f3;
  }
  const double target = std::log2((1 + std::sqrt(5.0)) / 2);
  const EntropyReport r = entropy_report(p);
  double worst = 0;
  for (const ChainEntry& e : r.chain()) worst = std::max(worst, std::abs(e.estimate->value - target));
  return {fib && worst <= kEntropyTol,
          std::string("counts ") + (fib ? "Fibonacci" : "wrong") + fmt(", max |h - log2 phi| = %.2e", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data = argc > 1 ? argv[1] : "tests/data";
  corpus::SuiteConfig cfg;
  cfg.seed = kSeed;
  cfg.corpus_size = kCorpusSize;
  cfg.ideal_instances = kIdealInstances;
  cfg.chain_tol = kChainTol;
  const auto presentations = corpus::presentation_corpus(cfg.seed, cfg.corpus_size);
  const auto ideals = corpus::ideal_corpus(cfg.seed + 1, cfg.ideal_instances);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"three-loop golden run", [&] { return three_loop_golden(data); }},
      {"six-vertex graph", [&] { return six_vertex_golden(data); }},
      {"dimension bijection",
       [&] { return from_suite(corpus::check_dimension_bijection(presentations, cfg), kBijectionSeconds); }},
      {"entropy chain", [&] { return from_suite(corpus::check_entropy_chain(presentations, cfg)); }},
      {"groebner certificate",
       [&] { return from_suite(corpus::check_groebner_certificate(ideals, cfg), kGroebnerSeconds); }},
      {"syzygies", [&] { return from_suite(corpus::check_syzygies(ideals, cfg)); }},
      {"rank bounds", [&] { return from_suite(corpus::check_rank_bounds(presentations, cfg)); }},
      {"golden mean", [&] { return golden_mean(data); }},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s  %d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
