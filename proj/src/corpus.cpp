#include "monent/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "monent/oracle.hpp"
#include "monent/qgr.hpp"
#include "monent/ufnarovski.hpp"

namespace monent::corpus {

namespace {

// Bounded draws straight from the engine so a seed means the same corpus on
// every standard library.
std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

std::vector<ArrowIndex> random_path(std::mt19937_64& rng, const Quiver& q, std::size_t len) {
  std::vector<ArrowIndex> w;
  if (q.arrow_count() == 0 || len == 0) return w;
  w.push_back(static_cast<ArrowIndex>(draw(rng, 0, q.arrow_count() - 1)));
  while (w.size() < len) {
    auto out = q.out_arrows(q.arrow(w.back()).target);
    if (out.empty()) break;
    w.push_back(out[draw(rng, 0, out.size() - 1)]);
  }
  return w;
}

const char* const kVertexNames[] = {"p", "q", "r", "s", "t", "u"};
const char* const kArrowNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

}  // namespace

Presentation random_presentation(std::mt19937_64& rng, const PresentationBounds& b) {
  const std::size_t nv = draw(rng, 1, std::min<std::size_t>(b.max_vertices, 6));
  const std::size_t na = draw(rng, 1, std::min<std::size_t>(b.max_arrows, 8));
  std::vector<std::string> vertices(kVertexNames, kVertexNames + nv);
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < na; ++a) {
    arrows.push_back({kArrowNames[a], static_cast<VertexIndex>(draw(rng, 0, nv - 1)),
                      static_cast<VertexIndex>(draw(rng, 0, nv - 1))});
  }
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Word> forbidden;
  const std::size_t nf = draw(rng, 0, b.max_forbidden);
  for (std::size_t i = 0; i < nf; ++i) {
    // Single letters delete arrows; keep them rare.
    std::size_t len = 1;
    if (b.max_forbidden_length >= 2 && draw(rng, 0, 9) != 0) {
      len = draw(rng, 2, b.max_forbidden_length);
    }
    // Dead ends would shorten the word; retry instead.
    for (int attempt = 0; attempt < 8; ++attempt) {
      auto w = random_path(rng, q, len);
      if (w.size() == len) {
        forbidden.push_back(make_word(q, std::move(w)));
        break;
      }
    }
  }
  return Presentation::create(q, std::move(forbidden));
}

std::vector<Presentation> presentation_corpus(std::uint64_t seed, std::size_t count,
                                              const PresentationBounds& b) {
  std::mt19937_64 rng(seed);
  std::vector<Presentation> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_presentation(rng, b));
  return out;
}

std::vector<IdealInstance> ideal_corpus(std::uint64_t seed, std::size_t count,
                                        const IdealBounds& b) {
  std::mt19937_64 rng(seed);
  std::vector<IdealInstance> out;
  while (out.size() < count) {
    IdealInstance inst;
    inst.presentation = random_presentation(rng, b.presentation);
    const Presentation& p = inst.presentation;
    const MonomialOrder order = MonomialOrder::declaration(p.quiver());
    const std::size_t ng = draw(rng, 1, b.max_generators);
    for (std::size_t i = 0; i < ng; ++i) {
      const std::size_t d = draw(rng, 1, b.max_degree);
      const std::size_t nt = draw(rng, 1, b.max_terms);
      Poly g;
      for (std::size_t t = 0; t < nt; ++t) {
        for (int attempt = 0; attempt < 16; ++attempt) {
          Word w = make_word(p.quiver(), random_path(rng, p.quiver(), d));
          if (w.length() != d || !p.is_legal(w)) continue;
          long c = static_cast<long>(draw(rng, 1, static_cast<std::size_t>(b.max_coefficient)));
          if (draw(rng, 0, 1) == 1) c = -c;
          g.add_term(w, c);
          break;
        }
      }
      if (g.is_zero()) continue;
      if (!inst.expression.empty()) inst.expression += ", ";
      inst.expression += poly_to_text(g, p, order);
      inst.generators.push_back(std::move(g));
    }
    if (!inst.generators.empty()) out.push_back(std::move(inst));
  }
  return out;
}

// ---------------------------------------------------------------- suites

namespace {

struct Outcome {
  bool ok = true;
  bool skipped = false;
  double measure = 0.0;
  std::string detail;
};

std::string describe(const Presentation& p) { return to_text(p); }

// Runs `check` on every index in parallel and aggregates in index order.
template <class Check>
SuiteResult run_suite(std::string name, std::size_t n, const SuiteConfig& cfg,
                      const std::function<std::string(std::size_t)>& show, Check check) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(n);
#ifdef _OPENMP
  const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::size_t i = 0; i < n; ++i) {
    try {
      outcomes[i] = check(i);
    } catch (const std::exception& ex) {
      outcomes[i].ok = false;
      outcomes[i].detail = std::string("exception: ") + ex.what();
    }
  }
  SuiteResult r;
  r.name = std::move(name);
  for (std::size_t i = 0; i < n; ++i) {
    const Outcome& o = outcomes[i];
    ++r.cases;
    if (o.skipped) ++r.skipped;
    if (!o.skipped) r.worst = std::max(r.worst, o.measure);
    if (!o.ok) {
      ++r.failures;
      if (r.witnesses.size() < 5) {
        r.witnesses.push_back("instance " + std::to_string(i) + ": " + o.detail + "\n" + show(i));
      }
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::size_t capped(std::size_t value, const SuiteConfig& cfg) {
  return cfg.max_degree ? std::min(value, cfg.max_degree) : value;
}

std::string words_text(const std::vector<Word>& ws, const Quiver& q) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + word_to_text(ws[i], q);
  return s + "}";
}

}  // namespace

SuiteResult check_dimension_bijection(const std::vector<Presentation>& corpus,
                                      const SuiteConfig& cfg) {
  return run_suite(
      "dimension bijection", corpus.size(), cfg,
      [&](std::size_t i) { return describe(corpus[i]); },
      [&](std::size_t i) {
        const Presentation& p = corpus[i];
        const std::size_t l = p.l();
        const std::size_t span = capped(12, cfg);
        GrowthSequence dims = count_legal_series(p, l + span, kernels::Exec::serial);
        const GrowthSequence paths =
            path_count_series(adjacency(build_ufnarovski(p)), span, kernels::Exec::serial);
        if (cfg.inject_fault && i == 0) dims.values[l + 1] += 1;
        Outcome o;
        for (std::size_t m = l + 1; m <= l + span; ++m) {
          if (dims[m] != paths[m - l]) {
            o.ok = false;
            o.detail = "dim A_" + std::to_string(m) + " = " + dims[m].get_str() + " but Q_A has " +
                       paths[m - l].get_str() + " paths of length " + std::to_string(m - l);
            break;
          }
        }
        return o;
      });
}

SuiteResult check_entropy_chain(const std::vector<Presentation>& corpus, const SuiteConfig& cfg) {
  ReportSettings s;
  s.horizon = cfg.horizon;
  s.twist_horizon = cfg.twist_horizon;
  s.chain_tol = cfg.chain_tol;
  s.exec = kernels::Exec::serial;
  return run_suite(
      "entropy chain", corpus.size(), cfg, [&](std::size_t i) { return describe(corpus[i]); },
      [&](std::size_t i) {
        const EntropyReport r = entropy_report(corpus[i], s);
        Outcome o;
        o.skipped = r.degenerate;
        o.measure = r.max_deviation;
        if (!r.chain_consistent) {
          o.ok = false;
          o.detail = "chain deviation " + std::to_string(r.max_deviation) + ":";
          for (const auto& c : r.chain()) {
            o.detail += " " + c.name + "=" +
                        (c.estimate->minus_infinity ? std::string("-inf")
                                                    : std::to_string(c.estimate->value));
          }
        }
        return o;
      });
}

SuiteResult check_rank_bounds(const std::vector<Presentation>& corpus,
                                 const SuiteConfig& cfg) {
  return run_suite(
      "rank bounds", corpus.size(), cfg, [&](std::size_t i) { return describe(corpus[i]); },
      [&](std::size_t i) {
        const AdjacencyMatrix adj = adjacency(build_ufnarovski(corpus[i]));
        const std::size_t top = capped(12, cfg);
        const GrowthSequence b = path_count_series(adj, 2 * top, kernels::Exec::serial);
        const GrowthSequence rk = rank_series(adj, 2 * top, kernels::Exec::serial);
        Outcome o;
        for (std::size_t m = 0; m <= 2 * top && o.ok; ++m) {
          if (rk[m] > b[m]) {
            o.ok = false;
            o.detail = "rank O(" + std::to_string(m) + ") = " + rk[m].get_str() + " > b_m = " +
                       b[m].get_str();
          }
        }
        for (std::size_t m = 0; m <= top && o.ok; ++m) {
          for (std::size_t n = 0; n <= top && o.ok; ++n) {
            if (b[m + n] > rk[m] * b[n]) {
              o.ok = false;
              o.detail = "b_" + std::to_string(m + n) + " > rank O(" + std::to_string(m) +
                         ") * b_" + std::to_string(n);
            }
          }
        }
        return o;
      });
}

SuiteResult check_round_trip(const std::vector<Presentation>& corpus, const SuiteConfig& cfg) {
  return run_suite(
      "text round trip", corpus.size(), cfg, [&](std::size_t i) { return describe(corpus[i]); },
      [&](std::size_t i) {
        const Presentation& p = corpus[i];
        Outcome o;
        const Presentation back = parse_presentation(to_text(p));
        if (!(back == p) || fingerprint(back) != fingerprint(p)) {
          o.ok = false;
          o.detail = "parse(to_text(p)) differs from p";
        }
        return o;
      });
}

SuiteResult check_groebner_certificate(const std::vector<IdealInstance>& ideals,
                                       const SuiteConfig& cfg) {
  auto show = [&](std::size_t i) {
    return "generators: " + ideals[i].expression + "\n" + describe(ideals[i].presentation);
  };
  return run_suite("groebner certificate", ideals.size(), cfg, show, [&](std::size_t i) {
    const IdealInstance& inst = ideals[i];
    const Presentation& p = inst.presentation;
    const MonomialOrder order = MonomialOrder::declaration(p.quiver());
    const GroebnerBasis gb = right_gb(inst.generators, order, p);
    Outcome o;
    o.measure = static_cast<double>(gb.max_degree) - static_cast<double>(gb.bound());
    if (gb.max_degree > gb.bound()) {
      o.ok = false;
      o.detail = "basis degree " + std::to_string(gb.max_degree) + " > d + l";
      return o;
    }
    for (std::size_t e = 0; e <= capped(gb.bound() + 3, cfg); ++e) {
      const auto expected = oracle::graded_oracle(inst.generators, e, p, order);
      const auto predicted = oracle::predicted_leading_monomials(gb, e, p);
      if (expected != predicted) {
        o.ok = false;
        o.detail = "degree " + std::to_string(e) + ": oracle " +
                   words_text(expected, p.quiver()) + " vs basis " +
                   words_text(predicted, p.quiver());
        return o;
      }
    }
    for (const Poly& g : inst.generators) {
      const Poly r = reduce(g, gb, p);
      if (!r.is_zero()) {
        o.ok = false;
        o.detail = "generator " + poly_to_text(g, p, order) + " reduces to " +
                   poly_to_text(r, p, order);
        return o;
      }
    }
    return o;
  });
}

SuiteResult check_syzygies(const std::vector<IdealInstance>& ideals, const SuiteConfig& cfg) {
  auto show = [&](std::size_t i) {
    return "generators: " + ideals[i].expression + "\n" + describe(ideals[i].presentation);
  };
  return run_suite("syzygies", ideals.size(), cfg, show, [&](std::size_t i) {
    const IdealInstance& inst = ideals[i];
    const Presentation& p = inst.presentation;
    const GroebnerBasis gb = right_gb(inst.generators, MonomialOrder::declaration(p.quiver()), p);
    const SyzygySet syz = syzygy_generators(gb, p);
    Outcome o;
    for (const Syzygy& s : syz.generators) {
      if (!apply_presentation_map(s.element, gb, p).is_zero()) {
        o.ok = false;
        o.detail = "S(" + std::to_string(s.index + 1) + ", " + word_to_text(s.tail, p.quiver()) +
                   ") does not map to zero";
        return o;
      }
    }
    for (std::size_t e = 0; e <= capped(gb.bound() + 4, cfg); ++e) {
      const auto k = oracle::syzygy_kernel_check(gb, syz, e, p);
      if (!k.ok()) {
        o.ok = false;
        o.detail = "degree " + std::to_string(e) + ": kernel dimension " +
                   std::to_string(k.kernel_dim) + ", syzygies span " +
                   std::to_string(k.spanned_dim);
        return o;
      }
    }
    return o;
  });
}

std::vector<SuiteResult> run_all(const SuiteConfig& cfg) {
  const auto corpus = presentation_corpus(cfg.seed, cfg.corpus_size);
  const auto ideals = ideal_corpus(cfg.seed + 1, cfg.ideal_instances);
  return {check_round_trip(corpus, cfg),          check_dimension_bijection(corpus, cfg),
          check_entropy_chain(corpus, cfg),       check_rank_bounds(corpus, cfg),
          check_groebner_certificate(ideals, cfg), check_syzygies(ideals, cfg)};
}

}  // namespace monent::corpus
