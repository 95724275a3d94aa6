#pragma once

// Seeded random presentations and ideal instances, and the invariant
// suites run over them by `monent verify` and the acceptance binary.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monent/core.hpp"
#include "monent/groebner.hpp"

namespace monent::corpus {

struct PresentationBounds {
  std::size_t max_vertices = 3;
  std::size_t max_arrows = 4;
  std::size_t max_forbidden = 5;
  std::size_t max_forbidden_length = 4;
};

struct IdealBounds {
  PresentationBounds presentation{2, 3, 4, 3};
  std::size_t max_generators = 3;
  std::size_t max_degree = 3;
  std::size_t max_terms = 3;
  long max_coefficient = 3;
};

Presentation random_presentation(std::mt19937_64& rng, const PresentationBounds& b);
std::vector<Presentation> presentation_corpus(std::uint64_t seed, std::size_t count,
                                              const PresentationBounds& b = {});

struct IdealInstance {
  Presentation presentation;
  std::vector<Poly> generators;  // homogeneous, nonzero, normal
  std::string expression;        // comma separated, parseable by parse_poly_list
};
std::vector<IdealInstance> ideal_corpus(std::uint64_t seed, std::size_t count,
                                        const IdealBounds& b = {});

struct SuiteConfig {
  std::uint64_t seed = 20240607;
  std::size_t corpus_size = 200;
  std::size_t ideal_instances = 50;
  // Caps every degree-like loop (oracle degrees, dimension offsets, twist
  // indices) when nonzero.
  std::size_t max_degree = 0;
  std::size_t horizon = 64;
  std::size_t twist_horizon = 64;
  double chain_tol = 2e-2;
  int jobs = 0;  // 0: OpenMP default
  bool inject_fault = false;  // perturbs one dimension count (self-test)
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // e.g. degenerate instances excluded from a comparison
  double worst = 0.0;       // suite-specific worst measured quantity
  double seconds = 0.0;
  std::vector<std::string> witnesses;  // first few failures, reproducible

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

SuiteResult check_dimension_bijection(const std::vector<Presentation>& corpus,
                                      const SuiteConfig& cfg);
SuiteResult check_entropy_chain(const std::vector<Presentation>& corpus, const SuiteConfig& cfg);
SuiteResult check_rank_bounds(const std::vector<Presentation>& corpus, const SuiteConfig& cfg);
SuiteResult check_round_trip(const std::vector<Presentation>& corpus, const SuiteConfig& cfg);
SuiteResult check_groebner_certificate(const std::vector<IdealInstance>& ideals,
                                       const SuiteConfig& cfg);
SuiteResult check_syzygies(const std::vector<IdealInstance>& ideals, const SuiteConfig& cfg);

// Every suite above, in a fixed order.
std::vector<SuiteResult> run_all(const SuiteConfig& cfg);

}  // namespace monent::corpus
