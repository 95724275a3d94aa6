#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <ostream>

#include "monent/corpus.hpp"
#include "monent/errors.hpp"
#include "monent/groebner.hpp"
#include "monent/qgr.hpp"
#include "monent/serialize.hpp"
#include "monent/ufnarovski.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monent::cli {

namespace {

void setup_logging() {
  static bool done = false;
  if (done) return;
  done = true;
  auto logger = spdlog::stderr_color_mt("monent");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("MONENT_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

Presentation load(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg.input);
  spdlog::info("loaded {} ({} vertices, {} arrows, {} forbidden words, l = {})", cfg.input,
               p.quiver().vertex_count(), p.quiver().arrow_count(), p.forbidden().size(), p.l());
  return p;
}

}  // namespace

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Presentation p = load(cfg);
  ReportSettings s;
  s.horizon = cfg.horizon;
  s.twist_horizon = cfg.twist_horizon;
  s.spectral_tol = cfg.tol;
  s.chain_tol = cfg.chain_tol;
  const EntropyReport r = entropy_report(p, s);
  spdlog::info("spectral radius {} after {} iterations", r.spectral.rho, r.spectral.iterations);
  if (cfg.format == "text") {
    out << io::report_text(r);
  } else {
    emit_json(out, io::report_json(r, cfg.trace));
  }
  if (!r.converged) {
    spdlog::warn("an estimate did not converge at the requested horizon");
    return kNotConverged;
  }
  if (!r.chain_consistent) {
    spdlog::warn("entropy chain deviation {} exceeds {}", r.max_deviation, r.chain_tolerance);
    return kNotConverged;
  }
  return kOk;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Presentation p = load(cfg);
  const UfnarovskiGraph g = build_ufnarovski(p);
  if (cfg.format == "dot") {
    out << export_dot(g, p);
  } else if (cfg.format == "text") {
    out << io::graph_text(g, p);
  } else {
    emit_json(out, io::graph_json(g, p));
  }
  return kOk;
}

int cmd_gb(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Presentation p = load(cfg);
  if (cfg.generators.empty()) throw InputError("no generators given (use --gens or --gen)");
  std::vector<Poly> gens;
  for (const auto& g : cfg.generators) {
    for (Poly& f : parse_poly_list(g, p)) gens.push_back(std::move(f));
  }
  const MonomialOrder order = cfg.order.empty()
                                  ? MonomialOrder::declaration(p.quiver())
                                  : MonomialOrder::from_labels(p.quiver(), cfg.order);
  const GroebnerBasis gb = right_gb(gens, order, p);
  spdlog::info("basis of {} elements, max degree {} (bound {})", gb.elements.size(),
               gb.max_degree, gb.bound());
  std::optional<SyzygySet> syz;
  if (cfg.syzygies) syz = syzygy_generators(gb, p);
  const SyzygySet* sp = syz ? &*syz : nullptr;
  if (cfg.format == "text") {
    out << io::gb_text(gb, p, sp);
  } else {
    emit_json(out, io::gb_json(gb, p, sp));
  }
  return kOk;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Presentation p = load(cfg);
  const GrowthSequence seq = count_legal_series(p, cfg.horizon);
  if (cfg.format == "text") {
    for (std::size_t n = 0; n < seq.values.size(); ++n) {
      out << n << " " << seq.values[n].get_str() << "\n";
    }
  } else {
    nlohmann::json j;
    j["schema_version"] = io::kSchemaVersion;
    j["kind"] = "growth_series";
    j["fingerprint"] = fingerprint(p);
    j["dimensions"] = io::growth_json(seq);
    emit_json(out, j);
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  corpus::SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.corpus_size = cfg.corpus_size;
  sc.ideal_instances = cfg.gb_instances;
  sc.max_degree = cfg.max_degree;
  sc.horizon = cfg.horizon;
  sc.twist_horizon = cfg.twist_horizon;
  sc.chain_tol = cfg.chain_tol;
  sc.jobs = cfg.jobs;
  sc.inject_fault = cfg.inject_fault;
  const auto results = corpus::run_all(sc);
  bool all = true;
  for (const auto& r : results) all = all && r.passed();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["schema_version"] = io::kSchemaVersion;
    j["kind"] = "verification";
    j["seed"] = cfg.seed;
    j["passed"] = all;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results) {
      suites.push_back({{"name", r.name},
                        {"passed", r.passed()},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"skipped", r.skipped},
                        {"worst", r.worst},
                        {"witnesses", r.witnesses}});
    }
    j["suites"] = std::move(suites);
    emit_json(out, j);
  } else {
    for (const auto& r : results) {
      out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << ": " << r.cases << " cases, "
          << r.failures << " failures";
      if (r.skipped) out << ", " << r.skipped << " degenerate";
      out << "\n";
    }
  }
  for (const auto& r : results) {
    for (const auto& w : r.witnesses) err << r.name << " witness, " << w << "\n";
  }
  return all ? kOk : kNotConverged;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  setup_logging();
  CLI::App app{"Entropy, Ufnarovski graphs and Groebner bases of monomial path algebras",
               "monent"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "presentation file")->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };

  auto* report = app.add_subcommand("report", "entropy chain report");
  add_input(report);
  report->add_option("--horizon", cfg.horizon, "N for dimension counts")
      ->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  report->add_option("--twist-horizon", cfg.twist_horizon, "m_max for Serre twists")
      ->check(CLI::Range(std::size_t{4}, std::size_t{4096}));
  report->add_option("--tol", cfg.tol, "power iteration bracket width")->check(CLI::PositiveNumber);
  report->add_option("--chain-tol", cfg.chain_tol, "allowed pairwise deviation")
      ->check(CLI::PositiveNumber);
  report->add_flag("--trace", cfg.trace, "include estimator traces");
  add_format(report, {"json", "text"});

  auto* graph = app.add_subcommand("graph", "Ufnarovski graph");
  add_input(graph);
  add_format(graph, {"json", "text", "dot"});
  graph->add_flag_callback("--dot", [&] { cfg.format = "dot"; }, "same as --format dot");

  auto* gb = app.add_subcommand("gb", "Groebner basis of a right ideal");
  add_input(gb);
  gb->add_option("--gens", cfg.generators, "comma separated generator expressions");
  gb->add_option("--gen", cfg.generators, "one generator expression (repeatable)");
  gb->add_option("--order", cfg.order, "arrow labels, smallest first")->delimiter(',');
  gb->add_flag("--syzygies", cfg.syzygies, "include syzygy generators");
  add_format(gb, {"json", "text"});

  auto* series = app.add_subcommand("series", "graded dimensions of A");
  add_input(series);
  series->add_option("--horizon", cfg.horizon, "largest degree")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  add_format(series, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "randomized invariant suites");
  verify->add_option("--seed", cfg.seed, "corpus seed");
  verify->add_option("--corpus-size", cfg.corpus_size, "number of presentations")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  verify->add_option("--gb-instances", cfg.gb_instances, "number of ideal instances")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  verify->add_option("--max-degree", cfg.max_degree, "cap degree loops (quick mode)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  verify->add_option("--horizon", cfg.horizon, "N for dimension counts")
      ->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  verify->add_option("--twist-horizon", cfg.twist_horizon, "m_max for Serre twists")
      ->check(CLI::Range(std::size_t{4}, std::size_t{4096}));
  verify->add_option("--chain-tol", cfg.chain_tol, "allowed pairwise deviation")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 1024));
  verify->add_flag("--inject-fault", cfg.inject_fault, "corrupt one count (harness self-test)");
  cfg.format = "text";
  add_format(verify, {"json", "text"});

  try {
    // Subcommands other than verify default to JSON.
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  auto* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  if (cfg.subcommand != "verify" && chosen->count("--format") == 0 &&
      !(cfg.subcommand == "graph" && chosen->count("--dot"))) {
    cfg.format = "json";
  }

  try {
    if (cfg.subcommand == "report") return cmd_report(cfg, out, err);
    if (cfg.subcommand == "graph") return cmd_graph(cfg, out, err);
    if (cfg.subcommand == "gb") return cmd_gb(cfg, out, err);
    if (cfg.subcommand == "series") return cmd_series(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CertificateError& e) {
    err << "certificate violation: " << e.what() << "\n";
    return kCertificateViolation;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace monent::cli
