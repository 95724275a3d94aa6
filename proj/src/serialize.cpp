#include "monent/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace monent::io {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

json number_or_tag(double x, bool minus_infinity) {
  if (minus_infinity) return "-inf";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string show(const EntropyEstimate& e) {
  return e.minus_infinity ? "-inf" : format_double(e.value);
}

}  // namespace

json estimate_json(const EntropyEstimate& e, bool with_trace) {
  json j;
  j["estimate"] = number_or_tag(e.value, e.minus_infinity);
  j["method"] = std::string(to_string(e.method));
  j["horizon"] = e.horizon;
  j["converged"] = e.converged;
  j["degenerate"] = e.degenerate;
  j["tail_limsup"] = number_or_tag(e.tail_limsup, e.minus_infinity);
  if (with_trace) {
    json t = json::array();
    for (const auto& pt : e.trace) t.push_back(json::array({pt.n, pt.value}));
    j["trace"] = std::move(t);
  }
  return j;
}

json growth_json(const GrowthSequence& seq) {
  json a = json::array();
  for (const auto& x : seq.values) a.push_back(x.get_str());
  return a;
}

json report_json(const EntropyReport& r, bool with_trace) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "entropy_report";
  j["fingerprint"] = r.fingerprint;
  j["l"] = r.l;
  j["graph"] = {{"vertices", r.graph_vertices}, {"edges", r.graph_edges}};
  j["dimensions"] = growth_json(r.dimensions);
  j["h_alg_A"] = estimate_json(r.h_alg_A, with_trace);
  j["h_top_and_language"] = estimate_json(r.h_top_and_language, with_trace);
  j["h_graph"] = estimate_json(r.h_graph, with_trace);
  j["log2_h_alg_kQ"] = estimate_json(r.log2_h_alg_kQ, with_trace);
  j["rho_log2"] = estimate_json(r.rho_log2, with_trace);
  j["h_categorical"] = estimate_json(r.h_categorical, with_trace);
  json spectral;
  spectral["rho"] = r.spectral.rho;
  spectral["scc_count"] = r.spectral.scc_count;
  spectral["cyclic_components"] = r.spectral.components.size();
  spectral["iterations"] = r.spectral.iterations;
  spectral["tolerance_achieved"] = r.spectral.tolerance_achieved;
  spectral["converged"] = r.spectral.converged;
  j["spectral"] = std::move(spectral);
  j["chain"] = {{"tolerance", r.chain_tolerance},
                {"max_deviation", number_or_tag(r.max_deviation, false)},
                {"consistent", r.chain_consistent},
                {"degenerate", r.degenerate}};
  j["converged"] = r.converged;
  return j;
}

json graph_json(const UfnarovskiGraph& g, const Presentation& p) {
  const Quiver& q = p.quiver();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "ufnarovski_graph";
  j["fingerprint"] = fingerprint(p);
  j["l"] = g.l;
  json vs = json::array();
  for (const Word& w : g.vertices) vs.push_back(word_to_text(w, q));
  json es = json::array();
  for (const auto& e : g.edges) {
    es.push_back({{"word", word_to_text(e.word, q)},
                  {"source", e.source},
                  {"target", e.target},
                  {"label", q.arrow(e.label).label}});
  }
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  json hs = json::object();
  for (const auto& img : holdaway_smith(p, g)) hs[img.label] = img.edges;
  j["label_images"] = std::move(hs);
  return j;
}

json poly_json(const Poly& f, const Presentation& p, const MonomialOrder& order) {
  std::vector<std::pair<Word, mpq_class>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  json a = json::array();
  for (const auto& [w, c] : terms) {
    a.push_back(json::array({word_to_text(w, p.quiver()), c.get_num().get_str(),
                             c.get_den().get_str()}));
  }
  return a;
}

json gb_json(const GroebnerBasis& gb, const Presentation& p, const SyzygySet* syzygies) {
  const Quiver& q = p.quiver();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "groebner_basis";
  j["fingerprint"] = fingerprint(p);
  json order = json::array();
  for (ArrowIndex a : gb.order.precedence()) order.push_back(q.arrow(a).label);
  j["order"] = {{"kind", "deglex"}, {"precedence", std::move(order)}};
  j["certificate"] = {{"input_degree", gb.input_degree},
                      {"l", gb.l},
                      {"bound", gb.bound()},
                      {"max_degree", gb.max_degree},
                      {"holds", gb.max_degree <= gb.bound()}};
  j["homogeneous_input"] = gb.homogeneous_input;
  j["minimal"] = gb.minimal;
  j["reduced"] = gb.reduced;
  json els = json::array();
  for (const Poly& g : gb.elements) {
    els.push_back({{"leading_monomial", word_to_text(g.leading_monomial(gb.order), q)},
                   {"degree", g.degree()},
                   {"terms", poly_json(g, p, gb.order)}});
  }
  j["elements"] = std::move(els);
  if (syzygies) {
    json ss = json::array();
    for (const Syzygy& s : syzygies->generators) {
      json comps = json::array();
      for (const Poly& c : s.element.components) comps.push_back(poly_json(c, p, gb.order));
      ss.push_back({{"index", s.index},
                    {"tail", word_to_text(s.tail, q)},
                    {"degree", s.degree},
                    {"components", std::move(comps)}});
    }
    j["syzygies"] = {{"rank", syzygies->rank}, {"generators", std::move(ss)}};
  }
  return j;
}

std::string report_text(const EntropyReport& r) {
  std::ostringstream os;
  os << "fingerprint        " << r.fingerprint << "\n";
  os << "l                  " << r.l << "\n";
  os << "ufnarovski graph   " << r.graph_vertices << " vertices, " << r.graph_edges
     << " edges\n";
  os << "h_alg(A)           " << show(r.h_alg_A) << "\n";
  os << "spectral radius    " << format_double(r.spectral.rho) << "\n";
  for (const auto& c : r.chain()) {
    os << c.name << std::string(c.name.size() < 19 ? 19 - c.name.size() : 1, ' ')
       << show(*c.estimate) << (c.estimate->converged ? "" : "  (not converged)") << "\n";
  }
  os << "chain deviation    " << format_double(r.max_deviation) << " (tolerance "
     << format_double(r.chain_tolerance) << ")" << (r.chain_consistent ? " consistent" : " INCONSISTENT")
     << (r.degenerate ? ", degenerate" : "") << "\n";
  return os.str();
}

std::string graph_text(const UfnarovskiGraph& g, const Presentation& p) {
  const Quiver& q = p.quiver();
  std::ostringstream os;
  os << "l = " << g.l << ", " << g.vertices.size() << " vertices, " << g.edges.size()
     << " edges\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  v" << v << "  " << word_to_text(g.vertices[v], q) << "\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.source << " -> v" << e.target << "  " << word_to_text(e.word, q)
       << "  [" << q.arrow(e.label).label << "]\n";
  }
  return os.str();
}

std::string gb_text(const GroebnerBasis& gb, const Presentation& p, const SyzygySet* syzygies) {
  std::ostringstream os;
  os << "degree certificate: max " << gb.max_degree << " <= d + l = " << gb.input_degree
     << " + " << gb.l << "\n";
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    os << "g" << i + 1 << " = " << poly_to_text(gb.elements[i], p, gb.order) << "\n";
  }
  if (syzygies) {
    os << syzygies->generators.size() << " syzygies\n";
    for (const Syzygy& s : syzygies->generators) {
      os << "S(" << s.index + 1 << ", " << word_to_text(s.tail, p.quiver()) << ") =";
      bool first = true;
      for (std::size_t j = 0; j < s.element.components.size(); ++j) {
        const Poly& c = s.element.components[j];
        if (c.is_zero()) continue;
        os << (first ? " " : " + ") << "g" << j + 1 << "^(" << poly_to_text(c, p, gb.order)
           << ")";
        first = false;
      }
      if (first) os << " 0";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace monent::io
