#pragma once

// JSON and plain-text renderings of reports, graphs and Groebner data.
// Big integers are decimal strings; a tagged minus infinity is "-inf".

#include <json.hpp>

#include <string>

#include "monent/groebner.hpp"
#include "monent/language.hpp"
#include "monent/qgr.hpp"
#include "monent/ufnarovski.hpp"

namespace monent::io {

inline constexpr int kSchemaVersion = 1;

nlohmann::json estimate_json(const EntropyEstimate& e, bool with_trace = false);
nlohmann::json growth_json(const GrowthSequence& seq);
nlohmann::json report_json(const EntropyReport& r, bool with_trace = false);
nlohmann::json graph_json(const UfnarovskiGraph& g, const Presentation& p);
// Terms as [word, numerator, denominator], descending under the order.
nlohmann::json poly_json(const Poly& f, const Presentation& p, const MonomialOrder& order);
nlohmann::json gb_json(const GroebnerBasis& gb, const Presentation& p,
                       const SyzygySet* syzygies = nullptr);

std::string report_text(const EntropyReport& r);
std::string graph_text(const UfnarovskiGraph& g, const Presentation& p);
std::string gb_text(const GroebnerBasis& gb, const Presentation& p,
                    const SyzygySet* syzygies = nullptr);

// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace monent::io
