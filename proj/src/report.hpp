#pragma once

#include <json.hpp>

#include "bundle.hpp"
#include "colimit.hpp"

namespace difftan {

// Structured facts behind every CLI report. The text renderer and the --json
// output both read these objects, so the two views carry identical facts by
// construction. All rationals are serialized as exact strings and every
// array is emitted in declaration order, keeping reports byte-stable.
using json = nlohmann::json;

json matrix_json(const Matrix& m);
json vector_json(const std::vector<Rational>& v);

json validate_facts(const TangentDiagram& d);
json tangent_facts(const TangentDiagram& d, const TangentSpace& t);
json filtered_facts(const TangentDiagram& d);
json onerep_facts(const TangentDiagram& d, const TangentSpace& t);
json zero_facts(const TangentDiagram& d, const FormalVector& w, const ZeroDecision& decision);
json witness_facts(const TangentDiagram& d, const FormalVector& w,
                   const std::optional<SinglePlotWitness>& witness);
json product_facts(const TangentDiagram& product);
json bundle_facts(const TangentDiagram& fiber, const TangentDiagram& total,
                  const TangentDiagram& base, const ExactnessReport& report, bool group_quotient);
json corpus_list_facts();

} // namespace difftan
