#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bundle.hpp"

namespace difftan {

// Golden facts for one diagram part of a corpus entry.
struct ExpectedDiagramFacts {
    std::string part;
    int dimension = 0;
    bool weakly_filtered = false;
    bool filtered = false;
    bool one_representable = false;
};

// A built-in presentation modelling a concrete example, stored in canonical
// text form together with the facts it must reproduce.
struct CorpusEntry {
    std::string name;
    std::string description;
    // (part, text); single-space entries use the part name "diagram",
    // bundle entries use fiber/total/base/iota/pi.
    std::vector<std::pair<std::string, std::string>> parts;

    std::vector<ExpectedDiagramFacts> diagram_facts;

    bool is_bundle = false;
    std::array<int, 3> bundle_dims{0, 0, 0};
    Verdict bundle_verdict = Verdict::ExactThreeTerm;
};

const std::vector<CorpusEntry>& corpus();

const CorpusEntry* corpus_find(const std::string& name);

// Text of one part; throws UnknownEntry for unknown names or parts.
const std::string& corpus_part(const std::string& name, const std::string& part);

} // namespace difftan
