#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalt/diagram.hpp"
#include "qalt/numeric.hpp"

namespace qalt {

// One corpus record.  Lines are `<name> <pd-code>` or
// `<name> braid <k>: <word>`; `#` starts a comment.  Names of the form
// 2br_<p>_<q> carry the two-bridge continued-fraction data used by the
// lens-space oracles.
struct CorpusEntry {
    std::string name;
    LinkDiagram diagram;
    bool from_braid = false;
    std::optional<std::pair<Int, Int>> two_bridge;
};

std::optional<CorpusEntry> parse_corpus_line(const std::string& line);
std::vector<CorpusEntry> load_corpus(const std::string& path);

} // namespace qalt
