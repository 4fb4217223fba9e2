#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qalt/diagram.hpp"
#include "qalt/numeric.hpp"

namespace qalt {

// Finite tree witnessing quasi-alternating membership.  At a resolution
// node the chosen crossing's two smoothings have certificates and the
// determinants satisfy det = det0 + det1 with all three positive; every
// leaf is a diagram of the unknot.
struct CertNode {
    enum class Kind { UnknotLeaf, ResolutionNode };
    Kind kind = Kind::UnknotLeaf;
    LinkDiagram diagram;
    Int det = 1;
    int crossing = -1;
    // The crossing is negative for the diagram's default traced
    // orientation, so the sigma/d step for that orientation goes through
    // the mirror rule.
    bool mirrored = false;
    Int det0 = 0, det1 = 0;
    std::shared_ptr<const CertNode> child0, child1;  // zero / one smoothing
};
using QACertificate = std::shared_ptr<const CertNode>;

struct QASearchOptions {
    std::uint64_t budget = 1000000;  // node visits
};

struct QASearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
};

// Depth-first certificate search per the recursive definition, with
// determinant-additivity pruning (det L = det L0 + det L1, all positive)
// and memoization on canonical diagram keys.  nullopt = no certificate
// found (inconclusive, not a proof of non-membership).  Throws
// ZeroDeterminant when det(d) = 0 and BudgetExceeded at the node budget.
std::optional<QACertificate> qa_search(const LinkDiagram& d, const QASearchOptions& opts = {},
                                       QASearchStats* stats = nullptr);

// Re-checks determinant additivity, leaf unknottedness and decreasing
// crossing counts on an emitted certificate.
bool validate_certificate(const QACertificate& cert);

// sigma via the certificate recursion: at a crossing positive for o,
// sigma(L,o) = sigma(L1,o1) - 1; at a negative crossing the mirror rule
// gives sigma(L,o) = sigma(L0,o0) + 1.  Unknot leaves contribute 0.
int sigma_from_certificate(const QACertificate& cert, const Orientation& o);

// d via the same recursion: d(L,o) = d(L1,o1) + 1/4 at a positive
// crossing, d(L0,o0) - 1/4 at a negative one, 0 at unknot leaves.
Rat d_from_certificate(const QACertificate& cert, const Orientation& o);

// Indented tree, one node per line with crossing index, mirror flag and
// determinant triple.
std::string serialize_certificate(const QACertificate& cert);

// Crossing-decreasing reduction (kinks, nugatory untwists, reducible
// bigons) deciding whether a diagram presents the unknot.  Conservative:
// `false` means "not recognized", not "knotted".
bool is_unknot_diagram(const LinkDiagram& d);

} // namespace qalt
