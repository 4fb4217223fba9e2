#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qalt/errors.hpp"

namespace qalt {

// One end of an edge: crossing index + slot (0..3, counterclockwise, slots
// 0/2 carry the under-strand, 1/3 the over-strand).
struct End {
    int c = -1;
    int s = -1;
    bool operator==(const End& o) const { return c == o.c && s == o.s; }
    bool operator<(const End& o) const { return c != o.c ? c < o.c : s < o.s; }
};

struct Crossing {
    std::array<int, 4> e{};
    int& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
};

// Braid provenance kept by parse_braid so the Seifert oracle can recover
// the band data and the braid-coherent orientation.
struct BraidData {
    int strands = 0;
    std::vector<int> word;                  // +i / -i for s_i^{+-1}
    std::vector<bool> natural_orientation;  // per component, vs traced default
};

// Combinatorial planar link diagram.  Immutable after construction; all
// transformations return new values.  Edges are labeled 1..2n densely, in
// deterministic trace order; crossingless circles are counted separately
// in free_loops.
class LinkDiagram {
public:
    // Validates (edge multiplicity, closed tracing) and normalizes labels.
    static LinkDiagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0);
    static LinkDiagram unknot() { return from_crossings({}, 1); }
    static LinkDiagram unlink(int k) { return from_crossings({}, k); }

    int n_crossings() const { return static_cast<int>(cr_.size()); }
    int n_edges() const { return 2 * n_crossings(); }
    int free_loops() const { return free_loops_; }
    int n_components() const { return traced_components_ + free_loops_; }
    int traced_components() const { return traced_components_; }

    const std::vector<Crossing>& crossings() const { return cr_; }

    // Component index of an edge label (1-based label).
    int component_of_edge(int edge) const { return comp_[static_cast<std::size_t>(edge - 1)]; }
    // The two ends of an edge; head is where the default traced direction
    // arrives.
    End head_of(int edge) const { return head_[static_cast<std::size_t>(edge - 1)]; }
    End tail_of(int edge) const { return tail_[static_cast<std::size_t>(edge - 1)]; }

    // True when the whole diagram (crossing incidence pieces + free loops)
    // is a single piece.
    bool is_connected() const;
    // Every edge runs from an under-slot to an over-slot.
    bool is_alternating() const;

    // Stable over re-encodings of the same diagram (component retracing,
    // per-crossing under-end choice); distinguishes mirrors.
    std::string canonical_key() const;

    // "[[a,b,c,d],...]" (+ " + k free loops") - the corpus PD syntax.
    std::string pd_string() const;

    const std::optional<BraidData>& braid() const { return braid_; }
    void set_braid(BraidData b) { braid_ = std::move(b); }

private:
    std::vector<Crossing> cr_;
    int free_loops_ = 0;
    int traced_components_ = 0;
    std::vector<int> comp_;   // per edge label - 1
    std::vector<End> head_;   // per edge label - 1
    std::vector<End> tail_;
    std::optional<BraidData> braid_;

    void trace();
};

// Orientation: one bit per component, true = default traced direction.
// The first component's bit is fixed true when enumerating
// quasi-orientations (global reversal identified).
struct Orientation {
    std::vector<bool> dirs;

    static Orientation standard(const LinkDiagram& d) {
        return {std::vector<bool>(static_cast<std::size_t>(d.n_components()), true)};
    }
    bool operator==(const Orientation& o) const { return dirs == o.dirs; }
    Orientation flipped() const {
        Orientation r = *this;
        for (std::size_t i = 0; i < r.dirs.size(); ++i) r.dirs[i] = !r.dirs[i];
        return r;
    }
    bool same_quasi(const Orientation& o) const { return *this == o || flipped() == o; }
};

// All 2^(n_components-1) quasi-orientation representatives (first bit true).
std::vector<Orientation> quasi_orientations(const LinkDiagram& d);
// All 2^n orientations.
std::vector<Orientation> all_orientations(const LinkDiagram& d);

struct CrossingSign {
    std::vector<int> value;  // +1 / -1 per crossing
    int writhe() const {
        int w = 0;
        for (int v : value) w += v;
        return w;
    }
};

enum class ResolutionKind { zero, one };

// ---- operations -----------------------------------------------------------

LinkDiagram parse_pd(const std::string& text);

// "s1 s2 -s1 s2^-1 ..." on `strands` strands; braid provenance attached.
LinkDiagram parse_braid(const std::string& word, int strands);

// Smooth crossing c.  `one` joins slots (0,1) and (2,3), the resolution
// that is orientation-coherent exactly when the crossing is positive;
// `zero` joins (0,3) and (1,2).
LinkDiagram resolve(const LinkDiagram& d, int c, ResolutionKind kind);

// Oriented resolution at crossing c: picks `one` at a positive crossing,
// `zero` at a negative one, and transports the orientation.
struct OrientedResolution {
    LinkDiagram diagram;
    Orientation orientation;
    ResolutionKind kind;
};
OrientedResolution oriented_resolution(const LinkDiagram& d, const Orientation& o, int c);

// All crossings switched (PD tuples rotated by one slot).
LinkDiagram mirror(const LinkDiagram& d);

CrossingSign crossing_signs(const LinkDiagram& d, const Orientation& o);

inline int writhe(const LinkDiagram& d, const Orientation& o) {
    return crossing_signs(d, o).writhe();
}

// Split into connected pieces (crossing-incidence components; each free
// loop is its own unknot diagram).
std::vector<LinkDiagram> split_components(const LinkDiagram& d);

// Entry slots of the two strands at crossing c under orientation o:
// under in {0,2}, over in {1,3}.
struct CrossingEntries {
    int under_in;
    int over_in;
};
CrossingEntries crossing_entries(const LinkDiagram& d, const Orientation& o, int c);

} // namespace qalt
