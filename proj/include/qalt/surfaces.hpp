#pragma once

#include <array>
#include <vector>

#include "qalt/diagram.hpp"
#include "qalt/linalg.hpp"
#include "qalt/numeric.hpp"

namespace qalt {

// Faces of the underlying 4-valent plane graph, recovered from the PD
// rotation system.  Corner (c,s) is the region between slots s and s+1.
struct FaceStructure {
    int n_faces = 0;
    std::vector<int> face_of_corner;  // index c*4+s -> face id
    int face(int c, int s) const { return face_of_corner[static_cast<std::size_t>(c * 4 + s)]; }
};
FaceStructure faces(const LinkDiagram& d);

// One of the two checkerboard colorings: which faces are white.
struct Coloring {
    FaceStructure fs;
    std::vector<bool> white;  // per face id
    int id = 0;               // 0 or 1
    int white_count() const {
        int n = 0;
        for (bool w : white) n += w ? 1 : 0;
        return n;
    }
};
std::array<Coloring, 2> checkerboard(const LinkDiagram& d);

struct GoeritzForm {
    IntMat matrix;            // reduced: one white region deleted
    std::vector<int> eta;     // per crossing: +1 if the white corners are
                              // the (C01,C23) pair, else -1
    std::vector<int> white_a; // per crossing: white face at one corner
    std::vector<int> white_b; // per crossing: white face at the other
    int coloring_id = 0;
    int n_white = 0;
};
GoeritzForm goeritz(const LinkDiagram& d, const Coloring& col);

struct SignatureValue {
    int value = 0;
    Orientation orientation;
};

// Gordon-Litherland: sigma = sig(reduced Goeritz) - mu, where mu sums
// eta(c) over type-II crossings (those with sign(c) * eta(c) = +1).
// Computed from both colorings and asserted equal.
SignatureValue signature_gl(const LinkDiagram& d, const Orientation& o);

// Correction term mu for one colored form.
int gl_correction(const LinkDiagram& d, const GoeritzForm& g, const Orientation& o);

// |det(reduced Goeritz)| - the link determinant for connected diagrams.
Int determinant_goeritz(const LinkDiagram& d);

// det(L) for arbitrary diagrams: 0 for split diagrams, else Goeritz.
Int link_determinant(const LinkDiagram& d);

// Seifert matrix of a braid closure (bands-and-disks surface), rows/cols
// indexed by the loops between consecutive bands at each strand gap.
IntMat seifert_matrix_braid(const BraidData& braid);

// Signature of the symmetrized Seifert matrix; the independent oracle for
// signature_gl.  `o` must agree with the braid-coherent orientation up to
// global reversal.
SignatureValue seifert_signature(const LinkDiagram& d, const Orientation& o);

} // namespace qalt
