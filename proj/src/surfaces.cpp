#include "qalt/surfaces.hpp"

#include <algorithm>
#include <map>

#include "qalt/errors.hpp"

namespace qalt {

FaceStructure faces(const LinkDiagram& d) {
    const int n = d.n_crossings();
    FaceStructure fs;
    fs.face_of_corner.assign(static_cast<std::size_t>(4 * n), -1);
    if (n == 0) {
        fs.n_faces = 2;  // a circle bounds two regions
        return fs;
    }
    // Face successor: cross the edge at slot s, land at its other end
    // (c',s'), step one slot clockwise.
    auto other = [&](const End& e) {
        int lab = d.crossings()[static_cast<std::size_t>(e.c)][e.s];
        End h = d.head_of(lab), t = d.tail_of(lab);
        return (h == e) ? t : h;
    };
    int face_id = 0;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (fs.face_of_corner[static_cast<std::size_t>(4 * c + s)] >= 0) continue;
            End cur{c, s};
            while (fs.face_of_corner[static_cast<std::size_t>(4 * cur.c + cur.s)] < 0) {
                fs.face_of_corner[static_cast<std::size_t>(4 * cur.c + cur.s)] = face_id;
                End o = other(cur);
                cur = End{o.c, (o.s + 3) % 4};
            }
            ++face_id;
        }
    fs.n_faces = face_id;
    if (d.is_connected() && fs.n_faces != n + 2)
        throw MalformedPD("PD code is not planar (face count " + std::to_string(fs.n_faces) +
                          " != crossings + 2)");
    return fs;
}

std::array<Coloring, 2> checkerboard(const LinkDiagram& d) {
    if (!d.is_connected()) throw DisconnectedDiagram("checkerboard needs a connected diagram");
    FaceStructure fs = faces(d);
    std::vector<int> color(static_cast<std::size_t>(fs.n_faces), -1);
    if (d.n_crossings() == 0) {
        color = {0, 1};
    } else {
        // 2-color faces: around every crossing the colors alternate.
        color[static_cast<std::size_t>(fs.face(0, 0))] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int c = 0; c < d.n_crossings(); ++c)
                for (int s = 0; s < 4; ++s) {
                    int f = fs.face(c, s);
                    int g = fs.face(c, (s + 1) % 4);
                    int fc = color[static_cast<std::size_t>(f)];
                    int gc = color[static_cast<std::size_t>(g)];
                    if (fc >= 0 && gc < 0) {
                        color[static_cast<std::size_t>(g)] = 1 - fc;
                        changed = true;
                    } else if (fc >= 0 && gc >= 0 && fc == gc) {
                        throw MalformedPD("diagram is not checkerboard colorable");
                    }
                }
        }
        for (int f = 0; f < fs.n_faces; ++f)
            if (color[static_cast<std::size_t>(f)] < 0)
                throw MalformedPD("face coloring did not reach every region");
    }
    Coloring c0, c1;
    c0.fs = fs;
    c1.fs = fs;
    c0.id = 0;
    c1.id = 1;
    c0.white.resize(static_cast<std::size_t>(fs.n_faces));
    c1.white.resize(static_cast<std::size_t>(fs.n_faces));
    for (int f = 0; f < fs.n_faces; ++f) {
        c0.white[static_cast<std::size_t>(f)] = (color[static_cast<std::size_t>(f)] == 0);
        c1.white[static_cast<std::size_t>(f)] = (color[static_cast<std::size_t>(f)] == 1);
    }
    return {c0, c1};
}

GoeritzForm goeritz(const LinkDiagram& d, const Coloring& col) {
    if (!d.is_connected()) throw DisconnectedDiagram("goeritz needs a connected diagram");
    const int n = d.n_crossings();
    GoeritzForm g;
    g.coloring_id = col.id;
    g.eta.resize(static_cast<std::size_t>(n));
    g.white_a.resize(static_cast<std::size_t>(n));
    g.white_b.resize(static_cast<std::size_t>(n));

    // white-face reindexing
    std::vector<int> widx(col.white.size(), -1);
    int nw = 0;
    for (std::size_t f = 0; f < col.white.size(); ++f)
        if (col.white[f]) widx[f] = nw++;
    g.n_white = nw;

    IntMat full(static_cast<std::size_t>(nw), IntVec(static_cast<std::size_t>(nw), 0));
    for (int c = 0; c < n; ++c) {
        int f01 = col.fs.face(c, 0);
        int f12 = col.fs.face(c, 1);
        int f23 = col.fs.face(c, 2);
        int f30 = col.fs.face(c, 3);
        int wa, wb, eta;
        if (col.white[static_cast<std::size_t>(f01)]) {
            eta = +1;
            wa = f01;
            wb = f23;
        } else {
            eta = -1;
            wa = f12;
            wb = f30;
        }
        g.eta[static_cast<std::size_t>(c)] = eta;
        g.white_a[static_cast<std::size_t>(c)] = wa;
        g.white_b[static_cast<std::size_t>(c)] = wb;
        int i = widx[static_cast<std::size_t>(wa)];
        int j = widx[static_cast<std::size_t>(wb)];
        if (i == j) continue;  // nugatory: same white region on both corners
        full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= eta;
        full[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= eta;
        full[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += eta;
        full[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] += eta;
    }
    // delete the last white region
    const std::size_t r = static_cast<std::size_t>(nw - 1);
    g.matrix.assign(r, IntVec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g.matrix[i][j] = full[i][j];
    return g;
}

int gl_correction(const LinkDiagram& d, const GoeritzForm& g, const Orientation& o) {
    CrossingSign signs = crossing_signs(d, o);
    int mu = 0;
    for (int c = 0; c < d.n_crossings(); ++c) {
        int eta = g.eta[static_cast<std::size_t>(c)];
        if (signs.value[static_cast<std::size_t>(c)] * eta == 1) mu += eta;  // type II
    }
    return mu;
}

SignatureValue signature_gl(const LinkDiagram& d, const Orientation& o) {
    auto cols = checkerboard(d);
    int result = 0;
    bool have = false;
    for (const auto& col : cols) {
        GoeritzForm g = goeritz(d, col);
        int sig = signature_sym(g.matrix);
        int mu = gl_correction(d, g, o);
        int s = sig - mu;
        if (have && s != result)
            throw TraceFailure("signature: colorings disagree (" + std::to_string(result) +
                               " vs " + std::to_string(s) + ")");
        result = s;
        have = true;
    }
    return {result, o};
}

Int determinant_goeritz(const LinkDiagram& d) {
    auto cols = checkerboard(d);
    GoeritzForm g = goeritz(d, cols[0]);
    Int det = det_int(g.matrix);
    GoeritzForm g2 = goeritz(d, cols[1]);
    Int det2 = det_int(g2.matrix);
    Int a = det < 0 ? Int(-det) : det;
    Int b = det2 < 0 ? Int(-det2) : det2;
    if (a != b)
        throw TraceFailure("Goeritz determinants disagree between colorings");
    return a;
}

Int link_determinant(const LinkDiagram& d) {
    if (!d.is_connected()) return 0;
    return determinant_goeritz(d);
}

// ---- Seifert matrix of a braid closure -------------------------------------

namespace {

struct Loop {
    int gap;    // generator index 1..k-1
    int from;   // word position of the first band
    int to;     // word position of the second band
    int e_from; // band signs
    int e_to;
};

} // namespace

IntMat seifert_matrix_braid(const BraidData& braid) {
    std::map<int, std::vector<int>> occ;  // gap -> word positions
    for (std::size_t i = 0; i < braid.word.size(); ++i)
        occ[std::abs(braid.word[i])].push_back(static_cast<int>(i));

    std::vector<Loop> loops;
    for (auto& [gap, positions] : occ)
        for (std::size_t j = 0; j + 1 < positions.size(); ++j) {
            Loop l;
            l.gap = gap;
            l.from = positions[j];
            l.to = positions[j + 1];
            l.e_from = braid.word[static_cast<std::size_t>(l.from)] > 0 ? 1 : -1;
            l.e_to = braid.word[static_cast<std::size_t>(l.to)] > 0 ? 1 : -1;
            loops.push_back(l);
        }

    const std::size_t m = loops.size();
    IntMat v(m, IntVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) v[i][i] = -(loops[i].e_from + loops[i].e_to) / 2;

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const Loop& x = loops[i];
            const Loop& y = loops[j];
            if (x.gap == y.gap && x.to == y.from) {
                // consecutive loops sharing the middle band
                int e = x.e_to;
                if (e > 0)
                    v[j][i] = 1;
                else
                    v[i][j] = -1;
            } else if (y.gap == x.gap + 1) {
                // interleaving loops at adjacent gaps
                if (x.from < y.from && y.from < x.to && x.to < y.to)
                    v[j][i] = -1;
                else if (y.from < x.from && x.from < y.to && y.to < x.to)
                    v[i][j] = 1;
            }
        }
    return v;
}

SignatureValue seifert_signature(const LinkDiagram& d, const Orientation& o) {
    if (!d.braid()) throw NotBraidClosure("diagram was not built by parse_braid");
    const BraidData& b = *d.braid();
    Orientation natural{b.natural_orientation};
    if (!natural.same_quasi(o))
        throw NotBraidClosure("orientation is not braid-coherent");
    IntMat v = seifert_matrix_braid(b);
    IntMat sym(v.size(), IntVec(v.size(), 0));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) sym[i][j] = v[i][j] + v[j][i];
    return {signature_sym(sym), o};
}

} // namespace qalt
