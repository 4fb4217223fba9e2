#include "qalt/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qalt {

namespace {

struct RawEnds {
    std::array<End, 2> at;
    int count = 0;
};

// Deterministic strand walk on arbitrary positive labels.  Fills per-edge
// head/tail/component and reports edges in visit order (the normalization
// order).  The strand leaving slot s of a crossing re-enters it at slot
// (s+2) mod 4.
struct Walker {
    const std::vector<Crossing>& cr;
    std::map<int, RawEnds> ends;  // ordered: seeds are smallest labels
    std::map<int, End> head, tail;
    std::map<int, int> comp;
    std::vector<int> visit_order;
    int n_components = 0;

    explicit Walker(const std::vector<Crossing>& c) : cr(c) {
        for (std::size_t ci = 0; ci < cr.size(); ++ci)
            for (int s = 0; s < 4; ++s) {
                int lab = cr[ci][s];
                if (lab <= 0) throw MalformedPD("edge labels must be positive integers");
                auto& r = ends[lab];
                if (r.count >= 2)
                    throw EdgeMultiplicity("edge label " + std::to_string(lab) +
                                           " appears more than twice");
                r.at[static_cast<std::size_t>(r.count++)] = End{static_cast<int>(ci), s};
            }
        for (auto& [lab, r] : ends)
            if (r.count != 2)
                throw EdgeMultiplicity("edge label " + std::to_string(lab) +
                                       " appears only once");
        run();
    }

    End other_end(int lab, const End& e) const {
        const auto& r = ends.at(lab);
        return (r.at[0] == e) ? r.at[1] : r.at[0];
    }

    void run() {
        std::set<int> seen;
        for (auto& [seed, r] : ends) {
            if (seen.count(seed)) continue;
            int comp_id = n_components++;
            // Seed direction: arrive at the lexicographically smaller end.
            End h = std::min(r.at[0], r.at[1]);
            int e = seed;
            for (;;) {
                if (seen.count(e)) {
                    if (e != seed || !(head.at(e) == h))
                        throw TraceFailure("strand tracing failed to close up");
                    break;
                }
                seen.insert(e);
                visit_order.push_back(e);
                head[e] = h;
                tail[e] = other_end(e, h);
                comp[e] = comp_id;
                int out_slot = (h.s + 2) % 4;
                int next = cr[static_cast<std::size_t>(h.c)][out_slot];
                End next_tail{h.c, out_slot};
                h = other_end(next, next_tail);
                e = next;
            }
        }
    }
};

std::string tuple_key(const Crossing& c) {
    auto enc = [](int a, int b, int cc, int d) {
        return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + "," +
               std::to_string(d);
    };
    std::string k1 = enc(c[0], c[1], c[2], c[3]);
    std::string k2 = enc(c[2], c[3], c[0], c[1]);  // other under-end first
    return std::min(k1, k2);
}

} // namespace

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, int free_loops) {
    LinkDiagram d;
    d.free_loops_ = free_loops;
    if (crossings.empty()) {
        if (free_loops < 1 && !crossings.empty()) throw MalformedPD("empty diagram");
        d.traced_components_ = 0;
        return d;
    }
    Walker w(crossings);
    std::unordered_map<int, int> relabel;
    relabel.reserve(w.visit_order.size());
    int next = 1;
    for (int lab : w.visit_order) relabel[lab] = next++;

    d.cr_.resize(crossings.size());
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (int s = 0; s < 4; ++s) d.cr_[i][s] = relabel.at(crossings[i][s]);

    const std::size_t ne = w.visit_order.size();
    d.comp_.resize(ne);
    d.head_.resize(ne);
    d.tail_.resize(ne);
    for (int lab : w.visit_order) {
        std::size_t idx = static_cast<std::size_t>(relabel.at(lab) - 1);
        d.comp_[idx] = w.comp.at(lab);
        d.head_[idx] = w.head.at(lab);
        d.tail_[idx] = w.tail.at(lab);
    }
    d.traced_components_ = w.n_components;
    return d;
}

bool LinkDiagram::is_connected() const {
    int pieces = free_loops_;
    if (!cr_.empty()) {
        // union crossings sharing an edge
        std::vector<int> parent(cr_.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> first_seen(static_cast<std::size_t>(n_edges()) + 1, -1);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (std::size_t i = 0; i < cr_.size(); ++i)
            for (int s = 0; s < 4; ++s) {
                int lab = cr_[i][s];
                if (first_seen[static_cast<std::size_t>(lab)] < 0)
                    first_seen[static_cast<std::size_t>(lab)] = static_cast<int>(i);
                else
                    parent[static_cast<std::size_t>(find(static_cast<int>(i)))] =
                        find(first_seen[static_cast<std::size_t>(lab)]);
            }
        std::set<int> roots;
        for (std::size_t i = 0; i < cr_.size(); ++i) roots.insert(find(static_cast<int>(i)));
        pieces += static_cast<int>(roots.size());
    }
    return pieces == 1;
}

bool LinkDiagram::is_alternating() const {
    for (int e = 1; e <= n_edges(); ++e) {
        bool h_under = head_of(e).s % 2 == 0;
        bool t_under = tail_of(e).s % 2 == 0;
        if (h_under == t_under) return false;
    }
    return true;
}

std::string LinkDiagram::pd_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < cr_.size(); ++i) {
        if (i) os << ",";
        os << "[" << cr_[i][0] << "," << cr_[i][1] << "," << cr_[i][2] << "," << cr_[i][3] << "]";
    }
    os << "]";
    if (free_loops_ > 0) os << " + " << free_loops_ << " free loops";
    return os.str();
}

namespace {

// Canonical encoding of one crossing-connected piece: minimum over all
// directed edge seeds of the relabeled, rotation-normalized, sorted tuple
// list.  Secondary strands are seeded by a rule that depends only on the
// partial labeling, so the result is independent of the input labeling.
std::string piece_key(const LinkDiagram& d, const std::vector<int>& piece_crossings) {
    std::vector<int> edges;
    for (int c : piece_crossings)
        for (int s = 0; s < 4; ++s) edges.push_back(d.crossings()[static_cast<std::size_t>(c)][s]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    auto other_end = [&](int lab, const End& e) {
        End a = d.head_of(lab), b = d.tail_of(lab);
        return (a == e) ? b : a;
    };

    std::string best;
    for (int seed_edge : edges) {
        for (int dir = 0; dir < 2; ++dir) {
            End seed_head = dir == 0 ? d.head_of(seed_edge) : d.tail_of(seed_edge);
            std::map<int, int> newlab;
            std::map<int, End> newhead;
            int next = 1;
            auto walk = [&](int e0, End h0) {
                int e = e0;
                End h = h0;
                while (!newlab.count(e)) {
                    newlab[e] = next++;
                    newhead[newlab[e]] = h;
                    int out_slot = (h.s + 2) % 4;
                    int nxt = d.crossings()[static_cast<std::size_t>(h.c)][out_slot];
                    h = other_end(nxt, End{h.c, out_slot});
                    e = nxt;
                }
            };
            walk(seed_edge, seed_head);
            // Remaining strands of the piece, seeded off already-labeled ends.
            std::map<int, int> by_newlab;  // new label -> old label
            while (static_cast<int>(newlab.size()) < static_cast<int>(edges.size())) {
                by_newlab.clear();
                for (auto& [k, v] : newlab) by_newlab[v] = k;
                bool seeded = false;
                for (auto& [l, old_lab] : by_newlab) {
                    (void)l;
                    End hh = newhead.at(newlab.at(old_lab));
                    End tt = other_end(old_lab, hh);
                    for (const End& base : {hh, tt}) {
                        for (int off = 1; off < 4 && !seeded; ++off) {
                            int slot = (base.s + off) % 4;
                            int cand = d.crossings()[static_cast<std::size_t>(base.c)][slot];
                            if (!newlab.count(cand)) {
                                walk(cand, End{base.c, slot});
                                seeded = true;
                            }
                        }
                        if (seeded) break;
                    }
                    if (seeded) break;
                }
                if (!seeded) break;  // piece exhausted (shouldn't happen)
            }
            std::vector<std::string> tuples;
            for (int c : piece_crossings) {
                Crossing t;
                for (int s = 0; s < 4; ++s)
                    t[s] = newlab.at(d.crossings()[static_cast<std::size_t>(c)][s]);
                tuples.push_back(tuple_key(t));
            }
            std::sort(tuples.begin(), tuples.end());
            std::string enc;
            for (auto& t : tuples) enc += t + ";";
            if (best.empty() || enc < best) best = enc;
        }
    }
    return best;
}

} // namespace

std::string LinkDiagram::canonical_key() const {
    // pieces of the crossing-incidence graph
    std::vector<std::vector<int>> pieces;
    if (!cr_.empty()) {
        std::vector<int> parent(cr_.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        std::vector<int> owner(static_cast<std::size_t>(n_edges()) + 1, -1);
        for (std::size_t i = 0; i < cr_.size(); ++i)
            for (int s = 0; s < 4; ++s) {
                int lab = cr_[i][s];
                if (owner[static_cast<std::size_t>(lab)] < 0)
                    owner[static_cast<std::size_t>(lab)] = static_cast<int>(i);
                else
                    parent[static_cast<std::size_t>(find(static_cast<int>(i)))] =
                        find(owner[static_cast<std::size_t>(lab)]);
            }
        std::map<int, std::vector<int>> by_root;
        for (std::size_t i = 0; i < cr_.size(); ++i)
            by_root[find(static_cast<int>(i))].push_back(static_cast<int>(i));
        for (auto& [r, v] : by_root) pieces.push_back(v);
    }
    std::vector<std::string> keys;
    for (auto& p : pieces) keys.push_back(piece_key(*this, p));
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (auto& k : keys) out += k + "#";
    out += "|L" + std::to_string(free_loops_);
    return out;
}

std::vector<Orientation> quasi_orientations(const LinkDiagram& d) {
    int n = d.n_components();
    std::vector<Orientation> out;
    int m = n - 1;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        Orientation o;
        o.dirs.assign(static_cast<std::size_t>(n), true);
        for (int i = 0; i < m; ++i)
            if (mask & (1ull << i)) o.dirs[static_cast<std::size_t>(i + 1)] = false;
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<Orientation> all_orientations(const LinkDiagram& d) {
    int n = d.n_components();
    std::vector<Orientation> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Orientation o;
        o.dirs.assign(static_cast<std::size_t>(n), true);
        for (int i = 0; i < n; ++i)
            if (mask & (1ull << i)) o.dirs[static_cast<std::size_t>(i)] = false;
        out.push_back(std::move(o));
    }
    return out;
}

// ---- parsing ---------------------------------------------------------------

LinkDiagram parse_pd(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t == "unknot") return LinkDiagram::unknot();
    if (t.empty()) throw MalformedPD("empty input");
    if (t == "[]") return LinkDiagram::unknot();
    if (t.front() != '[' || t.back() != ']') throw MalformedPD("expected outer brackets");

    std::vector<Crossing> cr;
    std::size_t i = 1;
    const std::size_t end = t.size() - 1;
    while (i < end) {
        if (t[i] == ',') { ++i; continue; }
        if (t[i] != '[') throw MalformedPD("expected '[' at position " + std::to_string(i));
        ++i;
        Crossing c;
        for (int k = 0; k < 4; ++k) {
            std::size_t j = i;
            while (j < end && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
            if (j == i) throw MalformedPD("expected integer in tuple");
            c[k] = std::stoi(t.substr(i, j - i));
            i = j;
            if (k < 3) {
                if (i >= end || t[i] != ',') throw MalformedPD("expected ',' in tuple");
                ++i;
            }
        }
        if (i >= end || t[i] != ']') throw MalformedPD("expected 4-tuple");
        ++i;
        cr.push_back(c);
    }
    if (cr.empty()) throw MalformedPD("no crossings");
    return LinkDiagram::from_crossings(std::move(cr));
}

LinkDiagram parse_braid(const std::string& word, int strands) {
    if (strands < 1) throw MalformedBraid("strand count must be positive");
    std::vector<int> letters;
    std::istringstream is(word);
    std::string tok;
    while (is >> tok) {
        int sign = 1;
        std::string body = tok;
        if (!body.empty() && body[0] == '-') {
            sign = -1;
            body = body.substr(1);
        }
        if (body.size() >= 3 && body.substr(body.size() - 3) == "^-1") {
            sign = -sign;
            body = body.substr(0, body.size() - 3);
        }
        if (body.size() < 2 || body[0] != 's')
            throw MalformedBraid("bad token '" + tok + "'");
        int idx = 0;
        try {
            idx = std::stoi(body.substr(1));
        } catch (...) {
            throw MalformedBraid("bad token '" + tok + "'");
        }
        if (idx < 1 || idx >= strands)
            throw MalformedBraid("generator s" + std::to_string(idx) + " out of range for " +
                                 std::to_string(strands) + " strands");
        letters.push_back(sign * idx);
    }

    // Build the closure.  Positive s_i: the strand entering at position i
    // passes over; with all strands upward the crossing is positive.
    std::vector<int> pos(static_cast<std::size_t>(strands));
    std::iota(pos.begin(), pos.end(), 1);
    int next_label = strands + 1;
    std::vector<Crossing> cr;
    std::map<int, End> flow_in;  // label -> end where the braid flow arrives
    for (int letter : letters) {
        int i = std::abs(letter) - 1;  // 0-based gap
        int a = pos[static_cast<std::size_t>(i)];
        int b = pos[static_cast<std::size_t>(i + 1)];
        int x = next_label++;
        int y = next_label++;
        Crossing c;
        int ci = static_cast<int>(cr.size());
        if (letter > 0) {
            // slots ccw from incoming under-strand (SE): (b, y, x, a)
            c[0] = b; c[1] = y; c[2] = x; c[3] = a;
            flow_in[b] = End{ci, 0};
            flow_in[a] = End{ci, 3};
        } else {
            // under-strand enters at SW: (a, b, y, x)
            c[0] = a; c[1] = b; c[2] = y; c[3] = x;
            flow_in[a] = End{ci, 0};
            flow_in[b] = End{ci, 1};
        }
        cr.push_back(c);
        pos[static_cast<std::size_t>(i)] = x;
        pos[static_cast<std::size_t>(i + 1)] = y;
    }

    // Closure: top of strand j joins its bottom edge j.
    int free_loops = 0;
    std::map<int, int> merge;
    for (int j = 1; j <= strands; ++j) {
        int top = pos[static_cast<std::size_t>(j - 1)];
        if (top == j)
            ++free_loops;  // strand without crossings
        else
            merge[top] = j;
    }
    for (auto& c : cr)
        for (int s = 0; s < 4; ++s)
            if (auto it = merge.find(c[s]); it != merge.end()) c[s] = it->second;
    std::map<int, End> flow2;
    for (auto& [lab, e] : flow_in) {
        auto it = merge.find(lab);
        flow2[it == merge.end() ? lab : it->second] = e;
    }

    // Normalize and recover the relabeling by matching ends.
    LinkDiagram d = LinkDiagram::from_crossings(cr, free_loops);
    BraidData bd;
    bd.strands = strands;
    bd.word = letters;
    bd.natural_orientation.assign(static_cast<std::size_t>(d.n_components()), true);
    for (auto& [lab, e] : flow2) {
        (void)lab;
        int new_lab = d.crossings()[static_cast<std::size_t>(e.c)][e.s];
        bool arrives_by_default = d.head_of(new_lab) == e;
        bd.natural_orientation[static_cast<std::size_t>(d.component_of_edge(new_lab))] =
            arrives_by_default;
    }
    d.set_braid(std::move(bd));
    return d;
}

// ---- transformations -------------------------------------------------------

namespace {

struct ResolveOut {
    LinkDiagram diagram;
    // old edge label -> new edge label, 0 if the edge vanished into a loop
    std::vector<int> old_to_new;
};

ResolveOut resolve_impl(const LinkDiagram& d, int c, ResolutionKind kind) {
    const int n = d.n_crossings();
    if (c < 0 || c >= n) throw BadParameters("crossing index out of range");
    const auto& cs = d.crossings()[static_cast<std::size_t>(c)];

    // union-find on edge labels
    std::vector<int> parent(static_cast<std::size_t>(d.n_edges()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto join = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    if (kind == ResolutionKind::one) {
        join(cs[0], cs[1]);
        join(cs[2], cs[3]);
    } else {
        join(cs[0], cs[3]);
        join(cs[1], cs[2]);
    }

    std::vector<Crossing> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (i == c) continue;
        Crossing t;
        for (int s = 0; s < 4; ++s) t[s] = find(d.crossings()[static_cast<std::size_t>(i)][s]);
        rest.push_back(t);
    }

    // classes with no surviving occurrence became crossingless circles
    std::set<int> touched;
    for (int s = 0; s < 4; ++s) touched.insert(find(cs[s]));
    std::set<int> surviving;
    for (auto& t : rest)
        for (int s = 0; s < 4; ++s) surviving.insert(t[s]);
    int new_loops = 0;
    for (int root : touched)
        if (!surviving.count(root)) ++new_loops;

    ResolveOut out{LinkDiagram::from_crossings(rest, d.free_loops() + new_loops), {}};

    // Recover label map by matching surviving ends: crossing i>c shifts to
    // i-1, slots unchanged.
    std::map<int, int> root_to_new;
    for (int i = 0; i < n; ++i) {
        if (i == c) continue;
        int ni = i < c ? i : i - 1;
        for (int s = 0; s < 4; ++s) {
            int old_lab = d.crossings()[static_cast<std::size_t>(i)][s];
            int new_lab = out.diagram.crossings()[static_cast<std::size_t>(ni)][s];
            root_to_new[find(old_lab)] = new_lab;
        }
    }
    out.old_to_new.assign(static_cast<std::size_t>(d.n_edges()) + 1, 0);
    for (int lab = 1; lab <= d.n_edges(); ++lab)
        if (auto it = root_to_new.find(find(lab)); it != root_to_new.end())
            out.old_to_new[static_cast<std::size_t>(lab)] = it->second;
    return out;
}

} // namespace

LinkDiagram resolve(const LinkDiagram& d, int c, ResolutionKind kind) {
    return resolve_impl(d, c, kind).diagram;
}

CrossingEntries crossing_entries(const LinkDiagram& d, const Orientation& o, int c) {
    auto head_o = [&](int edge) {
        bool fwd = o.dirs[static_cast<std::size_t>(d.component_of_edge(edge))];
        return fwd ? d.head_of(edge) : d.tail_of(edge);
    };
    const auto& cs = d.crossings()[static_cast<std::size_t>(c)];
    CrossingEntries r{-1, -1};
    for (int s : {0, 2})
        if (head_o(cs[s]) == End{c, s}) r.under_in = s;
    for (int s : {1, 3})
        if (head_o(cs[s]) == End{c, s}) r.over_in = s;
    if (r.under_in < 0 || r.over_in < 0)
        throw TraceFailure("inconsistent strand directions at crossing");
    return r;
}

CrossingSign crossing_signs(const LinkDiagram& d, const Orientation& o) {
    CrossingSign out;
    out.value.resize(static_cast<std::size_t>(d.n_crossings()));
    for (int c = 0; c < d.n_crossings(); ++c) {
        auto e = crossing_entries(d, o, c);
        out.value[static_cast<std::size_t>(c)] = ((e.over_in - e.under_in + 4) % 4 == 3) ? 1 : -1;
    }
    return out;
}

OrientedResolution oriented_resolution(const LinkDiagram& d, const Orientation& o, int c) {
    auto e = crossing_entries(d, o, c);
    int sign = ((e.over_in - e.under_in + 4) % 4 == 3) ? 1 : -1;
    ResolutionKind kind = sign > 0 ? ResolutionKind::one : ResolutionKind::zero;
    ResolveOut r = resolve_impl(d, c, kind);

    auto head_o = [&](int edge) {
        bool fwd = o.dirs[static_cast<std::size_t>(d.component_of_edge(edge))];
        return fwd ? d.head_of(edge) : d.tail_of(edge);
    };

    Orientation no;
    no.dirs.assign(static_cast<std::size_t>(r.diagram.n_components()), true);
    // For each surviving new edge: the flow at an end away from the smoothed
    // crossing is unchanged, so compare arrival there with the new default.
    std::vector<bool> done(static_cast<std::size_t>(r.diagram.traced_components()), false);
    for (int old_lab = 1; old_lab <= d.n_edges(); ++old_lab) {
        int new_lab = r.old_to_new[static_cast<std::size_t>(old_lab)];
        if (new_lab == 0) continue;
        int comp = r.diagram.component_of_edge(new_lab);
        if (done[static_cast<std::size_t>(comp)]) continue;
        // pick an end of old_lab that is not at crossing c
        for (const End& oe : {d.head_of(old_lab), d.tail_of(old_lab)}) {
            if (oe.c == c) continue;
            End ne{oe.c < c ? oe.c : oe.c - 1, oe.s};
            // sanity: the new edge at this end is new_lab
            if (r.diagram.crossings()[static_cast<std::size_t>(ne.c)][ne.s] != new_lab) continue;
            bool arrives_old = head_o(old_lab) == oe;
            bool arrives_new_default = r.diagram.head_of(new_lab) == ne;
            no.dirs[static_cast<std::size_t>(comp)] = (arrives_old == arrives_new_default);
            done[static_cast<std::size_t>(comp)] = true;
            break;
        }
    }
    return {std::move(r.diagram), std::move(no), kind};
}

LinkDiagram mirror(const LinkDiagram& d) {
    if (d.braid()) {
        std::string w;
        for (int letter : d.braid()->word) {
            if (!w.empty()) w += ' ';
            w += (letter < 0 ? "-s" : "s") + std::to_string(std::abs(letter));
        }
        // negate every letter
        std::string neg;
        std::istringstream is(w);
        std::string tok;
        while (is >> tok) {
            if (!neg.empty()) neg += ' ';
            if (tok[0] == '-')
                neg += tok.substr(1);
            else
                neg += "-" + tok;
        }
        return parse_braid(neg, d.braid()->strands);
    }
    std::vector<Crossing> cr;
    cr.reserve(static_cast<std::size_t>(d.n_crossings()));
    for (const auto& c : d.crossings()) {
        Crossing m;
        m[0] = c[1]; m[1] = c[2]; m[2] = c[3]; m[3] = c[0];
        cr.push_back(m);
    }
    return LinkDiagram::from_crossings(std::move(cr), d.free_loops());
}

std::vector<LinkDiagram> split_components(const LinkDiagram& d) {
    std::vector<LinkDiagram> out;
    if (d.n_crossings() > 0) {
        std::vector<int> parent(static_cast<std::size_t>(d.n_crossings()));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        std::vector<int> owner(static_cast<std::size_t>(d.n_edges()) + 1, -1);
        for (int i = 0; i < d.n_crossings(); ++i)
            for (int s = 0; s < 4; ++s) {
                int lab = d.crossings()[static_cast<std::size_t>(i)][s];
                if (owner[static_cast<std::size_t>(lab)] < 0)
                    owner[static_cast<std::size_t>(lab)] = i;
                else
                    parent[static_cast<std::size_t>(find(i))] =
                        find(owner[static_cast<std::size_t>(lab)]);
            }
        std::map<int, std::vector<Crossing>> groups;
        for (int i = 0; i < d.n_crossings(); ++i)
            groups[find(i)].push_back(d.crossings()[static_cast<std::size_t>(i)]);
        for (auto& [root, cr] : groups) out.push_back(LinkDiagram::from_crossings(cr));
    }
    for (int i = 0; i < d.free_loops(); ++i) out.push_back(LinkDiagram::unknot());
    return out;
}

} // namespace qalt
