#include "qalt/qa.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qalt/surfaces.hpp"

namespace qalt {

// ---- unknot recognition by crossing-decreasing moves -----------------------

namespace {

// Remove crossing c and splice the strands through the given slot joins.
// Classes that lose all their ends become crossingless circles unless they
// are listed in `discard` (kink loops are absorbed, not freed).
LinkDiagram excise(const LinkDiagram& d, const std::vector<int>& remove,
                   const std::vector<std::pair<int, int>>& joins, const std::set<int>& discard) {
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
    for (auto& [a, b] : joins) parent[static_cast<std::size_t>(find(a))] = find(b);

    std::set<int> removed(remove.begin(), remove.end());
    std::vector<Crossing> rest;
    for (int i = 0; i < d.n_crossings(); ++i) {
        if (removed.count(i)) continue;
        Crossing t;
        for (int s = 0; s < 4; ++s) t[s] = find(d.crossings()[static_cast<std::size_t>(i)][s]);
        rest.push_back(t);
    }
    std::set<int> touched;
    for (auto& [a, b] : joins) {
        touched.insert(find(a));
        (void)b;
    }
    std::set<int> surviving;
    for (auto& t : rest)
        for (int s = 0; s < 4; ++s) surviving.insert(t[s]);
    int new_loops = 0;
    for (int root : touched)
        if (!surviving.count(root) && !discard.count(root)) ++new_loops;
    return LinkDiagram::from_crossings(rest, d.free_loops() + new_loops);
}

std::optional<LinkDiagram> try_kink(const LinkDiagram& d) {
    for (int c = 0; c < d.n_crossings(); ++c) {
        const auto& cr = d.crossings()[static_cast<std::size_t>(c)];
        for (int s = 0; s < 4; ++s) {
            if (cr[s] != cr[(s + 1) % 4]) continue;
            // loop edge at slots (s, s+1): untwist, joining the other two
            int a = cr[(s + 2) % 4];
            int b = cr[(s + 3) % 4];
            std::set<int> discard;
            if (a != cr[s] && b != cr[s]) discard.insert(cr[s]);
            return excise(d, {c}, {{a, b}}, discard);
        }
    }
    return std::nullopt;
}

std::optional<LinkDiagram> try_nugatory(const LinkDiagram& d) {
    const int n = d.n_crossings();
    if (n < 2) return std::nullopt;
    for (int c = 0; c < n; ++c) {
        const auto& cr = d.crossings()[static_cast<std::size_t>(c)];
        bool has_loop = false;
        for (int s = 0; s < 4; ++s)
            if (cr[s] == cr[(s + 1) % 4] || cr[s] == cr[(s + 2) % 4]) has_loop = true;
        if (has_loop) continue;
        // pieces of the other crossings when c is deleted
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (int e = 1; e <= d.n_edges(); ++e) {
            End h = d.head_of(e), t = d.tail_of(e);
            if (h.c == c || t.c == c) continue;
            parent[static_cast<std::size_t>(find(h.c))] = find(t.c);
        }
        int piece[4];
        for (int s = 0; s < 4; ++s) {
            End h = d.head_of(cr[s]), t = d.tail_of(cr[s]);
            End away = (h.c == c && h.s == s) ? t : h;
            piece[s] = find(away.c);
        }
        if (piece[0] == piece[1] && piece[2] == piece[3] && piece[0] != piece[2])
            return resolve(d, c, ResolutionKind::one);
        if (piece[1] == piece[2] && piece[3] == piece[0] && piece[1] != piece[3])
            return resolve(d, c, ResolutionKind::zero);
    }
    return std::nullopt;
}

std::optional<LinkDiagram> try_bigon(const LinkDiagram& d) {
    for (int e = 1; e <= d.n_edges(); ++e) {
        End h = d.head_of(e), t = d.tail_of(e);
        if (h.c == t.c) continue;
        if (h.s % 2 == 0 || t.s % 2 == 0) continue;  // need over at both ends
        for (int f = 1; f <= d.n_edges(); ++f) {
            if (f == e) continue;
            End fh = d.head_of(f), ft = d.tail_of(f);
            if (fh.s % 2 != 0 || ft.s % 2 != 0) continue;  // under at both
            if (!((fh.c == h.c && ft.c == t.c) || (fh.c == t.c && ft.c == h.c))) continue;
            // strand A passes over strand B at both crossings: lift it off
            int c1 = h.c, c2 = t.c;
            auto through = [&](const End& at) {
                return d.crossings()[static_cast<std::size_t>(at.c)][(at.s + 2) % 4];
            };
            std::vector<std::pair<int, int>> joins = {
                {e, through(h)}, {e, through(t)}, {f, through(fh)}, {f, through(ft)}};
            return excise(d, {c1, c2}, joins, {});
        }
    }
    return std::nullopt;
}

LinkDiagram reduce_diagram(LinkDiagram d) {
    for (;;) {
        if (auto r = try_kink(d)) {
            d = std::move(*r);
            continue;
        }
        if (auto r = try_bigon(d)) {
            d = std::move(*r);
            continue;
        }
        if (auto r = try_nugatory(d)) {
            d = std::move(*r);
            continue;
        }
        return d;
    }
}

} // namespace

bool is_unknot_diagram(const LinkDiagram& d) {
    LinkDiagram r = reduce_diagram(d);
    return r.n_crossings() == 0 && r.n_components() == 1;
}

// ---- certificate search ----------------------------------------------------

namespace {

struct SearchCtx {
    QASearchOptions opts;
    QASearchStats stats;
    std::map<std::string, std::optional<QACertificate>> memo;

    std::optional<QACertificate> run(const LinkDiagram& d, const Int& det) {
        if (++stats.nodes > opts.budget)
            throw BudgetExceeded("qa search budget of " + std::to_string(opts.budget) +
                                 " nodes exhausted");
        std::string key = d.pd_string() + "|" + std::to_string(d.free_loops());
        if (auto it = memo.find(key); it != memo.end()) {
            ++stats.memo_hits;
            return it->second;
        }

        if (is_unknot_diagram(d)) {
            auto leaf = std::make_shared<CertNode>();
            leaf->kind = CertNode::Kind::UnknotLeaf;
            leaf->diagram = d;
            leaf->det = 1;
            std::optional<QACertificate> res = leaf;
            memo[key] = res;
            return res;
        }
        if (det <= 1) {
            // det 1 but not recognized as the unknot: no additive split of
            // 1 into positive parts exists, so this branch is dead.
            memo[key] = std::nullopt;
            return std::nullopt;
        }

        struct Candidate {
            int c;
            LinkDiagram d0, d1;
            Int det0, det1;
            Int weight;
        };
        std::vector<Candidate> cand;
        for (int c = 0; c < d.n_crossings(); ++c) {
            Candidate k{c,
                        resolve(d, c, ResolutionKind::zero),
                        resolve(d, c, ResolutionKind::one),
                        0,
                        0,
                        0};
            k.det0 = link_determinant(k.d0);
            k.det1 = link_determinant(k.d1);
            if (k.det0 < 1 || k.det1 < 1) continue;
            if (k.det0 + k.det1 != det) continue;
            k.weight = k.det0 * k.det1;
            cand.push_back(std::move(k));
        }
        std::stable_sort(cand.begin(), cand.end(),
                         [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });

        for (auto& k : cand) {
            auto c0 = run(k.d0, k.det0);
            if (!c0) continue;
            auto c1 = run(k.d1, k.det1);
            if (!c1) continue;
            auto node = std::make_shared<CertNode>();
            node->kind = CertNode::Kind::ResolutionNode;
            node->diagram = d;
            node->det = det;
            node->crossing = k.c;
            node->det0 = k.det0;
            node->det1 = k.det1;
            node->child0 = *c0;
            node->child1 = *c1;
            auto signs = crossing_signs(d, Orientation::standard(d));
            node->mirrored = signs.value[static_cast<std::size_t>(k.c)] < 0;
            std::optional<QACertificate> res = node;
            memo[key] = res;
            return res;
        }
        memo[key] = std::nullopt;
        return std::nullopt;
    }
};

} // namespace

std::optional<QACertificate> qa_search(const LinkDiagram& d, const QASearchOptions& opts,
                                       QASearchStats* stats) {
    Int det = link_determinant(d);
    if (det == 0) throw ZeroDeterminant("link has determinant zero");
    SearchCtx ctx;
    ctx.opts = opts;
    auto res = ctx.run(d, det);
    if (stats) *stats = ctx.stats;
    return res;
}

bool validate_certificate(const QACertificate& cert) {
    if (!cert) return false;
    if (cert->kind == CertNode::Kind::UnknotLeaf)
        return cert->det == 1 && link_determinant(cert->diagram) == 1 &&
               is_unknot_diagram(cert->diagram);
    if (!cert->child0 || !cert->child1) return false;
    if (cert->det != link_determinant(cert->diagram)) return false;
    if (cert->det0 != link_determinant(cert->child0->diagram)) return false;
    if (cert->det1 != link_determinant(cert->child1->diagram)) return false;
    if (cert->det0 < 1 || cert->det1 < 1) return false;
    if (cert->det != cert->det0 + cert->det1) return false;
    if (cert->child0->diagram.n_crossings() != cert->diagram.n_crossings() - 1) return false;
    if (cert->child1->diagram.n_crossings() != cert->diagram.n_crossings() - 1) return false;
    return validate_certificate(cert->child0) && validate_certificate(cert->child1);
}

namespace {

bool same_representation(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.n_crossings() != b.n_crossings() || a.free_loops() != b.free_loops()) return false;
    for (int i = 0; i < a.n_crossings(); ++i)
        for (int s = 0; s < 4; ++s)
            if (a.crossings()[static_cast<std::size_t>(i)][s] !=
                b.crossings()[static_cast<std::size_t>(i)][s])
                return false;
    return true;
}

template <typename T, typename Step>
T walk_certificate(const QACertificate& cert, const Orientation& o, T leaf_value, Step step) {
    if (cert->kind == CertNode::Kind::UnknotLeaf) return leaf_value;
    auto signs = crossing_signs(cert->diagram, o);
    int sign = signs.value[static_cast<std::size_t>(cert->crossing)];
    OrientedResolution r = oriented_resolution(cert->diagram, o, cert->crossing);
    const QACertificate& child = sign > 0 ? cert->child1 : cert->child0;
    if (!same_representation(r.diagram, child->diagram))
        throw OrientationMismatch(
            "certificate child does not match the oriented resolution at crossing " +
            std::to_string(cert->crossing));
    T sub = walk_certificate<T>(child, r.orientation, leaf_value, step);
    return step(sub, sign);
}

} // namespace

int sigma_from_certificate(const QACertificate& cert, const Orientation& o) {
    // positive crossing: sigma = sigma(L1,o1) - 1; negative: mirror rule.
    return walk_certificate<int>(cert, o, 0,
                                 [](int sub, int sign) { return sign > 0 ? sub - 1 : sub + 1; });
}

Rat d_from_certificate(const QACertificate& cert, const Orientation& o) {
    return walk_certificate<Rat>(cert, o, Rat(0), [](Rat sub, int sign) {
        Rat step(sign, 4);
        Rat r = sub + step;
        r.canonicalize();
        return r;
    });
}

namespace {

void serialize_rec(const QACertificate& cert, int depth, std::ostringstream& os) {
    for (int i = 0; i < depth; ++i) os << "  ";
    if (cert->kind == CertNode::Kind::UnknotLeaf) {
        os << "UnknotLeaf\n";
        return;
    }
    os << "ResolutionNode crossing=" << cert->crossing
       << " mirrored=" << (cert->mirrored ? "yes" : "no") << " det=" << cert->det.get_str() << "="
       << cert->det0.get_str() << "+" << cert->det1.get_str() << "\n";
    serialize_rec(cert->child0, depth + 1, os);
    serialize_rec(cert->child1, depth + 1, os);
}

} // namespace

std::string serialize_certificate(const QACertificate& cert) {
    std::ostringstream os;
    serialize_rec(cert, 0, os);
    return os.str();
}

} // namespace qalt
