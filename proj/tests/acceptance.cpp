// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code 0 only if every criterion passes.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "qalt/lattice.hpp"
#include "qalt/polynomial.hpp"
#include "qalt/qa.hpp"
#include "qalt/surfaces.hpp"
#include "qalt/verify.hpp"

using namespace qalt;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::vector<Rat> sigma_multiset(const InvariantReport& r) {
    std::vector<Rat> v;
    for (const auto& row : r.rows) {
        Rat x(-row.sigma, 4);
        x.canonicalize();
        v.push_back(x);
    }
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Rat> negated(std::vector<Rat> v) {
    for (auto& r : v) r = -r;
    std::sort(v.begin(), v.end());
    return v;
}

std::optional<CharLattice> definite_lattice(const LinkDiagram& d) {
    if (!d.is_connected()) return std::nullopt;
    for (const auto& col : checkerboard(d)) {
        try {
            return build_lattice(goeritz(d, col));
        } catch (const NotNegativeDefinite&) {
        }
    }
    return std::nullopt;
}

// criterion 4 helper: the signature recursion at each positive certified
// crossing, with both sides computed by Gordon-Litherland.
bool check_signature_recursion(const QACertificate& cert, std::string& why) {
    if (cert->kind == CertNode::Kind::UnknotLeaf) return true;
    const LinkDiagram& d = cert->diagram;
    for (const auto& o : quasi_orientations(d)) {
        auto signs = crossing_signs(d, o);
        if (signs.value[static_cast<std::size_t>(cert->crossing)] != 1) continue;
        auto r = oriented_resolution(d, o, cert->crossing);
        if (!d.is_connected() || !r.diagram.is_connected()) continue;
        int lhs = signature_gl(d, o).value;
        int rhs = signature_gl(r.diagram, r.orientation).value - 1;
        if (lhs != rhs) {
            why = "sigma(L,o) != sigma(L1,o1) - 1 at a positive crossing";
            return false;
        }
    }
    return check_signature_recursion(cert->child0, why) &&
           check_signature_recursion(cert->child1, why);
}

} // namespace

int main() {
    RunConfig cfg;
    cfg.corpus_path = QALT_CORPUS_FILE;
    cfg.workers = 4;
    cfg.budget = 2000000;

    auto entries = load_corpus_sorted(cfg);
    auto t0 = std::chrono::steady_clock::now();
    auto reports = analyze_corpus(entries, cfg);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::map<std::string, const CorpusEntry*> by_name;
    for (const auto& e : entries) by_name[e.name] = &e;
    std::map<std::string, const InvariantReport*> rep_by_name;
    for (const auto& r : reports) rep_by_name[r.name] = &r;

    std::cout << "corpus: " << entries.size() << " links, analyzed in " << elapsed << "s\n";

    // ---- criterion 1: unknot base case, under one second --------------------
    {
        auto u0 = std::chrono::steady_clock::now();
        const CorpusEntry* e = by_name.count("unknot") ? by_name.at("unknot") : nullptr;
        bool ok = e != nullptr;
        std::string detail;
        if (ok) {
            InvariantReport r = analyze_link(*e, cfg);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - u0).count();
            ok = r.determinant == 1 && r.rows.size() == 1 && r.rows[0].sigma == 0 &&
                 r.spin_d && r.spin_d->size() == 1 && (*r.spin_d)[0] == Rat(0) &&
                 r.rows[0].lambda_mullins && *r.rows[0].lambda_mullins == Rat(0) &&
                 r.rows[0].tau && *r.rows[0].tau == Rat(0) && r.certified &&
                 *r.rows[0].d_cert == Rat(0) && dt < 1.0;
            std::ostringstream os;
            os << "det=1 sigma=0 d=0 lambda=0 tau=0 in " << dt << "s";
            detail = os.str();
        }
        criterion(1, "unknot base case (det 1, sigma 0, d 0, lambda 0, tau 0, < 1s)", ok, detail);
    }

    // ---- criterion 2: theorem multiset check on the alternating corpus ------
    {
        int checked = 0, passed = 0;
        std::string first_fail;
        for (const auto& r : reports) {
            const CorpusEntry* e = by_name.at(r.name);
            int n = e->diagram.n_crossings();
            bool in_range = (r.n_components == 1 && n <= 9) || (r.n_components >= 2 && n <= 8);
            if (!r.connected || !r.alternating || !in_range || r.determinant == 0) continue;
            if (!r.spin_d) continue;  // no definite coloring
            ++checked;
            if (sigma_multiset(r) == *r.spin_d)
                ++passed;
            else if (first_fail.empty())
                first_fail = r.name;
        }
        std::ostringstream os;
        os << passed << "/" << checked << " alternating links";
        if (!first_fail.empty()) os << ", first failure " << first_fail;
        criterion(2, "{-sigma/4} = {d at Spin classes} on the alternating corpus",
                  checked > 0 && passed == checked, os.str());
    }

    // ---- criterion 3: certificate d-recursion vs signature ------------------
    {
        int certified = 0, ok_links = 0;
        std::string first_fail;
        for (const auto& r : reports) {
            if (!r.certified) continue;
            ++certified;
            bool ok = validate_certificate(r.cert);
            for (const auto& row : r.rows) {
                if (!row.d_cert || !row.sigma_ok) {
                    ok = false;
                    break;
                }
                Rat lhs = Rat(-4) * *row.d_cert;
                lhs.canonicalize();
                if (lhs != Rat(row.sigma)) ok = false;
            }
            if (ok)
                ++ok_links;
            else if (first_fail.empty())
                first_fail = r.name;
        }
        std::ostringstream os;
        os << certified << " certified, " << ok_links << " verified";
        if (!first_fail.empty()) os << ", first failure " << first_fail;
        criterion(3, "-4 d_cert(o) = sigma(L,o) and det additivity on >= 25 certified links",
                  certified >= 25 && ok_links == certified, os.str());
    }

    // ---- criterion 4: signature recursion at positive certified crossings ---
    {
        int checked = 0;
        bool all_ok = true;
        std::string why;
        for (const auto& r : reports) {
            if (!r.certified) continue;
            ++checked;
            std::string w;
            if (!check_signature_recursion(r.cert, w)) {
                all_ok = false;
                why = r.name + ": " + w;
                break;
            }
        }
        criterion(4, "sigma(L,o) = sigma(L1,o1) - 1 at every positive certified crossing",
                  checked > 0 && all_ok, all_ok ? std::to_string(checked) + " certificates" : why);
    }

    // ---- criterion 5: mirror antisymmetry ------------------------------------
    {
        int checked = 0, dchecked = 0;
        bool ok = true;
        std::string why;
        for (const auto& e : entries) {
            if (!e.diagram.is_connected()) continue;
            LinkDiagram m = mirror(e.diagram);
            std::vector<Rat> sig_d, sig_m;
            for (const auto& o : quasi_orientations(e.diagram)) {
                Rat x(signature_gl(e.diagram, o).value);
                sig_d.push_back(x);
            }
            for (const auto& o : quasi_orientations(m)) sig_m.push_back(Rat(signature_gl(m, o).value));
            std::sort(sig_d.begin(), sig_d.end());
            if (negated(sig_m) != sig_d) {
                ok = false;
                why = e.name;
                break;
            }
            ++checked;
            auto lat_d = definite_lattice(e.diagram);
            auto lat_m = definite_lattice(m);
            if (lat_d && lat_m) {
                if (negated(spin_d_multiset(*lat_m)) != spin_d_multiset(*lat_d)) {
                    ok = false;
                    why = e.name + " (d-multiset)";
                    break;
                }
                ++dchecked;
            }
        }
        std::ostringstream os;
        os << checked << " links, " << dchecked << " double-sided d-multisets";
        criterion(5, "sigma(mirror) = -sigma and d-multisets negate under mirroring", ok,
                  ok ? os.str() : why);
    }

    // ---- criterion 6: spin count = 2^(components-1) --------------------------
    {
        int checked = 0;
        bool ok = true;
        std::string why;
        for (const auto& r : reports) {
            if (!r.spin_d) continue;
            ++checked;
            std::size_t expect = std::size_t(1) << (r.n_components - 1);
            if (r.spin_d->size() != expect) {
                ok = false;
                why = r.name;
                break;
            }
        }
        criterion(6, "number of Spin classes = 2^(components-1) on definite colorings",
                  checked > 0 && ok, ok ? std::to_string(checked) + " lattices" : why);
    }

    // ---- criterion 7: oracle equivalences -------------------------------------
    {
        bool det_ok = true, seif_ok = true, lens_ok = true, box_ok = true;
        std::string why;
        int dets = 0, seifs = 0, lenses = 0, boxes = 0;
        for (const auto& r : reports) {
            if (r.checks.count("det_oracles") && r.checks.at("det_oracles").v == Verdict::Fail) {
                det_ok = false;
                why = r.name + " det";
            }
            if (r.checks.count("det_oracles") && r.checks.at("det_oracles").v == Verdict::Pass)
                ++dets;
            if (r.checks.count("seifert_oracle")) {
                ++seifs;
                if (r.checks.at("seifert_oracle").v != Verdict::Pass) {
                    seif_ok = false;
                    why = r.name + " seifert";
                }
            }
        }
        // lens-space multiset equality over the whole discriminant group
        for (const auto& e : entries) {
            if (!e.two_bridge) continue;
            auto lat = definite_lattice(e.diagram);
            if (!lat) continue;
            ++lenses;
            auto lhs = d_multiset(*lat);
            auto rhs = lens_d_multiset(e.two_bridge->first, e.two_bridge->second);
            if (lhs != rhs) {
                lens_ok = false;
                why = e.name + " lens";
            }
        }
        // box-enumeration agreement on every small corpus lattice
        for (const auto& e : entries) {
            auto lat = definite_lattice(e.diagram);
            if (!lat || lat->rank > 3 || lat->det_abs > 60) continue;
            ++boxes;
            for (const auto& c : char_classes(*lat)) {
                if (d_invariant(*lat, c).value != d_invariant_box_oracle(*lat, c)) {
                    box_ok = false;
                    why = e.name + " box";
                }
            }
        }
        std::ostringstream os;
        os << dets << " det pairs, " << seifs << " seifert pairs, " << lenses
           << " lens multisets, " << boxes << " box lattices";
        criterion(7, "oracle equivalences (jones/goeritz, gl/seifert, lattice/lens, bnb/box)",
                  det_ok && seif_ok && lens_ok && box_ok && dets > 0 && seifs > 0 && lenses > 0 &&
                      boxes > 0,
                  (det_ok && seif_ok && lens_ok && box_ok) ? os.str() : why);
    }

    // ---- criterion 8: corollary on the 2-bridge corpus ------------------------
    {
        int checked = 0;
        bool ok = true;
        std::string why;
        for (const auto& r : reports) {
            if (!r.lens_d || !r.lambda_lens || r.determinant == 0) continue;
            ++checked;
            // per quasi-orientation with d(o) = -sigma(o)/4
            for (const auto& row : r.rows) {
                Rat dval(-row.sigma, 4);
                Rat lhs = (dval + *r.lambda_lens) / 2;
                lhs.canonicalize();
                if (!row.tau || lhs != *row.tau) {
                    ok = false;
                    why = r.name + " at " + row.bits;
                }
            }
            // multiset form over spin classes, independent of sigma
            if (r.spin_d) {
                std::vector<Rat> lhs, rhs;
                for (const Rat& d : *r.spin_d) {
                    Rat v = (d + *r.lambda_lens) / 2;
                    v.canonicalize();
                    lhs.push_back(v);
                }
                for (const auto& row : r.rows) rhs.push_back(*row.tau);
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                if (lhs != rhs) {
                    ok = false;
                    why = r.name + " (multiset)";
                }
            }
        }
        criterion(8, "(d + lambda_Dedekind)/2 = -(1/12) V'(-1)/V(-1) on 2-bridge links",
                  checked > 0 && ok, ok ? std::to_string(checked) + " two-bridge links" : why);
    }

    // ---- criterion 9: byte-identical reruns -----------------------------------
    {
        RunConfig c1 = cfg;
        c1.workers = 1;
        RunConfig c4 = cfg;
        c4.workers = 4;
        std::string j1 = render_report(analyze_corpus(entries, c1), "json");
        std::string j4 = render_report(analyze_corpus(entries, c4), "json");
        std::string s1 = render_report(analyze_corpus(entries, c4), "csv");
        std::string s2 = render_report(analyze_corpus(entries, c4), "csv");
        bool ok = (j1 == j4) && (s1 == s2) && !j1.empty();
        criterion(9, "report runs are byte-identical (and worker-count independent)", ok);
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
