#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <set>

#include <json.hpp>
#include "qalt/errors.hpp"
#include "qalt/polynomial.hpp"
#include "qalt/surfaces.hpp"
#include "qalt/verify.hpp"

using namespace qalt;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "qalt_test_tmp_" + std::to_string(counter++) + ".txt";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kSmallCorpus =
    "# tiny corpus\n"
    "unknot unknot\n"
    "trefoil_braid braid 2: s1 s1 s1\n"
    "hopf_braid braid 2: s1 s1\n"
    "2br_5_2 braid 3: s1 -s2 s1 -s2\n";  // figure eight = b(5,2)

} // namespace

TEST_CASE("corpus line parsing") {
    auto e1 = parse_corpus_line("tref [[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
    REQUIRE(e1.has_value());
    CHECK(e1->name == "tref");
    CHECK(e1->diagram.n_crossings() == 3);
    CHECK_FALSE(e1->from_braid);

    auto e2 = parse_corpus_line("tor braid 2: s1 s1 s1");
    REQUIRE(e2.has_value());
    CHECK(e2->from_braid);
    CHECK(e2->diagram.n_crossings() == 3);

    CHECK_FALSE(parse_corpus_line("# comment").has_value());
    CHECK_FALSE(parse_corpus_line("   ").has_value());

    auto e3 = parse_corpus_line("2br_7_3 braid 2: s1 s1 s1 s1 s1 s1 s1");
    REQUIRE(e3.has_value());
    REQUIRE(e3->two_bridge.has_value());
    CHECK(e3->two_bridge->first == 7);
    CHECK(e3->two_bridge->second == 3);
}

TEST_CASE("config file application") {
    TempFile cfg_file(
        "# config\n"
        "max_crossings = 7\n"
        "budget=500\n"
        "workers = 3\n"
        "format = csv\n");
    RunConfig cfg;
    apply_config_file(cfg, cfg_file.path);
    CHECK(cfg.max_crossings == 7);
    CHECK(cfg.budget == 500);
    CHECK(cfg.workers == 3);
    CHECK(cfg.format == "csv");

    TempFile bad("no_such_key = 1\n");
    RunConfig cfg2;
    CHECK_THROWS_AS(apply_config_file(cfg2, bad.path), BadParameters);
}

TEST_CASE("unknot end to end") {
    TempFile corpus("unknot unknot\n");
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    auto entries = load_corpus_sorted(cfg);
    REQUIRE(entries.size() == 1);
    InvariantReport r = analyze_link(entries[0], cfg);
    CHECK(r.determinant == 1);
    CHECK(r.rows.size() == 1);
    CHECK(r.rows[0].sigma == 0);
    CHECK(*r.rows[0].tau == Rat(0));
    CHECK(*r.rows[0].lambda_mullins == Rat(0));
    CHECK(r.certified);
    CHECK(*r.rows[0].d_cert == Rat(0));
    REQUIRE(r.spin_d.has_value());
    CHECK(r.spin_d->size() == 1);
    CHECK((*r.spin_d)[0] == Rat(0));
}

TEST_CASE("small corpus passes all checks") {
    TempFile corpus(kSmallCorpus);
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    auto entries = load_corpus_sorted(cfg);
    auto reports = analyze_corpus(entries, cfg);
    for (const auto& r : reports)
        for (const auto& [name, check] : r.checks) {
            INFO(r.name << " " << name << " " << check.reason);
            CHECK(check.v != Verdict::Fail);
        }
}

TEST_CASE("reports carry goeritz, lattice and certificate data") {
    TempFile corpus("trefoil_braid braid 2: s1 s1 s1\n");
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    auto entries = load_corpus_sorted(cfg);
    InvariantReport r = analyze_link(entries[0], cfg);
    REQUIRE(r.goeritz_form.has_value());
    CHECK(r.goeritz_form->size * r.goeritz_form->size ==
          static_cast<int>(r.goeritz_form->matrix_row_major.size()));
    REQUIRE(r.lattice_data.has_value());
    REQUIRE(r.lattice_data->spin_reps.size() == 1);
    CHECK(r.lattice_data->spin_d[0] == Rat(1, 2));
    std::string js = render_report({r}, "json");
    CHECK(js.find("\"goeritz\"") != std::string::npos);
    CHECK(js.find("\"lattice\"") != std::string::npos);
    CHECK(js.find("\"certificate\"") != std::string::npos);
    CHECK(js.find("\"maximizer\"") != std::string::npos);
}

TEST_CASE("reports are deterministic and worker-count independent") {
    TempFile corpus(kSmallCorpus);
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    auto entries = load_corpus_sorted(cfg);

    cfg.workers = 1;
    std::string a = render_report(analyze_corpus(entries, cfg), "json");
    cfg.workers = 4;
    std::string b = render_report(analyze_corpus(entries, cfg), "json");
    CHECK(a == b);

    std::string c1 = render_report(analyze_corpus(entries, cfg), "csv");
    std::string c2 = render_report(analyze_corpus(entries, cfg), "csv");
    CHECK(c1 == c2);
    CHECK(c1.find("name,orientation") == 0);
}

TEST_CASE("csv and json carry the same row data") {
    TempFile corpus(kSmallCorpus);
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    auto entries = load_corpus_sorted(cfg);
    auto reports = analyze_corpus(entries, cfg);
    std::string csv = render_report(reports, "csv");
    std::string js = render_report(reports, "json");

    // row count: one per (link, quasi-orientation) plus the header
    std::size_t rows = 0, expected = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    for (const auto& r : reports) expected += r.rows.size();
    CHECK(rows == expected + 1);

    auto parsed = nlohmann::json::parse(js);
    CHECK(parsed["links"].size() == reports.size());
    for (const auto& link : parsed["links"]) {
        if (link["name"] == "trefoil_braid") {
            CHECK(link["determinant"] == "3");
            CHECK(link["orientations"][0]["sigma"] == -2);
            CHECK(link["orientations"][0]["tau"] == "2/9");
        }
    }
    CHECK(csv.find("trefoil_braid,+,3,1,1,1,3,-2,") != std::string::npos);
}

TEST_CASE("cmd_invariants reports an unknown link") {
    TempFile corpus("unknot unknot\n");
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    std::ostringstream os;
    CHECK_THROWS_AS(cmd_invariants(cfg, "missing", os), UnknownLink);
}

TEST_CASE("verify commands run clean on the small corpus") {
    TempFile corpus(kSmallCorpus);
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    std::ostringstream os1, os2;
    CHECK(cmd_verify_theorem(cfg, os1) == 0);
    CHECK(cmd_verify_corollary(cfg, os2) == 0);
    CHECK(os1.str().find("summary:") != std::string::npos);
    CHECK(os2.str().find("summary:") != std::string::npos);
}

TEST_CASE("equivalent diagrams in the corpus agree on every invariant") {
    // move-invariance pairs: the same link under different constructions
    RunConfig cfg;
    cfg.corpus_path = QALT_CORPUS_FILE;
    auto entries = load_corpus_sorted(cfg);
    auto find = [&](const std::string& n) -> const CorpusEntry* {
        for (const auto& e : entries)
            if (e.name == n) return &e;
        return nullptr;
    };
    auto signature_multiset = [&](const CorpusEntry& e) {
        std::multiset<int> out;
        for (const auto& o : quasi_orientations(e.diagram))
            out.insert(signature_gl(e.diagram, o).value);
        return out;
    };
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"trefoil", "tor_2_3_braid"},
        {"figure8", "fig8_braid"},
        {"hopf", "tor_2_2_braid"},
        {"whitehead", "2br_8_3"},
        {"2br_5_1", "tor_2_5_braid"},
    };
    for (const auto& [a, b] : pairs) {
        const CorpusEntry* ea = find(a);
        const CorpusEntry* eb = find(b);
        REQUIRE(ea != nullptr);
        REQUIRE(eb != nullptr);
        INFO(a << " vs " << b);
        CHECK(link_determinant(ea->diagram) == link_determinant(eb->diagram));
        CHECK(signature_multiset(*ea) == signature_multiset(*eb));
        if (ea->diagram.n_components() == 1) {
            Laurent va = jones(ea->diagram, Orientation::standard(ea->diagram));
            Laurent vb = jones(eb->diagram, Orientation::standard(eb->diagram));
            CHECK(va == vb);
        }
    }
    // the pretzel trefoil matches one of the two trefoil chiralities
    const CorpusEntry* p111 = find("trefoil_p111");
    REQUIRE(p111 != nullptr);
    Laurent vp = jones(p111->diagram, Orientation::standard(p111->diagram));
    Laurent v1 = jones(find("2br_3_1")->diagram, Orientation::standard(find("2br_3_1")->diagram));
    Laurent v2 = jones(find("2br_3_2")->diagram, Orientation::standard(find("2br_3_2")->diagram));
    CHECK((vp == v1 || vp == v2));
}

TEST_CASE("connected sums: determinant multiplies, signature adds") {
    RunConfig cfg;
    cfg.corpus_path = QALT_CORPUS_FILE;
    auto entries = load_corpus_sorted(cfg);
    auto find = [&](const std::string& n) -> const CorpusEntry* {
        for (const auto& e : entries)
            if (e.name == n) return &e;
        return nullptr;
    };
    const CorpusEntry* granny = find("granny_braid");
    const CorpusEntry* square = find("square_braid");
    REQUIRE(granny != nullptr);
    REQUIRE(square != nullptr);
    CHECK(link_determinant(granny->diagram) == 9);
    CHECK(link_determinant(square->diagram) == 9);
    CHECK(signature_gl(granny->diagram, Orientation::standard(granny->diagram)).value == -4);
    CHECK(signature_gl(square->diagram, Orientation::standard(square->diagram)).value == 0);
}

TEST_CASE("skein relation holds at every crossing of the shipped corpus") {
    RunConfig cfg;
    cfg.corpus_path = QALT_CORPUS_FILE;
    auto entries = load_corpus_sorted(cfg);
    REQUIRE(entries.size() > 100);
    SkeinMemo memo;
    SkeinOptions sk;
    sk.memo = &memo;
    int checked = 0;
    for (const auto& e : entries) {
        if (e.diagram.n_crossings() > 8) continue;
        Laurent whole = kauffman_bracket(e.diagram, sk);
        for (int c = 0; c < e.diagram.n_crossings(); ++c) {
            Laurent a = kauffman_bracket(resolve(e.diagram, c, ResolutionKind::one), sk);
            Laurent b = kauffman_bracket(resolve(e.diagram, c, ResolutionKind::zero), sk);
            a.shift_scale(1, Int(1));
            b.shift_scale(-1, Int(1));
            CHECK(whole == a + b);
            ++checked;
        }
    }
    CHECK(checked > 400);
}

TEST_CASE("qa-cert command output") {
    TempFile corpus(kSmallCorpus);
    RunConfig cfg;
    cfg.corpus_path = corpus.path;
    std::ostringstream os;
    CHECK(cmd_qa_cert(cfg, "trefoil_braid", os) == 0);
    CHECK(os.str().find("ResolutionNode") != std::string::npos);
}
