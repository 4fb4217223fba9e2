#include <doctest.h>

#include <algorithm>
#include <set>

#include "qalt/diagram.hpp"
#include "qalt/errors.hpp"
#include "qalt/polynomial.hpp"
#include "qalt/surfaces.hpp"

using namespace qalt;

namespace {

LinkDiagram braid(const char* w, int k) { return parse_braid(w, k); }

int sigma(const LinkDiagram& d) { return signature_gl(d, Orientation::standard(d)).value; }

} // namespace

TEST_CASE("face counts follow Euler's formula") {
    for (const LinkDiagram& d : {braid("s1", 2), braid("s1 s1 s1", 2), braid("s1 -s2 s1 -s2", 3),
                                 braid("s1 s1 s2 s2", 3)}) {
        CHECK(faces(d).n_faces == d.n_crossings() + 2);
    }
}

TEST_CASE("checkerboard region counts on the kink") {
    auto cols = checkerboard(braid("s1", 2));
    std::multiset<int> counts{cols[0].white_count(), cols[1].white_count()};
    CHECK(counts == std::multiset<int>{1, 2});
}

TEST_CASE("checkerboard region counts on the trefoil") {
    auto cols = checkerboard(braid("s1 s1 s1", 2));
    std::multiset<int> counts{cols[0].white_count(), cols[1].white_count()};
    CHECK(counts == std::multiset<int>{2, 3});
}

TEST_CASE("checkerboard requires connected diagrams") {
    CHECK_THROWS_AS(checkerboard(LinkDiagram::unlink(2)), DisconnectedDiagram);
}

TEST_CASE("goeritz determinants") {
    CHECK(determinant_goeritz(LinkDiagram::unknot()) == 1);
    CHECK(determinant_goeritz(braid("s1", 2)) == 1);
    CHECK(determinant_goeritz(braid("-s1", 2)) == 1);
    CHECK(determinant_goeritz(braid("s1 s1", 2)) == 2);
    CHECK(determinant_goeritz(braid("s1 s1 s1", 2)) == 3);
    CHECK(determinant_goeritz(braid("s1 -s2 s1 -s2", 3)) == 5);
}

TEST_CASE("goeritz matches jones determinant") {
    for (const LinkDiagram& d :
         {braid("s1 s1 s1", 2), braid("s1 -s2 s1 -s2", 3), braid("s1 s1 s2 s2", 3),
          braid("s1 s2 s1 s2 s1 s2", 3), braid("s1 s1 s2 -s3 s2 s3 s3", 4)}) {
        CHECK(determinant_goeritz(d) == determinant_jones(d, Orientation::standard(d)));
    }
}

TEST_CASE("signature anchors") {
    CHECK(sigma(LinkDiagram::unknot()) == 0);
    CHECK(sigma(braid("s1", 2)) == 0);    // positive kink
    CHECK(sigma(braid("-s1", 2)) == 0);   // negative kink
    CHECK(sigma(braid("s1 s1 s1", 2)) == -2);
    CHECK(sigma(braid("-s1 -s1 -s1", 2)) == 2);
}

TEST_CASE("hopf signatures per quasi-orientation") {
    LinkDiagram h = braid("s1 s1", 2);
    CHECK(signature_gl(h, Orientation{{true, true}}).value == -1);
    CHECK(signature_gl(h, Orientation{{true, false}}).value == 1);
}

TEST_CASE("signature is a quasi-orientation invariant, exhaustively") {
    for (const LinkDiagram& d : {braid("s1 s1", 2), braid("s1 s1 s2 s2", 3),
                                 braid("s1 s2 s1 s2 s1 s2", 3)}) {
        for (const auto& o : all_orientations(d))
            CHECK(signature_gl(d, o).value == signature_gl(d, o.flipped()).value);
    }
}

TEST_CASE("mirror antisymmetry of the signature") {
    for (const LinkDiagram& d :
         {braid("s1 s1 s1", 2), braid("s1 s1", 2), braid("s1 s1 s2 s2", 3),
          braid("s1 s2 s1 s2 s1 s2", 3), braid("s1 s1 s2 -s3 s2 s3 s3", 4)}) {
        LinkDiagram m = mirror(d);
        auto sd = signature_gl(d, Orientation::standard(d)).value;
        // compare multisets over quasi-orientations
        std::multiset<int> ms_d, ms_m;
        for (const auto& o : quasi_orientations(d)) ms_d.insert(signature_gl(d, o).value);
        for (const auto& o : quasi_orientations(m)) ms_m.insert(-signature_gl(m, o).value);
        CHECK(ms_d == ms_m);
        (void)sd;
    }
}

TEST_CASE("seifert matrix of torus braids") {
    LinkDiagram t = braid("s1 s1 s1", 2);
    IntMat v = seifert_matrix_braid(*t.braid());
    REQUIRE(v.size() == 2);
    IntMat sym(2, IntVec(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sym[i][j] = v[i][j] + v[j][i];
    CHECK(sym[0][0] == -2);
    CHECK(sym[1][1] == -2);
    CHECK((sym[0][1] == 1 && sym[1][0] == 1));
}

TEST_CASE("seifert signature oracle agrees with gordon-litherland") {
    for (const char* w : {"s1 s1 s1", "s1 s1", "s1 s1 s1 s1", "s1 s1 s1 s1 s1",
                          "-s1 -s1 -s1", "-s1 -s1"}) {
        LinkDiagram d = braid(w, 2);
        Orientation nat{d.braid()->natural_orientation};
        CHECK(seifert_signature(d, nat).value == signature_gl(d, nat).value);
    }
    for (const char* w : {"s1 -s2 s1 -s2", "s1 s2 s1 s2 s1 s2", "s1 s2 s1 s2 s1 s2 s1 s2",
                          "s1 s1 s2 s2", "s1 s1 -s2 s1 -s2", "-s1 s2 -s1 s2 -s1 s2",
                          "s1 -s2 s1 -s2 s1 -s2"}) {
        LinkDiagram d = braid(w, 3);
        Orientation nat{d.braid()->natural_orientation};
        CHECK(seifert_signature(d, nat).value == signature_gl(d, nat).value);
    }
    {
        LinkDiagram d = braid("s1 s2 s3 s1 s2 s3", 4);
        Orientation nat{d.braid()->natural_orientation};
        CHECK(seifert_signature(d, nat).value == signature_gl(d, nat).value);
    }
}

TEST_CASE("torus knot signature values") {
    CHECK(sigma(braid("s1 s1 s1 s1 s1", 2)) == -4);           // T(2,5)
    CHECK(sigma(braid("s1 s2 s1 s2 s1 s2 s1 s2", 3)) == -6);  // T(3,4)
}

TEST_CASE("seifert oracle demands braid provenance and coherent orientation") {
    LinkDiagram t = braid("s1 s1 s1", 2);
    LinkDiagram pd = parse_pd("[[1,3,2,4],[3,1,4,2]]");
    CHECK_THROWS_AS(seifert_signature(pd, Orientation::standard(pd)), NotBraidClosure);
    LinkDiagram h = braid("s1 s1", 2);
    Orientation bad{h.braid()->natural_orientation};
    bad.dirs[1] = !bad.dirs[1];
    CHECK_THROWS_AS(seifert_signature(h, bad), NotBraidClosure);
    CHECK(seifert_signature(braid("", 1), Orientation{{true}}).value == 0);
}

TEST_CASE("signature recursion at a positive crossing") {
    // sigma(L,o) = sigma(L1,o1) - 1 wherever the smoothed crossing is positive
    for (const LinkDiagram& d : {braid("s1 s1 s1", 2), braid("s1 s1", 2),
                                 braid("s1 s1 s2 s2", 3)}) {
        Orientation nat{d.braid()->natural_orientation};
        auto signs = crossing_signs(d, nat);
        for (int c = 0; c < d.n_crossings(); ++c) {
            if (signs.value[static_cast<std::size_t>(c)] != 1) continue;
            auto r = oriented_resolution(d, nat, c);
            if (!r.diagram.is_connected()) continue;
            CHECK(signature_gl(d, nat).value ==
                  signature_gl(r.diagram, r.orientation).value - 1);
        }
    }
}
