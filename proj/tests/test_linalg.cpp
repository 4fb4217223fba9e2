#include <doctest.h>

#include "qalt/linalg.hpp"

using namespace qalt;

namespace {

IntMat m2(long a, long b, long c, long d) { return {{Int(a), Int(b)}, {Int(c), Int(d)}}; }

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size();
    IntMat r(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

} // namespace

TEST_CASE("integer determinants") {
    CHECK(det_int({}) == 1);
    CHECK(det_int({{Int(7)}}) == 7);
    CHECK(det_int(m2(1, 2, 3, 4)) == -2);
    CHECK(det_int(m2(2, 4, 1, 2)) == 0);
    // needs a pivot swap
    CHECK(det_int(m2(0, 1, 1, 0)) == -1);
}

TEST_CASE("signatures of symmetric matrices") {
    CHECK(signature_sym({}) == 0);
    CHECK(signature_sym({{Int(5)}}) == 1);
    CHECK(signature_sym(m2(1, 0, 0, -1)) == 0);
    CHECK(signature_sym(m2(0, 1, 1, 0)) == 0);  // hyperbolic plane
    CHECK(signature_sym(m2(-2, 1, 1, -2)) == -2);
    CHECK(signature_sym(m2(2, 3, 3, 2)) == 0);
    // zero eigenvalue
    CHECK(signature_sym(m2(1, 1, 1, 1)) == 1);
}

TEST_CASE("positive definiteness by leading minors") {
    CHECK(positive_definite(m2(2, -1, -1, 2)));
    CHECK_FALSE(positive_definite(m2(1, 2, 2, 1)));
    CHECK_FALSE(positive_definite(m2(0, 0, 0, 1)));
    CHECK(positive_definite({}));
}

TEST_CASE("smith normal form transforms and divisibility") {
    for (const IntMat& m : {m2(2, 4, 6, 8), m2(-2, 1, 1, -2), m2(0, 3, 3, 0),
                            IntMat{{Int(6), Int(0), Int(0)},
                                   {Int(0), Int(10), Int(0)},
                                   {Int(0), Int(0), Int(15)}},
                            IntMat{{Int(-4), Int(1), Int(0)},
                                   {Int(1), Int(-3), Int(1)},
                                   {Int(0), Int(1), Int(-2)}}}) {
        SmithForm s = smith_normal_form(m);
        // row transform is unimodular with the stated inverse
        IntMat prod = mat_mul(s.row_t, s.row_t_inv);
        CHECK(prod == identity_int(m.size()));
        Int dt = det_int(s.row_t);
        CHECK((dt == 1 || dt == -1));
        // diagonal entries: nonnegative, divisibility chain, same |det|
        Int prod_diag = 1;
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] >= 0);
            prod_diag *= s.diagonal[i];
            if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0)
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
        Int dm = det_int(m);
        if (dm < 0) dm = -dm;
        if (prod_diag < 0) prod_diag = -prod_diag;
        CHECK(prod_diag == dm);
    }
}

TEST_CASE("exact inverse") {
    RatMat inv = inverse_int(m2(2, 1, 1, 1));
    CHECK(inv[0][0] == 1);
    CHECK(inv[0][1] == -1);
    CHECK(inv[1][0] == -1);
    CHECK(inv[1][1] == 2);
}

TEST_CASE("ldl of positive definite matrices") {
    RatMat h = {{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
    RatMat lower;
    RatVec diag;
    ldl_posdef(h, lower, diag);
    CHECK(diag[0] == Rat(2));
    CHECK(diag[1] == make_rat(3, 2));
    CHECK(lower[1][0] == make_rat(1, 2));
}
