#pragma once

#include <cstddef>
#include <vector>

#include "qalt/numeric.hpp"

namespace qalt {

using IntMat = std::vector<std::vector<Int>>;
using IntVec = std::vector<Int>;
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

IntMat identity_int(std::size_t n);

// Exact determinant (Bareiss fraction-free elimination).
Int det_int(IntMat m);

// Signature (n_plus - n_minus) of a symmetric matrix by exact congruence
// diagonalization over Q.  Zero eigenvalues are allowed and contribute 0.
int signature_sym(const IntMat& m);

// All leading principal minors positive <=> positive definite.
bool positive_definite(const IntMat& m);

// Inverse of a nonsingular integer matrix, exact.
RatMat inverse_int(const IntMat& m);

// LDL^T decomposition of a symmetric positive definite rational matrix:
// m = L * diag(d) * L^T with L unit lower triangular.  Throws
// BadParameters if a pivot is nonpositive.
void ldl_posdef(const RatMat& m, RatMat& lower, RatVec& diag);

// Smith normal form: returns diagonal entries (nonnegative, divisibility
// chain) and unimodular row/column transforms with
//   row_t * m * col_t = diag(entries),  row_t_inv = row_t^-1.
struct SmithForm {
    IntVec diagonal;
    IntMat row_t;
    IntMat row_t_inv;
};
SmithForm smith_normal_form(IntMat m);

IntVec mat_vec(const IntMat& m, const IntVec& v);
RatVec mat_vec(const RatMat& m, const RatVec& v);

} // namespace qalt
