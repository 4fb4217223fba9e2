#pragma once

#include <vector>

#include "qalt/linalg.hpp"
#include "qalt/numeric.hpp"
#include "qalt/surfaces.hpp"

namespace qalt {

// Negative-definite integral lattice with its discriminant-group data.
struct CharLattice {
    IntMat gram;         // negative definite
    int rank = 0;
    SmithForm snf;       // of gram
    Int det_abs = 1;     // |det gram| = number of characteristic classes
    RatMat minus_gram_inv;  // (-gram)^-1, positive definite
};

// A characteristic-vector class: a representative c with c_i = gram_ii
// (mod 2), taken modulo 2 * gram * Z^r.
struct CharClass {
    IntVec rep;
};

struct DValue {
    Rat value;
    IntVec maximizer;  // lexicographically smallest characteristic vector
                       // attaining the maximum (for traces)
};

struct LatticeOptions {
    int max_rank = 16;
};

CharLattice build_lattice(const IntMat& gram);
CharLattice build_lattice(const GoeritzForm& g);

// Exactly |det| classes, enumerated through Smith-normal-form coset
// representatives.  Deterministic order.
std::vector<CharClass> char_classes(const CharLattice& lat);

// Classes fixed by c -> -c (the Spin structures).
std::vector<CharClass> spin_classes(const CharLattice& lat);

bool same_class(const CharLattice& lat, const IntVec& a, const IntVec& b);
bool is_spin(const CharLattice& lat, const CharClass& s);

// d(Y,s) = max over characteristic vectors c in the class s of
// (c^T G^-1 c + rank)/4, by exact branch-and-bound on the positive
// definite -G (LDL + Fincke-Pohst interval walk, radius seeded at the
// representative and tightened monotonically).
DValue d_invariant(const CharLattice& lat, const CharClass& s, const LatticeOptions& opts = {});

// All class d-values in enumeration order.
std::vector<Rat> d_multiset(const CharLattice& lat, const LatticeOptions& opts = {});
std::vector<Rat> spin_d_multiset(const CharLattice& lat, const LatticeOptions& opts = {});

// Brute-force oracle: maximize over all characteristic vectors with
// coordinates in [-3*max|G_ii|, 3*max|G_ii|] that lie in the class.
Rat d_invariant_box_oracle(const CharLattice& lat, const CharClass& s);

// Ozsvath-Szabo recursion for lens spaces:
// d(p,q,i) = ((2i+1-p-q)^2 - pq)/(4pq) - d(q, p mod q, i mod q), d(1,-,0)=0.
Rat lens_d_oracle(const Int& p, const Int& q, const Int& i);
std::vector<Rat> lens_d_multiset(const Int& p, const Int& q);

// Dedekind sum s(q,p) = sum_{k=1}^{p-1} ((k/p))((kq/p)).
Rat dedekind_sum(const Int& q, const Int& p);

// Casson-Walker invariant of L(p,q) in the normalization of the
// verification suite (lambda(Poincare sphere) = -2): lambda = -s(q,p).
Rat casson_walker_lens_oracle(const Int& p, const Int& q);

} // namespace qalt
