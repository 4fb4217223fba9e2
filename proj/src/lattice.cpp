#include "qalt/lattice.hpp"

#include <algorithm>

#include "qalt/errors.hpp"

namespace qalt {

CharLattice build_lattice(const IntMat& gram) {
    CharLattice lat;
    lat.gram = gram;
    lat.rank = static_cast<int>(gram.size());
    IntMat neg(gram.size(), IntVec(gram.size()));
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j) neg[i][j] = -gram[i][j];
    if (!positive_definite(neg))
        throw NotNegativeDefinite("Gram matrix is not negative definite");
    lat.snf = smith_normal_form(gram);
    Int det = 1;
    for (const Int& s : lat.snf.diagonal) det *= s;
    lat.det_abs = det < 0 ? Int(-det) : det;
    if (lat.rank > 0) lat.minus_gram_inv = inverse_int(neg);
    return lat;
}

CharLattice build_lattice(const GoeritzForm& g) { return build_lattice(g.matrix); }

std::vector<CharClass> char_classes(const CharLattice& lat) {
    const int r = lat.rank;
    std::vector<CharClass> out;
    if (r == 0) {
        out.push_back(CharClass{{}});
        return out;
    }
    // classes of y in Z^r / gram Z^r, via  y = row_t_inv * w,
    // w in box prod [0, s_i); characteristic vectors c = diag + 2y.
    IntVec w(static_cast<std::size_t>(r), 0);
    const IntVec& s = lat.snf.diagonal;
    for (;;) {
        IntVec y = mat_vec(lat.snf.row_t_inv, w);
        CharClass cc;
        cc.rep.resize(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            cc.rep[static_cast<std::size_t>(i)] =
                lat.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +
                2 * y[static_cast<std::size_t>(i)];
        out.push_back(std::move(cc));
        int k = 0;
        while (k < r) {
            w[static_cast<std::size_t>(k)] += 1;
            if (w[static_cast<std::size_t>(k)] < s[static_cast<std::size_t>(k)]) break;
            w[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == r) break;
    }
    return out;
}

bool same_class(const CharLattice& lat, const IntVec& a, const IntVec& b) {
    // a - b in 2 * gram * Z^r  <=>  row_t * (a-b) = 0 mod 2 * diagonal
    const int r = lat.rank;
    IntVec diff(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        diff[static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    IntVec t = mat_vec(lat.snf.row_t, diff);
    for (int i = 0; i < r; ++i) {
        Int m = 2 * lat.snf.diagonal[static_cast<std::size_t>(i)];
        if (m == 0) {
            if (t[static_cast<std::size_t>(i)] != 0) return false;
        } else if (t[static_cast<std::size_t>(i)] % m != 0) {
            return false;
        }
    }
    return true;
}

bool is_spin(const CharLattice& lat, const CharClass& s) {
    IntVec neg(s.rep.size());
    for (std::size_t i = 0; i < s.rep.size(); ++i) neg[i] = -s.rep[i];
    return same_class(lat, s.rep, neg);
}

std::vector<CharClass> spin_classes(const CharLattice& lat) {
    std::vector<CharClass> out;
    for (auto& c : char_classes(lat))
        if (is_spin(lat, c)) out.push_back(c);
    return out;
}

namespace {

// Smallest/largest integers x with d*(x - center)^2 <= rem, by exact walk
// from round(center); ranges here are tiny.
void integer_range(const Rat& center, const Rat& rem, const Rat& d, long& lo, long& hi,
                   bool& empty) {
    if (rem < 0) {
        empty = true;
        return;
    }
    empty = false;
    // start at floor(center)
    Int num = center.get_num(), den = center.get_den();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    long base = static_cast<long>(fl.get_si());
    auto ok = [&](long x) {
        Rat diff = Rat(x) - center;
        return d * diff * diff <= rem;
    };
    // find any admissible point (floor or ceil of center must be one if
    // the interval contains an integer)
    long start = base;
    if (!ok(start) && ok(base + 1)) start = base + 1;
    if (!ok(start)) {
        empty = true;
        return;
    }
    lo = start;
    while (ok(lo - 1)) --lo;
    hi = start;
    while (ok(hi + 1)) ++hi;
}

struct Enumerator {
    const CharLattice& lat;
    int r;
    RatMat lower;
    RatVec diag;
    RatVec target;  // t = H^-1 c0 / 2
    IntVec c0;
    Rat best;       // current minimum of c^T H^-1 c over the class
    IntVec best_c;  // lexicographically smallest minimizer
    IntVec x;

    // value of candidate x: 4 (x-t)^T H (x-t); track partial sums by level.
    void search(int level, const Rat& partial) {
        if (level < 0) {
            if (partial < best || (partial == best && current_c_lex_less())) {
                if (partial < best) best = partial;
                best_c = current_c();
            }
            return;
        }
        // u_level = (x_l - t_l) + sum_{j>l} L_jl (x_j - t_j)
        Rat shift(0);
        for (int j = level + 1; j < r; ++j)
            shift += lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(level)] *
                     (Rat(x[static_cast<std::size_t>(j)]) - target[static_cast<std::size_t>(j)]);
        Rat center = target[static_cast<std::size_t>(level)] - shift;
        Rat rem = (best - partial) / 4;
        long lo, hi;
        bool empty;
        integer_range(center, rem, diag[static_cast<std::size_t>(level)], lo, hi, empty);
        if (empty) return;
        for (long xv = lo; xv <= hi; ++xv) {
            x[static_cast<std::size_t>(level)] = xv;
            Rat u = Rat(xv) - center;
            Rat add = 4 * diag[static_cast<std::size_t>(level)] * u * u;
            if (partial + add > best) continue;
            search(level - 1, partial + add);
        }
        x[static_cast<std::size_t>(level)] = 0;
    }

    IntVec current_c() const {
        // c = c0 - 2 H x = c0 + 2 G x
        IntVec c(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            Int acc = c0[static_cast<std::size_t>(i)];
            for (int j = 0; j < r; ++j)
                acc += 2 * lat.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       x[static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(i)] = acc;
        }
        return c;
    }
    bool current_c_lex_less() const {
        IntVec c = current_c();
        return std::lexicographical_compare(c.begin(), c.end(), best_c.begin(), best_c.end());
    }
};

Rat quad_inv(const CharLattice& lat, const IntVec& c) {
    // c^T (-G)^-1 c
    RatVec cv(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cv[i] = Rat(c[i]);
    RatVec hc = mat_vec(lat.minus_gram_inv, cv);
    Rat acc(0);
    for (std::size_t i = 0; i < c.size(); ++i) acc += cv[i] * hc[i];
    return acc;
}

} // namespace

DValue d_invariant(const CharLattice& lat, const CharClass& s, const LatticeOptions& opts) {
    if (lat.rank > opts.max_rank)
        throw ResourceLimit("lattice rank " + std::to_string(lat.rank) + " exceeds bound " +
                            std::to_string(opts.max_rank));
    if (lat.rank == 0) return {Rat(0), {}};

    Enumerator en{lat, lat.rank, {}, {}, {}, s.rep, Rat(0), {}, {}};
    RatMat h(static_cast<std::size_t>(lat.rank), RatVec(static_cast<std::size_t>(lat.rank)));
    for (int i = 0; i < lat.rank; ++i)
        for (int j = 0; j < lat.rank; ++j)
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rat(-lat.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    ldl_posdef(h, en.lower, en.diag);

    RatVec c0(static_cast<std::size_t>(lat.rank));
    for (int i = 0; i < lat.rank; ++i)
        c0[static_cast<std::size_t>(i)] = Rat(s.rep[static_cast<std::size_t>(i)]);
    RatVec hc = mat_vec(lat.minus_gram_inv, c0);
    en.target.resize(static_cast<std::size_t>(lat.rank));
    for (int i = 0; i < lat.rank; ++i) en.target[static_cast<std::size_t>(i)] = hc[static_cast<std::size_t>(i)] / 2;

    en.best = quad_inv(lat, s.rep);  // x = 0 candidate
    en.best_c = s.rep;
    en.x.assign(static_cast<std::size_t>(lat.rank), 0);
    en.search(lat.rank - 1, Rat(0));

    Rat d = (Rat(lat.rank) - en.best) / 4;
    d.canonicalize();
    return {d, en.best_c};
}

std::vector<Rat> d_multiset(const CharLattice& lat, const LatticeOptions& opts) {
    std::vector<Rat> out;
    for (auto& c : char_classes(lat)) out.push_back(d_invariant(lat, c, opts).value);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rat> spin_d_multiset(const CharLattice& lat, const LatticeOptions& opts) {
    std::vector<Rat> out;
    for (auto& c : spin_classes(lat)) out.push_back(d_invariant(lat, c, opts).value);
    std::sort(out.begin(), out.end());
    return out;
}

Rat d_invariant_box_oracle(const CharLattice& lat, const CharClass& s) {
    const int r = lat.rank;
    if (r == 0) return Rat(0);
    Int maxdiag = 0;
    for (int i = 0; i < r; ++i) {
        Int a = lat.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        if (a < 0) a = -a;
        if (a > maxdiag) maxdiag = a;
    }
    Int bound_z = 3 * maxdiag;
    long bound = bound_z.get_si();
    IntVec c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = -bound;
    bool found = false;
    Rat best(0);
    for (;;) {
        if (same_class(lat, c, s.rep)) {
            Rat q = quad_inv(lat, c);
            if (!found || q < best) {
                best = q;
                found = true;
            }
        }
        int k = 0;
        while (k < r) {
            c[static_cast<std::size_t>(k)] += 1;
            if (c[static_cast<std::size_t>(k)] <= bound) break;
            c[static_cast<std::size_t>(k)] = -bound;
            ++k;
        }
        if (k == r) break;
    }
    if (!found) throw BadParameters("box oracle found no class representative");
    Rat d = (Rat(r) - best) / 4;
    d.canonicalize();
    return d;
}

Rat lens_d_oracle(const Int& p, const Int& q, const Int& i) {
    if (p < 1) throw BadParameters("lens space needs p >= 1");
    if (p == 1) {
        if (i != 0) throw BadParameters("L(1,q) has a single Spin^c structure");
        return Rat(0);
    }
    if (q < 1 || q >= p) throw BadParameters("lens space needs 0 < q < p");
    if (gcd(p, q) != 1) throw BadParameters("lens space needs gcd(p,q) = 1");
    if (i < 0 || i >= p) throw BadParameters("Spin^c index out of range");
    Rat term = Rat((2 * i + 1 - p - q) * (2 * i + 1 - p - q) - p * q) / Rat(4 * p * q);
    term.canonicalize();
    Int q2 = p % q;
    if (q == 1) return term;  // recursion bottoms out at L(1,0)
    Rat rec = lens_d_oracle(q, q2, i % q);
    Rat out = term - rec;
    out.canonicalize();
    return out;
}

std::vector<Rat> lens_d_multiset(const Int& p, const Int& q) {
    std::vector<Rat> out;
    for (Int i = 0; i < p; ++i) out.push_back(lens_d_oracle(p, q, i));
    std::sort(out.begin(), out.end());
    return out;
}

Rat dedekind_sum(const Int& q, const Int& p) {
    if (p < 1) throw BadParameters("dedekind_sum needs p >= 1");
    auto saw = [](const Int& num, const Int& den) {
        // ((num/den)) = num/den - floor(num/den) - 1/2, or 0 at integers
        if (num % den == 0) return Rat(0);
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Rat r = Rat(num) / Rat(den) - Rat(fl) - Rat(1, 2);
        r.canonicalize();
        return r;
    };
    Rat acc(0);
    for (Int k = 1; k < p; ++k) acc += saw(k, p) * saw(k * q, p);
    acc.canonicalize();
    return acc;
}

Rat casson_walker_lens_oracle(const Int& p, const Int& q) {
    if (p < 1) throw BadParameters("lens space needs p >= 1");
    if (p == 1) return Rat(0);
    if (q < 1 || q >= p || gcd(p, q) != 1) throw BadParameters("lens space needs 0 < q < p coprime");
    Rat r = -dedekind_sum(q, p);
    r.canonicalize();
    return r;
}

} // namespace qalt
