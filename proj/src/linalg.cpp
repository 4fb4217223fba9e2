#include "qalt/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "qalt/errors.hpp"

namespace qalt {

IntMat identity_int(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Int det_int(IntMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                // Bareiss: division is exact.
                m[i][j] = t / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

int signature_sym(const IntMat& m0) {
    const std::size_t n = m0.size();
    RatMat m(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(m0[i][j]);

    int sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            // Congruence-swap in a nonzero diagonal entry, or manufacture one
            // from an off-diagonal entry (its diagonal block is hyperbolic and
            // contributes +1 -1 = 0, but the row addition keeps it uniform).
            std::size_t p = k;
            for (std::size_t j = k + 1; j < n; ++j)
                if (m[j][j] != 0) { p = j; break; }
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m[k][j], m[p][j]);
                for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][p]);
            } else {
                std::size_t a = n, b = n;
                for (std::size_t i = k; i < n && a == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (m[i][j] != 0) { a = i; b = j; break; }
                if (a == n) break; // all-zero tail
                // row/col a += row/col b makes m[a][a] = 2*m[a][b] != 0
                for (std::size_t j = 0; j < n; ++j) m[a][j] += m[b][j];
                for (std::size_t i = 0; i < n; ++i) m[i][a] += m[i][b];
                if (a != k) {
                    for (std::size_t j = 0; j < n; ++j) std::swap(m[k][j], m[a][j]);
                    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][a]);
                }
            }
            if (m[k][k] == 0) continue;
        }
        sig += (m[k][k] > 0) ? 1 : -1;
        const Rat pivot = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rat f = m[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            for (std::size_t j = k; j < n; ++j) m[j][i] = m[i][j];
        }
    }
    return sig;
}

bool positive_definite(const IntMat& m) {
    const std::size_t n = m.size();
    for (std::size_t k = 1; k <= n; ++k) {
        IntMat lead(k, IntVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
        if (det_int(std::move(lead)) <= 0) return false;
    }
    return true;
}

RatMat inverse_int(const IntMat& m) {
    const std::size_t n = m.size();
    RatMat a(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw BadParameters("inverse_int: singular matrix");
        std::swap(a[k], a[p]);
        const Rat pivot = a[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rat f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

void ldl_posdef(const RatMat& m, RatMat& lower, RatVec& diag) {
    const std::size_t n = m.size();
    lower.assign(n, RatVec(n, Rat(0)));
    diag.assign(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rat d = m[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= lower[j][k] * lower[j][k] * diag[k];
        if (d <= 0) throw BadParameters("ldl_posdef: matrix not positive definite");
        diag[j] = d;
        lower[j][j] = 1;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat v = m[i][j];
            for (std::size_t k = 0; k < j; ++k) v -= lower[i][k] * lower[j][k] * diag[k];
            lower[i][j] = v / d;
        }
    }
}

namespace {

struct SnfState {
    IntMat a;
    IntMat p;     // row transform
    IntMat pinv;  // its inverse
    std::size_t n;

    // row i += f * row j on a and p; the inverse transform gets the
    // compensating column op.
    void row_add(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t c = 0; c < n; ++c) {
            a[i][c] += f * a[j][c];
            p[i][c] += f * p[j][c];
        }
        for (std::size_t r = 0; r < n; ++r) pinv[r][j] -= f * pinv[r][i];
    }
    void row_swap(std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(p[i], p[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(pinv[r][i], pinv[r][j]);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) {
            a[i][c] = -a[i][c];
            p[i][c] = -p[i][c];
        }
        for (std::size_t r = 0; r < n; ++r) pinv[r][i] = -pinv[r][i];
    }
    void col_add(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t r = 0; r < n; ++r) a[r][i] += f * a[r][j];
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    }
    void col_negate(std::size_t i) {
        for (std::size_t r = 0; r < n; ++r) a[r][i] = -a[r][i];
    }
};

} // namespace

SmithForm smith_normal_form(IntMat m) {
    const std::size_t n = m.size();
    SnfState s{std::move(m), identity_int(n), identity_int(n), n};

    for (std::size_t k = 0; k < n; ++k) {
        // Move a nonzero entry into (k,k): pick the one of minimal |value|.
        for (;;) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (s.a[i][j] != 0 &&
                        (bi == n || cmp(abs(s.a[i][j]), abs(s.a[bi][bj])) < 0)) {
                        bi = i;
                        bj = j;
                    }
            if (bi == n) { bi = k; bj = k; }
            if (s.a[bi][bj] == 0) break; // remaining block is zero
            if (bi != k) s.row_swap(k, bi);
            if (bj != k) s.col_swap(k, bj);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (s.a[i][k] == 0) continue;
                Int q = s.a[i][k] / s.a[k][k];
                s.row_add(i, k, -q);
                if (s.a[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (s.a[k][j] == 0) continue;
                Int q = s.a[k][j] / s.a[k][k];
                s.col_add(j, k, -q);
                if (s.a[k][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (s.a[k][k] < 0) s.row_negate(k);
    }

    // Enforce the divisibility chain d_k | d_{k+1}.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t j = k + 1; j < n; ++j) {
            if (s.a[k][k] == 0 && s.a[j][j] != 0) {
                s.row_swap(k, j);
                s.col_swap(k, j);
            }
            if (s.a[k][k] == 0) continue;
            if (s.a[j][j] % s.a[k][k] == 0) continue;
            // Standard 2x2 fix: fold d_j into row k, reduce, re-diagonalize.
            s.col_add(k, j, Int(1));
            for (;;) {
                if (s.a[j][k] == 0 && s.a[k][j] == 0) break;
                if (s.a[j][k] != 0) {
                    Int q = s.a[j][k] / s.a[k][k];
                    s.row_add(j, k, -q);
                    if (s.a[j][k] != 0) {
                        s.row_swap(k, j);
                        continue;
                    }
                }
                if (s.a[k][j] != 0) {
                    Int q = s.a[k][j] / s.a[k][k];
                    s.col_add(j, k, -q);
                    if (s.a[k][j] != 0) {
                        s.col_swap(k, j);
                        continue;
                    }
                }
            }
            if (s.a[k][k] < 0) s.row_negate(k);
            if (s.a[j][j] < 0) s.row_negate(j);
        }
    }

    SmithForm out;
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = s.a[i][i];
    out.row_t = std::move(s.p);
    out.row_t_inv = std::move(s.pinv);
    return out;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
    IntVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

} // namespace qalt
