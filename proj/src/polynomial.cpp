#include "qalt/polynomial.hpp"


#include "qalt/errors.hpp"

namespace qalt {

bool SkeinMemo::get(const std::string& key, Laurent& out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    lru_.splice(lru_.begin(), lru_, it->second.second);
    out = it->second.first;
    return true;
}

void SkeinMemo::put(const std::string& key, const Laurent& value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.count(key)) return;
    lru_.push_front(key);
    map_.emplace(key, std::make_pair(value, lru_.begin()));
    if (map_.size() > capacity_) {
        map_.erase(lru_.back());
        lru_.pop_back();
    }
}

namespace {

Laurent delta_poly() {
    Laurent d;
    d.add_term(2, Int(-1));
    d.add_term(-2, Int(-1));
    return d;
}

Laurent bracket_rec(const LinkDiagram& d, const SkeinOptions& opts, std::uint64_t& nodes,
                    SkeinMemo* memo) {
    if (++nodes > opts.node_budget)
        throw ResourceLimit("skein-tree node budget exceeded (" +
                            std::to_string(opts.node_budget) + ")");
    if (d.n_crossings() == 0) {
        // k circles: delta^(k-1)
        Laurent r = Laurent::one();
        Laurent delta = delta_poly();
        for (int i = 1; i < d.free_loops(); ++i) r = r * delta;
        return r;
    }
    std::string key;
    if (memo) {
        key = d.canonical_key();
        Laurent hit;
        if (memo->get(key, hit)) return hit;
    }
    Laurent a = bracket_rec(resolve(d, 0, ResolutionKind::one), opts, nodes, memo);
    Laurent b = bracket_rec(resolve(d, 0, ResolutionKind::zero), opts, nodes, memo);
    a.shift_scale(1, Int(1));
    b.shift_scale(-1, Int(1));
    Laurent r = a + b;
    if (memo) memo->put(key, r);
    return r;
}

} // namespace

Laurent kauffman_bracket(const LinkDiagram& d, const SkeinOptions& opts) {
    std::uint64_t nodes = 0;
    SkeinMemo local;
    SkeinMemo* memo = opts.memo ? opts.memo : &local;
    if (d.n_crossings() == 0 && d.free_loops() == 0)
        throw MalformedPD("empty diagram has no bracket");
    return bracket_rec(d, opts, nodes, memo);
}

Laurent jones(const LinkDiagram& d, const Orientation& o, const SkeinOptions& opts) {
    Laurent br = kauffman_bracket(d, opts);
    int w = writhe(d, o);
    // (-A)^(-3w) = (-1)^w A^(-3w)
    br.shift_scale(-3 * w, (w % 2 == 0) ? Int(1) : Int(-1));
    // A-exponent e -> t^(1/2)-exponent -e/2 (A = t^(-1/4))
    Laurent v;
    for (const auto& [e, c] : br.terms()) {
        if (e % 2 != 0)
            throw NonRealRatio("internal: odd A-exponent in writhe-normalized bracket");
        v.add_term(-e / 2, c);
    }
    return v;
}

GaussRational jones_at_minus_one(const Laurent& v) { return v.eval_at_i(); }

Int determinant_jones(const Laurent& v) {
    GaussRational g = v.eval_at_i();
    const Rat* nz = nullptr;
    if (g.re == 0)
        nz = &g.im;
    else if (g.im == 0)
        nz = &g.re;
    else
        throw NonIntegralDeterminant("V(-1) is not real-or-imaginary: " + to_string(g));
    Rat val = *nz;
    if (val.get_den() != 1)
        throw NonIntegralDeterminant("|V(-1)| is not an integer: " + to_string(g));
    Int n = val.get_num();
    return n < 0 ? Int(-n) : n;
}

Int determinant_jones(const LinkDiagram& d, const Orientation& o, const SkeinOptions& opts) {
    return determinant_jones(jones(d, o, opts));
}

Rat log_derivative_at_minus_one(const Laurent& v) {
    GaussRational val = v.eval_at_i();
    if (val.is_zero()) throw ZeroDeterminant("V(-1) = 0");
    // dV/dt = (dV/dx) / (2x) at x = i
    GaussRational dx = v.derivative().eval_at_i();
    GaussRational two_i{Rat(0), Rat(2)};
    GaussRational ratio = (dx / two_i) / val;
    if (!ratio.is_real())
        throw NonRealRatio("V'(-1)/V(-1) has nonzero imaginary part: " + to_string(ratio));
    return ratio.re;
}

} // namespace qalt
