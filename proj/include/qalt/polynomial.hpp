#pragma once

#include <cstdint>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>

#include "qalt/diagram.hpp"
#include "qalt/laurent.hpp"

namespace qalt {

// Memo table for skein expansion, keyed by canonical diagram strings.
// Bounded (approximate LRU); safe for concurrent insert-or-get.
class SkeinMemo {
public:
    explicit SkeinMemo(std::size_t capacity = 1u << 20) : capacity_(capacity) {}

    bool get(const std::string& key, Laurent& out);
    void put(const std::string& key, const Laurent& value);

private:
    std::size_t capacity_;
    std::mutex mu_;
    std::unordered_map<std::string, std::pair<Laurent, std::list<std::string>::iterator>> map_;
    std::list<std::string> lru_;
};

struct SkeinOptions {
    std::uint64_t node_budget = 1ull << 26;
    SkeinMemo* memo = nullptr;  // optional shared table
};

// Kauffman bracket in powers of A.  <unknot> = 1; a disjoint circle
// multiplies by delta = -A^2 - A^-2; smoothing follows
// <L> = A <L_1-smoothing> + A^-1 <L_0-smoothing> with the `one` smoothing
// of ResolutionKind as the A-channel.
Laurent kauffman_bracket(const LinkDiagram& d, const SkeinOptions& opts = {});

// Jones polynomial in powers of t^(1/2):
// V = (-A)^(-3w) <L> under A = t^(-1/4).  V(unknot) = 1.
Laurent jones(const LinkDiagram& d, const Orientation& o, const SkeinOptions& opts = {});

// |V(-1)| with t^(1/2) = i; exact nonnegative integer.
Int determinant_jones(const LinkDiagram& d, const Orientation& o, const SkeinOptions& opts = {});
Int determinant_jones(const Laurent& jones_half_t);

// V'(-1)/V(-1) as an exact rational (dV/dt = (dV/dx)/(2x), x = t^(1/2) = i).
Rat log_derivative_at_minus_one(const Laurent& jones_half_t);

// V(-1) itself, as a Gaussian rational.
GaussRational jones_at_minus_one(const Laurent& jones_half_t);

} // namespace qalt
