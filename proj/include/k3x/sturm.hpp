// Exact real-root counting for integer polynomials via Sturm sequences,
// plus Yun squarefree decomposition (characteristic 0) for multiplicity-aware
// counts such as lattice signatures.
#pragma once

#include "intpoly.hpp"

#include <optional>
#include <vector>

namespace k3x {

// An endpoint of an open interval; nullopt = infinite.
using SturmBound = std::optional<Rational>;

namespace sturm_detail {

inline int sign_of(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

inline std::vector<RatPoly> sturm_chain(const IntPoly& f) {
    std::vector<RatPoly> chain;
    RatPoly p0 = to_rat(f);
    chain.push_back(p0);
    RatPoly p1 = to_rat(f.derivative());
    if (!p1.is_zero()) chain.push_back(p1);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        RatPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_at(const RatPoly& p, const SturmBound& b, bool at_minus_infinity) {
    if (p.is_zero()) return 0;
    if (b.has_value()) return sign_of(p.eval(*b));
    int lead = sign_of(p.lc());
    if (at_minus_infinity && p.degree() % 2 == 1) return -lead;
    return lead;
}

inline int variations(const std::vector<RatPoly>& chain, const SturmBound& b, bool at_minus_infinity) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, b, at_minus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace sturm_detail

// Number of distinct real roots of f in the open interval (lo, hi); either
// bound may be infinite. Multiple roots are counted once (f is replaced by
// its squarefree part first).
inline long sturm_count(const IntPoly& f_in, const SturmBound& lo = std::nullopt, const SturmBound& hi = std::nullopt) {
    if (f_in.is_zero()) throw input_error("sturm_count: zero polynomial");
    IntPoly f = squarefree_part(f_in);
    if (f.degree() == 0) return 0;
    if (lo && hi && *lo >= *hi) return 0;
    auto chain = sturm_detail::sturm_chain(f);
    int va = sturm_detail::variations(chain, lo, true);
    int vb = sturm_detail::variations(chain, hi, false);
    long count = va - vb;  // roots in (lo, hi]
    if (hi && eval_rat(f, *hi) == 0) --count;
    return count;
}

// Yun's squarefree decomposition in characteristic zero:
// f = content * prod part_i^i over the returned (part_i, i).
inline std::vector<std::pair<IntPoly, std::size_t>> yun_squarefree(const IntPoly& f_in) {
    std::vector<std::pair<IntPoly, std::size_t>> out;
    if (f_in.degree() <= 0) return out;
    IntPoly f = primitive_part(f_in);
    IntPoly g = int_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly w = exact_div(f, g);
    IntPoly y = exact_div(f.derivative(), g);
    IntPoly z = y - w.derivative();
    std::size_t i = 1;
    std::size_t guard = static_cast<std::size_t>(f.degree()) + 2;
    while (!z.is_zero() && i <= guard) {
        IntPoly part = int_gcd(w, z);
        if (part.degree() > 0) out.emplace_back(part, i);
        w = exact_div(w, part);
        y = exact_div(z, part);
        z = y - w.derivative();
        ++i;
    }
    if (!z.is_zero()) throw domain_error("yun_squarefree: did not terminate");
    if (w.degree() > 0) out.emplace_back(w, i);
    return out;
}

// Real roots in (lo, hi) counted with multiplicity.
inline long real_roots_with_multiplicity(const IntPoly& f, const SturmBound& lo = std::nullopt, const SturmBound& hi = std::nullopt) {
    long total = 0;
    for (const auto& [part, mult] : yun_squarefree(f)) total += static_cast<long>(mult) * sturm_count(part, lo, hi);
    return total;
}

}  // namespace k3x
