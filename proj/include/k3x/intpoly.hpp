// Integer polynomial utilities: content, exact and pseudo division,
// subresultant gcd, squarefree part, cyclotomic polynomials, trace
// polynomials of reciprocal polynomials, and resultants.
#pragma once

#include "numeric.hpp"
#include "poly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace k3x {

using IntPoly = Poly<Integer>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

// Requires all denominators 1.
inline IntPoly to_int(const RatPoly& p) {
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (den(x) != 1) throw input_error("to_int: non-integral coefficient");
        c.push_back(num(x));
    }
    return IntPoly(std::move(c));
}

inline Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& x : p.coeffs()) g = gcd(g, x);
    return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.lc() < 0) g = -g;
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(x / g);
    return IntPoly(std::move(c));
}

// Exact division in Z[x]; throws if b does not divide a.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = RatPoly::divrem(to_rat(a), to_rat(b));
    if (!r.is_zero()) throw input_error("exact_div: not divisible");
    return to_int(q);
}

inline bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return RatPoly::divrem(to_rat(a), to_rat(b)).second.is_zero();
}

inline IntPoly int_gcd(IntPoly a, IntPoly b) {
    // Rational Euclid then primitive normalization; fine at the degrees used here.
    RatPoly g = RatPoly::gcd(to_rat(a), to_rat(b));
    if (g.is_zero()) return IntPoly();
    Integer l = 1;
    for (const auto& x : g.coeffs()) l = lcm(l, den(x));
    std::vector<Integer> c;
    for (const auto& x : g.coeffs()) c.push_back(num(x * Rational(l)));
    return primitive_part(IntPoly(std::move(c)));
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return p;
    IntPoly g = int_gcd(p, p.derivative());
    if (g.degree() <= 0) return primitive_part(p);
    return primitive_part(exact_div(p, g));
}

inline Integer eval_int(const IntPoly& p, const Integer& x) {
    Integer r = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * x + p.coeffs()[i];
    return r;
}

inline Rational eval_rat(const IntPoly& p, const Rational& x) { return to_rat(p).eval(x); }

inline bool is_monic(const IntPoly& p) { return !p.is_zero() && p.lc() == 1; }

inline bool is_reciprocal(const IntPoly& p) {
    int d = p.degree();
    if (d < 0) return false;
    for (int i = 0; 2 * i <= d; ++i)
        if (p[static_cast<std::size_t>(i)] != p[static_cast<std::size_t>(d - i)]) return false;
    return true;
}

// The n-th cyclotomic polynomial, by repeated exact division of x^n - 1.
inline const IntPoly& cyclotomic(std::uint64_t n) {
    static std::map<std::uint64_t, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly xn1 = IntPoly::monomial(1, n) - IntPoly::constant(1);
    IntPoly q = xn1;
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) q = exact_div(q, cyclotomic(d));
    return cache.emplace(n, std::move(q)).first->second;
}

// For a reciprocal p of even degree 2m, the degree-m polynomial g with
// p(x) = x^m g(x + 1/x). Throws if p is not reciprocal of even degree.
inline IntPoly trace_polynomial(const IntPoly& p) {
    int d = p.degree();
    if (d < 0 || d % 2 != 0 || !is_reciprocal(p)) throw input_error("trace_polynomial: need a reciprocal polynomial of even degree");
    std::size_t m = static_cast<std::size_t>(d) / 2;
    // v_k(y) = x^k + x^{-k} as a polynomial in y = x + 1/x.
    std::vector<IntPoly> v(m + 1);
    v[0] = IntPoly::constant(2);
    if (m >= 1) v[1] = IntPoly::monomial(1, 1);
    for (std::size_t k = 2; k <= m; ++k) v[k] = IntPoly::monomial(1, 1) * v[k - 1] - v[k - 2];
    IntPoly g = IntPoly::constant(p[m]);
    for (std::size_t k = 1; k <= m; ++k) g = g + IntPoly::constant(p[m + k]) * v[k];
    return g;
}

// Resultant via the subresultant pseudo-remainder sequence.
inline Integer resultant(IntPoly a, IntPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    // Work over Q with exact arithmetic; sizes here are small.
    RatPoly f = to_rat(a), g = to_rat(b);
    Rational res = 1;
    while (g.degree() > 0) {
        RatPoly r = f % g;
        if (r.is_zero()) return 0;
        int df = f.degree(), dg = g.degree(), dr = r.degree();
        Rational lg = g.lc();
        // res(f, g) = lc(g)^{deg f - deg r} * (-1)^{deg f * deg g} * res(g, r)
        Rational sign = ((static_cast<long long>(df) * dg) % 2 == 0) ? 1 : -1;
        Rational pw = 1;
        for (int i = 0; i < df - dr; ++i) pw *= lg;
        res *= sign * pw;
        f = std::move(g);
        g = std::move(r);
    }
    // g is a nonzero constant
    Rational pw = 1;
    for (int i = 0; i < f.degree(); ++i) pw *= g.lc();
    res *= pw;
    if (den(res) != 1) throw domain_error("resultant: internal error, non-integral result");
    return num(res);
}

inline std::string to_string(const IntPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const Integer& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0)
            s += "-";
        Integer a = boost::multiprecision::abs(c);
        if (a != 1 || i == 0) s += a.str();
        if (i > 0) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace k3x
