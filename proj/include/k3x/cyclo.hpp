// The cyclotomic field Q(zeta_n): residues modulo the n-th cyclotomic
// polynomial with rational coefficients, and reduction modulo an unramified
// prime into the corresponding finite field.
#pragma once

#include "factor_fq.hpp"
#include "fq.hpp"
#include "intpoly.hpp"
#include "poly.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

namespace k3x {

class CycloElem {
public:
    CycloElem() = default;                                      // rational zero, conductor 1
    CycloElem(long long v) : n_(1), rep_(RatPoly::constant(v)) {}  // NOLINT: implicit by design
    CycloElem(std::uint64_t n, RatPoly rep) : n_(n), rep_(std::move(rep)) { reduce(); }
    static CycloElem rational(const Rational& r) { return CycloElem(1, RatPoly::constant(r)); }
    static CycloElem zeta(std::uint64_t n) { return CycloElem(n, RatPoly::monomial(1, 1)); }
    static CycloElem one_like(const CycloElem& x) {
        (void)x;
        return CycloElem(1);
    }

    std::uint64_t conductor() const { return n_; }
    const RatPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational rational_value() const {
        if (!is_rational()) throw input_error("CycloElem: not rational");
        return rep_[0];
    }

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
        auto [x, y, n] = align(a, b);
        return CycloElem(n, x + y);
    }
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
        auto [x, y, n] = align(a, b);
        return CycloElem(n, x - y);
    }
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        auto [x, y, n] = align(a, b);
        return CycloElem(n, x * y);
    }
    friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }
    CycloElem operator-() const { return CycloElem(n_, -rep_); }
    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        auto [x, y, n] = align(a, b);
        (void)n;
        return x == y;
    }
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    CycloElem inverse() const {
        if (is_zero()) throw domain_error("CycloElem: inverse of zero");
        RatPoly phi = to_rat(cyclotomic(n_));
        auto [g, u, v] = RatPoly::extended_gcd(rep_, phi);
        (void)v;
        if (g.degree() != 0) throw domain_error("CycloElem: non-invertible residue");
        return CycloElem(n_, RatPoly::constant(Rational(1) / g[0]) * u);
    }

    CycloElem pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloElem r(1);
        CycloElem b = *this;
        auto ue = static_cast<unsigned long long>(e);
        while (ue) {
            if (ue & 1) r = r * b;
            b = b * b;
            ue >>= 1;
        }
        return r;
    }

    std::string to_string(const std::string& gen = "zeta") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 0; i <= rep_.degree(); ++i) {
            const Rational& c = rep_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!s.empty()) s += (c > 0) ? " + " : " - ";
            else if (c < 0)
                s += "-";
            Rational a = c > 0 ? c : -c;
            if (a != 1 || i == 0) s += k3x::to_string(a);
            if (i > 0) {
                if (a != 1) s += "*";
                s += gen;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    std::uint64_t n_ = 1;
    RatPoly rep_;

    void reduce() { rep_ = rep_ % to_rat(cyclotomic(n_)); }

    // Common conductor via the lcm embedding zeta_n = zeta_m^(m/n).
    static std::tuple<RatPoly, RatPoly, std::uint64_t> align(const CycloElem& a, const CycloElem& b) {
        if (a.n_ == b.n_) return {a.rep_, b.rep_, a.n_};
        std::uint64_t m = std::lcm(a.n_, b.n_);
        return {a.embedded_rep(m), b.embedded_rep(m), m};
    }
    RatPoly embedded_rep(std::uint64_t m) const {
        if (m == n_) return rep_;
        std::uint64_t step = m / n_;
        RatPoly zm = RatPoly::monomial(1, step);
        RatPoly res = rep_.compose(zm) % to_rat(cyclotomic(m));
        return res;
    }
};

// Reduction data for Q(zeta_n) -> F_{p^f} at an unramified prime p (p does not
// divide n): the fixed prime above p is the lexicographically least monic
// irreducible factor of Phi_n mod p (coefficient tuples compared from degree
// zero upward), and zeta_n maps to the generator of F_p[g]/(that factor).
struct CycloReduction {
    std::uint64_t n;
    std::uint64_t p;
    FqFieldPtr field;
};

inline CycloReduction make_cyclo_reduction(std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw input_error("cyclo_reduce: p must be prime");
    if (n % p == 0) throw domain_error("cyclo_reduce: p ramifies (p divides n)");
    const IntPoly& phi = cyclotomic(n);
    auto Fp = FqField::prime_field(p);
    auto factors = factor_fq(fqpoly_from_intpoly(phi, Fp), Fp);
    // factor_fq sorts by (degree, coefficient indices); all factors share one
    // degree here, so the first is the lexicographic least.
    const FqPoly& pi = factors.front().factor;
    std::vector<std::uint64_t> mod;
    for (const auto& c : pi.coeffs()) mod.push_back(c.attached() ? c.index() : 0);
    return CycloReduction{n, p, FqField::make(p, std::move(mod))};
}

// Image of x in the residue field of the fixed prime above p. Coefficients
// must be p-integral.
inline FqElem cyclo_reduce(const CycloElem& x, const CycloReduction& red) {
    if (x.conductor() != 1 && red.n % x.conductor() != 0) throw input_error("cyclo_reduce: conductor mismatch");
    std::uint64_t step = x.conductor() == 1 ? 1 : red.n / x.conductor();
    FqElem g = FqElem::generator(red.field).pow(step);
    FqElem acc = FqElem::from_int(red.field, 0);
    const RatPoly& rep = x.rep();
    for (int i = rep.degree(); i >= 0; --i) {
        const Rational& c = rep[static_cast<std::size_t>(i)];
        if (den(c) % Integer(red.p) == 0) throw domain_error("cyclo_reduce: coefficient not p-integral");
        Integer dinv_num = num(c), dd = den(c);
        // c mod p = num * den^{-1} mod p
        Integer pm = Integer(red.p);
        Integer nm = dinv_num % pm;
        if (nm < 0) nm += pm;
        Integer dm = dd % pm;
        FqElem cf = FqElem::from_int(red.field, nm) * FqElem::from_int(red.field, dm).inverse();
        acc = acc * g + cf;
    }
    return acc;
}

inline FqElem cyclo_reduce(const CycloElem& x, std::uint64_t p) {
    return cyclo_reduce(x, make_cyclo_reduction(x.conductor(), p));
}

}  // namespace k3x
