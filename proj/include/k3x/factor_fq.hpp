// Factorization of univariate polynomials over finite fields:
// squarefree decomposition, distinct-degree splitting, and equal-degree
// (Cantor--Zassenhaus) splitting, plus an independent irreducibility check
// used to certify reported factors. Deterministically seeded.
#pragma once

#include "fq.hpp"
#include "intpoly.hpp"
#include "poly.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace k3x {

using FqPoly = Poly<FqElem>;

inline FqPoly fqpoly_from_intpoly(const IntPoly& f, const FqFieldPtr& F) {
    std::vector<FqElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(FqElem::from_int(F, x));
    return FqPoly(std::move(c));
}

inline FqPoly powmod(const FqPoly& base, Integer e, const FqPoly& mod) {
    FqPoly r = FqPoly::constant(FqElem::one_like(mod.lc()));
    FqPoly b = base % mod;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

struct FqFactor {
    FqPoly factor;  // monic irreducible
    std::size_t multiplicity;
};

namespace fqfactor_detail {

inline FqPoly xpoly(const FqFieldPtr& F) {
    return FqPoly(std::vector<FqElem>{FqElem::from_int(F, 0), FqElem::from_int(F, 1)});
}

// f = g(x^p) -> g, taking p-th roots of the surviving coefficients.
inline FqPoly pth_root_decimate(const FqPoly& f, std::uint64_t p) {
    std::vector<FqElem> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f[i].attached() ? f[i].pth_root() : f[i]);
    return FqPoly(std::move(c));
}

inline void squarefree_rec(const FqPoly& f, std::size_t mult, const FqFieldPtr& F, std::vector<std::pair<FqPoly, std::size_t>>& out) {
    std::uint64_t p = F->p();
    FqPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_rec(pth_root_decimate(f, p), mult * p, F, out);
        return;
    }
    FqPoly c = FqPoly::gcd(f, d);
    FqPoly w = f / c;
    std::size_t i = 1;
    while (w.degree() > 0) {
        FqPoly y = FqPoly::gcd(w, c);
        FqPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(FqPoly::make_monic(z), mult * i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_rec(pth_root_decimate(c, p), mult * p, F, out);
}

// Splits a monic squarefree product of degree-d irreducibles into its factors.
inline void equal_degree_split(const FqPoly& f, std::size_t d, const FqFieldPtr& F, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    std::size_t n = static_cast<std::size_t>(f.degree());
    if (n == d) {
        out.push_back(f);
        return;
    }
    Integer q = ipow(Integer(F->p()), F->degree());
    FqPoly g;
    while (true) {
        // random polynomial of degree < n
        std::vector<FqElem> c(n);
        for (auto& x : c) x = FqElem::from_index(F, rng() % F->size());
        FqPoly r(std::move(c));
        if (r.degree() < 1) continue;
        if (F->p() == 2) {
            // trace map over F_{2^(m d)}
            std::size_t md = F->degree() * d;
            FqPoly t = r % f, acc = t;
            for (std::size_t i = 1; i < md; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            g = FqPoly::gcd(f, acc);
        } else {
            Integer e = (ipow(q, d) - 1) / 2;
            FqPoly h = powmod(r, e, f);
            g = FqPoly::gcd(f, h - FqPoly::constant(FqElem::one_like(f.lc())));
        }
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    equal_degree_split(g, d, F, rng, out);
    equal_degree_split(f / g, d, F, rng, out);
}

}  // namespace fqfactor_detail

// Complete factorization of a nonzero polynomial over its field into monic
// irreducibles with multiplicities (the leading unit is dropped).
inline std::vector<FqFactor> factor_fq(const FqPoly& f_in, const FqFieldPtr& F) {
    if (f_in.is_zero()) throw input_error("factor_fq: zero polynomial");
    std::vector<FqFactor> result;
    FqPoly f = FqPoly::make_monic(f_in);
    if (f.degree() == 0) return result;
    std::vector<std::pair<FqPoly, std::size_t>> sqf;
    fqfactor_detail::squarefree_rec(f, 1, F, sqf);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    Integer q = ipow(Integer(F->p()), F->degree());
    for (auto& [part, mult] : sqf) {
        // distinct-degree splitting
        FqPoly x = fqfactor_detail::xpoly(F);
        FqPoly h = x;
        FqPoly rest = part;
        for (std::size_t d = 1; rest.degree() > 0 && d <= static_cast<std::size_t>(rest.degree()); ++d) {
            h = powmod(h, q, rest);
            FqPoly g = FqPoly::gcd(rest, h - x);
            if (g.degree() > 0) {
                std::vector<FqPoly> irr;
                fqfactor_detail::equal_degree_split(g, d, F, rng, irr);
                for (auto& fac : irr) result.push_back({fac, mult});
                rest = rest / g;
                h = h % rest;
            }
            if (2 * (d + 1) > static_cast<std::size_t>(rest.degree()) && rest.degree() > 0) {
                result.push_back({FqPoly::make_monic(rest), mult});
                rest = FqPoly::constant(FqElem::one_like(f.lc()));
            }
        }
        if (rest.degree() > 0) result.push_back({FqPoly::make_monic(rest), mult});
    }
    std::sort(result.begin(), result.end(), [](const FqFactor& a, const FqFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (std::size_t i = 0; i < a.factor.coeffs().size(); ++i) {
            auto ai = a.factor[i].attached() ? a.factor[i].index() : 0;
            auto bi = b.factor[i].attached() ? b.factor[i].index() : 0;
            if (ai != bi) return ai < bi;
        }
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

// Independent of the factorization path: Rabin's criterion over the field.
inline bool certify_irreducible_fq(const FqPoly& f, const FqFieldPtr& F) {
    if (f.degree() < 1) return false;
    FqPoly m = FqPoly::make_monic(f);
    Integer q = ipow(Integer(F->p()), F->degree());
    std::size_t n = static_cast<std::size_t>(m.degree());
    FqPoly x = fqfactor_detail::xpoly(F);
    if (!(powmod(x, ipow(q, n), m) - (x % m)).is_zero()) return false;
    for (auto ell : prime_factors(n)) {
        FqPoly xe = powmod(x, ipow(q, n / ell), m);
        if (FqPoly::gcd(m, xe - x).degree() != 0) return false;
    }
    return true;
}

// All roots of f in the field, each exactly once.
inline std::vector<FqElem> roots_fq(const FqPoly& f, const FqFieldPtr& F) {
    std::vector<FqElem> out;
    if (f.is_zero()) throw input_error("roots_fq: zero polynomial");
    Integer q = ipow(Integer(F->p()), F->degree());
    FqPoly x = fqfactor_detail::xpoly(F);
    FqPoly xq = powmod(x, q, f);
    FqPoly lin = FqPoly::gcd(f, xq - x);
    if (lin.degree() <= 0) return out;
    std::vector<FqPoly> irr;
    std::mt19937_64 rng(0x2545f4914f6cdd1dull);
    fqfactor_detail::equal_degree_split(lin, 1, F, rng, irr);
    for (auto& g : irr) out.push_back(FqElem() - g[0]);
    std::sort(out.begin(), out.end(), [](const FqElem& a, const FqElem& b) {
        return (a.is_zero() ? 0 : a.index()) < (b.is_zero() ? 0 : b.index());
    });
    return out;
}

}  // namespace k3x
