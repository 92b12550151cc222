// Classification of integer polynomials attached to lattice isometries:
// cyclotomic stripping, the Salem predicate via trace-polynomial Sturm
// counts, irreducibility certification over Z, and the non-extendability
// criteria evaluated from characteristic polynomials.
#pragma once

#include "factor_fq.hpp"
#include "intpoly.hpp"
#include "sturm.hpp"

#include <bitset>
#include <optional>
#include <string>
#include <vector>

namespace k3x {

struct CyclotomicPart {
    std::uint64_t n;
    std::size_t multiplicity;
};

// All n whose cyclotomic polynomial could divide a polynomial of degree d.
inline std::vector<std::uint64_t> cyclotomic_candidates(int d) {
    std::vector<std::uint64_t> ns;
    if (d < 1) return ns;
    std::uint64_t limit = 2ull * static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d) + 1;  // phi(n) >= sqrt(n/2)
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (euler_phi(n) <= static_cast<std::uint64_t>(d)) ns.push_back(n);
    return ns;
}

// Divides out each cyclotomic polynomial to maximal multiplicity.
inline std::pair<std::vector<CyclotomicPart>, IntPoly> strip_cyclotomic(const IntPoly& f) {
    if (f.is_zero() || !is_monic(f)) throw input_error("strip_cyclotomic: need a monic nonzero polynomial");
    std::vector<CyclotomicPart> parts;
    IntPoly residual = f;
    for (std::uint64_t n : cyclotomic_candidates(f.degree())) {
        const IntPoly& phi = cyclotomic(n);
        if (phi.degree() > residual.degree()) continue;
        std::size_t mult = 0;
        while (divides(phi, residual)) {
            residual = exact_div(residual, phi);
            ++mult;
        }
        if (mult > 0) parts.push_back({n, mult});
    }
    return {parts, residual};
}

// Salem predicate: self-reciprocal of even degree whose trace polynomial is
// squarefree with exactly one root in (2, oo), none in (-oo, -2), and the
// rest in (-2, 2). Root counts are certified by Sturm sequences.
struct SalemCheck {
    bool is_salem = false;
    std::string note;
    long roots_above_2 = 0;
    long roots_in_unit_band = 0;  // trace roots in (-2, 2)
};

inline SalemCheck salem_check(const IntPoly& f) {
    if (f.is_zero()) throw input_error("is_salem: zero polynomial");
    SalemCheck out;
    if (!is_monic(f) || f[0] == 0) {
        out.note = "not monic with nonzero constant term";
        return out;
    }
    int d = f.degree();
    if (d % 2 != 0 || d < 2) {
        out.note = "odd or trivial degree";
        return out;
    }
    if (!is_reciprocal(f)) {
        out.note = "not self-reciprocal";
        return out;
    }
    IntPoly g = trace_polynomial(f);
    if (int_gcd(g, g.derivative()).degree() > 0) {
        out.note = "trace polynomial has repeated roots";
        return out;
    }
    if (eval_int(g, 2) == 0 || eval_int(g, -2) == 0) {
        out.note = "root at x = 1 or x = -1";
        return out;
    }
    long above = sturm_count(g, Rational(2), std::nullopt);
    long below = sturm_count(g, std::nullopt, Rational(-2));
    long band = sturm_count(g, Rational(-2), Rational(2));
    out.roots_above_2 = above;
    out.roots_in_unit_band = band;
    out.is_salem = (above == 1 && below == 0 && band == g.degree() - 1);
    if (!out.is_salem && out.note.empty()) out.note = "trace roots not of Salem shape";
    return out;
}

inline bool is_salem(const IntPoly& f) { return salem_check(f).is_salem; }

struct IrreducibilityResult {
    enum class Verdict { Yes, No, Inconclusive } verdict = Verdict::Inconclusive;
    std::string certificate;          // "modular-degree-sets", "salem-cyclotomic", "rational-root", "kronecker-quadratic"
    std::vector<std::uint64_t> primes_used;
    std::optional<IntPoly> factor;    // present when verdict == No
    bool yes() const { return verdict == Verdict::Yes; }
};

namespace salem_detail {

constexpr std::size_t kMaxDeg = 128;

inline std::bitset<kMaxDeg + 1> subset_sums(const std::vector<std::size_t>& degrees) {
    std::bitset<kMaxDeg + 1> s;
    s.set(0);
    for (auto d : degrees) s |= (s << d);
    return s;
}

inline std::vector<Integer> divisors_signed(const Integer& v) {
    std::vector<Integer> ds;
    Integer a = v < 0 ? Integer(-v) : v;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            ds.push_back(-d);
            if (d * d != a) {
                ds.push_back(a / d);
                ds.push_back(-(a / d));
            }
        }
    }
    return ds;
}

// Kronecker search for a monic quadratic factor of a primitive polynomial.
inline std::optional<IntPoly> kronecker_quadratic(const IntPoly& f) {
    if (f.degree() < 4) return std::nullopt;
    Integer f0 = eval_int(f, 0), f1 = eval_int(f, 1), fm1 = eval_int(f, -1);
    if (f0 == 0 || f1 == 0 || fm1 == 0) return std::nullopt;  // roots handled elsewhere
    auto d0 = divisors_signed(f0), d1 = divisors_signed(f1), dm1 = divisors_signed(fm1);
    if (d0.size() > 130 || d1.size() > 130 || dm1.size() > 130) return std::nullopt;
    for (const Integer& a : d0)
        for (const Integer& b : d1)
            for (const Integer& c : dm1) {
                // monic quadratic q with q(0) = a, q(1) = b, q(-1) = c:
                // q = x^2 + ux + a, u = (b - c)/2, and b + c = 2a + 2 must hold.
                if (b + c != 2 * a + 2) continue;
                Integer twou = b - c;
                if (twou % 2 != 0) continue;
                IntPoly q(std::vector<Integer>{a, twou / 2, 1});
                if (divides(q, f)) return q;
            }
    return std::nullopt;
}

}  // namespace salem_detail

// Irreducibility over Z with an explicit certificate. The tool never guesses:
// if no sound method applies the verdict is Inconclusive. When
// `isometry_context` is set, the caller asserts that f is the characteristic
// polynomial of an isometry of a hyperbolic lattice, which makes
// "reciprocal and coprime to every cyclotomic polynomial" a proof of
// irreducibility (at most one non-cyclotomic factor can exist).
inline IrreducibilityResult is_irreducible_over_Z(const IntPoly& f_in, bool isometry_context = false) {
    if (f_in.degree() < 1) throw input_error("is_irreducible_over_Z: need degree >= 1");
    IntPoly f = primitive_part(f_in);
    IrreducibilityResult res;
    if (f.degree() == 1) {
        res.verdict = IrreducibilityResult::Verdict::Yes;
        res.certificate = "degree-1";
        return res;
    }
    for (long long r : {0ll, 1ll, -1ll, 2ll, -2ll}) {
        if (eval_int(f, r) == 0) {
            res.verdict = IrreducibilityResult::Verdict::No;
            res.certificate = "rational-root";
            res.factor = IntPoly(std::vector<Integer>{-r, 1});
            return res;
        }
    }
    // Degree-set sieve over several primes of good (squarefree) reduction.
    std::size_t deg = static_cast<std::size_t>(f.degree());
    if (deg <= salem_detail::kMaxDeg) {
        std::bitset<salem_detail::kMaxDeg + 1> meet;
        meet.set();
        std::size_t used = 0;
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
            if (f.lc() % Integer(p) == 0) continue;
            auto F = FqField::prime_field(p);
            FqPoly fp = fqpoly_from_intpoly(f, F);
            if (FqPoly::gcd(fp, fp.derivative()).degree() != 0) continue;  // not squarefree mod p
            std::vector<std::size_t> degs;
            for (const auto& g : factor_fq(fp, F)) degs.push_back(static_cast<std::size_t>(g.factor.degree()));
            meet &= salem_detail::subset_sums(degs);
            res.primes_used.push_back(p);
            ++used;
            bool only_trivial = true;
            for (std::size_t k = 1; k < deg; ++k)
                if (meet.test(k)) {
                    only_trivial = false;
                    break;
                }
            if (only_trivial) {
                res.verdict = IrreducibilityResult::Verdict::Yes;
                res.certificate = "modular-degree-sets";
                return res;
            }
            if (used >= 6) break;
        }
    }
    // Desk-scale factor search.
    if (auto q = salem_detail::kronecker_quadratic(f)) {
        res.verdict = IrreducibilityResult::Verdict::No;
        res.certificate = "kronecker-quadratic";
        res.factor = q;
        return res;
    }
    if (isometry_context && is_monic(f) && is_reciprocal(f)) {
        auto [parts, residual] = strip_cyclotomic(f);
        if (parts.empty() && residual == f) {
            res.verdict = IrreducibilityResult::Verdict::Yes;
            res.certificate = "salem-cyclotomic";
            return res;
        }
    }
    res.verdict = IrreducibilityResult::Verdict::Inconclusive;
    res.certificate = "inconclusive";
    return res;
}

// Full report for one polynomial.
struct SalemReport {
    IntPoly input;
    std::vector<CyclotomicPart> cyclotomic_part;
    IntPoly residual;
    SalemCheck residual_salem;
    IrreducibilityResult irreducible;
};

inline SalemReport salem_report(const IntPoly& f, bool isometry_context = false) {
    SalemReport rep;
    rep.input = f;
    auto [parts, residual] = strip_cyclotomic(f);
    rep.cyclotomic_part = std::move(parts);
    rep.residual = residual;
    rep.residual_salem = residual.degree() > 0 ? salem_check(residual) : SalemCheck{};
    rep.irreducible = is_irreducible_over_Z(f, isometry_context);
    return rep;
}

// Non-extendability criteria evaluated on a specialization's characteristic
// polynomial (degree 22), the geometric Picard number, and optional data
// about the generic-fiber automorphism.
struct NonExtendabilityVerdict {
    std::string criterion;  // "a", "b", "c", "irr", "charpoly-mismatch"
    std::string detail;
};

inline std::vector<NonExtendabilityVerdict> non_extendability_checks(const IntPoly& cp_special, int rho,
                                                                     std::optional<bool> finite_order = std::nullopt,
                                                                     const std::optional<IntPoly>& cp_generic = std::nullopt) {
    if (cp_special.degree() != 22) throw input_error("non_extendability_checks: degree must be 22");
    if (rho < 1 || rho > 22) throw input_error("non_extendability_checks: rho out of range");
    std::vector<NonExtendabilityVerdict> fired;
    IntPoly xm1_22 = (IntPoly::monomial(1, 1) - IntPoly::constant(1)).pow(22);
    if (cp_generic && cp_special == xm1_22 && *cp_generic != xm1_22)
        fired.push_back({"a", "specialization acts trivially on H^2 but the generic automorphism does not"});
    auto [parts, residual] = strip_cyclotomic(cp_special);
    long unit_root_count = 0;
    for (const auto& p : parts) unit_root_count += static_cast<long>(euler_phi(p.n) * p.multiplicity);
    if (unit_root_count < 22 - rho)
        fired.push_back({"b", "only " + std::to_string(unit_root_count) + " eigenvalues are roots of unity, fewer than 22 - rho = " +
                                   std::to_string(22 - rho)});
    if (finite_order && *finite_order && unit_root_count <= 22 - rho)
        fired.push_back({"c", "finite order with at most 22 - rho root-of-unity eigenvalues"});
    if (is_irreducible_over_Z(cp_special).yes())
        fired.push_back({"irr", "characteristic polynomial of the specialization is irreducible"});
    if (cp_generic && *cp_generic != cp_special)
        fired.push_back({"charpoly-mismatch", "characteristic polynomials of the automorphism and its specialization differ"});
    return fired;
}

}  // namespace k3x
