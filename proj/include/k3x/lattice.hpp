// Integral lattices with a symmetric pairing: isometry verification,
// eigenspace ranks, signatures, and the fixed-point / trace / Picard-bound
// formulas for finite symplectic automorphism groups of K3 surfaces.
#pragma once

#include "matrix.hpp"
#include "salem.hpp"
#include "sturm.hpp"

#include <string>
#include <vector>

namespace k3x {

struct GramLattice {
    RatMatrix gram;
    std::vector<std::string> labels;  // optional basis names

    explicit GramLattice(RatMatrix g, std::vector<std::string> names = {}) : gram(std::move(g)), labels(std::move(names)) {
        if (!gram.is_square()) throw input_error("GramLattice: matrix not square");
        if (gram != gram.transpose()) throw input_error("GramLattice: matrix not symmetric");
    }
    std::size_t rank_hint() const { return gram.rows(); }
};

inline bool is_isometry(const RatMatrix& m, const GramLattice& L) {
    if (!m.is_square() || m.rows() != L.gram.rows()) throw input_error("is_isometry: dimension mismatch");
    return m.transpose() * L.gram * m == L.gram;
}

// An isometry validated on construction; downstream code may rely on
// m^T G m = G holding exactly.
struct IsometryMatrix {
    RatMatrix m;
    IsometryMatrix(RatMatrix mm, const GramLattice& L) : m(std::move(mm)) {
        if (!is_isometry(m, L)) throw input_error("IsometryMatrix: not an isometry of the given lattice");
    }
};

// dim ker(m - lambda I) over Q.
inline std::size_t eigenrank(const RatMatrix& m, const Rational& lambda) {
    if (!m.is_square()) throw input_error("eigenrank: matrix not square");
    RatMatrix a = m;
    for (std::size_t i = 0; i < m.rows(); ++i) a(i, i) -= lambda;
    return a.kernel_dimension();
}

// (positive, negative, zero) eigenvalue counts with multiplicity.
struct Signature {
    long positive = 0, negative = 0, zero = 0;
};

inline Signature signature(const GramLattice& L) {
    Signature s;
    IntPoly cp;
    RatPoly cpq = charpoly(L.gram);
    Integer denlcm = 1;
    for (const auto& c : cpq.coeffs()) denlcm = lcm(denlcm, den(c));
    std::vector<Integer> ic;
    for (const auto& c : cpq.coeffs()) ic.push_back(num(c * Rational(denlcm)));
    cp = IntPoly(std::move(ic));
    s.positive = real_roots_with_multiplicity(cp, Rational(0), std::nullopt);
    s.negative = real_roots_with_multiplicity(cp, std::nullopt, Rational(0));
    s.zero = static_cast<long>(L.gram.rows()) - s.positive - s.negative;
    return s;
}

// Fixed-point count of a symplectic automorphism of order n on a K3 surface:
// 24 / (n * prod_{q | n} (1 + 1/q)). Integral for n <= 8; larger n cannot
// occur for symplectic automorphisms but the formula is still evaluated.
inline Rational epsilon(std::uint64_t n) {
    if (n < 1) throw input_error("epsilon: n must be positive");
    Rational denom = Rational(n);
    for (auto q : prime_factors(n)) denom *= Rational(q + 1, q);
    return Rational(24) / denom;
}

// Trace of a symplectic automorphism of order n on H^2; defined for n <= 8.
inline Integer symplectic_trace(std::uint64_t n) {
    if (n < 1 || n > 8) throw domain_error("symplectic_trace: a symplectic automorphism of a K3 surface has order at most 8");
    Rational e = epsilon(n);
    return num(e - 2);
}

struct PicardBound {
    Integer bound;
    Rational mu;
    std::vector<std::string> warnings;
};

// Lower bound 25 - mu(G) for the Picard number, from the multiset of element
// orders of a finite symplectic group (order 1 counted once per identity).
inline PicardBound picard_lower_bound(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& orders) {
    Integer total = 0;
    bool has_identity = false;
    Rational sum = 0;
    PicardBound out;
    for (const auto& [ord, count] : orders) {
        if (count == 0) continue;
        if (ord < 1) throw input_error("picard_lower_bound: order must be positive");
        if (ord > 8) throw domain_error("picard_lower_bound: symplectic element orders exceed 8");
        if (ord == 1) has_identity = true;
        total += count;
        sum += Rational(count) * epsilon(ord);
        // Elements of order d come in phi(d)-sized packets of cyclic generators.
        if (ord > 1 && count % euler_phi(ord) != 0)
            out.warnings.push_back("count of order-" + std::to_string(ord) + " elements is not a multiple of phi(" +
                                   std::to_string(ord) + ")");
    }
    if (total < 1 || !has_identity) throw input_error("picard_lower_bound: need the identity element in the multiset");
    for (const auto& [ord, count] : orders) {
        if (count > 0 && total % Integer(ord) != 0)
            out.warnings.push_back("group order " + total.str() + " is not divisible by element order " + std::to_string(ord));
    }
    out.mu = sum / Rational(total);
    Rational bound = Rational(25) - out.mu;
    Integer fl = num(bound) / den(bound);  // floor for positive values
    if (Rational(fl) < bound) fl += 1;     // ceil
    out.bound = fl;
    return out;
}

}  // namespace k3x
