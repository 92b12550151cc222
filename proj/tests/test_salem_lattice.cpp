#include <catch2/catch_amalgamated.hpp>

#include "k3x/lattice.hpp"
#include "k3x/salem.hpp"

#include <random>

using namespace k3x;

namespace {

IntPoly ipoly(std::vector<long long> asc) {
    std::vector<Integer> c(asc.begin(), asc.end());
    return IntPoly(std::move(c));
}

const IntPoly lehmer = ipoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

}  // namespace

TEST_CASE("strip_cyclotomic") {
    auto [p1, r1] = strip_cyclotomic(ipoly({1, -2, 1}));  // (x-1)^2
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].n == 1);
    CHECK(p1[0].multiplicity == 2);
    CHECK(r1 == IntPoly::constant(1));

    auto [p2, r2] = strip_cyclotomic(cyclotomic(5) * lehmer);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].n == 5);
    CHECK(p2[0].multiplicity == 1);
    CHECK(r2 == lehmer);

    // reconstruction property on random cyclotomic products times Lehmer
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        IntPoly f = (trial % 2) ? lehmer : IntPoly::constant(1);
        std::vector<std::uint64_t> ns = {1, 2, 3, 4, 5, 6, 8, 12};
        for (int k = 0; k < 3; ++k)
            if (rng() % 2) f = f * cyclotomic(ns[rng() % ns.size()]);
        if (f.degree() > 22 || f.degree() < 1) continue;
        auto [parts, residual] = strip_cyclotomic(f);
        IntPoly back = residual;
        for (const auto& pt : parts)
            for (std::size_t i = 0; i < pt.multiplicity; ++i) back = back * cyclotomic(pt.n);
        CHECK(back == f);
        if (trial % 2 == 0) {
            CHECK(residual == IntPoly::constant(1));
            CHECK_FALSE(is_salem(f));
        } else {
            CHECK(residual == lehmer);
        }
    }
}

TEST_CASE("salem predicate") {
    CHECK(is_salem(ipoly({1, -3, 1})));
    CHECK_FALSE(is_salem(cyclotomic(12)));
    CHECK(is_salem(lehmer));
    auto chk = salem_check(lehmer);
    CHECK(chk.roots_above_2 == 1);
    CHECK(chk.roots_in_unit_band == 4);
    // is_salem implies reciprocal with f(1) f(-1) != 0
    for (const IntPoly& f : {ipoly({1, -3, 1}), lehmer}) {
        CHECK(is_reciprocal(f));
        CHECK(eval_int(f, 1) * eval_int(f, -1) != 0);
    }
}

TEST_CASE("irreducibility certification") {
    auto r1 = is_irreducible_over_Z(ipoly({-2, 0, 1}));
    CHECK(r1.yes());
    CHECK(r1.certificate == "modular-degree-sets");

    auto r2 = is_irreducible_over_Z(ipoly({4, 0, 0, 0, 1}));  // x^4 + 4
    CHECK(r2.verdict == IrreducibilityResult::Verdict::No);
    REQUIRE(r2.factor.has_value());
    CHECK(divides(*r2.factor, ipoly({4, 0, 0, 0, 1})));
    CHECK(r2.factor->degree() == 2);

    // never "yes" for polynomials with a root in {0, +-1, +-2}
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        long long root = static_cast<long long>(rng() % 5) - 2;
        IntPoly f = IntPoly::monomial(1, 1) - IntPoly::constant(root);
        for (int k = 0; k < 3; ++k) f = f * ipoly({static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 3)});
        if (f.degree() < 2) continue;
        CHECK_FALSE(is_irreducible_over_Z(f).yes());
    }

    CHECK(is_irreducible_over_Z(lehmer).yes());
}

TEST_CASE("non-extendability criteria") {
    IntPoly xm1_22 = (IntPoly::monomial(1, 1) - IntPoly::constant(1)).pow(22);

    // (a): trivial specialization of a nontrivial isometry
    IntPoly generic = cyclotomic(12) * (IntPoly::monomial(1, 1) - IntPoly::constant(1)).pow(18);
    auto fired = non_extendability_checks(xm1_22, 20, std::nullopt, generic);
    bool has_a = false;
    for (const auto& v : fired) has_a |= (v.criterion == "a");
    CHECK(has_a);

    // inconclusive case: no data beyond a trivial charpoly
    auto none = non_extendability_checks(xm1_22, 20);
    CHECK(none.empty());

    CHECK_THROWS_AS(non_extendability_checks(ipoly({1, 1}), 20), input_error);
}

TEST_CASE("epsilon and symplectic traces") {
    std::vector<long long> expect = {24, 8, 6, 4, 4, 2, 3, 2};
    for (std::uint64_t n = 1; n <= 8; ++n) CHECK(epsilon(n) == Rational(expect[n - 1]));
    for (std::uint64_t n = 1; n <= 100; ++n) {
        Rational prod = Rational(n);
        for (auto q : prime_factors(n)) prod *= Rational(q + 1, q);
        CHECK(epsilon(n) * prod == Rational(24));
    }
    CHECK(symplectic_trace(1) == 22);
    CHECK(symplectic_trace(2) == 6);
    CHECK(symplectic_trace(7) == 1);
    CHECK_THROWS_AS(symplectic_trace(9), domain_error);
}

TEST_CASE("picard lower bound") {
    CHECK(picard_lower_bound({{1, 1}}).bound == 1);
    CHECK(picard_lower_bound({{1, 1}, {2, 5}, {4, 10}, {5, 4}}).bound == 19);
    CHECK(picard_lower_bound({{1, 1}, {2, 1}}).bound == 9);
    CHECK_THROWS_AS(picard_lower_bound({{1, 1}, {9, 2}}), domain_error);
}

TEST_CASE("isometries and eigenranks") {
    RatMatrix hyp(2, 2);
    hyp(0, 1) = 1;
    hyp(1, 0) = 1;
    GramLattice U(hyp);
    CHECK(is_isometry(RatMatrix::identity(2), U));
    RatMatrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 1;
    CHECK_FALSE(is_isometry(d, U));
    CHECK_THROWS_AS(IsometryMatrix(d, U), input_error);

    CHECK(eigenrank(RatMatrix::identity(22), 1) == 22);

    // involutions: eigenrank(+1) + eigenrank(-1) = dim
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + rng() % 6;
        RatMatrix inv(n, n);
        std::size_t plus = rng() % (n + 1);
        for (std::size_t i = 0; i < n; ++i) inv(i, i) = (i < plus) ? 1 : -1;
        RatMatrix P = RatMatrix::identity(n);
        for (int k = 0; k < 10; ++k) {
            std::size_t a = rng() % n, b = rng() % n;
            if (a == b) continue;
            Rational f(static_cast<long long>(rng() % 3) - 1);
            for (std::size_t j = 0; j < n; ++j) P(a, j) += f * P(b, j);
        }
        RatMatrix m = P * inv * P.inverse();
        CHECK(m * m == RatMatrix::identity(n));
        CHECK(eigenrank(m, 1) + eigenrank(m, -1) == n);
    }
}

TEST_CASE("signature of small gram matrices") {
    RatMatrix g(3, 3);
    g(0, 0) = 2;
    g(1, 1) = -2;
    g(2, 2) = -2;
    auto s = signature(GramLattice(g));
    CHECK(s.positive == 1);
    CHECK(s.negative == 2);
    CHECK(s.zero == 0);
}
