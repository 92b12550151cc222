#include <catch2/catch_amalgamated.hpp>

#include "k3x/cyclo.hpp"
#include "k3x/factor_fq.hpp"
#include "k3x/matrix.hpp"
#include "k3x/sturm.hpp"

#include <random>

using namespace k3x;

namespace {

IntMatrix diag(std::vector<long long> d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntPoly ipoly(std::vector<long long> asc) {
    std::vector<Integer> c(asc.begin(), asc.end());
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("charpoly of small diagonal matrices") {
    // (x-1)^2
    CHECK(charpoly_int(diag({1, 1})) == ipoly({1, -2, 1}));

    // diag with eleven 1s and eleven -1s: (x-1)^11 (x+1)^11 = (x^2-1)^11
    std::vector<long long> d(22, 1);
    for (std::size_t i = 11; i < 22; ++i) d[i] = -1;
    IntPoly expect = (IntPoly::monomial(1, 2) - IntPoly::constant(1)).pow(11);
    CHECK(charpoly_int(diag(d)) == expect);
}

TEST_CASE("charpoly is invariant under conjugation") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng() % 7;  // up to 8x8
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng() % 11) - 5;
        // random unimodular P: product of elementary row operations on I
        RatMatrix P = RatMatrix::identity(n);
        for (int k = 0; k < 12; ++k) {
            std::size_t a = rng() % n, b = rng() % n;
            if (a == b) continue;
            long long f = static_cast<long long>(rng() % 5) - 2;
            for (std::size_t j = 0; j < n; ++j) P(a, j) += Rational(f) * P(b, j);
        }
        RatMatrix mm = to_rat(m);
        RatMatrix conj = P * mm * P.inverse();
        CHECK(charpoly(conj) == charpoly(mm));
    }
}

TEST_CASE("matrix inverse is exact") {
    RatMatrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 3;
    RatMatrix inv = d.inverse();
    CHECK(inv(0, 0) == Rational(1, 2));
    CHECK(inv(1, 1) == Rational(1, 3));
    CHECK(d * inv == RatMatrix::identity(2));

    RatMatrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    try {
        sing.inverse();
        FAIL("expected singular_error");
    } catch (const singular_error& e) {
        CHECK(e.rank == 1);
    }

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 6;
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = Rational(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 4));
        if (det(m) == 0) continue;
        CHECK(m * m.inverse() == RatMatrix::identity(n));
    }
}

TEST_CASE("smith normal form") {
    auto s = smith_normal_form(diag({2, 4}));
    CHECK(s.invariants == std::vector<Integer>{2, 4});
    CHECK(s.det == 8);

    auto z = smith_normal_form(IntMatrix(1, 1));
    CHECK(z.invariants == std::vector<Integer>{0});
    CHECK(z.rank == 0);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long long>(rng() % 21) - 10;
        auto res = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < res.invariants.size(); ++i) {
            const Integer& a = res.invariants[i];
            const Integer& b = res.invariants[i + 1];
            if (a != 0) CHECK(b % a == 0);
            else CHECK(b == 0);
        }
        CHECK(res.rank == to_rat(m).rank());
        if (r == c) {
            Integer d = det_bareiss(m);
            CHECK(res.det == d);
        }
    }
}

TEST_CASE("factorization over F_p") {
    auto F3 = FqField::prime_field(3);
    auto f = fqpoly_from_intpoly(ipoly({1, 0, 1}), F3);  // x^2 + 1
    auto fac = factor_fq(f, F3);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].factor.degree() == 2);
    CHECK(fac[0].multiplicity == 1);
    CHECK(certify_irreducible_fq(fac[0].factor, F3));

    // Phi_80 mod 3: eight distinct irreducible quartics (3 has order 4 mod 80)
    CHECK(mult_order(3, 80) == 4);
    auto phi80 = fqpoly_from_intpoly(cyclotomic(80), F3);
    auto fac80 = factor_fq(phi80, F3);
    REQUIRE(fac80.size() == 8);
    FqPoly prod = FqPoly::constant(FqElem::from_int(F3, 1));
    for (const auto& g : fac80) {
        CHECK(g.factor.degree() == 4);
        CHECK(g.multiplicity == 1);
        CHECK(certify_irreducible_fq(g.factor, F3));
        prod = prod * g.factor;
    }
    CHECK(prod == phi80);
}

TEST_CASE("factorization handles multiplicities and char-p powers") {
    auto F2 = FqField::prime_field(2);
    // (x^2 + x + 1)^2 * x^3 over F_2
    auto a = fqpoly_from_intpoly(ipoly({1, 1, 1}), F2);
    auto f = a * a * fqpoly_from_intpoly(ipoly({0, 0, 0, 1}), F2);
    auto fac = factor_fq(f, F2);
    std::size_t total = 0;
    FqPoly prod = FqPoly::constant(FqElem::from_int(F2, 1));
    for (const auto& g : fac) {
        CHECK(certify_irreducible_fq(g.factor, F2));
        total += g.multiplicity * static_cast<std::size_t>(g.factor.degree());
        for (std::size_t i = 0; i < g.multiplicity; ++i) prod = prod * g.factor;
    }
    CHECK(total == 7);
    CHECK(prod == FqPoly::make_monic(f));
}

TEST_CASE("sturm counts") {
    CHECK(sturm_count(ipoly({-2, 0, 1}), Rational(0), Rational(2)) == 1);
    // (x-1)(x-2)(x-3)
    IntPoly f = (IntPoly::monomial(1, 1) - IntPoly::constant(1)) * (IntPoly::monomial(1, 1) - IntPoly::constant(2)) *
                (IntPoly::monomial(1, 1) - IntPoly::constant(3));
    CHECK(sturm_count(f, Rational(0), Rational(10)) == 3);
    CHECK(sturm_count(f) == 3);
    CHECK(sturm_count(f, Rational(1), Rational(3)) == 1);  // open interval: 2 only

    // full real-root count equals degree minus twice the complex-pair count
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int nreal = static_cast<int>(rng() % 4);
        int npairs = static_cast<int>(rng() % 3);
        IntPoly g = IntPoly::constant(1);
        std::set<long long> used;
        for (int i = 0; i < nreal; ++i) {
            long long r;
            do
                r = static_cast<long long>(rng() % 41) - 20;
            while (used.count(r));
            used.insert(r);
            g = g * (IntPoly::monomial(1, 1) - IntPoly::constant(r));
        }
        for (int i = 0; i < npairs; ++i) {
            long long b = static_cast<long long>(rng() % 9) - 4;
            long long c = static_cast<long long>(1 + rng() % 30) + (b * b) / 4;  // ensures b^2 - 4c < 0
            g = g * ipoly({c, b, 1});
        }
        if (g.degree() == 0) continue;
        CHECK(sturm_count(g) == nreal);
    }
}

TEST_CASE("padic valuations") {
    CHECK(padic_valuation(Rational(4, 27), 11) == 0);
    CHECK(padic_valuation(Rational(-9), 3) == 2);
    CHECK(padic_valuation(Rational(Integer(11 * 11 * 11) * 5, 2), 11) == 3);
    CHECK(padic_valuation(Rational(5, 121), 11) == -2);
    CHECK_THROWS_AS(padic_valuation(Rational(0), 3), domain_error);
}

TEST_CASE("cyclotomic reduction to finite fields") {
    // 1 -> 1
    auto red5 = make_cyclo_reduction(5, 3);
    CHECK(red5.field->degree() == 4);
    CHECK(cyclo_reduce(CycloElem(1), red5) == FqElem::from_int(red5.field, 1));

    // zeta_5 -> multiplicative order 5 in F_81
    FqElem z = cyclo_reduce(CycloElem::zeta(5), red5);
    CHECK(z.multiplicative_order() == 5);

    // i = -1 + zeta + zeta^{-1} squares to -1
    CycloElem zeta = CycloElem::zeta(5);
    CycloElem i_elt = CycloElem(-1) + zeta + zeta.pow(-1);
    FqElem i3 = cyclo_reduce(i_elt, red5);
    CHECK(i3 * i3 == FqElem::from_int(red5.field, -1));

    // homomorphism laws on random pairs, and the order of the image of zeta_n
    std::mt19937_64 rng(13);
    for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 3}, {8, 3}, {12, 7}, {80, 3}}) {
        auto red = make_cyclo_reduction(n, p);
        CHECK(cyclo_reduce(CycloElem::zeta(n), red).multiplicative_order() == Integer(n));
        for (int trial = 0; trial < 10; ++trial) {
            auto rnd = [&] {
                RatPoly r;
                for (std::size_t k = 0; k < euler_phi(n); ++k)
                    r.set_coeff(k, Rational(static_cast<long long>(rng() % 13) - 6));
                return CycloElem(n, r);
            };
            CycloElem a = rnd(), b = rnd();
            CHECK(cyclo_reduce(a + b, red) == cyclo_reduce(a, red) + cyclo_reduce(b, red));
            CHECK(cyclo_reduce(a * b, red) == cyclo_reduce(a, red) * cyclo_reduce(b, red));
        }
    }

    CHECK_THROWS_AS(make_cyclo_reduction(80, 2), domain_error);
}

TEST_CASE("cyclotomic field arithmetic") {
    CycloElem z = CycloElem::zeta(5);
    CHECK(z.pow(5) == CycloElem(1));
    CHECK(z.pow(-1) == z.pow(4));
    CHECK(z * z.inverse() == CycloElem(1));
    // mixed conductors: zeta_4 * zeta_4 = -1 inside Q(zeta_20)
    CycloElem i4 = CycloElem::zeta(4);
    CHECK(i4 * i4 == CycloElem(-1));
    CHECK((i4 + z) - z == i4);
}

TEST_CASE("trace polynomial of a reciprocal polynomial") {
    // x^2 - 3x + 1 -> g(y) = y - 3
    CHECK(trace_polynomial(ipoly({1, -3, 1})) == ipoly({-3, 1}));
    // (x^2+1): g(y) = y
    CHECK(trace_polynomial(ipoly({1, 0, 1})) == ipoly({0, 1}));
}
