// Arbitrary-precision integers and rationals, plus small number-theoretic
// helpers shared across the library. All arithmetic is exact; no floating
// point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3x {

using Integer = boost::multiprecision::cpp_int;
// Stored in lowest terms with positive denominator (cpp_rational canonicalizes).
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when a matrix expected to be invertible is not; carries the rank.
struct singular_error : std::runtime_error {
    int rank;
    explicit singular_error(const std::string& what, int rank_) : std::runtime_error(what), rank(rank_) {}
};

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

inline Integer ipow(Integer base, std::uint64_t e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
    if (n <= 1) throw input_error("mult_order: modulus must exceed 1");
    std::uint64_t x = a % n, k = 1;
    if (std::gcd(x, n) != 1) throw input_error("mult_order: arguments not coprime");
    while (x != 1) {
        x = (x * a) % n;
        ++k;
    }
    return k;
}

// Exponent of the prime p in x; throws on x = 0 (the valuation is +infinity).
inline Integer padic_valuation(const Rational& x, std::uint64_t p) {
    if (!is_prime(p)) throw input_error("padic_valuation: p must be prime");
    if (x == 0) throw domain_error("padic_valuation: valuation of zero is +infinity");
    auto count = [&](Integer v) {
        Integer k = 0;
        Integer P = p;
        while (v % P == 0) {
            v /= P;
            ++k;
        }
        return k;
    };
    return count(num(x)) - count(den(x));
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw input_error("rational_from_string: zero denominator");
    return Rational(n) / Rational(d);
}

inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

}  // namespace k3x
