// Dense univariate polynomials over an exact coefficient type.
//
// Coefficients are stored in ascending degree with no trailing zeros; the
// zero polynomial is the empty vector. The coefficient type must provide
// exact +, -, *, ==, and a default constructor yielding zero. Division
// helpers additionally need / (field coefficients) or a monic divisor.
#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

namespace k3x {

template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(T v) {
        Poly p;
        if (!(v == T())) p.c_.push_back(std::move(v));
        return p;
    }
    // x^k with the given leading coefficient.
    static Poly monomial(T v, std::size_t k) {
        Poly p;
        if (v == T()) return p;
        p.c_.assign(k + 1, T());
        p.c_[k] = std::move(v);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const {
        static const T zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const T& lc() const {
        if (c_.empty()) throw input_error("lc: zero polynomial");
        return c_.back();
    }
    void set_coeff(std::size_t i, T v) {
        if (i >= c_.size()) c_.resize(i + 1, T());
        c_[i] = std::move(v);
        trim();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size())
                r[i] = a.c_[i];
            else
                r[i] = b.c_[i];
        }
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<T> r(c_);
        for (auto& x : r) x = T() - x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& p) {
        std::vector<T> r(p.c_);
        for (auto& x : r) x = s * x;
        return Poly(std::move(r));
    }

    Poly pow(std::uint64_t e) const {
        Poly r = constant_one_like(*this);
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    T eval(const T& x) const {
        T r{};
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1, T());
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T k{};
            for (std::size_t j = 0; j < i; ++j) k = k + c_[i];  // i * c_[i] without an int conversion
            r[i - 1] = k;
        }
        return Poly(std::move(r));
    }

    // Quotient and remainder; requires an invertible leading coefficient in b.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw input_error("divrem: division by zero polynomial");
        Poly r = a;
        std::vector<T> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, T());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            T f = r.lc() / b.lc();
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            q[shift] = q[shift] + f;
            // r -= f * x^shift * b
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[shift + i] = r.c_[shift + i] - f * b.c_[i];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    // Monic gcd over a field.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return make_monic(a);
    }

    // Returns (g, u, v) with u*a + v*b = g and g monic.
    static std::tuple<Poly, Poly, Poly> extended_gcd(Poly a, Poly b) {
        Poly one = constant_one_like(!a.is_zero() ? a : b);
        Poly u0 = one, v0 = Poly(), u1 = Poly(), v1 = one;
        while (!b.is_zero()) {
            auto [q, r] = divrem(a, b);
            a = std::move(b);
            b = std::move(r);
            Poly u2 = u0 - q * u1, v2 = v0 - q * v1;
            u0 = std::move(u1);
            v0 = std::move(v1);
            u1 = std::move(u2);
            v1 = std::move(v2);
        }
        if (a.is_zero()) return {a, Poly(), Poly()};
        T inv = lc_inverse(a);
        return {Poly::constant(inv) * a, Poly::constant(inv) * u0, Poly::constant(inv) * v0};
    }

    static Poly make_monic(const Poly& a) {
        if (a.is_zero()) return a;
        return Poly::constant(lc_inverse(a)) * a;
    }

    // Substitute x -> x + s.
    Poly shift(const T& s) const {
        Poly res;
        Poly lin(std::vector<T>{s, unit_like(s)});
        for (std::size_t i = c_.size(); i-- > 0;) res = res * lin + constant(c_[i]);
        return res;
    }

    // Substitute x -> g(x).
    Poly compose(const Poly& g) const {
        Poly res;
        for (std::size_t i = c_.size(); i-- > 0;) res = res * g + constant(c_[i]);
        return res;
    }

    Poly reverse() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && c_.back() == T()) c_.pop_back();
    }
    static T lc_inverse(const Poly& a) {
        T one = unit_like(a.lc());
        return one / a.lc();
    }
    static Poly constant_one_like(const Poly& ref) {
        if (ref.is_zero()) return constant(T() + detail_one<T>());
        return constant(unit_like(ref.lc()));
    }
    template <class U>
    static U detail_one() {
        return U(1);
    }

public:
    // The multiplicative unit in the same algebraic context as x (fields with
    // runtime moduli need this; plain numeric types ignore x).
    static T unit_like(const T& x) {
        if constexpr (requires(const T& v) { T::one_like(v); })
            return T::one_like(x);
        else
            return T(1);
    }
};

using RatPoly = Poly<Rational>;

}  // namespace k3x
