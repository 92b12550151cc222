// Sparse multivariate polynomials over an exact coefficient type, with the
// operations the geometry and singularity code needs: substitution, partial
// derivatives, homogeneity checks, translation, truncation, and reduction
// modulo a form that is monic in a chosen variable.
#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace k3x {

using Expo = std::vector<unsigned>;

template <class T>
class MPoly {
public:
    MPoly() : nvars_(0) {}
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
    static MPoly constant(std::size_t nvars, T v) {
        MPoly p(nvars);
        p.add_term(Expo(nvars, 0), std::move(v));
        return p;
    }
    static MPoly variable(std::size_t nvars, std::size_t i, T unit) {
        MPoly p(nvars);
        Expo e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, std::move(unit));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Expo, T>& terms() const { return terms_; }

    void add_term(const Expo& e, T c) {
        if (e.size() != nvars_) throw input_error("MPoly: exponent arity mismatch");
        if (c == T()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second == T()) terms_.erase(it);
        }
    }

    T coefficient(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T() : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous(unsigned degree) const {
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (auto x : e) s += x;
            if (s != degree) return false;
        }
        return true;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_arity(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        check_arity(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, T() - c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, T() - c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_arity(a, b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const T& s, const MPoly& p) {
        MPoly r(p.nvars_);
        for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned e) const {
        MPoly r = constant(nvars_, unit());
        MPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    MPoly derivative(std::size_t var) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            T k{};
            for (unsigned i = 0; i < e[var]; ++i) k = k + c;  // e[var] * c in the coefficient ring
            Expo e2 = e;
            --e2[var];
            r.add_term(e2, k);
        }
        return r;
    }

    T eval(const std::vector<T>& point) const {
        if (point.size() != nvars_) throw input_error("MPoly::eval: arity mismatch");
        T acc{};
        for (const auto& [e, c] : terms_) {
            T t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    // Simultaneous substitution x_i -> images[i]; images may have any common arity.
    MPoly subst(const std::vector<MPoly>& images) const {
        if (images.size() != nvars_) throw input_error("MPoly::subst: arity mismatch");
        std::size_t out_vars = images.empty() ? 0 : images[0].nvars_;
        // cache powers of each image
        std::vector<std::vector<MPoly>> powers(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(constant(out_vars, unit()));
        MPoly acc(out_vars);
        for (const auto& [e, c] : terms_) {
            MPoly t = constant(out_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
                if (e[i] > 0) t = t * powers[i][e[i]];
            }
            acc = acc + t;
        }
        return acc;
    }

    // Substitute a single variable, leaving the others in place.
    MPoly subst_var(std::size_t var, const MPoly& image) const {
        std::vector<MPoly> images;
        images.reserve(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
            images.push_back(i == var ? image : variable(nvars_, i, unit()));
        return subst(images);
    }

    // Translate: x_i -> x_i + offsets[i].
    MPoly translate(const std::vector<T>& offsets) const {
        std::vector<MPoly> images;
        images.reserve(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            MPoly v = variable(nvars_, i, unit());
            if (!(offsets[i] == T())) v = v + constant(nvars_, offsets[i]);
            images.push_back(v);
        }
        return subst(images);
    }

    // Drop variable `var` by setting it to the given value.
    MPoly set_var(std::size_t var, const T& value) const {
        MPoly r(nvars_ - 1);
        for (const auto& [e, c] : terms_) {
            T t = c;
            for (unsigned k = 0; k < e[var]; ++k) t = t * value;
            Expo e2;
            e2.reserve(nvars_ - 1);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (i != var) e2.push_back(e[i]);
            r.add_term(e2, t);
        }
        return r;
    }

    MPoly truncate_total_degree(unsigned bound) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (auto x : e) s += x;
            if (s <= bound) r.terms_.emplace(e, c);
        }
        return r;
    }

    // Homogeneous component of the given total degree.
    MPoly homogeneous_part(unsigned degree) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (auto x : e) s += x;
            if (s == degree) r.terms_.emplace(e, c);
        }
        return r;
    }

    // Reduction modulo a polynomial that is monic (unit leading coefficient)
    // in the chosen variable: repeatedly eliminates the top power of that
    // variable. Requires coefficient division only by that unit.
    MPoly reduce_mod(const MPoly& modulus, std::size_t var) const {
        unsigned dm = modulus.degree_in(var);
        if (dm == 0) throw input_error("reduce_mod: modulus constant in reduction variable");
        // leading coefficient of modulus in var must be a constant (monomial-free in var slice)
        MPoly lead(modulus.nvars_);
        for (const auto& [e, c] : modulus.terms_)
            if (e[var] == dm) {
                Expo e2 = e;
                e2[var] = 0;
                lead.add_term(e2, c);
            }
        Expo cexp(modulus.nvars_, 0);
        if (lead.term_count() != 1 || !(lead.terms().begin()->first == cexp))
            throw input_error("reduce_mod: modulus not monic-able in the reduction variable");
        T lc = lead.terms().begin()->second;
        T lcinv = unit() / lc;
        MPoly r = *this;
        bool again = true;
        while (again) {
            again = false;
            // find a term with var-degree >= dm
            for (const auto& [e, c] : r.terms_) {
                if (e[var] >= dm) {
                    Expo shift = e;
                    shift[var] -= dm;
                    MPoly mono(r.nvars_);
                    mono.add_term(shift, c * lcinv);
                    r = r - mono * modulus;
                    again = true;
                    break;
                }
            }
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += coeff_str(c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                s += "*" + names[i];
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

private:
    std::size_t nvars_;
    std::map<Expo, T> terms_;

    T unit() const {
        if (!terms_.empty()) {
            // derive a unit from an existing coefficient where the type needs context
            if constexpr (requires(const T& v) { T::one_like(v); })
                return T::one_like(terms_.begin()->second);
            else
                return T(1);
        }
        return T(1);
    }
    static void check_arity(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_) throw input_error("MPoly: arity mismatch");
    }
    static std::string coeff_str(const T& c) {
        if constexpr (requires(const T& v) { v.to_string(); })
            return c.to_string();
        else if constexpr (std::is_same_v<T, Rational>)
            return k3x::to_string(c);
        else
            return "?";
    }
};

}  // namespace k3x
