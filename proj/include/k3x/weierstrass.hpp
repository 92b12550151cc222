// Weierstrass elliptic-surface models over F_p[t] and Q[t]: Tate's algorithm
// in every residue characteristic (including 2 and 3), the quasi-elliptic
// char-3 classifier for y^2 = x^3 + a6(t), singular-fiber tables with place
// discovery from the discriminant, component counts via the Kodaira--Dynkin
// dictionary, and Shioda--Tate lower bounds.
//
// Models are entered in the convention
//   y^2 + a1 x y + a3 y + x^3 + a2 x^2 + a4 x + a6 = 0
// and converted internally (x -> -x) to the usual Weierstrass shape.
#pragma once

#include "factor_fq.hpp"
#include "intpoly.hpp"
#include "poly.hpp"
#include "salem.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3x {

enum class KodairaType { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

inline std::string kodaira_name(KodairaType t, int n) {
    switch (t) {
        case KodairaType::I0: return "I0";
        case KodairaType::In: return "I" + std::to_string(n);
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::I0star: return "I0*";
        case KodairaType::Instar: return "I" + std::to_string(n) + "*";
        case KodairaType::IVstar: return "IV*";
        case KodairaType::IIIstar: return "III*";
        case KodairaType::IIstar: return "II*";
    }
    return "?";
}

inline int kodaira_components(KodairaType t, int n) {
    switch (t) {
        case KodairaType::I0: return 1;
        case KodairaType::In: return std::max(n, 1);
        case KodairaType::II: return 1;
        case KodairaType::III: return 2;
        case KodairaType::IV: return 3;
        case KodairaType::I0star: return 5;
        case KodairaType::Instar: return 5 + n;
        case KodairaType::IVstar: return 7;
        case KodairaType::IIIstar: return 8;
        case KodairaType::IIstar: return 9;
    }
    return 0;
}

inline std::string kodaira_dynkin(KodairaType t, int n) {
    switch (t) {
        case KodairaType::In: return n >= 2 ? "A" + std::to_string(n - 1) : "";
        case KodairaType::III: return "A1";
        case KodairaType::IV: return "A2";
        case KodairaType::I0star: return "D4";
        case KodairaType::Instar: return "D" + std::to_string(n + 4);
        case KodairaType::IVstar: return "E6";
        case KodairaType::IIIstar: return "E7";
        case KodairaType::IIstar: return "E8";
        default: return "";
    }
}

// v(Delta) of each additive type over residue characteristic >= 5.
inline long kodaira_vdelta_generic(KodairaType t, int n) {
    switch (t) {
        case KodairaType::I0: return 0;
        case KodairaType::In: return n;
        case KodairaType::II: return 2;
        case KodairaType::III: return 3;
        case KodairaType::IV: return 4;
        case KodairaType::I0star: return 6;
        case KodairaType::Instar: return 6 + n;
        case KodairaType::IVstar: return 8;
        case KodairaType::IIIstar: return 9;
        case KodairaType::IIstar: return 10;
    }
    return 0;
}

struct KodairaFiber {
    std::string place;  // monic polynomial in t, or "1/t" for the far chart
    KodairaType type = KodairaType::I0;
    int n = 0;
    long v_delta = 0;
    int components = 1;
    std::string dynkin;
    bool v_delta_deviates = false;       // differs from the generic table (chars 2, 3)
    std::vector<std::string> transform_log;
    std::string name() const { return kodaira_name(type, n); }
};

// Raised by residue arithmetic when a provided place turns out reducible;
// carries a proper factor so the caller can split and retry.
template <class C>
struct PlaceSplit {
    Poly<C> factor;
};

template <class C>
struct WeierstrassModel {
    // standard-convention coefficients: y^2 + A1 xy + A3 y = x^3 + A2 x^2 + A4 x + A6
    std::array<Poly<C>, 5> A;  // A1, A2, A3, A4, A6
    std::uint64_t residue_char = 0;
    FqFieldPtr base;  // set for finite base fields

    static WeierstrassModel from_convention(const std::array<Poly<C>, 5>& a, std::uint64_t p, FqFieldPtr base = nullptr) {
        // input order a1, a2, a3, a4, a6 in the +x^3 convention
        WeierstrassModel m;
        m.A = {-a[0], -a[1], a[2], a[3], -a[4]};
        m.residue_char = p;
        m.base = std::move(base);
        m.validate_degrees();
        return m;
    }
    static WeierstrassModel from_standard(const std::array<Poly<C>, 5>& A_, std::uint64_t p, FqFieldPtr base = nullptr) {
        WeierstrassModel m;
        m.A = A_;
        m.residue_char = p;
        m.base = std::move(base);
        m.validate_degrees();
        return m;
    }

    void validate_degrees() const {
        static constexpr int bound[5] = {2, 4, 6, 8, 12};
        for (int i = 0; i < 5; ++i)
            if (A[static_cast<std::size_t>(i)].degree() > bound[i])
                throw input_error("WeierstrassModel: deg a_i exceeds the K3 bound 2i");
    }

    Poly<C> b2() const { return A[0] * A[0] + cnst(4) * A[1]; }
    Poly<C> b4() const { return cnst(2) * A[3] + A[0] * A[2]; }
    Poly<C> b6() const { return A[2] * A[2] + cnst(4) * A[4]; }
    Poly<C> b8() const {
        return A[0] * A[0] * A[4] + cnst(4) * A[1] * A[4] - A[0] * A[2] * A[3] + A[1] * A[2] * A[2] - A[3] * A[3];
    }
    Poly<C> c4() const { return b2() * b2() - cnst(24) * b4(); }
    Poly<C> c6() const { return -(b2() * b2() * b2()) + cnst(36) * b2() * b4() - cnst(216) * b6(); }
    Poly<C> discriminant() const {
        Poly<C> B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - cnst(8) * (B4 * B4 * B4) - cnst(27) * (B6 * B6) + cnst(9) * B2 * B4 * B6;
    }

    // The chart at t = infinity: a_i'(s) = s^{2i} a_i(1/s).
    WeierstrassModel far_chart() const {
        static constexpr int wt[5] = {2, 4, 6, 8, 12};
        WeierstrassModel m = *this;
        for (int i = 0; i < 5; ++i) {
            const auto& p = A[static_cast<std::size_t>(i)].coeffs();
            std::vector<C> rev(static_cast<std::size_t>(wt[i]) + 1, C());
            for (std::size_t k = 0; k < p.size(); ++k) rev[static_cast<std::size_t>(wt[i]) - k] = p[k];
            m.A[static_cast<std::size_t>(i)] = Poly<C>(std::move(rev));
        }
        return m;
    }

    // (x, y) -> (x + r, y + s x + w)
    void translate(const Poly<C>& r, const Poly<C>& s, const Poly<C>& w) {
        Poly<C> a1 = A[0], a2 = A[1], a3 = A[2], a4 = A[3], a6 = A[4];
        A[0] = a1 + cnst(2) * s;
        A[1] = a2 - s * a1 + cnst(3) * r - s * s;
        A[2] = a3 + r * a1 + cnst(2) * w;
        A[3] = a4 - s * a3 + cnst(2) * r * a2 - (w + r * s) * a1 + cnst(3) * r * r - cnst(2) * s * w;
        A[4] = a6 + r * a4 + r * r * a2 + r * r * r - w * a3 - w * w - r * w * a1;
    }

    // (x, y) -> (u^2 x, u^3 y) for a polynomial u: a_i /= u^i (must divide exactly).
    void rescale(const Poly<C>& u) {
        static constexpr int wt[5] = {1, 2, 3, 4, 6};
        for (int i = 0; i < 5; ++i) {
            Poly<C> d = A[static_cast<std::size_t>(i)];
            for (int k = 0; k < wt[i]; ++k) {
                auto [q, rem] = Poly<C>::divrem(d, u);
                if (!rem.is_zero()) throw domain_error("rescale: coefficient not divisible");
                d = q;
            }
            A[static_cast<std::size_t>(i)] = d;
        }
    }

    C cnst_c(long long v) const {
        if constexpr (std::is_same_v<C, Rational>)
            return Rational(v);
        else
            return FqElem::from_int(base, v);
    }
    Poly<C> cnst(long long v) const { return Poly<C>::constant(cnst_c(v)); }
};

namespace tate_detail {

template <class C>
long valuation(const Poly<C>& f, const Poly<C>& pi) {
    if (f.is_zero()) return 1 << 24;  // effectively +infinity at this scale
    long v = 0;
    Poly<C> g = f;
    while (true) {
        auto [q, r] = Poly<C>::divrem(g, pi);
        if (!r.is_zero()) return v;
        g = q;
        ++v;
    }
}

template <class C>
Poly<C> exact_power_quotient(const Poly<C>& f, const Poly<C>& pi, long k) {
    Poly<C> g = f;
    for (long i = 0; i < k; ++i) {
        auto [q, r] = Poly<C>::divrem(g, pi);
        if (!r.is_zero()) throw domain_error("exact_power_quotient: insufficient valuation");
        g = q;
    }
    return g;
}

// Residue-field arithmetic modulo the place; inversion failures surface the
// discovered factor for place splitting.
template <class C>
struct Residue {
    Poly<C> pi;
    std::uint64_t p;  // residue characteristic (0 over Q)
    FqFieldPtr base;

    Poly<C> red(const Poly<C>& f) const { return f % pi; }
    Poly<C> mul(const Poly<C>& a, const Poly<C>& b) const { return (a * b) % pi; }
    Poly<C> inv(const Poly<C>& a) const {
        auto [g, u, v] = Poly<C>::extended_gcd(a % pi, pi);
        (void)v;
        if (g.degree() != 0) throw PlaceSplit<C>{g};
        return u % pi;
    }
    Poly<C> pow(Poly<C> a, Integer e) const {
        Poly<C> r = Poly<C>::constant(one());
        a = a % pi;
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    C one() const {
        if constexpr (std::is_same_v<C, Rational>)
            return Rational(1);
        else
            return FqElem::from_int(base, 1);
    }
    // residue field size (finite base only)
    Integer q() const {
        if (p == 0) throw domain_error("Residue: infinite residue field");
        std::size_t deg = static_cast<std::size_t>(pi.degree()) * (base ? base->degree() : 1);
        return ipow(Integer(p), deg);
    }
    Poly<C> pth_root(const Poly<C>& a) const {
        if (p == 0) throw domain_error("Residue: p-th root needs positive characteristic");
        return pow(a, q() / Integer(p));
    }
};

// Polynomials in one variable T over the residue ring, as coefficient lists
// of reduced representatives; division monicizes through Residue::inv and so
// participates in place splitting.
template <class C>
using TPoly = std::vector<Poly<C>>;

template <class C>
void tp_trim(TPoly<C>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <class C>
TPoly<C> tp_monic(const Residue<C>& R, TPoly<C> f) {
    tp_trim(f);
    if (f.empty()) return f;
    Poly<C> inv = R.inv(f.back());
    for (auto& c : f) c = R.mul(c, inv);
    return f;
}

template <class C>
TPoly<C> tp_rem(const Residue<C>& R, TPoly<C> a, const TPoly<C>& b_monic) {
    tp_trim(a);
    while (a.size() >= b_monic.size() && !b_monic.empty()) {
        Poly<C> f = a.back();
        std::size_t shift = a.size() - b_monic.size();
        for (std::size_t i = 0; i < b_monic.size(); ++i) a[shift + i] = R.red(a[shift + i] - f * b_monic[i]);
        tp_trim(a);
    }
    return a;
}

template <class C>
TPoly<C> tp_gcd(const Residue<C>& R, TPoly<C> a, TPoly<C> b) {
    a = tp_monic(R, std::move(a));
    b = tp_monic(R, std::move(b));
    while (!b.empty()) {
        TPoly<C> r = tp_rem(R, a, b);
        a = std::move(b);
        b = tp_monic(R, std::move(r));
    }
    return a;
}

template <class C>
TPoly<C> tp_derivative(const Residue<C>& R, const TPoly<C>& f) {
    TPoly<C> d;
    for (std::size_t i = 1; i < f.size(); ++i) {
        Poly<C> k;
        for (std::size_t j = 0; j < i; ++j) k = k + f[i];
        d.push_back(R.red(k));
    }
    tp_trim(d);
    return d;
}

struct MultipleRootInfo {
    bool squarefree = true;
    int multiplicity = 1;
};

// Multiple root of a monic cubic or quadratic over the residue field.
// Returns the root (reduced representative) and its multiplicity, or
// squarefree. Handles the degenerate derivatives of characteristics 2 and 3.
template <class C>
std::pair<MultipleRootInfo, Poly<C>> tp_multiple_root(const Residue<C>& R, const TPoly<C>& f_monic) {
    std::size_t deg = f_monic.size() - 1;
    MultipleRootInfo info;
    Poly<C> root;
    auto two_inv = [&]() { return R.inv(Poly<C>::constant(R.one() + R.one())); };
    if (deg == 2) {
        // T^2 + bT + c
        const Poly<C>& b = f_monic[1];
        const Poly<C>& c = f_monic[0];
        if (R.p == 2) {
            if (!R.red(b).is_zero()) return {info, root};
            info.squarefree = false;
            info.multiplicity = 2;
            return {info, R.pth_root(c)};
        }
        Poly<C> disc = R.red(b * b - (Poly<C>::constant(R.one() + R.one() + R.one() + R.one())) * c);
        if (!disc.is_zero()) return {info, root};
        info.squarefree = false;
        info.multiplicity = 2;
        return {info, R.red(-(R.mul(b, two_inv())))};
    }
    if (deg != 3) throw input_error("tp_multiple_root: degree must be 2 or 3");
    if (R.p == 3) {
        // f = T^3 + c2 T^2 + c1 T + c0; f' = 2 c2 T + c1
        Poly<C> c2 = R.red(f_monic[2]), c1 = R.red(f_monic[1]), c0 = R.red(f_monic[0]);
        if (c2.is_zero() && c1.is_zero()) {
            info.squarefree = false;
            info.multiplicity = 3;
            return {info, R.red(-R.pth_root(c0))};
        }
    }
    TPoly<C> g = tp_gcd(R, f_monic, tp_derivative(R, f_monic));
    if (g.size() <= 1) return {info, root};
    info.squarefree = false;
    if (g.size() == 2) {
        info.multiplicity = 2;
        // in char 3 a linear gcd can also sit under a triple root: f = (T-r)^3
        root = R.red(-g[0]);
        if (R.p == 3) {
            // check whether the root annihilates f/(T-r)^2 as well
            TPoly<C> lin = {R.red(-root), Poly<C>::constant(R.one())};
            TPoly<C> rem = tp_rem(R, f_monic, lin);
            (void)rem;  // r is a root by construction
            // evaluate f'' ( = 2 c2 in char 3 ) at nothing: multiplicity 3 iff c2 = -3r = 0 and c1 = 3r^2 = 0
            if (R.red(f_monic[2]).is_zero() && R.red(f_monic[1]).is_zero()) info.multiplicity = 3;
        }
        return {info, root};
    }
    // g = (T - r)^2
    info.multiplicity = 3;
    if (R.p == 2) {
        root = R.pth_root(R.red(g[0]));
    } else {
        root = R.red(-(R.mul(g[1], two_inv())));
    }
    return {info, root};
}

}  // namespace tate_detail

}  // namespace k3x

#include "tate.hpp"
