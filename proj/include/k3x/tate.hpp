// Tate's algorithm over F_p[t] and Q[t] at a monic place polynomial, written
// against residue arithmetic that detects reducible places (every zero test
// and inversion either certifies a unit or surfaces a proper factor), plus
// the quasi-elliptic characteristic-3 classifier and the fiber-table driver.
#pragma once

#include "weierstrass.hpp"

namespace k3x {

namespace tate_detail {

// Zero test sound over a possibly-composite squarefree place: a reduced
// representative that shares a factor with pi triggers a split.
template <class C>
bool checked_is_zero(const Residue<C>& R, const Poly<C>& reduced) {
    if (reduced.is_zero()) return true;
    Poly<C> g = Poly<C>::gcd(reduced, R.pi);
    if (g.degree() > 0) throw PlaceSplit<C>{g};
    return false;
}

template <class C>
long checked_valuation(const Residue<C>& R, const Poly<C>& f) {
    if (f.is_zero()) return 1 << 24;
    long v = 0;
    Poly<C> g = f;
    while (true) {
        auto [q, r] = Poly<C>::divrem(g, R.pi);
        if (!checked_is_zero(R, r % R.pi)) return v;
        if (!r.is_zero()) throw PlaceSplit<C>{Poly<C>::gcd(r, R.pi)};  // defensive; checked_is_zero splits first
        g = q;
        ++v;
    }
}

template <class C>
Poly<C> quotient_red(const Residue<C>& R, const Poly<C>& f, long k) {
    return R.red(exact_power_quotient(f, R.pi, k));
}

// Singular point of the reduced curve; requires v(Delta) >= 1.
template <class C>
std::pair<Poly<C>, Poly<C>> reduced_singular_point(const Residue<C>& R, const WeierstrassModel<C>& m) {
    Poly<C> a1 = R.red(m.A[0]), a2 = R.red(m.A[1]), a3 = R.red(m.A[2]), a4 = R.red(m.A[3]), a6 = R.red(m.A[4]);
    if (R.p == 2) {
        if (!checked_is_zero(R, a1)) {
            Poly<C> inv = R.inv(a1);
            Poly<C> x0 = R.mul(a3, inv);
            Poly<C> y0 = R.mul(R.red(R.mul(x0, x0) + a4), inv);
            return {x0, y0};
        }
        if (!checked_is_zero(R, a3)) throw domain_error("tate: reduction is smooth but v(Delta) > 0");
        Poly<C> x0 = R.pth_root(a4);
        Poly<C> val = R.red(R.mul(R.mul(x0, x0), x0) + R.mul(a2, R.mul(x0, x0)) + R.mul(a4, x0) + a6);
        Poly<C> y0 = R.pth_root(val);
        return {x0, y0};
    }
    // char != 2: singular x is the multiple root of 4x^3 + b2 x^2 + 2 b4 x + b6
    Poly<C> b2 = R.red(m.b2()), b4 = R.red(m.b4()), b6 = R.red(m.b6());
    Poly<C> inv4 = R.inv(Poly<C>::constant(m.cnst_c(4)));
    TPoly<C> cubic = {R.mul(b6, inv4), R.mul(b4, R.inv(Poly<C>::constant(m.cnst_c(2)))), R.mul(b2, inv4),
                      Poly<C>::constant(R.one())};
    auto [info, x0] = tp_multiple_root(R, cubic);
    if (info.squarefree) throw domain_error("tate: no multiple root although v(Delta) > 0");
    Poly<C> inv2 = R.inv(Poly<C>::constant(m.cnst_c(2)));
    Poly<C> y0 = R.red(-(R.mul(R.red(R.mul(R.red(m.A[0]), x0) + R.red(m.A[2])), inv2)));
    return {x0, y0};
}

}  // namespace tate_detail

// Classification of the fiber of a model at a monic place.
template <class C>
KodairaFiber tate_at_place(WeierstrassModel<C> m, const Poly<C>& pi_in, const std::string& place_name) {
    using namespace tate_detail;
    Poly<C> pi = Poly<C>::make_monic(pi_in);
    Residue<C> R{pi, m.residue_char, m.base};
    KodairaFiber fib;
    fib.place = place_name;

    auto lift_times = [&](const Poly<C>& reduced, long k) {
        Poly<C> r = reduced;
        for (long i = 0; i < k; ++i) r = r * pi;
        return r;
    };

    for (int restart = 0; restart < 32; ++restart) {
        Poly<C> delta = m.discriminant();
        if (delta.is_zero()) throw input_error("tate: discriminant vanishes identically (not an elliptic fibration)");
        long n = checked_valuation(R, delta);
        fib.v_delta = n;
        if (n == 0) {
            fib.type = KodairaType::I0;
            break;
        }
        auto [x0, y0] = reduced_singular_point(R, m);
        if (!x0.is_zero() || !y0.is_zero()) {
            m.translate(x0, Poly<C>(), y0);
            fib.transform_log.push_back("x += " + std::string("(singular point)") + ", y += (singular point)");
        }
        if (checked_valuation(R, m.A[2]) < 1 || checked_valuation(R, m.A[3]) < 1 || checked_valuation(R, m.A[4]) < 1)
            throw domain_error("tate: translation to the singular point failed");
        if (checked_valuation(R, m.b2()) == 0) {
            fib.type = KodairaType::In;
            fib.n = static_cast<int>(n);
            break;
        }
        if (checked_valuation(R, m.A[4]) < 2) {
            fib.type = KodairaType::II;
            break;
        }
        if (checked_valuation(R, m.b8()) < 3) {
            fib.type = KodairaType::III;
            break;
        }
        if (checked_valuation(R, m.b6()) < 3) {
            fib.type = KodairaType::IV;
            break;
        }
        // preparation: v(a1) >= 1, v(a2) >= 1, v(a3) >= 2, v(a4) >= 2, v(a6) >= 3
        if (R.p == 2) {
            if (checked_valuation(R, m.A[0]) < 1) throw domain_error("tate: v(a1) = 0 in an additive char-2 case");
            if (checked_valuation(R, m.A[1]) < 1) {
                Poly<C> s = R.pth_root(R.red(m.A[1]));
                m.translate(Poly<C>(), s, Poly<C>());
            }
            Poly<C> w = lift_times(R.pth_root(quotient_red(R, m.A[4], 2)), 1);
            m.translate(Poly<C>(), Poly<C>(), w);
        } else {
            Poly<C> half = Poly<C>::constant(m.cnst_c(1) / m.cnst_c(2));
            m.translate(Poly<C>(), -(half * m.A[0]), -(half * m.A[2]));
        }
        if (checked_valuation(R, m.A[0]) < 1 || checked_valuation(R, m.A[1]) < 1 || checked_valuation(R, m.A[2]) < 2 ||
            checked_valuation(R, m.A[3]) < 2 || checked_valuation(R, m.A[4]) < 3)
            throw domain_error("tate: step-6 preparation failed");
        // step 6: P(T) = T^3 + (a2/pi) T^2 + (a4/pi^2) T + (a6/pi^3)
        TPoly<C> P = {quotient_red(R, m.A[4], 3), quotient_red(R, m.A[3], 2), quotient_red(R, m.A[1], 1),
                      Poly<C>::constant(R.one())};
        auto [info, theta] = tp_multiple_root(R, P);
        if (info.squarefree) {
            fib.type = KodairaType::I0star;
            break;
        }
        if (info.multiplicity == 2) {
            if (!theta.is_zero()) m.translate(lift_times(theta, 1), Poly<C>(), Poly<C>());
            // I_nu* subloop
            int nu = 1;
            bool done = false;
            while (!done) {
                if (nu % 2 == 1) {
                    long k3 = (nu + 3) / 2, k6 = nu + 3;
                    TPoly<C> Q = {R.red(-quotient_red(R, m.A[4], k6)), quotient_red(R, m.A[2], k3),
                                  Poly<C>::constant(R.one())};
                    auto [qi, rho] = tp_multiple_root(R, Q);
                    if (qi.squarefree) {
                        fib.type = KodairaType::Instar;
                        fib.n = nu;
                        done = true;
                    } else {
                        m.translate(Poly<C>(), Poly<C>(), lift_times(rho, k3));
                        ++nu;
                    }
                } else {
                    long k4 = nu / 2 + 2, k6 = nu + 3;
                    Poly<C> lead = quotient_red(R, m.A[1], 1);
                    Poly<C> inv = R.inv(lead);
                    TPoly<C> Q = {R.mul(quotient_red(R, m.A[4], k6), inv), R.mul(quotient_red(R, m.A[3], k4), inv),
                                  Poly<C>::constant(R.one())};
                    auto [qi, rho] = tp_multiple_root(R, Q);
                    if (qi.squarefree) {
                        fib.type = KodairaType::Instar;
                        fib.n = nu;
                        done = true;
                    } else {
                        m.translate(lift_times(rho, k4 - 1), Poly<C>(), Poly<C>());
                        ++nu;
                    }
                }
                if (nu > n) throw domain_error("tate: I_nu* subloop exceeded v(Delta)");
            }
            break;
        }
        // triple root
        if (!theta.is_zero()) m.translate(lift_times(theta, 1), Poly<C>(), Poly<C>());
        {
            TPoly<C> Q = {R.red(-quotient_red(R, m.A[4], 4)), quotient_red(R, m.A[2], 2), Poly<C>::constant(R.one())};
            auto [qi, rho] = tp_multiple_root(R, Q);
            if (qi.squarefree) {
                fib.type = KodairaType::IVstar;
                break;
            }
            if (!rho.is_zero()) m.translate(Poly<C>(), Poly<C>(), lift_times(rho, 2));
        }
        if (checked_valuation(R, m.A[3]) < 4) {
            fib.type = KodairaType::IIIstar;
            break;
        }
        if (checked_valuation(R, m.A[4]) < 6) {
            fib.type = KodairaType::IIstar;
            break;
        }
        // not minimal at this place: divide and restart
        m.rescale(pi);
        fib.transform_log.push_back("rescale: (x, y) -> (pi^2 x, pi^3 y)");
    }
    fib.components = kodaira_components(fib.type, fib.n);
    fib.dynkin = kodaira_dynkin(fib.type, fib.n);
    fib.v_delta_deviates = (fib.v_delta != kodaira_vdelta_generic(fib.type, fib.n));
    return fib;
}

// ---------------------------------------------------------------------------
// Quasi-elliptic fibrations in characteristic 3: y^2 = x^3 + e(t). The fiber
// at a place is read from the maximal valuation of e + c^3 over cube
// translations x -> x + c.
// ---------------------------------------------------------------------------

struct QuasiEllipticInfo {
    bool is_quasi_elliptic = false;
    Poly<FqElem> e;  // y^2 = x^3 + e(t)
};

inline QuasiEllipticInfo quasi_elliptic_normalize(const WeierstrassModel<FqElem>& m_in) {
    QuasiEllipticInfo out;
    if (m_in.residue_char != 3) return out;
    WeierstrassModel<FqElem> m = m_in;
    FqElem half = FqElem::from_int(m.base, 2).inverse();
    m.translate(Poly<FqElem>(), -(Poly<FqElem>::constant(half) * m.A[0]), -(Poly<FqElem>::constant(half) * m.A[2]));
    if (!m.A[1].is_zero() || !m.A[3].is_zero()) return out;  // would be elliptic or degenerate
    out.is_quasi_elliptic = true;
    out.e = m.A[4];
    return out;
}

inline std::optional<KodairaFiber> quasi_elliptic_at_place(Poly<FqElem> e, const Poly<FqElem>& pi_in, const std::string& name,
                                                           const FqFieldPtr& base) {
    Poly<FqElem> pi = Poly<FqElem>::make_monic(pi_in);
    tate_detail::Residue<FqElem> R{pi, 3, base};
    KodairaFiber fib;
    fib.place = name;
    for (int guard = 0; guard < 64; ++guard) {
        long v = tate_detail::checked_valuation(R, e);
        if (e.is_zero()) throw input_error("quasi-elliptic: e + c^3 collapsed to zero");
        if (v >= 6) {
            e = tate_detail::exact_power_quotient(e, pi, 6);
            fib.transform_log.push_back("rescale: (x, y) -> (pi^2 x, pi^3 y)");
            continue;
        }
        if (v % 3 != 0) {
            fib.v_delta = v;
            switch (v) {
                case 1: fib.type = KodairaType::II; break;
                case 2: fib.type = KodairaType::IV; break;
                case 4: fib.type = KodairaType::IVstar; break;
                case 5: fib.type = KodairaType::IIstar; break;
                default: throw domain_error("quasi-elliptic: unexpected valuation");
            }
            fib.components = kodaira_components(fib.type, 0);
            fib.dynkin = kodaira_dynkin(fib.type, 0);
            fib.v_delta_deviates = true;  // no discriminant in the elliptic sense
            return fib;
        }
        if (v == 0) {
            // translate by the cube root of the unit part; if the valuation
            // stays 0 the fiber is the generic cusp
            Poly<FqElem> w = R.red(e);
            Poly<FqElem> c = R.pth_root(w);  // c^3 = w in the residue field
            Poly<FqElem> c3 = c * c * c;
            Poly<FqElem> e2 = e - c3;
            if (tate_detail::checked_valuation(R, e2) == 0) return std::nullopt;  // ordinary cusp fiber
            e = e2;
            continue;
        }
        // v in {3}: absorb pi^v-cube if possible
        Poly<FqElem> unit = tate_detail::quotient_red(R, e, v);
        Poly<FqElem> c = R.pth_root(unit);
        Poly<FqElem> lift = c;
        for (long i = 0; i < v / 3; ++i) lift = lift * pi;
        e = e - lift * lift * lift;
        long v2 = tate_detail::checked_valuation(R, e);
        if (v2 <= v) throw domain_error("quasi-elliptic: cube absorption did not progress");
    }
    throw domain_error("quasi-elliptic: did not terminate");
}

// ---------------------------------------------------------------------------
// Fiber tables with place discovery
// ---------------------------------------------------------------------------

inline std::vector<std::pair<Poly<FqElem>, std::string>> places_of(const Poly<FqElem>& f, const FqFieldPtr& base) {
    std::vector<std::pair<Poly<FqElem>, std::string>> out;
    for (const auto& g : factor_fq(f, base)) {
        std::string nm;
        for (int i = g.factor.degree(); i >= 0; --i) {
            const FqElem& c = g.factor[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!nm.empty()) nm += "+";
            std::string cs = c.to_string("g");
            if (i == 0)
                nm += cs;
            else {
                nm += (cs == "1" ? "" : cs + "*");
                nm += "t";
                if (i > 1) nm += "^" + std::to_string(i);
            }
        }
        out.emplace_back(g.factor, nm);
    }
    return out;
}

inline std::vector<std::pair<RatPoly, std::string>> places_of_q(const RatPoly& f_in) {
    // squarefree parts, then cyclotomic and t-power stripping, then
    // irreducibility certification; uncertified residuals stay whole and any
    // needed splitting happens on demand inside the residue arithmetic.
    std::vector<std::pair<RatPoly, std::string>> out;
    Integer denlcm = 1;
    for (const auto& c : f_in.coeffs()) denlcm = lcm(denlcm, den(c));
    std::vector<Integer> ic;
    for (const auto& c : f_in.coeffs()) ic.push_back(num(c * Rational(denlcm)));
    IntPoly f(std::move(ic));
    auto add_place = [&](const IntPoly& p, const std::string& nm) {
        RatPoly rp = RatPoly::make_monic(to_rat(p));
        for (auto& existing : out)
            if (existing.first == rp) return;
        out.emplace_back(rp, nm.empty() ? to_string(p, "t") : nm);
    };
    for (auto& [part, mult] : yun_squarefree(f)) {
        (void)mult;
        IntPoly rest = part;
        if (rest[0] == 0) {
            add_place(IntPoly(std::vector<Integer>{0, 1}), "t");
            while (rest[0] == 0) rest = exact_div(rest, IntPoly(std::vector<Integer>{0, 1}));
        }
        for (std::uint64_t n : cyclotomic_candidates(rest.degree())) {
            const IntPoly& phi = cyclotomic(n);
            if (phi.degree() > rest.degree()) continue;
            if (divides(phi, rest)) {
                add_place(phi, "");
                rest = exact_div(rest, phi);
            }
        }
        if (rest.degree() >= 1) add_place(primitive_part(rest), "");
    }
    return out;
}

template <class C>
std::vector<KodairaFiber> classify_with_splitting(const WeierstrassModel<C>& m, const Poly<C>& pi, const std::string& name) {
    try {
        return {tate_at_place(m, pi, name)};
    } catch (const PlaceSplit<C>& s) {
        Poly<C> g = Poly<C>::make_monic(s.factor);
        Poly<C> h = Poly<C>::make_monic(Poly<C>::divrem(pi, g).first);
        auto left = classify_with_splitting(m, g, name + " [factor]");
        auto right = classify_with_splitting(m, h, name + " [cofactor]");
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
}

// All bad fibers of the model, across the affine chart and the chart at
// infinity (reported with place "1/t").
inline std::vector<KodairaFiber> singular_fiber_table(const WeierstrassModel<FqElem>& m) {
    std::vector<KodairaFiber> fibers;
    Poly<FqElem> delta = m.discriminant();
    if (delta.is_zero()) {
        auto qe = quasi_elliptic_normalize(m);
        if (!qe.is_quasi_elliptic)
            throw input_error("singular_fiber_table: discriminant vanishes identically and the model is not quasi-elliptic");
        Poly<FqElem> eprime = qe.e.derivative();
        if (eprime.is_zero()) throw input_error("quasi-elliptic: e'(t) vanishes identically");
        for (const auto& [pi, nm] : places_of(eprime, m.base)) {
            auto fib = quasi_elliptic_at_place(qe.e, pi, nm, m.base);
            if (fib && fib->v_delta >= 2) fibers.push_back(*fib);
        }
        auto far = quasi_elliptic_normalize(m.far_chart());
        Poly<FqElem> s_place(std::vector<FqElem>{FqElem::from_int(m.base, 0), FqElem::from_int(m.base, 1)});
        auto fib = quasi_elliptic_at_place(far.e, s_place, "1/t", m.base);
        if (fib && fib->v_delta >= 2) fibers.push_back(*fib);
        return fibers;
    }
    for (const auto& [pi, nm] : places_of(delta, m.base)) {
        for (auto& f : classify_with_splitting(m, pi, nm))
            if (f.type != KodairaType::I0) fibers.push_back(f);
    }
    auto far = m.far_chart();
    Poly<FqElem> s_place(std::vector<FqElem>{FqElem::from_int(m.base, 0), FqElem::from_int(m.base, 1)});
    for (auto& f : classify_with_splitting(far, s_place, "1/t"))
        if (f.type != KodairaType::I0) fibers.push_back(f);
    return fibers;
}

inline std::vector<KodairaFiber> singular_fiber_table(const WeierstrassModel<Rational>& m) {
    std::vector<KodairaFiber> fibers;
    RatPoly delta = m.discriminant();
    if (delta.is_zero()) throw input_error("singular_fiber_table: discriminant vanishes identically over Q");
    for (const auto& [pi, nm] : places_of_q(delta)) {
        for (auto& f : classify_with_splitting(m, pi, nm))
            if (f.type != KodairaType::I0) fibers.push_back(f);
    }
    auto far = m.far_chart();
    RatPoly s_place(std::vector<Rational>{0, 1});
    for (auto& f : classify_with_splitting(far, s_place, "1/t"))
        if (f.type != KodairaType::I0) fibers.push_back(f);
    return fibers;
}

// rho >= 2 + sum (components - 1) over the bad fibers.
inline long shioda_tate_bound(const std::vector<KodairaFiber>& fibers) {
    long b = 2;
    for (const auto& f : fibers) b += f.components - 1;
    return b;
}

}  // namespace k3x
