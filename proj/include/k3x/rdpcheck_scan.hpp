// Singular-point scans of projective surfaces over small finite fields:
// hypersurfaces in P^3 and double covers of P^2, with A_n classification of
// each singular point found.
#pragma once

#include "fqgeom.hpp"
#include "rdpcheck.hpp"

#include <string>
#include <vector>

namespace k3x {

struct SurfaceSingularity {
    // For hypersurfaces: the canonical point of P^3. For double covers
    // w^2 + h w = f: coords = (w, x0, x1, x2) with the plane part canonical.
    std::vector<FqElem> coords;
    ADEType type;
};

// Deterministic F_{p^k}: the lexicographically least monic irreducible of
// degree k (coefficient tuples read from degree 0 upward).
inline FqFieldPtr canonical_field(std::uint64_t p, std::size_t k) {
    if (k == 1) return FqField::prime_field(p);
    std::vector<std::uint64_t> mod(k + 1, 0);
    mod[k] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < k; ++i) {
            mod[i] = rest % p;
            rest /= p;
        }
        if (fpdetail::fp_irreducible(mod, p)) return FqField::make(p, mod);
    }
    throw domain_error("canonical_field: no irreducible modulus found");
}

// All singular F_q-points of the quartic (or any) surface S = 0 in P^3,
// classified as A_n germs where possible.
inline std::vector<SurfaceSingularity> surface_singular_scan(const FqForm& S, const FqFieldPtr& F, unsigned degree_bound = 16) {
    if (S.nvars() != 4) throw input_error("surface_singular_scan: need a form in 4 variables");
    std::uint64_t q = F->size();
    if (q == 0 || q * q * q > 3'000'000) throw resource_error("surface_singular_scan: point enumeration too large");
    std::array<FqForm, 4> d = {S.derivative(0), S.derivative(1), S.derivative(2), S.derivative(3)};
    std::vector<SurfaceSingularity> out;
    for (const auto& pt : all_projective_points(F, 4)) {
        auto v = point_elems(F, pt);
        if (!S.eval(v).is_zero()) continue;
        bool sing = true;
        for (std::size_t i = 0; i < 4 && sing; ++i) sing = d[i].eval(v).is_zero();
        if (!sing) continue;
        std::size_t lead = 0;
        while (pt.c[lead] == 0) ++lead;
        FqForm local = S.set_var(lead, FqElem::from_int(F, 1));
        std::vector<FqElem> offs;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != lead) offs.push_back(v[i]);
        local = local.translate(offs);
        ADEType t;
        try {
            t = an_classify(LocalGerm<FqElem>(local), F, degree_bound);
        } catch (const input_error& e) {
            t = {ADEType::Family::Unresolved, 0, e.what()};
        }
        out.push_back({v, t});
    }
    return out;
}

// Singular points of the double cover w^2 + h(x) w = f(x) of P^2 (h may be
// zero; deg f = 2 deg h when both are present). Points are found by solving
// for the singular w over each plane point.
inline std::vector<SurfaceSingularity> double_cover_singular_scan(const FqForm& f, const FqForm& h, const FqFieldPtr& F,
                                                                  unsigned degree_bound = 16) {
    if (f.nvars() != 3 || (!h.is_zero() && h.nvars() != 3)) throw input_error("double_cover_singular_scan: plane forms required");
    std::uint64_t q = F->size();
    if (q == 0 || q * q > 300'000) throw resource_error("double_cover_singular_scan: point enumeration too large");
    std::array<FqForm, 3> df = {f.derivative(0), f.derivative(1), f.derivative(2)};
    std::array<FqForm, 3> dh = {h.is_zero() ? FqForm(3) : h.derivative(0), h.is_zero() ? FqForm(3) : h.derivative(1),
                                h.is_zero() ? FqForm(3) : h.derivative(2)};
    FqElem two = FqElem::from_int(F, 2);
    std::vector<SurfaceSingularity> out;
    for (const auto& pt : all_projective_points(F, 3)) {
        auto v = point_elems(F, pt);
        FqElem hv = h.is_zero() ? FqElem::from_int(F, 0) : h.eval(v);
        FqElem fv = f.eval(v);
        FqElem w0;
        if (F->p() != 2) {
            w0 = FqElem() - hv / two;  // dG/dw = 2w + h = 0
        } else {
            if (!hv.is_zero()) continue;
            w0 = fv.pth_root();  // w^2 = f has the unique root f^(q/2)
        }
        // on the surface?
        if (!(w0 * w0 + hv * w0 - fv).is_zero()) continue;
        bool sing = true;
        for (std::size_t i = 0; i < 3 && sing; ++i) {
            FqElem dhv = h.is_zero() ? FqElem::from_int(F, 0) : dh[i].eval(v);
            sing = (w0 * dhv - df[i].eval(v)).is_zero();
        }
        if (!sing) continue;
        // local germ in (w, u, v): dehomogenize the plane at the leading coordinate
        std::size_t lead = 0;
        while (pt.c[lead] == 0) ++lead;
        FqForm f_aff = f.set_var(lead, FqElem::from_int(F, 1));
        FqForm h_aff = h.is_zero() ? FqForm(2) : h.set_var(lead, FqElem::from_int(F, 1));
        std::vector<FqElem> offs;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != lead) offs.push_back(v[i]);
        f_aff = f_aff.translate(offs);
        if (!h_aff.is_zero()) h_aff = h_aff.translate(offs);
        // G(w, u, v) = (w + w0)^2 + h(u,v)(w + w0) - f(u,v)
        MPoly<FqElem> G(3);
        FqElem one = FqElem::from_int(F, 1);
        MPoly<FqElem> w = MPoly<FqElem>::variable(3, 0, one) + MPoly<FqElem>::constant(3, w0);
        auto lift_plane = [&](const FqForm& g) {
            MPoly<FqElem> r(3);
            for (const auto& [e, c] : g.terms()) r.add_term(Expo{0, e[0], e[1]}, c);
            return r;
        };
        G = w * w + lift_plane(h_aff) * w - lift_plane(f_aff);
        ADEType t;
        try {
            t = an_classify(LocalGerm<FqElem>(G), F, degree_bound);
        } catch (const input_error& e) {
            t = {ADEType::Family::Unresolved, 0, e.what()};
        }
        std::vector<FqElem> coords = {w0, v[0], v[1], v[2]};
        out.push_back({coords, t});
    }
    return out;
}

}  // namespace k3x
