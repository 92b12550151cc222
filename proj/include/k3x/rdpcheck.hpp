// Local analysis of rational double points: A_n classification of
// three-variable germs by hyperbolic splitting and coordinate absorption,
// singular scans of projective surfaces and double planes over small finite
// fields, and symbolic verification of the equivariant-resolution identities
// (normal-form decompositions, ideal relations, and symplecticness weights).
#pragma once

#include "cyclo.hpp"
#include "fqgeom.hpp"
#include "mpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3x {

struct ADEType {
    enum class Family { A, D, E, Unresolved } family = Family::Unresolved;
    int n = 0;
    std::string note;

    bool is(Family f, int idx) const { return family == f && n == idx; }
    std::string to_string() const {
        switch (family) {
            case Family::A: return "A" + std::to_string(n);
            case Family::D: return "D" + std::to_string(n);
            case Family::E: return "E" + std::to_string(n);
            default: return "unresolved(" + note + ")";
        }
    }
};

namespace rdp_detail {

// Quadratic-part data of a germ in three variables.
template <class T>
struct QuadData {
    std::array<std::array<T, 3>, 3> polar{};  // B(e_i, e_j); diagonal 2*q_ii
    std::array<T, 3> diag{};                  // q_ii
    T coef(std::size_t i, std::size_t j) const { return i == j ? diag[i] : polar[i][j]; }
};

template <class T>
QuadData<T> quad_data(const MPoly<T>& q2) {
    QuadData<T> d;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Expo e(3, 0);
            e[i] += 1;
            e[j] += 1;
            T c = q2.coefficient(e);
            if (i == j) {
                d.diag[i] = c;
                d.polar[i][i] = c + c;
            } else {
                d.polar[i][j] = c;
            }
        }
    return d;
}

template <class T>
T eval_quad(const QuadData<T>& d, const std::array<T, 3>& v) {
    T acc{};
    for (std::size_t i = 0; i < 3; ++i) {
        acc = acc + d.diag[i] * v[i] * v[i];
        for (std::size_t j = i + 1; j < 3; ++j) acc = acc + d.polar[i][j] * v[i] * v[j];
    }
    return acc;
}

template <class T>
T eval_polar(const QuadData<T>& d, const std::array<T, 3>& u, const std::array<T, 3>& v) {
    T acc{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) acc = acc + (i == j ? d.polar[i][i] : d.polar[i][j]) * u[i] * v[j];
    return acc;
}

}  // namespace rdp_detail

// A germ over F_q or Q: a polynomial in three affine variables singular at
// the origin with nonzero quadratic part (a double point).
template <class T>
struct LocalGerm {
    MPoly<T> F;
    explicit LocalGerm(MPoly<T> f) : F(std::move(f)) {
        if (F.nvars() != 3) throw input_error("LocalGerm: three variables required");
        if (!(F.coefficient(Expo(3, 0)) == T())) throw input_error("LocalGerm: germ does not vanish at the point");
        for (std::size_t i = 0; i < 3; ++i) {
            Expo e(3, 0);
            e[i] = 1;
            if (!(F.coefficient(e) == T())) throw input_error("LocalGerm: smooth point (nonzero linear part)");
        }
        if (F.homogeneous_part(2).is_zero()) throw input_error("LocalGerm: quadratic part vanishes (not a double point)");
    }
};

namespace rdp_detail {

// All (alpha:beta) in P^1(F_q) with a a^2 + b ab + c b^2 = 0, if any.
inline std::optional<std::pair<FqElem, FqElem>> binary_isotropic(const FqElem& a, const FqElem& b, const FqElem& c,
                                                                 const FqFieldPtr& F) {
    FqElem one = FqElem::from_int(F, 1);
    if (a.is_zero()) return std::make_pair(one, FqElem::from_int(F, 0));
    if (c.is_zero()) return std::make_pair(FqElem::from_int(F, 0), one);
    for (std::uint64_t i = 0; i < F->size(); ++i) {
        FqElem t = FqElem::from_index(F, i);
        if ((a * t * t + b * t + c).is_zero()) return std::make_pair(t, one);
    }
    return std::nullopt;
}

inline std::optional<std::array<FqElem, 3>> isotropic_vector(const QuadData<FqElem>& d, const FqFieldPtr& F) {
    FqElem zero = FqElem::from_int(F, 0), one = FqElem::from_int(F, 1);
    // axis vectors
    for (std::size_t i = 0; i < 3; ++i)
        if (d.diag[i].is_zero()) {
            std::array<FqElem, 3> v = {zero, zero, zero};
            v[i] = one;
            bool in_radical = true;
            for (std::size_t j = 0; j < 3; ++j) {
                std::array<FqElem, 3> e = {zero, zero, zero};
                e[j] = one;
                if (!eval_polar(d, v, e).is_zero()) in_radical = false;
            }
            if (!in_radical) return v;
        }
    // exhaustive over P^2(F_q)
    for (const auto& pt : all_projective_points(F, 3)) {
        std::array<FqElem, 3> v = {FqElem::from_index(F, pt.c[0]), FqElem::from_index(F, pt.c[1]),
                                   FqElem::from_index(F, pt.c[2])};
        if (!eval_quad(d, v).is_zero()) continue;
        bool in_radical = true;
        for (std::size_t j = 0; j < 3; ++j) {
            std::array<FqElem, 3> e = {zero, zero, zero};
            e[j] = one;
            if (!eval_polar(d, v, e).is_zero()) in_radical = false;
        }
        if (!in_radical) return v;
    }
    return std::nullopt;
}

// Dimension of the radical {v : B(v,.) = 0 and Q(v) = 0}.
template <class T>
std::size_t radical_dimension(const QuadData<T>& d, std::uint64_t characteristic) {
    Matrix<T> B(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) B(i, j) = (i == j) ? d.polar[i][i] : d.polar[i][j];
    auto ker = B.kernel_basis();
    if (characteristic != 2) return ker.size();  // Q vanishes on ker(B) automatically away from char 2
    // char 2: Q is Frobenius-semilinear on ker(B); its zero set there is a
    // subspace of codimension 0 or 1.
    bool any_nonzero = false;
    for (const auto& v : ker) {
        std::array<T, 3> a = {v[0], v[1], v[2]};
        if (!(eval_quad(d, a) == T())) any_nonzero = true;
    }
    return any_nonzero ? ker.size() - 1 : ker.size();
}

}  // namespace rdp_detail

// A_n classification of a double-point germ over F_q. Splits off a hyperbolic
// plane from the quadratic part (extending to F_{q^2} when the rank-2 part is
// anisotropic; the Dynkin type is geometric), then absorbs mixed terms to
// expose the residual z-order n+1, up to the given total-degree bound.
inline ADEType an_classify(const LocalGerm<FqElem>& germ, const FqFieldPtr& F, unsigned degree_bound = 16);

namespace rdp_detail {

inline ADEType an_classify_split(MPoly<FqElem> G, const FqFieldPtr& F, unsigned degree_bound) {
    using Form = MPoly<FqElem>;
    // G has quadratic part exactly x*y (coordinates already changed).
    G = G.truncate_total_degree(degree_bound);
    FqElem one = FqElem::from_int(F, 1);
    for (unsigned round = 0; round < 4 * degree_bound + 8; ++round) {
        // locate the lowest-degree mixed term x^i z^k (i>=1) or y^j z^k (j>=1)
        // other than the xy form itself
        bool found = false;
        Expo offender;
        FqElem coeff;
        unsigned best = degree_bound + 1;
        for (const auto& [e, c] : G.terms()) {
            bool xside = e[0] >= 1 && e[1] == 0;
            bool yside = e[1] >= 1 && e[0] == 0;
            if (!xside && !yside) continue;
            unsigned deg = e[0] + e[1] + e[2];
            if (deg < best) {
                best = deg;
                offender = e;
                coeff = c;
                found = true;
            }
        }
        if (!found) break;
        Expo exy{1, 1, 0};
        FqElem cxy = G.coefficient(exy);
        if (cxy.is_zero()) throw domain_error("an_classify: lost the hyperbolic term");
        FqElem f = coeff / cxy;
        if (offender[0] >= 1) {
            // kill c x^i z^k via y -> y - f x^{i-1} z^k
            Form sub = Form::variable(3, 1, one) - Form::constant(3, f) * Form::variable(3, 0, one).pow(offender[0] - 1) *
                                                       Form::variable(3, 2, one).pow(offender[2]);
            G = G.subst_var(1, sub).truncate_total_degree(degree_bound);
        } else {
            Form sub = Form::variable(3, 0, one) - Form::constant(3, f) * Form::variable(3, 1, one).pow(offender[1] - 1) *
                                                       Form::variable(3, 2, one).pow(offender[2]);
            G = G.subst_var(0, sub).truncate_total_degree(degree_bound);
        }
    }
    // residual pure-z order
    unsigned order = degree_bound + 1;
    for (const auto& [e, c] : G.terms())
        if (e[0] == 0 && e[1] == 0 && e[2] < order) order = e[2];
    if (order > degree_bound) return {ADEType::Family::Unresolved, 0, "z-order exceeds degree bound"};
    if (order < 2) throw domain_error("an_classify: unexpected low residual order");
    return {ADEType::Family::A, static_cast<int>(order) - 1, ""};
}

}  // namespace rdp_detail

inline ADEType an_classify(const LocalGerm<FqElem>& germ, const FqFieldPtr& F, unsigned degree_bound) {
    using Form = MPoly<FqElem>;
    const Form& Fg = germ.F;
    Form q2 = Fg.homogeneous_part(2);
    auto d = rdp_detail::quad_data(q2);
    std::size_t rad = rdp_detail::radical_dimension(d, F->p());
    std::size_t rank = 3 - rad;
    if (rank == 3) return {ADEType::Family::A, 1, ""};
    if (rank <= 1) return {ADEType::Family::Unresolved, 0, "corank >= 2"};

    auto iso = rdp_detail::isotropic_vector(d, F);
    if (!iso.has_value()) {
        // anisotropic rank-2 part: classify over the quadratic extension
        if (F->size() > 700) throw resource_error("an_classify: field too large for quadratic extension");
        std::size_t k2 = 2 * F->degree();
        // deterministic search for the least monic irreducible of degree 2k
        std::vector<std::uint64_t> mod(k2 + 1, 0);
        mod[k2] = 1;
        FqFieldPtr ext;
        for (std::uint64_t code = 0;; ++code) {
            std::uint64_t rest = code;
            bool over = false;
            for (std::size_t i = 0; i < k2; ++i) {
                mod[i] = rest % F->p();
                rest /= F->p();
            }
            if (rest) over = true;
            if (over) throw domain_error("an_classify: no irreducible modulus found");
            if (fpdetail::fp_irreducible(mod, F->p())) {
                ext = FqField::make(F->p(), mod);
                break;
            }
        }
        FqElem img = find_embedding_image(F, ext);
        Form lifted(3);
        for (const auto& [e, c] : Fg.terms()) lifted.add_term(e, embed(c, ext, img));
        return an_classify(LocalGerm<FqElem>(lifted), ext, degree_bound);
    }

    // hyperbolic pair (u, w): Q(u) = Q(w) = 0, B(u, w) = 1
    FqElem zero = FqElem::from_int(F, 0), one = FqElem::from_int(F, 1);
    std::array<FqElem, 3> u = *iso, w{zero, zero, zero};
    std::array<FqElem, 3> w0{zero, zero, zero};
    for (std::size_t j = 0; j < 3 && w0 == std::array<FqElem, 3>{zero, zero, zero}; ++j) {
        std::array<FqElem, 3> e = {zero, zero, zero};
        e[j] = one;
        if (!rdp_detail::eval_polar(d, u, e).is_zero()) w0 = e;
    }
    FqElem buw0 = rdp_detail::eval_polar(d, u, w0);
    FqElem lambda = (FqElem() - rdp_detail::eval_quad(d, w0)) / buw0;
    for (std::size_t i = 0; i < 3; ++i) w[i] = w0[i] + lambda * u[i];
    FqElem scale = rdp_detail::eval_polar(d, u, w).inverse();
    for (std::size_t i = 0; i < 3; ++i) w[i] = scale * w[i];
    // z: B(u, z) = B(w, z) = 0, independent of u, w
    Matrix<FqElem> sys(2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        std::array<FqElem, 3> e = {zero, zero, zero};
        e[j] = one;
        sys(0, j) = rdp_detail::eval_polar(d, u, e);
        sys(1, j) = rdp_detail::eval_polar(d, w, e);
    }
    auto ker = sys.kernel_basis();
    std::array<FqElem, 3> z{zero, zero, zero};
    bool have_z = false;
    for (const auto& v : ker) {
        Matrix<FqElem> indep(3, 3);
        for (std::size_t j = 0; j < 3; ++j) {
            indep(0, j) = u[j];
            indep(1, j) = w[j];
            indep(2, j) = v[j];
        }
        if (indep.rank() == 3) {
            z = {v[0], v[1], v[2]};
            have_z = true;
            break;
        }
    }
    if (!have_z) throw domain_error("an_classify: could not complete the hyperbolic basis");
    // change coordinates: (x, y, z) -> x*u + y*w + z*z
    using Form3 = MPoly<FqElem>;
    std::vector<Form3> images;
    for (std::size_t i = 0; i < 3; ++i) {
        Form3 img(3);
        Expo ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
        img.add_term(ex, u[i]);
        img.add_term(ey, w[i]);
        img.add_term(ez, z[i]);
        images.push_back(img);
    }
    Form3 G = Fg.subst(images);
    // Q(z) must vanish (z spans the radical in the rank-2 case)
    Expo ezz{0, 0, 2};
    if (!G.coefficient(ezz).is_zero()) return {ADEType::Family::A, 1, ""};
    return rdp_detail::an_classify_split(std::move(G), F, degree_bound);
}

}  // namespace k3x
