// Symbolic verification of the equivariant-resolution identities behind the
// RDP normal forms: the D_m and E_6 decomposition identities, the D_4
// alternative-form epsilon identity, the A_m ideal relations, and the
// symplecticness weight audit for every listed (case, generator) pair.
//
// Each verifier accepts a mutation index; a non-negative index bumps one
// constructed coefficient by one, which must break the corresponding
// identity (exercised by the mutation tests).
#pragma once

#include "cyclo.hpp"
#include "forms.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace k3x {

struct IdentityCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct IdentityReport {
    std::string case_id;
    bool precondition_ok = true;
    std::string precondition_detail;
    std::vector<IdentityCheck> checks;
    // Number of coefficient sites a mutation index may address.
    int mutation_sites = 0;
    bool all_pass() const {
        if (!precondition_ok) return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace rdpid_detail {

inline CycloElem mut(int& site, int target, const CycloElem& v) {
    int s = site++;
    return s == target ? v + CycloElem(1) : v;
}
inline Rational mutq(int& site, int target, const Rational& v) {
    int s = site++;
    return s == target ? v + 1 : v;
}

}  // namespace rdpid_detail

// D_m decomposition: with N(y) = prod (y + beta_i^2) and A, B built from
// prod (beta_i + u) = sqrt(-1) (A + B u) at u = sqrt(-y),
//   x^2 + y z^2 + N(y) = (x + A)(x - A) + y (z + B)(z - B)
// over Q(i)[x, y, z]. The case needs at least two roots.
inline IdentityReport verify_dm_case(const std::vector<Rational>& betas, int mutate = -1) {
    IdentityReport rep;
    rep.case_id = "Dm";
    if (betas.size() < 2) {
        rep.precondition_ok = false;
        rep.precondition_detail = "need at least two roots";
        return rep;
    }
    int site = 0;
    CycloElem i4 = CycloElem::zeta(4);
    // P(u) = prod (beta_i + u)
    RatPoly P = RatPoly::constant(1);
    for (const auto& b : betas) P = P * RatPoly(std::vector<Rational>{b, 1});
    const std::size_t NV = 3;  // x, y, z
    CForm x = CForm::variable(NV, 0, CycloElem(1));
    CForm y = CForm::variable(NV, 1, CycloElem(1));
    CForm z = CForm::variable(NV, 2, CycloElem(1));
    // A = -i * E(-y), B = -i * O(-y) for P(u) = E(u^2) + u O(u^2)
    CForm A(NV), B(NV);
    for (int j = 0; j <= P.degree(); ++j) {
        Rational pj = P[static_cast<std::size_t>(j)];
        CycloElem c = rdpid_detail::mut(site, mutate, -i4 * CycloElem::rational(pj));
        unsigned half = static_cast<unsigned>(j) / 2;
        CForm ypow = (-y).pow(half);
        if (j % 2 == 0)
            A = A + CForm::constant(NV, c) * ypow;
        else
            B = B + CForm::constant(NV, c) * ypow;
    }
    CForm N(NV);
    N = CForm::constant(NV, CycloElem(1));
    for (const auto& b : betas) N = N * (y + CForm::constant(NV, CycloElem::rational(b * b)));
    CForm F = x * x + y * z * z + N;
    CForm rhs = (x + A) * (x - A) + y * (z + B) * (z - B);
    rep.checks.push_back({"decomposition", F == rhs, "F = (x+A)(x-A) + y(z+B)(z-B)"});
    // the involution (x,y,z) -> (-x,y,-z) swaps the two ideal factors
    std::vector<CForm> sigma = {-x, y, -z};
    rep.checks.push_back({"ideal-swap-x", (x + A).subst(sigma) == -(x - A), "sigma(x+A) = -(x-A)"});
    rep.checks.push_back({"ideal-swap-z", (z + B).subst(sigma) == -(z - B), "sigma(z+B) = -(z-B)"});
    rep.checks.push_back({"sigma-fixes-F", F.subst(sigma) == F, "sigma(F) = F"});
    rep.mutation_sites = site;
    return rep;
}

// E_6 decomposition with the two constraints imposed symbolically
// (A := 2 b^2 R - H and T := (H^2 - A^2 - 4 R C^2)/4):
//   x^2 - (z^2 - H)^2 + 4T = (x + z^2 + A)(x - z^2 - A) + 4 R (bz + C)(bz - C),
// plus T = R S with S := b^2 H - b^4 R - C^2, and the vanishing of the
// discriminant of b^4 R - b^2 H + S (= -C^2) as a quadratic in y.
inline IdentityReport verify_e6_case(int mutate = -1) {
    IdentityReport rep;
    rep.case_id = "E6";
    // variables: x z b c0 c1 r0 r1 r2 h0 h1 h2 y
    const std::size_t NV = 12;
    enum { X, Z, Bv, C0, C1, R0, R1, R2, H0, H1, H2, Y };
    auto var = [&](int i) { return RForm::variable(NV, static_cast<std::size_t>(i), Rational(1)); };
    auto cnst = [&](const Rational& r) { return RForm::constant(NV, r); };
    RForm x = var(X), z = var(Z), b = var(Bv), y = var(Y);
    auto quad = [&](int a0, int a1, int a2) { return var(a0) + var(a1) * y + var(a2) * y * y; };
    RForm R = quad(R0, R1, R2), H = quad(H0, H1, H2);
    RForm C = var(C0) + var(C1) * y;
    int site = 0;
    // Mutations perturb one side of a constraint so the corresponding
    // identity must fail.
    auto mq = [&](const RForm& f) {
        int s = site++;
        return s == mutate ? f + cnst(1) : f;
    };
    RForm A = cnst(2) * b * b * R - H;                       // first constraint, solved for A
    RForm A_rhs = mq(A);                                     // site 0: break H = -A + 2 b^2 R
    RForm T4 = mq(H * H - A * A - cnst(4) * R * C * C);      // site 1: break -H^2 + 4T = -A^2 - 4 R C^2
    RForm lhs = cnst(4) * (x * x) - cnst(4) * (z * z - H) * (z * z - H) + cnst(4) * T4;
    RForm rhs = cnst(4) * ((x + z * z + A_rhs) * (x - z * z - A_rhs)) + cnst(16) * R * (b * z + C) * (b * z - C);
    rep.checks.push_back({"decomposition", lhs == rhs, "4F agrees with the factored form"});
    RForm S = mq(b * b * H - b * b * b * b * R - C * C);     // site 2: break S = b^2 H - b^4 R - C^2
    rep.checks.push_back({"T-equals-RS", T4 == cnst(4) * R * S, "4T = 4 R S"});
    // b^4 R - b^2 H + S = -C^2, so its y-discriminant must vanish
    RForm Qy = b.pow(4) * R - b * b * H + S;
    auto ycoef = [&](unsigned k) {
        RForm r(NV);
        for (const auto& [e, c] : Qy.terms()) {
            if (e[Y] != k) continue;
            Expo e2 = e;
            e2[Y] = 0;
            r.add_term(e2, c);
        }
        return r;
    };
    RForm disc = ycoef(1) * ycoef(1) - cnst(4) * ycoef(0) * ycoef(2);
    rep.checks.push_back({"square-condition", disc.is_zero(), "discriminant of b^4 R - b^2 H + S vanishes"});
    rep.mutation_sites = site;
    return rep;
}

// D_4 alternative form with numeric gamma, delta solving
// gamma b_j + delta a_j + gamma delta r_j + (gamma delta)^2 h_j = 0:
//   F_1 = H (a1 x + a0 + gamma y_i)(b1 x + b0 + delta y_i)
//         + y_i (y_{i+1} + gamma delta H)(y_{i+2} + gamma delta H) + eps,
//   eps = -gamma delta H y_i F_2  in (F_2).
// Instance family (away from 2): H = 1, a1 = b1 = 1, r1 = 0, gamma = -delta,
// a0 = -b0 with b0 = (delta^3 - delta r0)/2.
inline IdentityReport verify_d4_alt_case(const Rational& delta, const Rational& r0, int mutate = -1) {
    IdentityReport rep;
    rep.case_id = "D4-alt";
    if (delta == 0) {
        rep.precondition_ok = false;
        rep.precondition_detail = "delta must be nonzero";
        return rep;
    }
    Rational gamma = -delta;
    Rational b0 = (delta * delta * delta - delta * r0) / 2;
    Rational a0 = -b0, a1 = 1, b1 = 1, r1 = 0, h0 = 1, h1 = 0;
    // precondition: the two constraint equations (checked on the raw values)
    for (int j = 0; j <= 1; ++j) {
        Rational aj = (j == 0) ? a0 : a1, bj = (j == 0) ? b0 : b1;
        Rational rj = (j == 0) ? r0 : r1, hj = (j == 0) ? h0 : h1;
        Rational gd = gamma * delta;
        if (gamma * bj + delta * aj + gd * rj + gd * gd * hj != 0) {
            rep.precondition_ok = false;
            rep.precondition_detail = "constraint violated at j = " + std::to_string(j);
            return rep;
        }
    }
    int site = 0;
    auto m = [&](const Rational& v) { return rdpid_detail::mutq(site, mutate, v); };
    Rational ga = m(gamma), de = m(delta), A0 = m(a0), B0 = m(b0), Rr0 = m(r0);
    // polynomial ring Q[x, y1, y2, y3]
    const std::size_t NV = 4;
    auto var = [&](std::size_t i) { return RForm::variable(NV, i, Rational(1)); };
    auto cnst = [&](const Rational& r) { return RForm::constant(NV, r); };
    RForm x = var(0);
    std::array<RForm, 3> yv = {var(1), var(2), var(3)};
    RForm Hx = cnst(h0);  // H(x) = 1 in this instance family
    RForm Q = Hx * (cnst(a1) * x + cnst(A0)) * (cnst(b1) * x + cnst(B0));
    RForm Rx = cnst(Rr0);
    RForm F1 = yv[0] * yv[1] * yv[2] + Q;
    RForm F2 = yv[0] + yv[1] + yv[2] - Rx;
    Rational gd = ga * de;
    bool all_eps = true, all_swap = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const RForm& yi = yv[i];
        const RForm& yi1 = yv[(i + 1) % 3];
        const RForm& yi2 = yv[(i + 2) % 3];
        RForm eps = F1 - Hx * (cnst(a1) * x + cnst(A0) + cnst(ga) * yi) * (cnst(b1) * x + cnst(B0) + cnst(de) * yi) -
                    yi * (yi1 + cnst(gd) * Hx) * (yi2 + cnst(gd) * Hx);
        RForm expected = -cnst(gd) * Hx * yi * F2;
        all_eps = all_eps && (eps == expected);
        // the swap congruence: -a1 x + a0 + gamma y_{i-1}
        //   = -(a1 x + a0 + gamma y_i) - gamma(y_{i+1} + gamma delta H) + gamma F2 + (2 a0 + gamma^2 delta H + gamma R)
        RForm lhs = -cnst(a1) * x + cnst(A0) + cnst(ga) * yi2;  // y_{i-1} = y_{i+2}
        RForm rhs = -(cnst(a1) * x + cnst(A0) + cnst(ga) * yi) - cnst(ga) * (yi1 + cnst(gd) * Hx) + cnst(ga) * F2 +
                    cnst(2 * A0 + ga * ga * de * h0 + ga * Rr0);
        all_swap = all_swap && (lhs == rhs);
    }
    rep.checks.push_back({"epsilon-identity", all_eps, "eps = -gamma delta H y_i F_2 for each i"});
    rep.checks.push_back({"swap-congruence", all_swap, "transposition identity modulo (F_2)"});
    rep.checks.push_back({"swap-constant-vanishes", 2 * A0 + ga * ga * de * h0 + ga * Rr0 == 0, "2 a0 + gamma^2 delta H + gamma R = 0"});
    // cyclic stability of the ideals I_i = (a1 x + a0 + gamma y_{i-1}, y_i + gamma delta H)
    bool cyc = true;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<RForm> rho = {x, yv[1], yv[2], yv[0]};  // y_i -> y_{i+1}
        RForm g1 = cnst(a1) * x + cnst(A0) + cnst(ga) * yv[(i + 2) % 3];
        RForm g2 = yv[i] + cnst(gd) * Hx;
        RForm g1n = cnst(a1) * x + cnst(A0) + cnst(ga) * yv[(i + 3) % 3];
        RForm g2n = yv[(i + 1) % 3] + cnst(gd) * Hx;
        cyc = cyc && (g1.subst(rho) == g1n) && (g2.subst(rho) == g2n);
    }
    rep.checks.push_back({"cyclic-ideal-stability", cyc, "(123) I_i = I_{i+1}"});
    rep.mutation_sites = site;
    return rep;
}

// A_m ideal relations for F = xy + prod (z - alpha_i) with symmetric roots
// (alpha_{m+2-i} = -alpha_i): the factor identities g_j h_j = prod(z - a_i),
// the tau images g_j(-z) = (-1)^j h_{m+1-j}, the unit F |-> (-1)^{m+1} F, and
// invariance under sigma = (zeta_n x, zeta_n^{-1} y, z).
inline IdentityReport verify_am_ideal_case(std::size_t m, const std::vector<Rational>& half_roots, std::uint64_t n_cyclic = 5,
                                           int mutate = -1) {
    IdentityReport rep;
    rep.case_id = (m == 1) ? "A1-ideal" : "Am-ideal";
    std::size_t nroots = m + 1;
    std::vector<Rational> alpha;
    for (const auto& r : half_roots) alpha.push_back(r);
    if (nroots % 2 == 1) alpha.push_back(0);
    for (std::size_t i = half_roots.size(); i-- > 0;) alpha.push_back(-half_roots[i]);
    if (alpha.size() != nroots || half_roots.size() != nroots / 2) {
        rep.precondition_ok = false;
        rep.precondition_detail = "need floor((m+1)/2) positive roots";
        return rep;
    }
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] == alpha[j]) {
                rep.precondition_ok = false;
                rep.precondition_detail = "roots must be distinct";
                return rep;
            }
    int site = 0;
    std::vector<CycloElem> a;
    for (const auto& r : alpha) a.push_back(rdpid_detail::mut(site, mutate, CycloElem::rational(r)));
    const std::size_t NV = 3;
    CForm x = CForm::variable(NV, 0, CycloElem(1));
    CForm y = CForm::variable(NV, 1, CycloElem(1));
    CForm z = CForm::variable(NV, 2, CycloElem(1));
    auto prod_range = [&](std::size_t from, std::size_t to) {
        CForm p = CForm::constant(NV, CycloElem(1));
        for (std::size_t i = from; i < to; ++i) p = p * (z - CForm::constant(NV, a[i]));
        return p;
    };
    CForm full = prod_range(0, nroots);
    CForm F = x * y + full;
    bool gh_ok = true, tau_ok = true;
    std::vector<CForm> tau_sub = {y, (m % 2 == 1) ? x : -x, -z};  // dihedral for odd m, dicyclic for even m
    for (std::size_t j = 1; j <= m; ++j) {
        CForm gj = prod_range(0, j);
        CForm hj = prod_range(j, nroots);
        gh_ok = gh_ok && (gj * hj == full);
        CForm gj_neg = gj.subst({x, y, -z});
        CycloElem sign((j % 2 == 0) ? 1 : -1);
        CForm h_other = prod_range(m + 1 - j, nroots);
        tau_ok = tau_ok && (CForm::constant(NV, sign) * gj_neg == h_other);
    }
    rep.checks.push_back({"factor-identities", gh_ok, "g_j h_j equals the full product for every j"});
    rep.checks.push_back({"tau-factor-images", tau_ok, "(-1)^j g_j(-z) = h_{m+1-j}"});
    CForm tauF = F.subst(tau_sub);
    CycloElem unit(((m + 1) % 2 == 0) ? 1 : -1);
    rep.checks.push_back({"tau-unit", tauF == CForm::constant(NV, unit) * F, "tau(F) = (-1)^{m+1} F"});
    // sigma stability of I_j = (x, g_j)
    CycloElem zn = CycloElem::zeta(n_cyclic);
    std::vector<CForm> sig = {CForm::constant(NV, zn) * x, CForm::constant(NV, zn.inverse()) * y, z};
    bool sig_ok = F.subst(sig) == F;
    for (std::size_t j = 1; j <= m && sig_ok; ++j) {
        CForm gj = prod_range(0, j);
        sig_ok = (gj.subst(sig) == gj) && (x.subst(sig) == CForm::constant(NV, zn) * x);
    }
    rep.checks.push_back({"sigma-ideal-stability", sig_ok, "sigma fixes F and each ideal (x, g_j)"});
    rep.mutation_sites = site;
    return rep;
}

inline IdentityReport verify_a1_ideal_case(const Rational& alpha, int mutate = -1) {
    auto rep = verify_am_ideal_case(1, {alpha}, 4, mutate);
    rep.case_id = "A1-ideal";
    return rep;
}

// ---------------------------------------------------------------------------
// Symplecticness audit: for every normal-form case and listed generator, the
// weight of the action on the local 2-form, det(action) / prod(unit on F_j),
// must equal 1.
// ---------------------------------------------------------------------------

struct WeightAuditRow {
    std::string case_name;
    std::string generator;
    bool pass = false;
    std::string detail;
};

namespace rdpid_detail {

// The unique scalar e with action(F) = e F, if it exists.
inline std::optional<CycloElem> action_unit(const CForm& F, const std::vector<CForm>& images) {
    CForm FF = F.subst(images);
    if (F.is_zero()) return std::nullopt;
    const auto& [e0, c0] = *F.terms().begin();
    CycloElem e = FF.coefficient(e0) / c0;
    if (FF == CForm::constant(F.nvars(), e) * F) return e;
    return std::nullopt;
}

inline CycloElem det3(const std::vector<std::vector<CycloElem>>& m) {
    Matrix<CycloElem> a(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) a(i, j) = m[i][j];
    // cofactor expansion via charpoly would be overkill; Gaussian elimination
    // over the field Q(zeta) is exact
    std::size_t n = m.size();
    Matrix<CycloElem> mm = a;
    CycloElem det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && mm(piv, k) == CycloElem()) ++piv;
        if (piv == n) return CycloElem(0);
        if (piv != k) {
            mm.swap_rows(piv, k);
            det = -det;
        }
        det = det * mm(k, k);
        CycloElem inv = mm(k, k).inverse();
        for (std::size_t j = k; j < n; ++j) mm(k, j) = inv * mm(k, j);
        for (std::size_t i = k + 1; i < n; ++i) {
            CycloElem f = mm(i, k);
            if (f == CycloElem()) continue;
            for (std::size_t j = k; j < n; ++j) mm(i, j) = mm(i, j) - f * mm(k, j);
        }
    }
    return det;
}

struct AuditEntry {
    std::string case_name;
    std::string generator;
    std::vector<CForm> forms;            // F, or {F1, F2} for the complete intersection
    std::vector<std::vector<CycloElem>> action;  // matrix: image of variable i is sum_j action[i][j] var_j
};

inline std::vector<CForm> images_of(const AuditEntry& e, std::size_t nv) {
    std::vector<CForm> images;
    for (std::size_t i = 0; i < nv; ++i) {
        CForm img(nv);
        for (std::size_t j = 0; j < nv; ++j) {
            if (e.action[i][j] == CycloElem()) continue;
            Expo ex(nv, 0);
            ex[j] = 1;
            img.add_term(ex, e.action[i][j]);
        }
        images.push_back(img);
    }
    return images;
}

}  // namespace rdpid_detail

// Runs the weight audit over the embedded table of (case, generator) pairs.
inline std::vector<WeightAuditRow> symplectic_weight_audit() {
    using rdpid_detail::AuditEntry;
    std::vector<AuditEntry> table;
    CycloElem one(1), zero(0), minus(-1);
    CycloElem z3 = CycloElem::zeta(3), z4 = CycloElem::zeta(4), z5 = CycloElem::zeta(5), z6 = CycloElem::zeta(6);
    auto V = [](std::size_t nv, std::size_t i) { return CForm::variable(nv, i, CycloElem(1)); };
    auto Cn = [](std::size_t nv, const Rational& v) { return CForm::constant(nv, CycloElem::rational(v)); };
    auto diag3 = [&](CycloElem a, CycloElem b, CycloElem c) {
        return std::vector<std::vector<CycloElem>>{{a, zero, zero}, {zero, b, zero}, {zero, zero, c}};
    };
    {
        CForm x = V(3, 0), y = V(3, 1), z = V(3, 2);
        CForm q00 = Cn(3, Rational(1, 2)), q10 = Cn(3, Rational(2, 3)), q20 = Cn(3, Rational(3)), q02 = Cn(3, Rational(5, 7)),
              q12 = Cn(3, Rational(-1, 2)), q22 = Cn(3, Rational(4, 3));
        auto flip = diag3(minus, one, minus);
        table.push_back({"E6", "(x,y,z) -> (-x,y,-z)", {x * x + y.pow(3) + z.pow(4) + q00 + q10 * y + q02 * z * z + q12 * y * z * z}, flip});
        table.push_back({"E6^0", "(x,y,z) -> (-x,y,-z)",
                         {x * x + y.pow(3) + z.pow(4) + q00 + q10 * y + q20 * y * y + q02 * z * z + q12 * y * z * z +
                          q22 * y * y * z * z},
                         flip});
        table.push_back({"E6^1", "(x,y,z) -> (-x,y,-z)",
                         {x * x + y.pow(3) + y * y * z * z + z.pow(4) + q00 + q10 * y + q20 * y * y + q02 * z * z}, flip});
        // D_m, m = 5
        table.push_back({"Dm", "(x,y,z) -> (-x,y,-z)",
                         {x * x + y * z * z + y.pow(4) + q00 + q10 * y + q20 * y * y + q02 * y.pow(3)}, flip});
        // D_4 in standard form (deformation terms chosen G-invariant)
        CForm q000 = Cn(3, Rational(1, 5)), q011 = Cn(3, Rational(2, 5)), q100 = Cn(3, Rational(3, 5));
        CForm d4 = x * x + y.pow(3) + z.pow(3) + q000 + q011 * y * z;
        auto rot = diag3(one, z3, z3.inverse());
        std::vector<std::vector<CycloElem>> swp = {{minus, zero, zero}, {zero, zero, one}, {zero, one, zero}};
        table.push_back({"D4", "(123)", {d4}, rot});
        table.push_back({"D4", "(12)", {d4}, swp});
        CForm d40 = x * x + y.pow(3) + z.pow(3) + q000 + q100 * x + q011 * y * z + Cn(3, Rational(1, 7)) * x * y * z;
        table.push_back({"D4^0", "(123)", {d40}, rot});
        CForm d41 = x * x + y.pow(3) + z.pow(3) + x * y * z + q000 + q100 * x;
        table.push_back({"D4^1", "(123)", {d41}, rot});
        // A_m families
        CForm am_c = x * y + z.pow(5) + Cn(3, Rational(1, 2)) * z.pow(3) + Cn(3, Rational(2)) * z * z + Cn(3, Rational(5)) * z +
                     Cn(3, Rational(1, 3));
        table.push_back({"Am-Cn", "sigma", {am_c}, diag3(z5, z5.inverse(), one)});
        CForm am_dih = x * y + z.pow(4) + Cn(3, Rational(3, 2)) * z * z + Cn(3, Rational(7));
        table.push_back({"Am-Dih", "sigma", {am_dih}, diag3(z6, z6.inverse(), one)});
        std::vector<std::vector<CycloElem>> tau_dih = {{zero, one, zero}, {one, zero, zero}, {zero, zero, minus}};
        table.push_back({"Am-Dih", "tau", {am_dih}, tau_dih});
        CForm am_dic = x * y + z.pow(5) + Cn(3, Rational(1, 2)) * z.pow(3) + Cn(3, Rational(5)) * z;
        table.push_back({"Am-Dic", "sigma", {am_dic}, diag3(z4, z4.inverse(), one)});
        std::vector<std::vector<CycloElem>> tau_dic = {{zero, one, zero}, {-one, zero, zero}, {zero, zero, minus}};
        table.push_back({"Am-Dic", "tau", {am_dic}, tau_dic});
    }
    {
        // D_4 alternative complete-intersection form in (x, y1, y2, y3)
        CForm x = V(4, 0), y1 = V(4, 1), y2 = V(4, 2), y3 = V(4, 3);
        auto rho = std::vector<std::vector<CycloElem>>{
            {one, zero, zero, zero}, {zero, zero, one, zero}, {zero, zero, zero, one}, {zero, one, zero, zero}};
        auto swap12 = std::vector<std::vector<CycloElem>>{
            {minus, zero, zero, zero}, {zero, zero, one, zero}, {zero, one, zero, zero}, {zero, zero, zero, one}};
        CForm Qp = x * x + Cn(4, Rational(1, 2));
        CForm Rp = Cn(4, Rational(1, 3));
        std::vector<CForm> ci = {y1 * y2 * y3 + Qp, y1 + y2 + y3 - Rp};
        table.push_back({"D4-alt", "(123)", ci, rho});
        table.push_back({"D4-alt", "(12)", ci, swap12});
        CForm Q0 = x * x + Cn(4, Rational(1, 5)) * x.pow(3) + Cn(4, Rational(2, 5)) * x * x + Cn(4, Rational(3, 5)) * x +
                   Cn(4, Rational(4, 5));
        CForm R0 = Cn(4, Rational(1, 7)) + Cn(4, Rational(2, 7)) * x;
        table.push_back({"D4^0-alt", "(123)", {y1 * y2 * y3 + Q0, y1 + y2 + y3 - R0}, rho});
        CForm Q1 = x.pow(3) + x * x + Cn(4, Rational(1, 5)) * x + Cn(4, Rational(4, 5));
        CForm R1 = x + Cn(4, Rational(1, 7)) + Cn(4, Rational(2, 7)) * x;
        table.push_back({"D4^1-alt", "(123)", {y1 * y2 * y3 + Q1, y1 + y2 + y3 - R1}, rho});
    }

    std::vector<WeightAuditRow> rows;
    for (const auto& entry : table) {
        WeightAuditRow row;
        row.case_name = entry.case_name;
        row.generator = entry.generator;
        std::size_t nv = entry.forms.front().nvars();
        auto images = rdpid_detail::images_of(entry, nv);
        CycloElem det = rdpid_detail::det3(entry.action);
        CycloElem eprod(1);
        bool ok = true;
        for (const auto& f : entry.forms) {
            auto e = rdpid_detail::action_unit(f, images);
            if (!e) {
                ok = false;
                row.detail = "action does not preserve the form";
                break;
            }
            eprod = eprod * *e;
        }
        if (ok) {
            CycloElem weight = det / eprod;
            row.pass = (weight == CycloElem(1));
            row.detail = "weight = det(action)/prod(e_j) = " + weight.to_string();
        }
        rows.push_back(row);
    }
    return rows;
}

// Dispatcher over the built-in instances of every case.
inline std::vector<IdentityReport> verify_section3_identities(const std::string& which = "all") {
    std::vector<IdentityReport> reps;
    auto want = [&](const char* id) { return which == "all" || which == id; };
    if (want("Dm")) {
        reps.push_back(verify_dm_case({Rational(1), Rational(2)}));
        reps.push_back(verify_dm_case({Rational(1), Rational(2), Rational(3)}));
    }
    if (want("E6")) reps.push_back(verify_e6_case());
    if (want("D4-alt")) {
        reps.push_back(verify_d4_alt_case(Rational(1), Rational(2)));
        reps.push_back(verify_d4_alt_case(Rational(2), Rational(3)));
    }
    if (want("Am-ideal")) {
        reps.push_back(verify_am_ideal_case(3, {Rational(1), Rational(2)}, 6));
        reps.push_back(verify_am_ideal_case(4, {Rational(1), Rational(2)}, 5));
    }
    if (want("A1-ideal")) reps.push_back(verify_a1_ideal_case(Rational(2)));
    if (reps.empty()) throw input_error("verify_section3_identities: unknown case id " + which);
    return reps;
}

}  // namespace k3x
