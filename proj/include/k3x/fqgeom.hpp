// Projective geometry over small finite fields: points and lines of P^3 in
// canonical form, exhaustive line enumeration on quartic surfaces, incidence
// pairings on the span of lines, images of lines under rational maps, plane
// curve singularity scans, sextic interpolation, and identities modulo a
// surface equation.
#pragma once

#include "factor_fq.hpp"
#include "fq.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace k3x {

using FqForm = MPoly<FqElem>;

// Canonical projective point: indices of field elements, scaled so the first
// nonzero coordinate is 1.
struct ProjPoint {
    std::vector<std::uint32_t> c;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c == b.c; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c < b.c; }
};

inline ProjPoint canonical_point(const FqFieldPtr& F, std::vector<FqElem> v) {
    std::size_t k = 0;
    while (k < v.size() && v[k].is_zero()) ++k;
    if (k == v.size()) throw input_error("canonical_point: zero vector");
    FqElem inv = v[k].inverse();
    ProjPoint p;
    p.c.reserve(v.size());
    for (auto& x : v) {
        FqElem y = x * inv;
        p.c.push_back(y.is_zero() ? 0 : y.index());
    }
    (void)F;
    return p;
}

inline std::vector<FqElem> point_elems(const FqFieldPtr& F, const ProjPoint& p) {
    std::vector<FqElem> v;
    v.reserve(p.c.size());
    for (auto idx : p.c) v.push_back(FqElem::from_index(F, idx));
    return v;
}

// All canonical points of P^{n-1}(F_q).
inline std::vector<ProjPoint> all_projective_points(const FqFieldPtr& F, std::size_t n) {
    std::vector<ProjPoint> pts;
    std::uint64_t q = F->size();
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::size_t free = n - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free; ++i) count *= q;
        for (std::uint64_t code = 0; code < count; ++code) {
            ProjPoint p;
            p.c.assign(n, 0);
            p.c[lead] = 1;
            std::uint64_t rest = code;
            for (std::size_t i = lead + 1; i < n; ++i) {
                p.c[i] = static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
            pts.push_back(std::move(p));
        }
    }
    return pts;
}

// A line of P^3 in canonical form: the two rows of the reduced row-echelon
// basis of its span, plus Pluecker coordinates (p01,p02,p03,p12,p13,p23)
// scaled so the first nonzero one is 1. The Pluecker vector is the
// deduplication key.
struct ProjLine {
    std::array<std::array<std::uint32_t, 4>, 2> span{};
    std::array<std::uint32_t, 6> pluecker{};
    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.pluecker == b.pluecker; }
    friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.pluecker < b.pluecker; }
};

namespace fqgeom_detail {

inline std::array<std::uint32_t, 6> pluecker_of(const FqFieldPtr& F, const std::array<std::vector<FqElem>, 2>& rows) {
    std::array<FqElem, 6> p;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p[k++] = rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i];
    std::size_t lead = 0;
    while (lead < 6 && p[lead].is_zero()) ++lead;
    if (lead == 6) throw input_error("pluecker: dependent rows");
    FqElem inv = p[lead].inverse();
    std::array<std::uint32_t, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) {
        FqElem y = p[i] * inv;
        out[i] = y.is_zero() ? 0 : y.index();
    }
    (void)F;
    return out;
}

}  // namespace fqgeom_detail

// The line through two independent points, in canonical form.
inline ProjLine line_through(const FqFieldPtr& F, std::vector<FqElem> a, std::vector<FqElem> b) {
    if (a.size() != 4 || b.size() != 4) throw input_error("line_through: points must lie in P^3");
    // reduced row echelon form of the 2x4 span
    std::array<std::vector<FqElem>, 2> rows = {std::move(a), std::move(b)};
    std::size_t la = 0;
    while (la < 4 && rows[0][la].is_zero() && rows[1][la].is_zero()) ++la;
    if (la == 4) throw input_error("line_through: zero span");
    if (rows[0][la].is_zero()) std::swap(rows[0], rows[1]);
    FqElem inv = rows[0][la].inverse();
    for (auto& x : rows[0]) x = inv * x;
    if (!rows[1][la].is_zero()) {
        FqElem f = rows[1][la];
        for (std::size_t i = 0; i < 4; ++i) rows[1][i] = rows[1][i] - f * rows[0][i];
    }
    std::size_t lb = 0;
    while (lb < 4 && rows[1][lb].is_zero()) ++lb;
    if (lb == 4) throw input_error("line_through: points coincide");
    FqElem invb = rows[1][lb].inverse();
    for (auto& x : rows[1]) x = invb * x;
    if (!rows[0][lb].is_zero()) {
        FqElem f = rows[0][lb];
        for (std::size_t i = 0; i < 4; ++i) rows[0][i] = rows[0][i] - f * rows[1][i];
    }
    ProjLine l;
    for (int r = 0; r < 2; ++r)
        for (std::size_t i = 0; i < 4; ++i) l.span[r][i] = rows[r][i].is_zero() ? 0 : rows[r][i].index();
    l.pluecker = fqgeom_detail::pluecker_of(F, rows);
    return l;
}

inline std::array<std::vector<FqElem>, 2> line_span_elems(const FqFieldPtr& F, const ProjLine& l) {
    std::array<std::vector<FqElem>, 2> rows;
    for (int r = 0; r < 2; ++r)
        for (std::size_t i = 0; i < 4; ++i) rows[r].push_back(FqElem::from_index(F, l.span[r][i]));
    return rows;
}

// The q+1 canonical points on a line.
inline std::vector<ProjPoint> points_on_line(const FqFieldPtr& F, const ProjLine& l) {
    auto rows = line_span_elems(F, l);
    std::vector<ProjPoint> pts;
    pts.push_back(canonical_point(F, rows[0]));
    for (std::uint64_t t = 0; t < F->size(); ++t) {
        std::vector<FqElem> v(4);
        FqElem tv = FqElem::from_index(F, t);
        for (std::size_t i = 0; i < 4; ++i) v[i] = tv * rows[0][i] + rows[1][i];
        pts.push_back(canonical_point(F, v));
    }
    return pts;
}

// Converts a homogeneous form to a flat monomial list for fast evaluation.
struct MonomialForm {
    struct Term {
        std::uint32_t coeff;
        std::array<std::uint8_t, 4> e;
    };
    std::vector<Term> terms;
    unsigned degree = 0;
};

inline MonomialForm flatten_quartic(const FqForm& S) {
    if (S.nvars() != 4) throw input_error("flatten: expected 4 variables");
    int d = S.total_degree();
    if (d <= 0 || !S.is_homogeneous(static_cast<unsigned>(d))) throw input_error("flatten: form not homogeneous");
    MonomialForm out;
    out.degree = static_cast<unsigned>(d);
    for (const auto& [e, c] : S.terms()) {
        MonomialForm::Term t;
        t.coeff = c.index();
        for (int i = 0; i < 4; ++i) t.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(i)]);
        out.terms.push_back(t);
    }
    return out;
}

struct LineEnumeration {
    std::vector<ProjLine> lines;     // lines contained in the surface, sorted canonically
    std::uint64_t total_scanned = 0; // all lines of P^3(F_q)
};

// Exhaustive scan of the lines of P^3(F_q) (canonical row-echelon
// enumeration, each line exactly once), keeping those on which the form
// vanishes identically. The containment test expands the restriction of the
// form to the line as a binary form and checks all its coefficients.
inline LineEnumeration enumerate_lines(const FqForm& S, const FqFieldPtr& F) {
    if (F->size() == 0 || F->size() > 128) throw resource_error("enumerate_lines: field too large (q <= 128)");
    if (!F->has_tables()) throw resource_error("enumerate_lines: field tables unavailable");
    MonomialForm form = flatten_quartic(S);
    const std::uint32_t q = static_cast<std::uint32_t>(F->size());
    const FqField& K = *F;
    unsigned deg = form.degree;

    auto eval_at = [&](const std::array<std::uint32_t, 4>& pt) -> std::uint32_t {
        std::uint32_t acc = 0;
        for (const auto& t : form.terms) {
            std::uint32_t v = t.coeff;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < t.e[static_cast<std::size_t>(i)]; ++k) v = K.mul_idx(v, pt[static_cast<std::size_t>(i)]);
            acc = K.add_idx(acc, v);
        }
        return acc;
    };

    // coefficients of the restriction S(s*r0 + t*r1): binary form of degree `deg`
    auto restriction_vanishes = [&](const std::array<std::uint32_t, 4>& r0, const std::array<std::uint32_t, 4>& r1) -> bool {
        std::vector<std::uint32_t> acc(deg + 1, 0);
        std::vector<std::uint32_t> cur, next;
        for (const auto& t : form.terms) {
            cur.assign(1, t.coeff);
            for (int i = 0; i < 4; ++i) {
                for (int k = 0; k < t.e[static_cast<std::size_t>(i)]; ++k) {
                    next.assign(cur.size() + 1, 0);
                    for (std::size_t j = 0; j < cur.size(); ++j) {
                        if (!cur[j]) continue;
                        next[j] = K.add_idx(next[j], K.mul_idx(cur[j], r0[static_cast<std::size_t>(i)]));
                        next[j + 1] = K.add_idx(next[j + 1], K.mul_idx(cur[j], r1[static_cast<std::size_t>(i)]));
                    }
                    cur.swap(next);
                }
            }
            for (std::size_t j = 0; j < cur.size(); ++j) acc[j] = K.add_idx(acc[j], cur[j]);
        }
        for (auto c : acc)
            if (c) return false;
        return true;
    };

    LineEnumeration out;
    std::array<std::uint32_t, 4> r0{}, r1{};
    for (std::size_t pi = 0; pi < 4; ++pi) {
        for (std::size_t pj = pi + 1; pj < 4; ++pj) {
            std::vector<std::size_t> free0, free1;
            for (std::size_t k = 0; k < 4; ++k) {
                if (k == pi || k == pj) continue;
                if (k > pi) free0.push_back(k);
                if (k > pj) free1.push_back(k);
            }
            std::uint64_t n0 = 1, n1 = 1;
            for (std::size_t i = 0; i < free0.size(); ++i) n0 *= q;
            for (std::size_t i = 0; i < free1.size(); ++i) n1 *= q;
            for (std::uint64_t c0 = 0; c0 < n0; ++c0) {
                r0 = {0, 0, 0, 0};
                r0[pi] = 1;
                std::uint64_t rest = c0;
                for (auto k : free0) {
                    r0[k] = static_cast<std::uint32_t>(rest % q);
                    rest /= q;
                }
                // early check at the point r0
                std::uint32_t v0 = eval_at(r0);
                for (std::uint64_t c1 = 0; c1 < n1; ++c1) {
                    r1 = {0, 0, 0, 0};
                    r1[pj] = 1;
                    std::uint64_t rest1 = c1;
                    for (auto k : free1) {
                        r1[k] = static_cast<std::uint32_t>(rest1 % q);
                        rest1 /= q;
                    }
                    ++out.total_scanned;
                    if (v0 != 0) continue;
                    if (eval_at(r1) != 0) continue;
                    if (!restriction_vanishes(r0, r1)) continue;
                    std::vector<FqElem> a, b;
                    for (std::size_t k = 0; k < 4; ++k) {
                        a.push_back(FqElem::from_index(F, r0[k]));
                        b.push_back(FqElem::from_index(F, r1[k]));
                    }
                    out.lines.push_back(line_through(F, a, b));
                }
            }
        }
    }
    std::sort(out.lines.begin(), out.lines.end());
    for (std::size_t i = 0; i + 1 < out.lines.size(); ++i)
        if (out.lines[i] == out.lines[i + 1]) throw domain_error("enumerate_lines: duplicate canonical line");
    return out;
}

// -2 on the diagonal, 1 for distinct meeting lines, 0 for skew lines.
inline int intersection_number(const FqFieldPtr& F, const ProjLine& a, const ProjLine& b) {
    if (a == b) return -2;
    auto ra = line_span_elems(F, a), rb = line_span_elems(F, b);
    Matrix<FqElem> m(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m(0, j) = ra[0][j];
        m(1, j) = ra[1][j];
        m(2, j) = rb[0][j];
        m(3, j) = rb[1][j];
    }
    return m.rank() <= 3 ? 1 : 0;
}

// Integer vector over the basis {h} followed by lines in a fixed order.
struct DivisorClass {
    std::vector<Integer> coords;  // size = 1 + number of lines
};

// Gram data for the span of {h} and the lines of one surface.
class LineIncidence {
public:
    LineIncidence(const FqFieldPtr& F, std::vector<ProjLine> lines) : F_(F), lines_(std::move(lines)) {
        std::size_t n = lines_.size();
        gram_.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                int v = intersection_number(F_, lines_[i], lines_[j]);
                gram_[i][j] = gram_[j][i] = v;
            }
    }

    std::size_t count() const { return lines_.size(); }
    const std::vector<ProjLine>& lines() const { return lines_; }
    int line_pairing(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    // Pairing on the span of {h} + lines: h.h = 4, h.line = 1.
    Integer pairing(const DivisorClass& u, const DivisorClass& v) const {
        std::size_t n = lines_.size() + 1;
        if (u.coords.size() != n || v.coords.size() != n) throw input_error("class_pairing: index out of basis");
        Integer acc = 0;
        acc += u.coords[0] * v.coords[0] * 4;
        for (std::size_t i = 1; i < n; ++i) acc += u.coords[0] * v.coords[i] + u.coords[i] * v.coords[0];
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j) {
                if (u.coords[i] == 0 || v.coords[j] == 0) continue;
                acc += u.coords[i] * v.coords[j] * gram_[i - 1][j - 1];
            }
        return acc;
    }

    // Full integer Gram matrix of {h} + all lines.
    IntMatrix full_gram() const {
        std::size_t n = lines_.size() + 1;
        IntMatrix g(n, n);
        g(0, 0) = 4;
        for (std::size_t i = 1; i < n; ++i) {
            g(0, i) = 1;
            g(i, 0) = 1;
            for (std::size_t j = 1; j < n; ++j) g(i, j) = gram_[i - 1][j - 1];
        }
        return g;
    }

private:
    FqFieldPtr F_;
    std::vector<ProjLine> lines_;
    std::vector<std::vector<int>> gram_;
};

struct MapImage {
    bool constant = false;
    ProjPoint image;                    // when constant
    std::vector<ProjPoint> witnesses;   // two distinct images otherwise
    std::size_t indeterminate_points = 0;
};

// Image of a line under [f0 : f1 : f2] with equal-degree components.
inline MapImage image_under_map(const FqFieldPtr& F, const ProjLine& l, const std::array<FqForm, 3>& map) {
    MapImage out;
    std::set<ProjPoint> images;
    for (const auto& pt : points_on_line(F, l)) {
        auto v = point_elems(F, pt);
        std::vector<FqElem> img = {map[0].eval(v), map[1].eval(v), map[2].eval(v)};
        if (img[0].is_zero() && img[1].is_zero() && img[2].is_zero()) {
            ++out.indeterminate_points;
            continue;
        }
        images.insert(canonical_point(F, img));
        if (images.size() >= 2) break;
    }
    if (images.empty()) throw input_error("image_under_map: map undefined along the line");
    if (images.size() == 1) {
        out.constant = true;
        out.image = *images.begin();
    } else {
        out.witnesses.assign(images.begin(), images.end());
    }
    return out;
}

enum class SingKind { Node, Cusp, Worse };

struct PlaneSingularity {
    ProjPoint point;
    SingKind kind;
};

// Scans all rational points of P^2(F_q); a singular point is one where G and
// its three partials vanish. The kind comes from the quadratic part of the
// translated, dehomogenized equation.
inline std::vector<PlaneSingularity> plane_curve_singularities(const FqForm& G, const FqFieldPtr& F) {
    if (G.nvars() != 3) throw input_error("plane_curve_singularities: need a ternary form");
    if (F->size() == 0 || F->size() > 128) throw resource_error("plane_curve_singularities: field too large");
    std::array<FqForm, 3> d = {G.derivative(0), G.derivative(1), G.derivative(2)};
    std::vector<PlaneSingularity> out;
    for (const auto& pt : all_projective_points(F, 3)) {
        auto v = point_elems(F, pt);
        if (!G.eval(v).is_zero()) continue;
        bool sing = true;
        for (int i = 0; i < 3 && sing; ++i) sing = d[static_cast<std::size_t>(i)].eval(v).is_zero();
        if (!sing) continue;
        // dehomogenize at the leading coordinate (value 1) and translate to the origin
        std::size_t lead = 0;
        while (pt.c[lead] == 0) ++lead;
        FqForm local = G.set_var(lead, FqElem::from_int(F, 1));
        std::vector<FqElem> offs;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != lead) offs.push_back(FqElem::from_index(F, pt.c[i]));
        local = local.translate(offs);
        FqForm q2 = local.homogeneous_part(2);
        SingKind kind;
        if (q2.is_zero()) {
            kind = SingKind::Worse;
        } else {
            // discriminant of a u^2 + b uv + c v^2
            Expo e20 = {2, 0}, e11 = {1, 1}, e02 = {0, 2};
            FqElem a = q2.coefficient(e20), b = q2.coefficient(e11), c = q2.coefficient(e02);
            FqElem disc = b * b - FqElem(4) * a * c;
            kind = disc.is_zero() ? SingKind::Cusp : SingKind::Node;
        }
        out.push_back({pt, kind});
    }
    return out;
}

// Basis of the space of sextics singular at each given point: for every point
// the conditions are vanishing of the form and of its three partials (the
// partials carry the Euler redundancy, so each point imposes at most three
// independent conditions).
struct SexticInterpolation {
    std::vector<Expo> monomials;            // the 28 sextic exponents, fixed order
    std::vector<std::vector<FqElem>> basis; // coefficient vectors over `monomials`
};

inline SexticInterpolation interpolate_singular_sextics(const std::vector<ProjPoint>& points, const FqFieldPtr& F) {
    SexticInterpolation out;
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; a + b <= 6; ++b) out.monomials.push_back(Expo{a, b, 6 - a - b});
    std::set<ProjPoint> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw input_error("interpolate_singular_sextics: duplicate points");
    std::size_t cols = out.monomials.size();
    Matrix<FqElem> cond(4 * points.size(), cols);
    std::size_t row = 0;
    for (const auto& pt : points) {
        auto v = point_elems(F, pt);
        for (std::size_t m = 0; m < cols; ++m) {
            const Expo& e = out.monomials[m];
            FqForm mono(3);
            mono.add_term(e, FqElem::from_int(F, 1));
            cond(row, m) = mono.eval(v);
            for (std::size_t d = 0; d < 3; ++d) cond(row + 1 + d, m) = mono.derivative(d).eval(v);
        }
        row += 4;
    }
    out.basis = cond.kernel_basis();
    return out;
}

// Exact equality of lhs and rhs modulo the given form, reducing the top
// powers of the chosen variable (the modulus must be monic in it up to a
// constant).
inline bool identity_mod_form(const FqForm& lhs, const FqForm& rhs, const FqForm& modulus, std::size_t reduction_variable) {
    FqForm diff = lhs - rhs;
    if (diff.is_zero()) return true;
    return diff.reduce_mod(modulus, reduction_variable).is_zero();
}

}  // namespace k3x
