// Dense exact matrices. Matrix<T> provides arithmetic and elimination over
// any exact field type; the Rational instantiation adds fraction-free
// (Bareiss) determinants, characteristic polynomials by evaluation and
// interpolation, and Smith normal form for integer matrices.
#pragma once

#include "intpoly.hpp"
#include "numeric.hpp"
#include "poly.hpp"

#include <utility>
#include <vector>

namespace k3x {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c, T()) {}
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw input_error("matrix product: inner dimensions differ");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

    // Rank over the fraction field via Gaussian elimination.
    std::size_t rank() const {
        Matrix m = *this;
        std::size_t r = 0;
        for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, j) == T()) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(piv, r);
            T inv = T(1) / m(r, j);
            for (std::size_t jj = j; jj < cols_; ++jj) m(r, jj) = inv * m(r, jj);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m(i, j) == T()) continue;
                T f = m(i, j);
                for (std::size_t jj = j; jj < cols_; ++jj) m(i, jj) = m(i, jj) - f * m(r, jj);
            }
            ++r;
        }
        return r;
    }

    std::size_t kernel_dimension() const { return cols_ - rank(); }

    // Basis of the right kernel, one vector per column of the result.
    std::vector<std::vector<T>> kernel_basis() const {
        Matrix m = *this;
        std::vector<std::ptrdiff_t> pivot_of_col(cols_, -1);
        std::size_t r = 0;
        for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, j) == T()) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(piv, r);
            T inv = T(1) / m(r, j);
            for (std::size_t jj = j; jj < cols_; ++jj) m(r, jj) = inv * m(r, jj);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m(i, j) == T()) continue;
                T f = m(i, j);
                for (std::size_t jj = j; jj < cols_; ++jj) m(i, jj) = m(i, jj) - f * m(r, jj);
            }
            pivot_of_col[j] = static_cast<std::ptrdiff_t>(r);
            ++r;
        }
        std::vector<std::vector<T>> basis;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (pivot_of_col[j] >= 0) continue;
            std::vector<T> v(cols_, T());
            v[j] = T(1);
            for (std::size_t jj = 0; jj < cols_; ++jj)
                if (pivot_of_col[jj] >= 0) v[jj] = T() - m(static_cast<std::size_t>(pivot_of_col[jj]), j);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Exact inverse; throws singular_error (with the rank) if not invertible.
    Matrix inverse() const {
        if (!is_square()) throw input_error("inverse: matrix not square");
        std::size_t n = rows_;
        Matrix m = *this, inv = identity(n);
        std::size_t r = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t piv = r;
            while (piv < n && m(piv, j) == T()) ++piv;
            if (piv == n) continue;
            m.swap_rows(piv, r);
            inv.swap_rows(piv, r);
            T f = T(1) / m(r, j);
            for (std::size_t jj = 0; jj < n; ++jj) {
                m(r, jj) = f * m(r, jj);
                inv(r, jj) = f * inv(r, jj);
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r || m(i, j) == T()) continue;
                T g = m(i, j);
                for (std::size_t jj = 0; jj < n; ++jj) {
                    m(i, jj) = m(i, jj) - g * m(r, jj);
                    inv(i, jj) = inv(i, jj) - g * inv(r, jj);
                }
            }
            ++r;
        }
        if (r != n) throw singular_error("inverse: singular matrix", static_cast<int>(rank()));
        return inv;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;

    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("matrix shapes differ");
    }
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

inline bool is_integral(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (den(m(i, j)) != 1) return false;
    return true;
}

inline IntMatrix to_int(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (den(m(i, j)) != 1) throw input_error("to_int: non-integral matrix entry");
            r(i, j) = num(m(i, j));
        }
    return r;
}

inline RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

// Fraction-free Bareiss determinant of an integer matrix.
inline Integer det_bareiss(IntMatrix m) {
    if (!m.is_square()) throw input_error("determinant: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

inline Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw input_error("determinant: matrix not square");
    // Clear denominators row by row so Bareiss runs over Z.
    IntMatrix mi(m.rows(), m.cols());
    Rational scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
        scale /= Rational(l);
        for (std::size_t j = 0; j < m.cols(); ++j) mi(i, j) = num(m(i, j) * Rational(l));
    }
    return scale * Rational(det_bareiss(std::move(mi)));
}

// det(xI - m) for an integer matrix, by Bareiss evaluation at deg+1 points
// and exact Lagrange interpolation.
inline IntPoly charpoly_int(const IntMatrix& m) {
    if (!m.is_square()) throw input_error("charpoly: matrix not square");
    std::size_t n = m.rows();
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? Integer(k) - m(i, j) : -m(i, j));
        xs.emplace_back(k);
        ys.emplace_back(det_bareiss(std::move(a)));
    }
    // Newton-form interpolation.
    std::size_t npts = xs.size();
    std::vector<Rational> coef(ys);
    for (std::size_t j = 1; j < npts; ++j)
        for (std::size_t i = npts - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    RatPoly p = RatPoly::constant(coef[npts - 1]);
    for (std::size_t i = npts - 1; i-- > 0;) {
        RatPoly lin(std::vector<Rational>{-xs[i], 1});
        p = p * lin + RatPoly::constant(coef[i]);
    }
    return to_int(p);
}

// det(xI - m); integer coefficients when m is integral, rational otherwise.
inline RatPoly charpoly(const RatMatrix& m) {
    if (!m.is_square()) throw input_error("charpoly: matrix not square");
    if (is_integral(m)) return to_rat(charpoly_int(to_int(m)));
    // Common-denominator trick: charpoly(m)(x) = D^-n g(D x) with g = charpoly(D m).
    Integer D = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) D = lcm(D, den(m(i, j)));
    IntMatrix mi(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mi(i, j) = num(m(i, j) * Rational(D));
    IntPoly g = charpoly_int(mi);
    std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    Rational scale = 1;  // D^{k-n} applied coefficientwise
    for (std::size_t k = 0; k <= n; ++k) {
        Rational Dk = 1;
        for (std::size_t t = 0; t < n - k; ++t) Dk /= Rational(D);
        c[k] = Rational(g[k]) * Dk;
    }
    return RatPoly(std::move(c));
}

struct SmithResult {
    // Full diagonal of the Smith form: d1 | d2 | ... followed by zeros.
    std::vector<Integer> invariants;
    Integer det = 0;  // 0 unless square and nonsingular
    std::size_t rank = 0;
    std::vector<Integer> nonzero() const {
        return {invariants.begin(), invariants.begin() + static_cast<std::ptrdiff_t>(rank)};
    }
};

// Smith normal form of an integer matrix.
inline SmithResult smith_normal_form(IntMatrix m) {
    std::size_t rows = m.rows(), cols = m.cols();
    int sign = 1;
    SmithResult out;
    std::size_t t = 0;
    auto abs_i = [](const Integer& v) { return v < 0 ? Integer(-v) : v; };
    while (t < rows && t < cols) {
        // Find the nonzero entry of least absolute value in the remaining block.
        std::size_t bi = t, bj = t;
        bool found = false;
        Integer best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m(i, j) == 0) continue;
                if (!found || abs_i(m(i, j)) < best) {
                    found = true;
                    best = abs_i(m(i, j));
                    bi = i;
                    bj = j;
                }
            }
        if (!found) break;
        if (bi != t) {
            m.swap_rows(bi, t);
            sign = -sign;
        }
        if (bj != t) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, bj), m(i, t));
            sign = -sign;
        }
        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Integer q = m(i, t) / m(t, t);
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) {
                    m.swap_rows(i, t);
                    sign = -sign;
                    reduced = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Integer q = m(t, j) / m(t, t);
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, j), m(i, t));
                    sign = -sign;
                    reduced = false;
                }
            }
            if (reduced) {
                // Enforce divisibility of the rest of the block by the pivot.
                for (std::size_t i = t + 1; i < rows && reduced; ++i)
                    for (std::size_t j = t + 1; j < cols && reduced; ++j)
                        if (m(i, j) % m(t, t) != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
                            reduced = false;
                        }
            }
        }
        ++t;
    }
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(m(i, i) < 0 ? Integer(-m(i, i)) : m(i, i));
    for (std::size_t i = t; i < std::min(rows, cols); ++i) out.invariants.push_back(0);
    if (rows == cols && t == rows) {
        out.det = sign;
        for (std::size_t i = 0; i < t; ++i) out.det *= m(i, i);
    }
    return out;
}

}  // namespace k3x
