// Finite fields F_{p^k} presented as F_p[g]/(modulus) for a fixed monic
// irreducible modulus (validated on construction). Small fields (q <= 512)
// additionally carry full add/mul/inv tables indexed by the radix-p encoding
// of the residue; the index-level API is what the enumeration hot paths use.
#pragma once

#include "numeric.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace k3x {

namespace fpdetail {

// Arithmetic on polynomials over F_p with ascending uint64 coefficients.
using FpPoly = std::vector<std::uint64_t>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on machine words; p is a small prime.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw domain_error("fp_inv: not invertible");
    return static_cast<std::uint64_t>((t % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = x % p;
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0) % p;
        r[i] = x % p;
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
    if (m.empty()) throw input_error("fp_mod: zero modulus");
    for (auto& c : a) c %= p;
    fp_trim(a);
    std::uint64_t linv = fp_inv(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t f = (a.back() * linv) % p;
        std::size_t shift = a.size() - m.size();
        if (f)
            for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p * p - f * m[i] % p) % p;
        a.pop_back();
        fp_trim(a);
        if (a.size() < m.size()) break;
    }
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = fp_inv(a.back(), p);
        for (auto& x : a) x = x * inv % p;
    }
    return a;
}

inline FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& m, std::uint64_t p) {
    FpPoly r{1};
    base = fp_mod(std::move(base), m, p);
    while (e > 0) {
        if ((e & 1) != 0) r = fp_mod(fp_mul(r, base, p), m, p);
        base = fp_mod(fp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// Rabin irreducibility test for a monic polynomial over F_p.
inline bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
    std::size_t k = f.size() - 1;
    if (k == 0) return false;
    FpPoly x{0, 1};
    // g^{p^k} == g mod f
    FpPoly xq = fp_powmod(x, ipow(Integer(p), k), f, p);
    if (fp_sub(xq, fp_mod(x, f, p), p) != FpPoly{}) return false;
    for (auto ell : prime_factors(k)) {
        FpPoly xe = fp_powmod(x, ipow(Integer(p), k / ell), f, p);
        FpPoly g = fp_gcd(fp_sub(xe, x, p), f, p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    return true;
}

}  // namespace fpdetail

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

class FqField : public std::enable_shared_from_this<FqField> {
public:
    static constexpr std::uint64_t kTableLimit = 512;

    static FqFieldPtr make(std::uint64_t p, std::vector<std::uint64_t> modulus) {
        return FqFieldPtr(new FqField(p, std::move(modulus)));
    }
    static FqFieldPtr prime_field(std::uint64_t p) { return make(p, {0, 1}); }
    // F_9 = F_3[i]/(i^2 + 1)
    static FqFieldPtr f9() { return make(3, {1, 0, 1}); }
    // F_81 = F_3[z]/(z^4 + z^3 + z^2 + z + 1); z is a primitive 5th root of unity
    static FqFieldPtr f81() { return make(3, {1, 1, 1, 1, 1}); }

    std::uint64_t p() const { return p_; }
    std::size_t degree() const { return k_; }
    const fpdetail::FpPoly& modulus() const { return modulus_; }
    // Field size, or 0 if p^k overflows uint64 (never the case at the scales used).
    std::uint64_t size() const { return q_; }
    bool has_tables() const { return !mul_.empty(); }

    // ---- index-level API (radix-p encoding of residues); table mode only ----
    std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg_idx(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t inv_idx(std::uint32_t a) const {
        if (a == 0) throw domain_error("Fq: inverse of zero");
        return inv_[a];
    }

    std::uint32_t encode(const fpdetail::FpPoly& rep) const {
        std::uint64_t idx = 0;
        for (std::size_t i = rep.size(); i-- > 0;) idx = idx * p_ + rep[i];
        return static_cast<std::uint32_t>(idx);
    }
    fpdetail::FpPoly decode(std::uint64_t idx) const {
        fpdetail::FpPoly rep;
        while (idx) {
            rep.push_back(idx % p_);
            idx /= p_;
        }
        return rep;
    }

private:
    FqField(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), modulus_(std::move(modulus)) {
        if (!is_prime(p_)) throw input_error("FqField: characteristic must be prime");
        for (auto& c : modulus_) c %= p_;
        fpdetail::fp_trim(modulus_);
        if (modulus_.size() < 2) throw input_error("FqField: modulus must have degree >= 1");
        k_ = modulus_.size() - 1;
        if (k_ > 1 && !fpdetail::fp_irreducible(modulus_, p_)) throw input_error("FqField: modulus is reducible");
        Integer q = ipow(Integer(p_), k_);
        q_ = (q <= Integer(std::numeric_limits<std::uint32_t>::max())) ? q.convert_to<std::uint64_t>() : 0;
        if (q_ != 0 && q_ <= kTableLimit) build_tables();
    }

    void build_tables() {
        std::size_t q = q_;
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        for (std::size_t a = 0; a < q; ++a) {
            auto ra = decode(a);
            neg_[a] = encode(fpdetail::fp_sub({}, ra, p_));
            for (std::size_t b = 0; b <= a; ++b) {
                auto rb = decode(b);
                std::uint32_t s = encode(fpdetail::fp_add(ra, rb, p_));
                std::uint32_t m = encode(fpdetail::fp_mod(fpdetail::fp_mul(ra, rb, p_), modulus_, p_));
                add_[a * q + b] = add_[b * q + a] = s;
                mul_[a * q + b] = mul_[b * q + a] = m;
            }
        }
        for (std::size_t a = 1; a < q; ++a) {
            if (inv_[a]) continue;
            for (std::size_t b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) {
                    inv_[a] = static_cast<std::uint32_t>(b);
                    inv_[b] = static_cast<std::uint32_t>(a);
                    break;
                }
        }
    }

    std::uint64_t p_;
    std::size_t k_ = 0;
    fpdetail::FpPoly modulus_;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

// Element of an FqField. A default-constructed element (or one built from a
// small integer) is "unattached": it acts as the corresponding constant and
// adopts a field on first contact with an attached element.
class FqElem {
public:
    FqElem() : int_(0) {}
    FqElem(long long v) : int_(v) {}  // NOLINT: implicit by design
    FqElem(FqFieldPtr f, fpdetail::FpPoly rep) : field_(std::move(f)), rep_(std::move(rep)) {
        normalize();
    }
    static FqElem from_int(const FqFieldPtr& f, const Integer& v) {
        Integer r = v % Integer(f->p());
        if (r < 0) r += Integer(f->p());
        return FqElem(f, {r.convert_to<std::uint64_t>()});
    }
    static FqElem generator(const FqFieldPtr& f) { return FqElem(f, {0, 1}); }
    static FqElem one_like(const FqElem& x) {
        if (!x.field_) return FqElem(1);
        return from_int(x.field_, 1);
    }

    const FqFieldPtr& field() const { return field_; }
    bool attached() const { return static_cast<bool>(field_); }
    const fpdetail::FpPoly& rep() const {
        if (!field_) throw input_error("FqElem: unattached element has no residue");
        return rep_;
    }
    bool is_zero() const { return field_ ? rep_.empty() : int_ == 0; }

    std::uint32_t index() const { return field()->encode(rep_); }
    static FqElem from_index(const FqFieldPtr& f, std::uint64_t idx) { return FqElem(f, f->decode(idx)); }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        auto [x, y, f] = align(a, b);
        if (!f) return FqElem(a.int_ + b.int_);
        return FqElem(f, fpdetail::fp_add(x, y, f->p()));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        auto [x, y, f] = align(a, b);
        if (!f) return FqElem(a.int_ - b.int_);
        return FqElem(f, fpdetail::fp_sub(x, y, f->p()));
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        auto [x, y, f] = align(a, b);
        if (!f) return FqElem(a.int_ * b.int_);
        return FqElem(f, fpdetail::fp_mod(fpdetail::fp_mul(x, y, f->p()), f->modulus(), f->p()));
    }
    friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inverse(); }
    FqElem operator-() const { return FqElem(0) - *this; }

    FqElem inverse() const {
        if (!field_) {
            if (int_ == 1) return FqElem(1);
            if (int_ == -1) return FqElem(-1);
            throw input_error("FqElem: inverse of unattached element");
        }
        if (rep_.empty()) throw domain_error("FqElem: inverse of zero");
        // Extended Euclid: u*rep + v*modulus = 1.
        fpdetail::FpPoly r0 = field_->modulus(), r1 = rep_;
        fpdetail::FpPoly t0 = {}, t1 = {1};
        std::uint64_t p = field_->p();
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            fpdetail::FpPoly q;
            fpdetail::FpPoly rem = r0;
            std::uint64_t linv = fpdetail::fp_inv(r1.back(), p);
            while (rem.size() >= r1.size() && !rem.empty()) {
                std::uint64_t fct = rem.back() * linv % p;
                std::size_t shift = rem.size() - r1.size();
                if (q.size() < shift + 1) q.resize(shift + 1, 0);
                q[shift] = fct;
                for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + p * p - fct * r1[i] % p) % p;
                fpdetail::fp_trim(rem);
            }
            fpdetail::FpPoly t2 = fpdetail::fp_sub(t0, fpdetail::fp_mul(q, t1, p), p);
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1) throw domain_error("FqElem: inverse does not exist (reducible modulus?)");
        std::uint64_t c = fpdetail::fp_inv(r0[0], p);
        for (auto& x : t0) x = x * c % p;
        return FqElem(field_, std::move(t0));
    }

    FqElem pow(Integer e) const {
        if (!field_) throw input_error("FqElem: pow of unattached element");
        if (e < 0) return inverse().pow(-e);
        return FqElem(field_, fpdetail::fp_powmod(rep_, e, field_->modulus(), field_->p()));
    }

    // p^j-th power roots exist and are unique; computed via Frobenius cycling.
    FqElem pth_root() const {
        if (!field_) throw input_error("FqElem: pth_root of unattached element");
        Integer e = ipow(Integer(field_->p()), field_->degree() - 1);
        return pow(e);  // a^(q/p), since a^q = a
    }

    Integer multiplicative_order() const {
        if (is_zero()) throw domain_error("FqElem: order of zero");
        FqElem one = one_like(*this);
        FqElem x = *this;
        Integer k = 1;
        while (!(x == one)) {
            x = x * *this;
            ++k;
        }
        return k;
    }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        if (!a.field_ && !b.field_) return a.int_ == b.int_;
        auto [x, y, f] = align(a, b);
        (void)f;
        return x == y;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    std::string to_string(const std::string& gen = "z") const {
        if (!field_) return std::to_string(int_);
        if (rep_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < rep_.size(); ++i) {
            if (!rep_[i]) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || rep_[i] != 1) s += std::to_string(rep_[i]);
            if (i > 0) {
                if (rep_[i] != 1) s += "*";
                s += gen;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    FqFieldPtr field_;
    fpdetail::FpPoly rep_;
    long long int_ = 0;

    void normalize() {
        if (!field_) return;
        for (auto& c : rep_) c %= field_->p();
        rep_ = fpdetail::fp_mod(std::move(rep_), field_->modulus(), field_->p());
    }

    static fpdetail::FpPoly lift_int(long long v, const FqFieldPtr& f) {
        long long p = static_cast<long long>(f->p());
        long long r = ((v % p) + p) % p;
        if (r == 0) return {};
        return {static_cast<std::uint64_t>(r)};
    }
    static std::tuple<fpdetail::FpPoly, fpdetail::FpPoly, FqFieldPtr> align(const FqElem& a, const FqElem& b) {
        if (a.field_ && b.field_) {
            if (a.field_ != b.field_ && a.field_->modulus() != b.field_->modulus())
                throw input_error("FqElem: elements of different fields");
            return {a.rep_, b.rep_, a.field_};
        }
        if (a.field_) return {a.rep_, lift_int(b.int_, a.field_), a.field_};
        if (b.field_) return {lift_int(a.int_, b.field_), b.rep_, b.field_};
        return {{}, {}, nullptr};
    }
};

// Maps x in src to dst by sending the generator of src to gen_image (which
// must be a root of src's modulus in dst).
inline FqElem embed(const FqElem& x, const FqFieldPtr& dst, const FqElem& gen_image) {
    if (!x.attached()) return x;
    FqElem acc = FqElem::from_int(dst, 0);
    const auto& rep = x.rep();
    for (std::size_t i = rep.size(); i-- > 0;) acc = acc * gen_image + FqElem::from_int(dst, Integer(rep[i]));
    return acc;
}

// Finds the image of src's generator inside dst by brute-force root search;
// requires dst to be small enough to enumerate.
inline FqElem find_embedding_image(const FqFieldPtr& src, const FqFieldPtr& dst) {
    if (dst->size() == 0 || dst->size() > (1u << 16)) throw resource_error("find_embedding_image: target field too large");
    const auto& m = src->modulus();
    for (std::uint64_t idx = 0; idx < dst->size(); ++idx) {
        FqElem cand = FqElem::from_index(dst, idx);
        FqElem acc = FqElem::from_int(dst, 0);
        for (std::size_t i = m.size(); i-- > 0;) acc = acc * cand + FqElem::from_int(dst, Integer(m[i]));
        if (acc.is_zero()) return cand;
    }
    throw input_error("find_embedding_image: no root of source modulus in target field");
}

}  // namespace k3x
