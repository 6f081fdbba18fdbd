#include "cfwave/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cfwave/errors.hpp"

namespace cfwave {

// ---------------------------------------------------------------- BigInt ---

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long m = negative_ ? -(unsigned long long)v : (unsigned long long)v;
    while (m) {
        limbs_.push_back(uint32_t(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_pow2(unsigned k) {
    BigInt r;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = uint32_t(1u) << (k % 32);
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = uint32_t(s & 0xffffffffu);
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (s < 0) {
            s += int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = uint32_t(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (negative_ == o.negative_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.negative_ = negative_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.negative_ = negative_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.negative_ = o.negative_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = uint64_t(limbs_[i]) * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != o.negative_;
    r.trim();
    return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (std::size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = uint32_t(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(uint32_t(rem));
        return;
    }
    // normalize so the top limb of b has its high bit set
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] |= v[i] << shift;
            if (shift) out[i + 1] = v[i] >> (32 - shift);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a), v = shl(b);
    const std::size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);
    const uint64_t vtop = v[n - 1], vsec = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        uint64_t num = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop, rhat = num % vtop;
        while (qhat >> 32 || qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >> 32) break;
        }
        // u[j .. j+n] -= qhat * v
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = int64_t(u[i + j]) - int64_t(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += int64_t(1) << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = uint32_t(t);
        }
        int64_t t = int64_t(u[j + n]) - int64_t(carry) - borrow;
        if (t < 0) {
            // qhat one too large: add back
            t += int64_t(1) << 32;
            --qhat;
            uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t s = uint64_t(u[i + j]) + v[i] + c2;
                u[i + j] = uint32_t(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += int64_t(c2);
            t &= 0xffffffffll;
        }
        u[j + n] = uint32_t(t);
        q[j] = uint32_t(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    u.resize(n);
    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < n) r[i] |= u[i + 1] << (32 - shift);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator/(const BigInt& o) const {
    if (o.is_zero()) throw Error("BigInt division by zero");
    BigInt q;
    std::vector<uint32_t> qm, rm;
    divmod_mag(limbs_, o.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.negative_ = negative_ != o.negative_;
    q.trim();
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    if (o.is_zero()) throw Error("BigInt modulo by zero");
    BigInt r;
    std::vector<uint32_t> qm, rm;
    divmod_mag(limbs_, o.limbs_, qm, rm);
    r.limbs_ = std::move(rm);
    r.negative_ = negative_;  // remainder keeps dividend sign (truncated division)
    r.trim();
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(limbs_, o.limbs_);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

double BigInt::to_double() const {
    if (limbs_.empty()) return 0.0;
    // top 64 bits + power-of-two exponent; exact for small values
    double mant = 0.0;
    int exp = int(limbs_.size() - 1) * 32;
    std::size_t take = std::min<std::size_t>(limbs_.size(), 3);
    for (std::size_t i = 0; i < take; ++i)
        mant = mant * 4294967296.0 + limbs_[limbs_.size() - 1 - i];
    exp -= int(take - 1) * 32;
    double v = std::ldexp(mant, exp);
    return negative_ ? -v : v;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<uint32_t> m = limbs_;
    std::string digits;
    while (!m.empty()) {
        uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = uint32_t(cur / 10);
            rem = cur % 10;
        }
        digits.push_back(char('0' + rem));
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// -------------------------------------------------------------- Rational ---

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw Error("Rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("Rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
    return den_ == BigInt(1) ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
}

// --------------------------------------------------------------- RatPoly ---

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPoly RatPoly::constant(Rational c) { return RatPoly(std::vector<Rational>{std::move(c)}); }

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly rat_add(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly rat_sub(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
    return RatPoly(std::move(c));
}

RatPoly rat_scale(const RatPoly& a, const Rational& s) {
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c) x = x * s;
    return RatPoly(std::move(c));
}

RatPoly rat_reflect(const RatPoly& p) {
    RatPoly acc;
    const RatPoly lin(std::vector<Rational>{Rational(1), Rational(-1)});
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = rat_add(rat_mul(acc, lin), RatPoly::constant(*it));
    return acc;
}

void rat_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw Error("RatPoly division by zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo;
    const int db = b.degree();
    const Rational lead = b.coeffs().back();
    int dr = int(rem.size()) - 1;
    if (dr >= db) quo.assign(dr - db + 1, Rational(0));
    while (dr >= db) {
        Rational f = rem[dr] / lead;
        quo[dr - db] = f;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] = rem[dr - db + i] - f * b.coeffs()[i];
        rem.pop_back();
        dr = int(rem.size()) - 1;
        while (dr >= 0 && rem[dr].is_zero() && dr >= db) {
            rem.pop_back();
            dr = int(rem.size()) - 1;
        }
    }
    q = RatPoly(std::move(quo));
    r = RatPoly(std::move(rem));
}

ExtEuclidResult rat_poly_ext_euclid(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("ext_euclid needs a nonzero input");
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(Rational(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        RatPoly q, rem;
        rat_divmod(r0, r1, q, rem);
        r0 = r1;
        r1 = rem;
        RatPoly s2 = rat_sub(s0, rat_mul(q, s1));
        s0 = s1;
        s1 = s2;
        RatPoly t2 = rat_sub(t0, rat_mul(q, t1));
        t0 = t1;
        t1 = t2;
    }
    // normalize gcd monic
    Rational lead = r0.coeffs().back();
    Rational inv = Rational(1) / lead;
    return {rat_scale(s0, inv), rat_scale(t0, inv), rat_scale(r0, inv)};
}

}  // namespace cfwave
