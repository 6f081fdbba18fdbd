#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfwave {

/// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
/// Just enough arithmetic for the exact Bezout oracle.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors integer literals

    static BigInt from_pow2(unsigned k);  // 2^k

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated quotient (rounds toward zero), matching C++ integer division.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);  // nonnegative

    double to_double() const;
    std::string to_string() const;  // decimal

private:
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    void trim();

    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no leading zeros
};

/// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double to_double() const;
    std::string to_string() const;

private:
    void reduce();
    BigInt num_, den_;
};

/// Polynomial over the exact rationals, coefficients ascending.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : int(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

private:
    std::vector<Rational> coeffs_;
};

RatPoly rat_add(const RatPoly& a, const RatPoly& b);
RatPoly rat_sub(const RatPoly& a, const RatPoly& b);
RatPoly rat_mul(const RatPoly& a, const RatPoly& b);
RatPoly rat_scale(const RatPoly& a, const Rational& s);
RatPoly rat_reflect(const RatPoly& p);  // y -> p(1-y)

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
void rat_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

struct ExtEuclidResult {
    RatPoly u, v, g;  // u*a + v*b = g, g monic gcd
};

/// Extended Euclid over Q[y]; exact. a, b not both zero.
ExtEuclidResult rat_poly_ext_euclid(const RatPoly& a, const RatPoly& b);

}  // namespace cfwave
