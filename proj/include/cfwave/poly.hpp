#pragma once

#include <climits>
#include <complex>
#include <vector>

namespace cfwave {

/// Dense real polynomial, coefficients ascending in the variable.
/// The zero polynomial is the empty coefficient sequence; trailing zeros are
/// trimmed so degree() is always the index of a nonzero coefficient.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs);
    static RealPoly constant(double c);

    /// -infinity sentinel for the zero polynomial (never -1 arithmetic).
    static constexpr int kZeroDegree = INT_MIN;

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : int(coeffs_.size()) - 1; }
    double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    std::complex<double> operator()(std::complex<double> x) const;
    double operator()(double x) const;

private:
    std::vector<double> coeffs_;
};

RealPoly poly_add(const RealPoly& a, const RealPoly& b);
RealPoly poly_sub(const RealPoly& a, const RealPoly& b);
RealPoly poly_mul(const RealPoly& a, const RealPoly& b);
RealPoly poly_scale(const RealPoly& a, double s);

/// Composition outer(inner(y)).
RealPoly poly_compose(const RealPoly& outer, const RealPoly& inner);

/// y -> p(1-y).
RealPoly poly_shift_reflect(const RealPoly& p);

RealPoly poly_derivative(const RealPoly& p);

inline std::complex<double> poly_eval(const RealPoly& p, std::complex<double> x) { return p(x); }
inline double poly_eval(const RealPoly& p, double x) { return p(x); }

namespace detail {

// Extended-precision workhorse used by the bezout/factorize pipeline, where
// double monomial coefficients lose too much near y = 1 (see bezout.cpp).
// Coefficients ascending; not trimmed automatically.
using ExtPoly = std::vector<long double>;

ExtPoly ext_mul(const ExtPoly& a, const ExtPoly& b);
ExtPoly ext_add(const ExtPoly& a, const ExtPoly& b);
long double ext_eval(const ExtPoly& p, long double x);
std::complex<long double> ext_eval(const ExtPoly& p, std::complex<long double> x);
ExtPoly ext_reflect(const ExtPoly& p);  // y -> p(1-y)
void ext_trim(ExtPoly& p, long double tol = 0.0L);
RealPoly ext_to_poly(const ExtPoly& p);
ExtPoly ext_from_poly(const RealPoly& p);

/// C(n,k), exact through n = 129 (computed in 128-bit integers).
long double binomial_ld(int n, int k);

}  // namespace detail

}  // namespace cfwave
