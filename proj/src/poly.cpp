#include "cfwave/poly.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace cfwave {

namespace {
void trim(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}
}  // namespace

RealPoly::RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

RealPoly RealPoly::constant(double c) { return RealPoly(std::vector<double>{c}); }

std::complex<double> RealPoly::operator()(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RealPoly::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RealPoly poly_add(const RealPoly& a, const RealPoly& b) {
    std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RealPoly(std::move(c));
}

RealPoly poly_sub(const RealPoly& a, const RealPoly& b) {
    std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return RealPoly(std::move(c));
}

RealPoly poly_mul(const RealPoly& a, const RealPoly& b) {
    if (a.is_zero() || b.is_zero()) return RealPoly();
    std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return RealPoly(std::move(c));
}

RealPoly poly_scale(const RealPoly& a, double s) {
    std::vector<double> c = a.coeffs();
    for (double& x : c) x *= s;
    return RealPoly(std::move(c));
}

RealPoly poly_compose(const RealPoly& outer, const RealPoly& inner) {
    RealPoly acc;
    for (auto it = outer.coeffs().rbegin(); it != outer.coeffs().rend(); ++it)
        acc = poly_add(poly_mul(acc, inner), RealPoly::constant(*it));
    return acc;
}

RealPoly poly_shift_reflect(const RealPoly& p) {
    // p(1-y) via Horner in (1-y): acc = acc*(1-y) + c
    return poly_compose(p, RealPoly({1.0, -1.0}));
}

RealPoly poly_derivative(const RealPoly& p) {
    if (p.degree() < 1) return RealPoly();
    std::vector<double> c(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) c[i - 1] = double(i) * p.coeffs()[i];
    return RealPoly(std::move(c));
}

namespace detail {

ExtPoly ext_mul(const ExtPoly& a, const ExtPoly& b) {
    if (a.empty() || b.empty()) return {};
    ExtPoly c(a.size() + b.size() - 1, 0.0L);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ExtPoly ext_add(const ExtPoly& a, const ExtPoly& b) {
    ExtPoly c(std::max(a.size(), b.size()), 0.0L);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

long double ext_eval(const ExtPoly& p, long double x) {
    long double acc = 0.0L;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<long double> ext_eval(const ExtPoly& p, std::complex<long double> x) {
    std::complex<long double> acc = 0.0L;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExtPoly ext_reflect(const ExtPoly& p) {
    ExtPoly acc;
    const ExtPoly one_minus_y = {1.0L, -1.0L};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = ext_mul(acc, one_minus_y);
        if (acc.empty()) acc.push_back(0.0L);
        acc[0] += *it;
    }
    return acc;
}

void ext_trim(ExtPoly& p, long double tol) {
    while (!p.empty() && std::abs(p.back()) <= tol) p.pop_back();
}

RealPoly ext_to_poly(const ExtPoly& p) {
    std::vector<double> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = double(p[i]);
    return RealPoly(std::move(c));
}

ExtPoly ext_from_poly(const RealPoly& p) {
    ExtPoly c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i];
    return c;
}

long double binomial_ld(int n, int k) {
    if (k < 0 || k > n) return 0.0L;
    if (k > n - k) k = n - k;
    unsigned __int128 num = 1;
    for (int i = 1; i <= k; ++i) {
        num = num * (unsigned __int128)(n - k + i);
        num /= (unsigned __int128)(i);  // exact: C(n-k+i, i) is an integer
    }
    const long double two64 = 18446744073709551616.0L;
    return (long double)((unsigned long long)(num >> 64)) * two64 +
           (long double)((unsigned long long)(num));
}

}  // namespace detail

}  // namespace cfwave
