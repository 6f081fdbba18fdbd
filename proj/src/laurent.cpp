#include "cfwave/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace cfwave {

LaurentFilter::LaurentFilter(int lo, std::vector<double> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
    std::size_t head = 0;
    while (head < coeffs_.size() && coeffs_[head] == 0.0) ++head;
    if (head == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + head);
    lo_ += int(head);
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double LaurentFilter::at(int n) const {
    if (coeffs_.empty() || n < lo_ || n > hi()) return 0.0;
    return coeffs_[std::size_t(n - lo_)];
}

LaurentFilter laurent_add(const LaurentFilter& a, const LaurentFilter& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<double> c(std::size_t(hi - lo + 1), 0.0);
    for (int n = lo; n <= hi; ++n) c[std::size_t(n - lo)] = a.at(n) + b.at(n);
    return LaurentFilter(lo, std::move(c));
}

LaurentFilter laurent_mul(const LaurentFilter& a, const LaurentFilter& b) {
    if (a.is_zero() || b.is_zero()) return LaurentFilter();
    std::vector<double> c(a.length() + b.length() - 1, 0.0);
    for (std::size_t i = 0; i < a.length(); ++i)
        for (std::size_t j = 0; j < b.length(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return LaurentFilter(a.lo() + b.lo(), std::move(c));
}

LaurentFilter laurent_scale(const LaurentFilter& a, double s) {
    std::vector<double> c = a.coeffs();
    for (double& x : c) x *= s;
    return LaurentFilter(a.lo(), std::move(c));
}

LaurentFilter laurent_reverse(const LaurentFilter& a) {
    std::vector<double> c(a.coeffs().rbegin(), a.coeffs().rend());
    return LaurentFilter(-a.hi(), std::move(c));
}

LaurentFilter laurent_negate_arg(const LaurentFilter& a) {
    // z^{-n} picks up (-1)^n
    std::vector<double> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        int n = a.lo() + int(i);
        if (n & 1) c[i] = -c[i];
    }
    return LaurentFilter(a.lo(), std::move(c));
}

LaurentFilter laurent_shift(const LaurentFilter& a, int k) {
    if (a.is_zero()) return a;
    return LaurentFilter(a.lo() + k, a.coeffs());
}

std::complex<double> laurent_eval(const LaurentFilter& a, std::complex<double> z) {
    if (a.is_zero()) return 0.0;
    // Horner in z^{-1} across the support, then the z^{-lo} prefactor.
    std::complex<double> zi = 1.0 / z;
    std::complex<double> acc = 0.0;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * zi + *it;
    int lo = a.lo();
    std::complex<double> pre = 1.0;
    std::complex<double> base = lo >= 0 ? zi : z;
    for (unsigned k = unsigned(std::abs(lo)); k; k >>= 1) {
        if (k & 1) pre *= base;
        base *= base;
    }
    return acc * pre;
}

LaurentFilter highpass_mate(const LaurentFilter& h0) {
    return laurent_shift(laurent_negate_arg(laurent_reverse(h0)), 1);
}

}  // namespace cfwave
