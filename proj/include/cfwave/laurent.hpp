#pragma once

#include <complex>
#include <vector>

namespace cfwave {

/// Two-sided FIR filter: A(z) = sum_n coeffs[n - lo] * z^{-n}, n = lo..hi.
/// Index convention: position i of coeffs holds the coefficient of z^{-(lo+i)}.
/// Both ends nonzero unless the filter is zero (empty coeffs, lo = 0).
class LaurentFilter {
public:
    LaurentFilter() = default;
    LaurentFilter(int lo, std::vector<double> coeffs);

    static LaurentFilter one() { return LaurentFilter(0, {1.0}); }

    bool is_zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + int(coeffs_.size()) - 1; }
    std::size_t length() const { return coeffs_.size(); }
    const std::vector<double>& coeffs() const { return coeffs_; }
    /// Coefficient of z^{-n}; zero outside the support.
    double at(int n) const;

private:
    int lo_ = 0;
    std::vector<double> coeffs_;
};

LaurentFilter laurent_add(const LaurentFilter& a, const LaurentFilter& b);
LaurentFilter laurent_mul(const LaurentFilter& a, const LaurentFilter& b);
LaurentFilter laurent_scale(const LaurentFilter& a, double s);

/// A(1/z).
LaurentFilter laurent_reverse(const LaurentFilter& a);

/// A(-z).
LaurentFilter laurent_negate_arg(const LaurentFilter& a);

/// z^{-k} A(z).
LaurentFilter laurent_shift(const LaurentFilter& a, int k);

std::complex<double> laurent_eval(const LaurentFilter& a, std::complex<double> z);

/// H1(z) = z^{-1} H0(-z^{-1}), the high-pass mate of an orthonormal low-pass.
LaurentFilter highpass_mate(const LaurentFilter& h0);

}  // namespace cfwave
