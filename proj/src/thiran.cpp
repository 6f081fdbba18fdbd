#include "cfwave/thiran.hpp"

#include <cmath>

#include "cfwave/errors.hpp"

namespace cfwave {

namespace {

// C(n,k) in unsigned __int128; exact through n = 129 (C(129,64) < 2^127).
unsigned __int128 binomial_u128(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 num = 1;
    for (int i = 1; i <= k; ++i) {
        num = num * (unsigned __int128)(n - k + i);
        num /= (unsigned __int128)(i);  // exact: product of i consecutive integers
    }
    return num;
}

double u128_to_double(unsigned __int128 v) {
    const double two64 = 18446744073709551616.0;
    return double((unsigned long long)(v >> 64)) * two64 + double((unsigned long long)(v));
}

std::complex<double> cpow_int(std::complex<double> b, unsigned e) {
    std::complex<double> acc = 1.0;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace

ThiranFilter thiran_coeffs(int L) {
    if (L < 1 || L > 64) throw InvalidOrder("thiran order must be in [1,64]");
    std::vector<double> d(std::size_t(L) + 1);
    for (int ell = 0; ell <= L; ++ell) {
        // d(ell) = C(2L+1, 2(L-ell)) / (2L+1)
        d[std::size_t(ell)] = u128_to_double(binomial_u128(2 * L + 1, 2 * (L - ell))) / double(2 * L + 1);
    }
    return ThiranFilter{L, LaurentFilter(0, std::move(d))};
}

LaurentFilter thiran_coeffs_product_form(int L) {
    if (L < 1 || L > 64) throw InvalidOrder("thiran order must be in [1,64]");
    std::vector<double> d(std::size_t(L) + 1);
    d[0] = 1.0;
    for (int ell = 1; ell <= L; ++ell) {
        double prod = 1.0;
        for (int k = 0; k < ell; ++k) prod *= (0.5 - L + k) / (1.5 + k);
        prod *= u128_to_double(binomial_u128(L, ell));
        if (ell & 1) prod = -prod;
        d[std::size_t(ell)] = prod;
    }
    return LaurentFilter(0, std::move(d));
}

std::complex<double> thiran_closed_eval(int L, std::complex<double> z) {
    if (L < 1) throw InvalidOrder("thiran order must be >= 1");
    if (z == std::complex<double>(0.0, 0.0)) throw ZeroArgument("thiran_closed_eval at z = 0");
    // either square-root branch works: w -> -w only swaps the two summands
    const std::complex<double> w = std::sqrt(z);
    const unsigned e = unsigned(2 * L + 1);
    const std::complex<double> sum = cpow_int(1.0 + w, e) + cpow_int(1.0 - w, e);
    return cpow_int(1.0 / z, unsigned(L)) * sum / (2.0 * double(2 * L + 1));
}

std::complex<double> thiran_ratio_phase(int L, double omega) {
    const LaurentFilter d = thiran_coeffs(L).filter;
    const std::complex<double> zp = std::polar(1.0, omega);
    const std::complex<double> zm = std::polar(1.0, -omega);
    return std::polar(1.0, -omega * L) * laurent_eval(d, zm) / laurent_eval(d, zp);
}

}  // namespace cfwave
