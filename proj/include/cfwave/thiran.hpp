#pragma once

#include <complex>

#include "cfwave/laurent.hpp"

namespace cfwave {

/// Maximally flat half-sample-delay factor of order L: causal, length L+1,
/// leading coefficient 1, d(L) = 1/(2L+1) exactly.
struct ThiranFilter {
    int L = 0;
    LaurentFilter filter;  // lo = 0
};

/// Coefficients via the exact binomial ratio d(L-n) = C(2L+1,2n)/(2L+1).
/// Throws InvalidOrder unless 1 <= L <= 64.
ThiranFilter thiran_coeffs(int L);

/// The floating product form of the defining coefficient formula, kept as a
/// cross-check of the binomial route.
LaurentFilter thiran_coeffs_product_form(int L);

/// Closed-form evaluation z^{-L}/(2(2L+1)) * [(1+w)^{2L+1} + (1-w)^{2L+1}],
/// w = principal sqrt(z). Branch choice does not matter. Throws ZeroArgument.
std::complex<double> thiran_closed_eval(int L, std::complex<double> z);

/// e^{-i w L} D_L(e^{-i w}) / D_L(e^{i w}); unit modulus all-pass ratio.
std::complex<double> thiran_ratio_phase(int L, double omega);

}  // namespace cfwave
