#pragma once

#include <string>

#include "cfwave/bezout.hpp"
#include "cfwave/laurent.hpp"
#include "cfwave/poly.hpp"

namespace cfwave {

/// Root selection for the spectral factorization. Labels follow the
/// terminology established for this construction: taking all roots inside
/// the unit circle is labelled "mid", the alternating selection "min" -
/// note this inverts the usual minimum-phase naming.
enum class PhaseChoice { AllInsideUnitCircle, AlternatingPairs };

const char* phase_label(PhaseChoice p);            // "mid" / "min"
PhaseChoice phase_from_label(const std::string&);  // throws ParseError

/// The designed quadruple. h0/g0 share the common factor F = Q (1+1/z)^M;
/// g0 uses the time-reversed Thiran factor. All filters causal (lo = 0 for
/// h0/g0), H0(1) = G0(1) = sqrt(2).
struct FilterBank {
    int L = 0;
    int M = 0;
    PhaseChoice phase = PhaseChoice::AllInsideUnitCircle;
    LaurentFilter h0, g0, h1, g1;
    RealPoly q_poly;  // Q after normalization folding, ascending powers of z^-1
};

/// R(z) = r((2+z+1/z)/4); symmetric, R(z) = R(1/z).
LaurentFilter lift_to_circle(const RealPoly& r);

/// Spectral factorization R = Q(z)Q(1/z) through the y-roots of r: each root
/// maps to the reciprocal pair z^2 - (4y-2)z + 1 = 0. Requires r > 0 on [0,1]
/// (checked on a 4097 grid and at the real critical points); throws
/// NotNonnegative otherwise.
LaurentFilter riesz_factor(const RealPoly& r, PhaseChoice phase);

/// F = Q (1+1/z)^M scaled so F(1) = sqrt(2)(2L+1)2^{-2L} > 0, then
/// h0 = F D_L, g0 = F D_L(1/z) z^{-L}, h1/g1 the quadrature mates.
FilterBank assemble_bank(int L, int M, const LaurentFilter& q, PhaseChoice phase);

struct DesignResult {
    FilterBank bank;
    BezoutSolution bezout;
};

/// Full pipeline: Bezout solve by the chosen method, positivity check, Riesz
/// factorization and assembly. Factorization runs on the solver's extended-
/// precision coefficients.
DesignResult design_bank(int L, int M, PhaseChoice phase,
                         BezoutMethod method = BezoutMethod::RecursiveInterp);

/// Max perfect-reconstruction defect: both branches on a 4096-point circle
/// grid plus the coefficient-domain half-band check of the autocorrelations.
double verify_pr(const FilterBank& bank);

/// Fitted slope of log|G0(e^{iw}) - H0(e^{iw}) e^{-iw/2}| against log w on
/// w in [1e-3, 1e-1]; ~2L+1 for a conforming bank. The defect is evaluated in
/// the stable factored form |H0| 2|sin(alpha_L/2)| after cross-checking it
/// against the direct coefficient evaluation at moderate frequencies; a bank
/// failing the cross-check gets the direct fit (and so a failing slope).
/// Returns +inf when the defect underflows everywhere.
double hilbert_order_check(const FilterBank& bank);

/// Fitted slope of log|H0(-e^{i eps})| on eps in [1e-3, 1e-1]; ~M. Returns
/// +inf when the values sit below measurement noise (large M).
double vanishing_moment_slope(const FilterBank& bank);

namespace detail {
/// Long double core used by design_bank; q coefficients of Q, ascending z^-1.
ExtPoly riesz_factor_ext(const ExtPoly& r, PhaseChoice phase);
FilterBank assemble_bank_ext(int L, int M, const ExtPoly& q, PhaseChoice phase);
}  // namespace detail

}  // namespace cfwave
