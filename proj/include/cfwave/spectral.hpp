#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cfwave/factorize.hpp"

namespace cfwave {

/// Sampled frequency axis with the cascade values of both branches.
/// N odd so omega = 0 is a grid point.
struct SpectrumGrid {
    std::vector<double> omega;
    std::vector<std::complex<double>> phi_h, psi_h, phi_g, psi_g;
    int cascade_depth = 0;
    int beta_terms = 0;
};

struct AnalyticityReport {
    double e1 = 0.0;
    double e2 = 0.0;
    double ul_max_on_grid = 0.0;
    long bound_violations = 0;
    double hilbert_slope = 0.0;
    double sobolev_exponent = 0.0;
};

namespace spectral {

/// 2 (-1)^L arctan(tan^{2L+1}(w/4)); odd, 4pi-periodic, values in [-pi, pi].
/// tan poles follow the arctan(+-inf) = +-pi/2 convention automatically.
double alpha(int L, double omega);

struct BetaResult {
    double value;       // partial sum through j = terms
    double tail_bound;  // bound on the dropped tail
};

/// beta_L(w) = sum_{j>=1} alpha_L(2^-j w), summed through j = terms.
BetaResult beta(int L, double omega, int terms);

/// eta_L(w) = -alpha_L(w/2 + pi) + beta_L(w/2).
double eta(int L, double omega, int terms);

/// U_L(w) = |1 - e^{i eta_L(w)} - 2 1_{w>0}|, in [0, 2]. The indicator is 0
/// at w = 0 (open positive half-axis).
double u_L(int L, double omega, int terms);

/// 2 sqrt2 (log2(max(4pi,|w|)/4pi) + 2)(1 - delta(w,4piZ)/max(4pi,|w|))^{2L+1}.
double u_L_bound(int L, double omega);

/// Truncated infinite products of H0/G0 at depth J on a uniform grid over
/// [-Omega, Omega]. Throws TruncationTooShallow when Omega > 2^J pi.
SpectrumGrid cascade_spectra(const FilterBank& bank, double Omega, int N, int J);

/// Max grid defects of the two branch phase relations:
/// first  |phi_g - e^{i beta} e^{-i w/2} phi_h|,
/// second |psi_g - i e^{i eta} psi_h|.
std::pair<double, double> verify_phase_relations(const SpectrumGrid& grid, int L, int terms);

/// E1 = peak ratio, E2 = energy ratio of |psi_h + i psi_g| over negative vs
/// positive frequencies (Riemann sums, fixed pairwise summation order).
std::pair<double, double> leakage_measures(const SpectrumGrid& grid);

/// Transfer-operator regularity estimate M - log2(rho)/2, where rho is the
/// spectral radius of the transition matrix [2 p(2j-k)] built from the
/// autocorrelation p of the residual factor B, H0 = sqrt2 ((1+e^{-iw})/2)^M B.
double sobolev_exponent(const FilterBank& bank);

/// Least-squares slope of log y against log x.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Deterministic pairwise sum, fixed left-to-right association.
double pairwise_sum(const std::vector<double>& v);

/// Full report at the given grid parameters (criterion defaults: Omega = 16pi,
/// N = 2^15+1, J = 25, terms = 40).
AnalyticityReport analyze(const FilterBank& bank, double Omega, int N, int J, int terms);

namespace detail {
/// Spectral radius of a dense real matrix: Hessenberg + shifted QR.
double spectral_radius_qr(std::vector<std::vector<double>> a);
}  // namespace detail

}  // namespace spectral

}  // namespace cfwave
