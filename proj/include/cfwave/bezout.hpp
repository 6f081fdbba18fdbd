#pragma once

#include <vector>

#include "cfwave/poly.hpp"
#include "cfwave/rational.hpp"

namespace cfwave {

/// The polynomial identity B(L,M):
///   r(1-y) s(1-y) + r(y) s(y) = (2L+1)^2 2^{1-2L-2M},
/// with s(y) = y^M sum_n C(2L+1,2n) y^n. r is the unique solution of degree
/// at most M+L-1.
struct BezoutProblem {
    int L = 0;
    int M = 0;
    RealPoly s;
    double rhs = 0.0;
};

enum class BezoutMethod { LinearSystem, RecursiveInterp, ExactRational };

const char* to_string(BezoutMethod m);

struct BezoutSolution {
    RealPoly r;
    BezoutMethod method = BezoutMethod::RecursiveInterp;
    double residual = 0.0;  // max Bezout defect on the 1025-point grid
    // Extended-precision image of r; the factorization pipeline consumes this
    // because double monomial coefficients cannot hold r accurately near y=1
    // at large L+M (r(1) = rhs/2^{2L} is ~1e-12 there).
    detail::ExtPoly r_ext;
    // Populated by the exact oracle only.
    RatPoly r_exact;
};

BezoutProblem make_bezout_problem(int L, int M);

/// s_{L,M}(y), exact integer coefficients shifted by y^M.
RealPoly s_poly(int L, int M);

/// Roots of the degree-L part: y_k = -tan^2(pi(2k+1)/(2(2L+1))), k = 0..L-1.
/// All strictly negative, strictly decreasing in k.
std::vector<double> s_roots(int L);

/// Interpolation of r_{L,0} at the nodes 1-y_k, then M division-by-4y
/// recursion steps. Throws RecursionDefect if a step's constant term fails to
/// vanish. Internals run in long double.
BezoutSolution solve_recursive(int L, int M);

/// The half-band linear system route: Toeplitz even rows, Cr = b, partial
/// pivoting. Throws IllConditioned when the 1-norm condition estimate exceeds
/// 1e12 (happens at M=L=7). Requires M >= 1.
BezoutSolution solve_linear_system(int L, int M);

/// Exact-rational extended Euclid oracle. Guarded to L+M <= 12 (CostGuard).
BezoutSolution solve_exact(int L, int M);

BezoutSolution solve(int L, int M, BezoutMethod method);

/// Max |r(1-y)s(1-y) + r(y)s(y) - rhs| over 1025 Chebyshev-spaced points
/// of [0,1] (Lobatto: endpoints included).
double bezout_residual(const RealPoly& r, int L, int M);

/// q(1-y) == -q(y) coefficient-wise to 1e-12 (relative to max |coeff|).
bool antisymmetry_check(const RealPoly& q);

namespace detail {
long double ext_bezout_residual(const ExtPoly& r, int L, int M);
ExtPoly ext_s_poly(int L, int M);
}  // namespace detail

}  // namespace cfwave
