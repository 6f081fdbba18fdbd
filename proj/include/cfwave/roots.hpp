#pragma once

#include <complex>
#include <vector>

#include "cfwave/poly.hpp"

namespace cfwave {

/// Multiset of polynomial roots. For real input polynomials the set is closed
/// under conjugation (enforced by pairing after convergence).
struct ComplexRootSet {
    struct Entry {
        std::complex<double> root;
        int multiplicity = 1;
    };
    std::vector<Entry> roots;

    int total_multiplicity() const {
        int m = 0;
        for (const auto& e : roots) m += e.multiplicity;
        return m;
    }
};

/// Aberth-Ehrlich simultaneous iteration, Cauchy-bound start on a perturbed
/// circle. tol is relative to max|coeff| * max(1,|root|)^deg. Throws
/// NonConvergence after 200 sweeps.
ComplexRootSet poly_roots(const RealPoly& p, double tol = 1e-12);

namespace detail {
/// Long double version feeding the factorization pipeline.
std::vector<std::complex<long double>> aberth_roots(const ExtPoly& p, long double tol);
}  // namespace detail

}  // namespace cfwave
