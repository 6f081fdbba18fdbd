#include "cfwave/roots.hpp"

#include <algorithm>
#include <cmath>

#include "cfwave/errors.hpp"

namespace cfwave {

namespace detail {

namespace {

// double-long-double arithmetic for the compensated Horner polish; Dekker
// splitting, no FMA dependence
struct DD {
    long double hi = 0.0L, lo = 0.0L;
};

inline DD two_sum(long double a, long double b) {
    const long double s = a + b;
    const long double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(long double a, long double b) {
    const long double split = 4294967297.0L;  // 2^32 + 1 for 64-bit mantissas
    const long double p = a * b;
    const long double ca = split * a;
    const long double ahi = ca - (ca - a), alo = a - ahi;
    const long double cb = split * b;
    const long double bhi = cb - (cb - b), blo = b - bhi;
    const long double err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    return {p, err};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    const DD r = two_sum(s.hi, s.lo);
    return r;
}

inline DD dd_add(DD a, long double b) { return dd_add(a, DD{b, 0.0L}); }

inline DD dd_mul(DD a, long double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return two_sum(p.hi, p.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

// compensated complex Horner: evaluates sum c_i z^i with ~twice the native
// long double precision in the accumulation
std::complex<long double> dd_horner(const ExtPoly& c, std::complex<long double> z) {
    DD re{0.0L, 0.0L}, im{0.0L, 0.0L};
    const long double zr = z.real(), zi = z.imag();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        const DD nre = dd_add(dd_add(dd_mul(re, zr), dd_neg(dd_mul(im, zi))), *it);
        const DD nim = dd_add(dd_mul(re, zi), dd_mul(im, zr));
        re = nre;
        im = nim;
    }
    return {re.hi + re.lo, im.hi + im.lo};
}

}  // namespace

std::vector<std::complex<long double>> aberth_roots(const ExtPoly& p_in, long double tol) {
    using CLD = std::complex<long double>;
    ExtPoly p = p_in;
    ext_trim(p);
    if (p.size() < 2) throw Error("poly_roots needs degree >= 1");
    const std::size_t n = p.size() - 1;
    // monic normalization
    const long double lead = p.back();
    for (auto& c : p) c /= lead;
    ExtPoly dp(n);
    for (std::size_t i = 1; i <= n; ++i) dp[i - 1] = (long double)(i)*p[i];
    // reversed image q(x) = x^n p(1/x); evaluating it at 1/z instead of p at z
    // sidesteps the monomial cancellation blow-up for |z| > 1
    const ExtPoly q(p.rbegin(), p.rend());
    ExtPoly dq(n);
    for (std::size_t i = 1; i <= n; ++i) dq[i - 1] = (long double)(i)*q[i];

    const long double eps_ld = 1.084202172485504434e-19L;
    auto abs_horner = [](const ExtPoly& c, long double x) {
        long double m = 0.0L;
        for (auto it = c.rbegin(); it != c.rend(); ++it) m = m * x + std::abs(*it);
        return m;
    };
    // Newton ratio p/p' with a representation chosen per root; at_floor set
    // when |p| is already at evaluation rounding level, degenerate when p'=0
    auto newton_ratio = [&](CLD zk, bool& at_floor, bool& degenerate) -> CLD {
        at_floor = degenerate = false;
        const long double az = std::abs(zk);
        if (az <= 1.0L) {
            const CLD pv = ext_eval(p, zk);
            if (std::abs(pv) <= 8.0L * (long double)(n)*eps_ld * abs_horner(p, az)) {
                at_floor = true;
                return 0.0L;
            }
            const CLD dv = ext_eval(dp, zk);
            if (std::abs(dv) == 0.0L) {
                degenerate = true;
                return 0.0L;
            }
            return pv / dv;
        }
        const CLD u = 1.0L / zk;
        const CLD qv = ext_eval(q, u);
        if (std::abs(qv) <= 8.0L * (long double)(n)*eps_ld * abs_horner(q, std::abs(u))) {
            at_floor = true;
            return 0.0L;
        }
        // p/p' = z q(u) / (n q(u) - u q'(u))
        const CLD den = (long double)(n)*qv - u * ext_eval(dq, u);
        if (std::abs(den) == 0.0L) {
            degenerate = true;
            return 0.0L;
        }
        return zk * qv / den;
    };

    // Cauchy bound: 1 + max |a_i|
    long double bound = 0.0L;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(p[i]));
    bound += 1.0L;

    // perturbed circle start: fixed angular offset breaks conjugate lock-step
    std::vector<CLD> z(n);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (std::size_t k = 0; k < n; ++k) {
        long double th = 2.0L * pi * (long double)(k) / (long double)(n) + 0.376L;
        long double rad = bound * (0.5L + 0.3L * (long double)(k + 1) / (long double)(n));
        z[k] = std::polar(rad, th);
    }

    bool converged = false;
    for (int sweep = 0; sweep < 200 && !converged; ++sweep) {
        converged = true;
        for (std::size_t k = 0; k < n; ++k) {
            bool at_floor = false, degenerate = false;
            const CLD ratio = newton_ratio(z[k], at_floor, degenerate);
            if (at_floor) continue;
            if (degenerate) {
                // stagnation at a critical point: nudge off
                z[k] += CLD(1e-6L, 1e-6L) * (1.0L + std::abs(z[k]));
                converged = false;
                continue;
            }
            CLD sum = 0.0L;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            const CLD denom = 1.0L - ratio * sum;
            const CLD w = std::abs(denom) > 0.0L ? ratio / denom : ratio;
            z[k] -= w;
            if (std::abs(w) > tol * (1.0L + std::abs(z[k]))) converged = false;
        }
    }
    if (!converged) throw NonConvergence("Aberth iteration did not converge in 200 sweeps");

    // a couple of plain Newton polish passes
    for (int pass = 0; pass < 2; ++pass)
        for (auto& zk : z) {
            bool at_floor = false, degenerate = false;
            const CLD ratio = newton_ratio(zk, at_floor, degenerate);
            if (!at_floor && !degenerate) zk -= ratio;
        }

    // compensated polish: near |z| = 1 both monomial directions cancel badly
    // and the plain floor sits orders of magnitude above the root error the
    // factorization needs, so finish with double-long-double Horner
    for (auto& zk : z)
        for (int pass = 0; pass < 4; ++pass) {
            CLD pv, dv;
            if (std::abs(zk) <= 1.0L) {
                pv = dd_horner(p, zk);
                dv = ext_eval(dp, zk);
            } else {
                const CLD u = 1.0L / zk;
                const CLD qv = dd_horner(q, u);
                const CLD den = (long double)(n)*qv - u * ext_eval(dq, u);
                if (std::abs(den) == 0.0L) break;
                pv = qv;
                dv = den / zk;  // p/p' = z qv/den
            }
            if (std::abs(dv) == 0.0L) break;
            const CLD step = pv / dv;
            zk -= step;
            if (std::abs(step) <= 1e-18L * (1.0L + std::abs(zk))) break;
        }

    // conjugate symmetrization: each root pairs with the nearest conjugate
    // image; pairing with itself is the snap to the real axis
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (used[k]) continue;
        std::size_t best = k;
        long double best_d = 2.0L * std::abs(z[k].imag());
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k || used[j]) continue;
            const long double d = std::abs(z[j] - std::conj(z[k]));
            if (d < best_d) {
                best = j;
                best_d = d;
            }
        }
        if (best == k) {
            if (std::abs(z[k].imag()) > 1e-6L * (1.0L + std::abs(z[k])))
                throw ConjugatePairingFailure("unpaired complex root in a real polynomial");
            z[k] = {z[k].real(), 0.0L};
            used[k] = true;
            continue;
        }
        const CLD avg = (z[k] + std::conj(z[best])) / 2.0L;
        z[k] = avg;
        z[best] = std::conj(avg);
        if (std::abs(avg.imag()) <= 1e-10L * (1.0L + std::abs(avg))) {
            // a snapped pair is two real roots
            z[k] = {avg.real(), 0.0L};
            z[best] = {avg.real(), 0.0L};
        }
        used[k] = used[best] = true;
    }
    return z;
}

}  // namespace detail

ComplexRootSet poly_roots(const RealPoly& p, double tol) {
    if (p.degree() < 1) throw Error("poly_roots needs degree >= 1");
    auto z = detail::aberth_roots(detail::ext_from_poly(p), (long double)(tol));

    // residual contract: |p(rho)| <= tol * maxcoeff * max(1,|rho|)^deg
    double maxc = 0.0;
    for (double c : p.coeffs()) maxc = std::max(maxc, std::abs(c));
    ComplexRootSet out;
    for (const auto& zk : z) {
        std::complex<double> r{double(zk.real()), double(zk.imag())};
        double scale = maxc * std::pow(std::max(1.0, std::abs(r)), p.degree());
        if (std::abs(p(r)) > tol * scale)
            throw NonConvergence("root residual above tolerance scale");
        out.roots.push_back({r, 1});
    }
    return out;
}

}  // namespace cfwave
