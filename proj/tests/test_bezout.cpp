#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cfwave/bezout.hpp"
#include "cfwave/errors.hpp"
#include "cfwave/roots.hpp"

using namespace cfwave;

namespace {
constexpr double kPi = 3.14159265358979323846;

double max_coeff_diff(const RealPoly& a, const RealPoly& b) {
    double worst = 0;
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
    return worst;
}
}  // namespace

TEST_CASE("problem statement carrier") {
    const BezoutProblem p = make_bezout_problem(2, 1);
    CHECK(p.s.coeffs() == std::vector<double>{0, 1, 10, 5});
    CHECK(p.rhs == doctest::Approx(25.0 * std::ldexp(1.0, -5)).epsilon(1e-15));
    CHECK(p.s(1.0) == doctest::Approx(16.0).epsilon(1e-13));
    CHECK_THROWS_AS(make_bezout_problem(0, 1), InvalidOrder);
}

TEST_CASE("s polynomial") {
    CHECK(s_poly(1, 0).coeffs() == std::vector<double>{1, 3});
    CHECK(s_poly(2, 0).coeffs() == std::vector<double>{1, 10, 5});
    CHECK(s_poly(1, 1).coeffs() == std::vector<double>{0, 1, 3});
    for (int L = 1; L <= 8; ++L)
        for (int M : {0, 3}) {
            CHECK(s_poly(L, M).degree() == L + M);
            CHECK(s_poly(L, M)(1.0) ==
                  doctest::Approx(std::ldexp(1.0, 2 * L)).epsilon(1e-12));
        }
}

TEST_CASE("s root formula") {
    const auto r1 = s_roots(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

    const auto r2 = s_roots(2);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == doctest::Approx(-std::pow(std::tan(kPi / 10), 2)).epsilon(1e-14));
    CHECK(r2[1] == doctest::Approx(-std::pow(std::tan(3 * kPi / 10), 2)).epsilon(1e-14));
    CHECK(r2[0] * r2[1] == doctest::Approx(0.2).epsilon(1e-13));

    for (int L = 1; L <= 10; ++L) {
        double prev = 0.0;
        for (double y : s_roots(L)) {
            CHECK(y < 0.0);
            CHECK(y < prev);
            prev = y;
        }
    }
}

TEST_CASE("roots of the deshifted s match the closed form") {
    for (int L = 1; L <= 8; ++L) {
        const auto want = s_roots(L);
        auto found = poly_roots(s_poly(L, 0));
        REQUIRE(found.total_multiplicity() == L);
        for (const auto& e : found.roots) {
            CHECK(std::abs(e.root.imag()) < 1e-9);
            double best = 1e300;
            for (double y : want) best = std::min(best, std::abs(e.root.real() - y));
            CHECK(best <= 1e-8 * (1.0 + std::abs(e.root)));
        }
    }
}

TEST_CASE("recursive solution, reference values") {
    const auto s10 = solve_recursive(1, 0);
    REQUIRE(s10.r.degree() == 0);
    CHECK(s10.r.coeff(0) == doctest::Approx(0.9).epsilon(1e-14));

    const auto s11 = solve_recursive(1, 1);
    REQUIRE(s11.r.degree() == 1);
    CHECK(s11.r.coeff(0) == doctest::Approx(0.61875).epsilon(1e-13));
    CHECK(s11.r.coeff(1) == doctest::Approx(-0.3375).epsilon(1e-13));

    // B(1,1) at y = 1/2: 2 r(1/2) s(1/2) = 9/8
    const RealPoly s = s_poly(1, 1);
    CHECK(2.0 * s11.r(0.5) * s(0.5) == doctest::Approx(1.125).epsilon(1e-13));
}

TEST_CASE("exact oracle, reference values") {
    const auto e10 = solve_exact(1, 0);
    REQUIRE(e10.r_exact.degree() == 0);
    CHECK(e10.r_exact.coeff(0) == Rational(BigInt(9), BigInt(10)));

    const auto e11 = solve_exact(1, 1);
    REQUIRE(e11.r_exact.degree() == 1);
    CHECK(e11.r_exact.coeff(0) == Rational(BigInt(99), BigInt(160)));
    CHECK(e11.r_exact.coeff(1) == Rational(BigInt(-27), BigInt(80)));

    // defining identity holds exactly in rational arithmetic
    for (int L = 1; L <= 3; ++L)
        for (int M = 0; M <= 3; ++M) {
            const auto e = solve_exact(L, M);
            std::vector<Rational> sc(std::size_t(L + M + 1), Rational(0));
            const RealPoly sd = s_poly(L, M);
            for (std::size_t i = 0; i < sd.coeffs().size(); ++i)
                sc[i] = Rational((long long)(sd.coeffs()[i]));
            const RatPoly s(sc);
            const Rational rhs = Rational(BigInt((2 * L + 1) * (2 * L + 1)),
                                          BigInt::from_pow2(unsigned(2 * L + 2 * M - 1)));
            const RatPoly lhs = rat_add(rat_mul(e.r_exact, s),
                                        rat_mul(rat_reflect(e.r_exact), rat_reflect(s)));
            CHECK(rat_sub(lhs, RatPoly::constant(rhs)).is_zero());
        }

    CHECK_THROWS_AS(solve_exact(7, 6), CostGuard);
}

TEST_CASE("three methods agree") {
    CHECK(max_coeff_diff(solve_linear_system(1, 1).r, solve_recursive(1, 1).r) < 1e-10);
    CHECK(max_coeff_diff(solve_linear_system(4, 4).r, solve_recursive(4, 4).r) < 1e-8);
    for (int L = 1; L <= 6; ++L)
        for (int M = 0; M <= 6; ++M)
            CHECK(max_coeff_diff(solve_exact(L, M).r, solve_recursive(L, M).r) < 1e-9);
}

TEST_CASE("linear system goes ill conditioned at (7,7)") {
    bool refused = false;
    double residual = 0.0;
    try {
        residual = solve_linear_system(7, 7).residual;
    } catch (const IllConditioned& e) {
        refused = true;
        CHECK(e.condition > 1e12);
    }
    const double rhs = 225.0 * std::ldexp(1.0, -27);
    CHECK((refused || residual > 1e-9 * rhs));
}

TEST_CASE("residual measurement") {
    // constant identity: r = 9/10 against s_{1,0}
    CHECK(bezout_residual(RealPoly({0.9}), 1, 0) <= 1e-14);

    const auto sol = solve_recursive(3, 2);
    const double rhs = 49.0 * std::ldexp(1.0, -9);
    CHECK(sol.residual <= 1e-9 * rhs);

    // a 1e-3 perturbation is seen at the s(y)+s(1-y) scale
    RealPoly bad = poly_add(sol.r, RealPoly({1e-3}));
    CHECK(bezout_residual(bad, 3, 2) > 1e-9 * rhs);
    CHECK(bezout_residual(bad, 3, 2) == doctest::Approx(1e-3 * 64.0).epsilon(0.5));
}

TEST_CASE("degree bound and positivity") {
    for (int L = 1; L <= 8; ++L)
        for (int M = 1; M <= 8; ++M) {
            const auto sol = solve_recursive(L, M);
            CHECK(sol.r.degree() <= M + L - 1);
            double mn = 1e300;
            for (int i = 0; i <= 4096; ++i)
                mn = std::min(mn, sol.r(double(i) / 4096.0));
            CHECK(mn > 0.0);
        }
}

TEST_CASE("antisymmetry check") {
    CHECK(antisymmetry_check(RealPoly({1, -2})));
    CHECK(antisymmetry_check(RealPoly()));
    CHECK(!antisymmetry_check(RealPoly({0, 1})));
}
