#include <catch_amalgamated.hpp>

#include <cmath>

#include "fgdyn/entropy.hpp"
#include "fgdyn/error.hpp"

using namespace fgdyn;

namespace {

__int128 ipow(__int128 t, int e) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) r *= t;
    return r;
}

// Closed forms evaluated directly in integer arithmetic, independent of IntPolynomial.
__int128 chi_closed(int n1, int n2, int n3, Tau tau, __int128 t) {
    switch (tau) {
        case Tau::Cyc123:
            return (t - 1) * ((ipow(t, n1) + 1) * (ipow(t, n2) + 1) * (ipow(t, n3) + 1) + 1) - (ipow(t, n1 + n2 + n3) - 1);
        case Tau::Swap12:
            return (t - 1) * (ipow(t, n3) * (ipow(t, n1) + 1) * (ipow(t, n2) + 1) - ipow(t, n1) - ipow(t, n2) - 2) -
                   (ipow(t, n1 + n2) - 1) * (ipow(t, n3) - 1);
        case Tau::Id: {
            const int N = n1 + n2 + n3;
            return t * (ipow(t, N) - ipow(t, n1) - ipow(t, n2) - ipow(t, n3) + 2) -
                   (2 * ipow(t, N) - ipow(t, n1 + n2) - ipow(t, n1 + n3) - ipow(t, n2 + n3) + 1);
        }
    }
    return 0;
}

__int128 eval_exact(const IntPolynomial& p, __int128 t) {
    __int128 r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * t + p[i];
    return r;
}

// A polynomial of degree <= d is determined by its values at d+1 points.
void check_against_closed_form(int n1, int n2, int n3, Tau tau) {
    const IntPolynomial p = char_poly(OrbitData{n1, n2, n3, tau});
    const int bound = n1 + n2 + n3 + 1;
    REQUIRE(p.degree() <= bound);
    for (int t = -bound / 2 - 1; t <= bound / 2 + 1; ++t) {
        INFO("t = " << t);
        CHECK(eval_exact(p, t) == chi_closed(n1, n2, n3, tau, t));
    }
}

}  // namespace

TEST_CASE("char_poly at (1,1,1) with the cyclic permutation") {
    // (t-1)((t+1)^3+1) - (t^3-1) = t^4 + t^3 - t - 1, expanded by hand.
    CHECK(char_poly(OrbitData{1, 1, 1, Tau::Cyc123}).coeffs() == std::vector<std::int64_t>{-1, -1, 0, 1, 1});
}

TEST_CASE("char_poly matches the closed forms") {
    check_against_closed_form(1, 1, 8, Tau::Cyc123);
    CHECK(char_poly(OrbitData{1, 1, 8, Tau::Cyc123}).degree() == 11);
    check_against_closed_form(1, 2, 3, Tau::Id);
    check_against_closed_form(1, 2, 3, Tau::Swap12);
    check_against_closed_form(1, 13, 14, Tau::Cyc123);
    check_against_closed_form(3, 4, 5, Tau::Id);
    CHECK_THROWS_AS(char_poly(OrbitData{0, 1, 1, Tau::Id}), RangeError);
}

TEST_CASE("largest_real_root on small polynomials") {
    const auto phi = largest_real_root(IntPolynomial({-1, -1, 1}));
    REQUIRE(phi);
    CHECK(*phi == Catch::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    const auto one = largest_real_root(IntPolynomial({-1, 1}));
    REQUIRE(one);
    CHECK(*one == Catch::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(largest_real_root(IntPolynomial({1, 0, 1})));  // t^2 + 1
    CHECK_THROWS_AS(largest_real_root(IntPolynomial({-1, 1}), 0.0), RangeError);
}

TEST_CASE("largest_real_root of chi at (1,1,8) exceeds 1 and is a root") {
    const IntPolynomial chi = char_poly(OrbitData{1, 1, 8, Tau::Cyc123});
    const auto lambda = largest_real_root(chi, 1e-13);
    REQUIRE(lambda);
    CHECK(*lambda > 1.0);
    const long double x = *lambda;
    CHECK(std::fabs(chi.eval(x)) < 1e-9L * std::max(1.0L, std::fabs(chi.derivative().eval(x))));
    // No sign change beyond the returned root.
    for (double t = *lambda + 1e-6; t < *lambda + 10; t += 0.01) CHECK(chi.eval(t) > 0);
}

TEST_CASE("cyclotomic polynomials and stripping") {
    CHECK(cyclotomic(1).coeffs() == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic(2).coeffs() == std::vector<std::int64_t>{1, 1});
    CHECK(cyclotomic(6).coeffs() == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic(12).coeffs() == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);

    const IntPolynomial golden({-1, -1, 1});
    CHECK(cyclotomic_strip(IntPolynomial({-1, 1}) * golden) == golden);
    CHECK(cyclotomic_strip(golden) == golden);
    CHECK(cyclotomic_strip(cyclotomic(5) * cyclotomic(1) * cyclotomic(1) * golden) == golden);

    const IntPolynomial chi = char_poly(OrbitData{1, 1, 8, Tau::Cyc123});
    const IntPolynomial salem = cyclotomic_strip(chi);
    CHECK(salem.degree() < chi.degree());
    CHECK(divide_exact(chi, salem));
    const auto r1 = largest_real_root(chi, 1e-13);
    const auto r2 = largest_real_root(salem, 1e-13);
    REQUIRE(r1);
    REQUIRE(r2);
    CHECK(std::fabs(*r1 - *r2) < 1e-10);
    // Reciprocal: coefficients read the same in both directions up to sign.
    const auto& cs = salem.coeffs();
    const bool palindromic = std::equal(cs.begin(), cs.end(), cs.rbegin());
    CHECK(palindromic);
}

TEST_CASE("polynomial arithmetic") {
    const IntPolynomial p({1, 2});
    const IntPolynomial q({-1, 0, 3});
    CHECK((p * q).coeffs() == std::vector<std::int64_t>{-1, -2, 3, 6});
    CHECK((p + q).coeffs() == std::vector<std::int64_t>{0, 2, 3});
    CHECK((p - p).is_zero());
    CHECK(q.derivative().coeffs() == std::vector<std::int64_t>{0, 6});
    CHECK_FALSE(divide_exact(q, IntPolynomial({-1, 1})));
    const auto d = divide_exact(IntPolynomial({-1, 0, 1}), IntPolynomial({-1, 1}));
    REQUIRE(d);
    CHECK(d->coeffs() == std::vector<std::int64_t>{1, 1});
}
