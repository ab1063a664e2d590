#include "hypdual/errors.hpp"
#include "hypdual/generator.hpp"
#include "hypdual/truncated_series.hpp"

#include <doctest.h>

#include <cmath>

using namespace hypdual;

namespace {

TruncatedSeries random_series(Rng& rng, int order, int bound) {
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, random_gaussian(rng, bound));
    return s;
}

} // namespace

TEST_CASE("product of short polynomials") {
    // (1 + z)(1 - z) at N=2 -> 1 - z^2
    TruncatedSeries a(2), b(2);
    a.set_coeff(0, GaussianRational(1));
    a.set_coeff(1, GaussianRational(1));
    b.set_coeff(0, GaussianRational(1));
    b.set_coeff(1, GaussianRational(-1));
    const TruncatedSeries prod = a * b;
    CHECK(prod.coeff(0) == GaussianRational(1));
    CHECK(prod.coeff(1) == GaussianRational(0));
    CHECK(prod.coeff(2) == GaussianRational(-1));
}

TEST_CASE("multiplying by one is the identity") {
    Rng rng(31);
    const TruncatedSeries s = random_series(rng, 6, 20);
    CHECK(s * TruncatedSeries::constant(GaussianRational(1), 6) == s);
}

TEST_CASE("Cauchy square of the geometric series") {
    const TruncatedSeries g = TruncatedSeries::geometric(GaussianRational(1), GaussianRational(1), 3);
    const TruncatedSeries sq = g * g;
    for (int k = 0; k <= 3; ++k) CHECK(sq.coeff(k) == GaussianRational(k + 1));
}

TEST_CASE("closed-form constructors") {
    const TruncatedSeries ones =
        TruncatedSeries::geometric(GaussianRational(1), GaussianRational(1), 3);
    for (int k = 0; k <= 3; ++k) CHECK(ones.coeff(k) == GaussianRational(1));

    const TruncatedSeries halves = TruncatedSeries::geometric(
        GaussianRational(2), GaussianRational(Rational(1, 2)), 2);
    CHECK(halves.coeff(0) == GaussianRational(2));
    CHECK(halves.coeff(1) == GaussianRational(1));
    CHECK(halves.coeff(2) == GaussianRational(Rational(1, 2)));

    const TruncatedSeries ramp = TruncatedSeries::ramp(3);
    CHECK(ramp.coeff(0) == GaussianRational(0));
    CHECK(ramp.coeff(1) == GaussianRational(1));
    CHECK(ramp.coeff(2) == GaussianRational(2));
    CHECK(ramp.coeff(3) == GaussianRational(3));
}

TEST_CASE("arithmetic truncates to the smaller order") {
    Rng rng(37);
    const TruncatedSeries s = random_series(rng, 8, 10);
    const TruncatedSeries t = random_series(rng, 5, 10);
    CHECK((s + t).order() == 5);
    CHECK((s * t).order() == 5);
}

TEST_CASE("mul is commutative and associative up to common order") {
    Rng rng(41);
    for (int n = 0; n < 20; ++n) {
        const TruncatedSeries s = random_series(rng, 6, 10);
        const TruncatedSeries t = random_series(rng, 6, 10);
        const TruncatedSeries u = random_series(rng, 6, 10);
        CHECK(s * t == t * s);
        CHECK((s * t) * u == s * (t * u));
    }
}

TEST_CASE("equal_mod_poly") {
    Rng rng(43);
    const TruncatedSeries s = random_series(rng, 6, 10);
    CHECK(equal_mod_poly(s, s, 0));
    CHECK(equal_mod_poly(s, s, 3));

    TruncatedSeries t = s;
    t.set_coeff(0, t.coeff(0) + GaussianRational(1));
    CHECK_FALSE(equal_mod_poly(s, t, 0));
    CHECK(equal_mod_poly(s, t, 1));

    TruncatedSeries u = s;
    u.set_coeff(2, u.coeff(2) + GaussianRational(1));
    CHECK_FALSE(equal_mod_poly(s, u, 2));
    CHECK(equal_mod_poly(s, u, 3));

    // d=0 coincides with full equality
    CHECK(equal_mod_poly(s, s, 0) == (s == s));
    CHECK(equal_mod_poly(s, t, 0) == (s == t));

    CHECK_THROWS_AS(equal_mod_poly(s, t, -1), domain_violation);
    CHECK_THROWS_AS(equal_mod_poly(s, t, 7), domain_violation);

    CHECK(mismatched_indices(s, u) == std::vector<int>{2});
}

TEST_CASE("double-precision evaluation") {
    TruncatedSeries s(1);
    s.set_coeff(0, GaussianRational(1));
    s.set_coeff(1, GaussianRational(1));
    CHECK(s.eval({0.5, 0.0}).real() == doctest::Approx(1.5).epsilon(1e-15));

    const TruncatedSeries g =
        TruncatedSeries::geometric(GaussianRational(1), GaussianRational(1), 12);
    double expected = 0;
    for (int k = 12; k >= 0; --k) expected = expected * 0.1 + 1.0;
    CHECK(g.eval({0.1, 0.0}).real() == doctest::Approx(expected).epsilon(1e-15));
    CHECK(std::abs(g.eval({0.1, 0.0}).real() - 1.111111111111) < 1e-11);

    Rng rng(47);
    const TruncatedSeries any = random_series(rng, 6, 10);
    CHECK(any.eval({0.0, 0.0}) == any.coeff(0).to_complex());
}

TEST_CASE("json coefficient rendering") {
    const TruncatedSeries halves = TruncatedSeries::geometric(
        GaussianRational(2), GaussianRational(Rational(1, 2)), 2);
    CHECK(halves.coeff_strings() == std::vector<std::string>{"2", "1", "1/2"});
}
