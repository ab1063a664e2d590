#include "hypdual/errors.hpp"
#include "hypdual/generator.hpp"
#include "hypdual/pochhammer.hpp"

#include <doctest.h>

using namespace hypdual;

namespace {

// Left side of the shifted-product identity, straight off its definition:
// prod_{s=-m}^{k-1} (w + j - s).
GaussianRational shifted_product(const GaussianRational& w, int m, int j, int k) {
    GaussianRational prod(1);
    for (int s = -m; s <= k - 1; ++s) prod *= w + GaussianRational(j) - GaussianRational(s);
    return prod;
}

} // namespace

TEST_CASE("rising factorial basics") {
    CHECK(rising_factorial(GaussianRational(5), 0) == GaussianRational(1));
    CHECK(rising_factorial(GaussianRational(2), 3) == GaussianRational(24));
    CHECK(rising_factorial(GaussianRational(5), -2) == GaussianRational(Rational(1, 12)));
    CHECK_THROWS_AS(rising_factorial(GaussianRational(1), -1), pole_error);
    CHECK(factorial(0) == GaussianRational(1));
    CHECK(factorial(5) == GaussianRational(120));
}

TEST_CASE("rising factorial functional equation") {
    Rng rng(17);
    for (int n = 0; n < 100; ++n) {
        const GaussianRational a = random_gaussian(rng, 30);
        const int k = static_cast<int>(rng.uniform(-6, 6));
        try {
            const GaussianRational lhs = rising_factorial(a, k + 1);
            const GaussianRational rhs = rising_factorial(a, k) * (a + GaussianRational(k));
            CHECK(lhs == rhs);
        } catch (const pole_error&) {
            // a hit a pole of one side; nothing to compare
        }
    }
}

TEST_CASE("negative index agrees with walking the functional equation down") {
    Rng rng(19);
    for (int n = 0; n < 50; ++n) {
        GaussianRational a = random_gaussian(rng, 30);
        if (a.is_integer()) a += GaussianRational(Rational(1, 2));
        // (a)_{k-1} = (a)_k / (a + k - 1), starting from (a)_0 = 1
        GaussianRational walked(1);
        for (int k = 0; k > -5; --k) walked /= a + GaussianRational(k - 1);
        CHECK(walked == rising_factorial(a, -5));
    }
}

TEST_CASE("q-Pochhammer basics") {
    const GaussianRational a(Rational(2, 3));
    const GaussianRational q(Rational(1, 2));
    CHECK(q_pochhammer(a, q, 0) == GaussianRational(1));
    CHECK(q_pochhammer(a, q, 2) ==
          (GaussianRational(1) - a) * (GaussianRational(1) - a * q));
    CHECK_THROWS_AS(
        q_pochhammer(GaussianRational(Rational(1, 2)), GaussianRational(Rational(1, 2)), -1),
        pole_error);
    CHECK_THROWS_AS(q_pochhammer(a, GaussianRational(0), 1), domain_violation);
}

TEST_CASE("q-Pochhammer functional equation across zero") {
    Rng rng(23);
    for (int n = 0; n < 100; ++n) {
        const GaussianRational a = random_gaussian(rng, 20);
        GaussianRational q = random_nonzero_gaussian(rng, 20);
        const int k = static_cast<int>(rng.uniform(-5, 5));
        try {
            // (a;q)_{k+1} = (a;q)_k (1 - a q^k)
            const GaussianRational lhs = q_pochhammer(a, q, k + 1);
            const GaussianRational rhs =
                q_pochhammer(a, q, k) * (GaussianRational(1) - a * integer_power(q, k));
            CHECK(lhs == rhs);
        } catch (const pole_error&) {
        } catch (const division_by_zero&) {
        }
    }
}

TEST_CASE("integer powers") {
    CHECK(integer_power(GaussianRational(Rational(5, 7)), 0) == GaussianRational(1));
    CHECK(integer_power(GaussianRational(Rational(1, 2)), -2) == GaussianRational(4));
    CHECK(integer_power(GaussianRational(Rational(1), Rational(1)), 2) ==
          GaussianRational(Rational(0), Rational(2)));
    CHECK_THROWS_AS(integer_power(GaussianRational(0), -1), division_by_zero);
    CHECK(integer_power(GaussianRational(0), 3) == GaussianRational(0));
}

TEST_CASE("shifted product identity, non-negative and negative m") {
    Rng rng(29);
    int done = 0;
    while (done < 100) {
        const GaussianRational w = random_gaussian(rng, 20);
        const int m = static_cast<int>(rng.uniform(0, 5));
        const int k = static_cast<int>(rng.uniform(0, 8));
        const int j = static_cast<int>(rng.uniform(0, k));
        // (-1)^{k-j} (1+w)_m (1+m+w)_j (-w)_{k-j}
        GaussianRational rhs = rising_factorial(GaussianRational(1) + w, m) *
                               rising_factorial(GaussianRational(1 + m) + w, j) *
                               rising_factorial(-w, k - j);
        if ((k - j) % 2 != 0) rhs = -rhs;
        CHECK(shifted_product(w, m, j, k) == rhs);
        ++done;
    }

    done = 0;
    while (done < 100) {
        const GaussianRational w = random_gaussian(rng, 20);
        const int m = static_cast<int>(rng.uniform(-5, -1));
        const int k = static_cast<int>(rng.uniform(-m, 8));
        const int j = static_cast<int>(rng.uniform(0, k));
        try {
            GaussianRational rhs = rising_factorial(GaussianRational(1) + w, m) *
                                   rising_factorial(GaussianRational(1 + m) + w, j) *
                                   rising_factorial(-w, k - j);
            if ((k - j) % 2 != 0) rhs = -rhs;
            CHECK(shifted_product(w, m, j, k) == rhs);
            ++done;
        } catch (const pole_error&) {
            // (1+w)_m poled; redraw
        }
    }
}
