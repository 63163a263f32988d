#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace vermaband;
using testutil::grat;
using testutil::rat;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("gaussian rational field arithmetic") {
    GaussianRational a(Rational(1, 2), Rational(1, 3));
    GaussianRational b(Rational(-2, 5), Rational(1));

    SECTION("components stay reduced") {
        GaussianRational c = a + a;  // 1 + 2/3 i
        CHECK(numerator(c.re()) == 1);
        CHECK(denominator(c.re()) == 1);
        CHECK(c.im() == Rational(2, 3));
    }
    SECTION("conjugation is an involution and |x|^2 is nonnegative") {
        CHECK(a.conj().conj() == a);
        CHECK(a.norm_sq() == Rational(1, 4) + Rational(1, 9));
        CHECK(a.norm_sq() >= 0);
        CHECK(a * a.conj() == GaussianRational(a.norm_sq()));
    }
    SECTION("field operations") {
        CHECK(a + b == GaussianRational(Rational(1, 10), Rational(4, 3)));
        CHECK(a * GaussianRational::i() == GaussianRational(Rational(-1, 3), Rational(1, 2)));
        CHECK((a / b) * b == a);
        CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
    }
    SECTION("printing") {
        CHECK(a.str() == "(1/2+1/3i)");
        CHECK(GaussianRational(Rational(3, 4)).str() == "3/4");
        CHECK(GaussianRational(Rational(0), Rational(1, 2)).str() == "1/2i");
        CHECK(GaussianRational(0).str() == "0");
    }
}

TEST_CASE("polynomial arithmetic and division") {
    Poly n = Poly::variable();
    Poly p = n * n - Poly(GaussianRational(1));            // n^2 - 1
    Poly q = Poly::linear(GaussianRational(Rational(-1)));  // n - 1

    CHECK(p.eval(3) == grat(8, 1));
    auto [quot, rem] = Poly::divmod(p, q);
    CHECK(quot == Poly::linear(GaussianRational(1)));
    CHECK(rem.is_zero());
    CHECK(Poly::gcd(p, q) == q.monic());
    CHECK(p.shifted(2) == n * n + GaussianRational(4) * n + Poly(GaussianRational(3)));
    CHECK((p * q).degree() == 3);
    CHECK_THROWS_AS(Poly::divmod(p, Poly()), std::domain_error);
}

TEST_CASE("positive root bounds are sound") {
    // (n - 5)(n - 17)(n + 3): positive roots 5 and 17
    Poly p = testutil::linear_product({Rational(-5), Rational(-17), Rational(3)});
    CHECK(detail::positive_root_bound(p) >= 17);
    // random products of linear factors: the bound dominates every root
    testutil::Rng rng(7101);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> shifts;
        long long largest_root = 0;
        for (int i = 0, m = static_cast<int>(rng.pick(1, 4)); i < m; ++i) {
            long long s = rng.pick(-30, 30);
            shifts.emplace_back(s);
            largest_root = std::max(largest_root, -s);
        }
        CHECK(detail::positive_root_bound(testutil::linear_product(shifts)) >= largest_root);
    }
}
