#include <random>

#include "doctest.h"
#include "wpc/quadext.hpp"
#include "wpc/rational.hpp"

using namespace wpc;

TEST_CASE("rational parsing accepts integers and fractions") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-1") == Rational(-1));
    CHECK(Rational::parse("  25/16 ") == Rational(25, 16));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((a / b).is_integer());
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-10, 4).str() == "-5/2");
    CHECK_THROWS_AS(a / Rational(0), Error);
}

TEST_CASE("rational square roots are detected exactly") {
    CHECK(rational_sqrt(Rational(25, 16)) == Rational(5, 4));
    CHECK(rational_sqrt(Rational(0)) == Rational(0));
    CHECK(rational_sqrt(Rational(225, 256)) == Rational(15, 16));
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(!rational_sqrt(Rational(-4)).has_value());
    CHECK(!rational_sqrt(Rational(4, 3)).has_value());
}

TEST_CASE("quadratic arithmetic in sqrt presentations") {
    QuadField f = QuadField::sqrt_of(Rational(2));
    QuadExtElem s = QuadExtElem::generator(f);
    QuadExtElem one = QuadExtElem::rational(f, Rational(1));

    CHECK(s * s == QuadExtElem::rational(f, Rational(2)));
    // 1/(1+sqrt 2) = -1 + sqrt 2
    CHECK(one / (one + s) == QuadExtElem(f, Rational(-1), Rational(1)));
    // ((sqrt 2 + 1)/(sqrt 2 - 1))^2 = 17 + 12 sqrt 2
    QuadExtElem q = (s + one) / (s - one);
    CHECK(q * q == QuadExtElem(f, Rational(17), Rational(12)));
    CHECK((s + one).norm() == Rational(-1));
    CHECK((s + one).conj() == QuadExtElem(f, Rational(1), Rational(-1)));
}

TEST_CASE("sixth-root presentation: w^2 = w - 1") {
    QuadField f = QuadField::omega();
    QuadExtElem w = QuadExtElem::generator(f);
    QuadExtElem one = QuadExtElem::rational(f, Rational(1));

    CHECK(w * w == w - one);
    CHECK(w.conj() == one - w);
    CHECK(w.norm() == Rational(1));
    CHECK(one / (one - w) == w);                       // 1 - w = w^-1 ... = conj
    CHECK(w * w * w == -one);                          // w is a primitive 6th root
    CHECK(w * w * w * w * w * w == one);
    CHECK(QuadExtElem(f, Rational(2), Rational(-3)).norm() == Rational(4 - 6 + 9));
}

TEST_CASE("square radicands give rings with zero divisors, division throws there") {
    QuadField f = QuadField::sqrt_of(Rational(4));
    QuadExtElem s = QuadExtElem::generator(f);
    QuadExtElem two = QuadExtElem::rational(f, Rational(2));
    QuadExtElem one = QuadExtElem::rational(f, Rational(1));
    CHECK((two + s).norm() == Rational(0));
    CHECK_THROWS_AS(one / (two + s), Error);
    // division by elements of nonzero norm still works
    CHECK((two + s) / (one + s) * (one + s) == two + s);
}

TEST_CASE("mixing presentations throws") {
    QuadExtElem a = QuadExtElem::generator(QuadField::sqrt_of(Rational(2)));
    QuadExtElem b = QuadExtElem::generator(QuadField::sqrt_of(Rational(3)));
    CHECK_THROWS_AS((void)(a == b), Error);
    CHECK_THROWS_AS((void)(a + b), Error);
    QuadExtElem w = QuadExtElem::generator(QuadField::omega());
    CHECK_THROWS_AS((void)(a * w), Error);
}

TEST_CASE("field axioms hold on random samples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 7);

    auto sample = [&](const QuadField& f) {
        return QuadExtElem(f, Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    };

    for (const QuadField& f : {QuadField::sqrt_of(Rational(5)),
                               QuadField::sqrt_of(Rational(-3, 4)), QuadField::omega()}) {
        QuadExtElem one = QuadExtElem::rational(f, Rational(1));
        for (int i = 0; i < 50; i++) {
            QuadExtElem x = sample(f), y = sample(f), z = sample(f);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x - x == QuadExtElem::rational(f, Rational(0)));
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x * y).norm() == x.norm() * y.norm());
            if (!x.is_zero()) {
                CHECK(x / x == one);
                CHECK(y / x * x == y);
            }
        }
    }
}
