#include <doctest.h>

#include <vector>

#include "wfomc/numeric.hpp"
#include "wfomc/polynomial.hpp"

using namespace wfomc;

TEST_CASE("rationals parse and print losslessly") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1") == -1);
    CHECK(parse_rational("+1/2") == Rational(1, 2));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(to_string(Rational(6, 3)) == "2");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    for (const char* s : {"0", "17", "-5/9", "123456789012345678901234567891/2"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
}

TEST_CASE("multinomial coefficients") {
    const std::vector<std::uint32_t> a{2, 1, 1};
    const std::vector<std::uint32_t> b{7};
    const std::vector<std::uint32_t> c{0, 0};
    const std::vector<std::uint32_t> d{};
    CHECK(multinomial(a) == 12);
    CHECK(multinomial(b) == 1);
    CHECK(multinomial(c) == 1);
    CHECK(multinomial(d) == 1);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("multinomial matches the factorial formula") {
    for (std::uint32_t i = 0; i <= 6; ++i) {
        for (std::uint32_t j = 0; j <= 6; ++j) {
            for (std::uint32_t k = 0; k <= 6; ++k) {
                const std::vector<std::uint32_t> parts{i, j, k};
                CHECK(multinomial(parts) * factorial(i) * factorial(j) * factorial(k) == factorial(i + j + k));
            }
        }
    }
}

TEST_CASE("exact powers") {
    CHECK(pow(Rational(1, 2), 10) == Rational(1, 1024));
    CHECK(pow(Rational(-1), 7) == -1);
    CHECK(pow(Integer(2), 100) == Integer("1267650600228229401496703205376"));
    CHECK(pow(Rational(5), 0) == 1);
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial x = Polynomial::variable(0);
    const Polynomial y = Polynomial::variable(1);
    const Polynomial p = pow(Polynomial(1) + x, 4);
    CHECK(p.term_count() == 5);
    CHECK(p.coefficient({2}) == 6);
    CHECK(p.degree(0) == 4);
    CHECK((x - x).is_zero());
    CHECK((x * y - y * x).is_zero());
    CHECK(((x + y) * (x - y)) == x * x - y * y);
    const std::vector<Rational> point{Rational(1, 2), Rational(3)};
    CHECK(((x + y) * (x + Polynomial(2))).evaluate(point) == Rational(7, 2) * Rational(5, 2));
    // trailing zero exponents are trimmed so monomials compare equal
    CHECK(Polynomial::monomial({1, 0, 0}, 3) == Polynomial::monomial({1}, 3));
    CHECK(pow(Polynomial(Rational(2)) * x, 3) == Polynomial::monomial({3}, 8));
}
