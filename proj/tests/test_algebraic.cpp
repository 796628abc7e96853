#include <doctest.h>

#include "words123/algebraic.hpp"
#include "words123/error.hpp"
#include "words123/json_io.hpp"
#include "words123/series.hpp"

using namespace words123;

namespace {

using Terms = std::map<BivariatePolynomial::Exponents, Integer>;

TruncatedSeries geometric(long order) {
    return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order + 1), Rational(1)));
}

TruncatedSeries catalan(std::size_t terms) {
    std::vector<Rational> c{Rational(1)};
    for (std::size_t n = 1; n < terms; ++n) c.push_back(c.back() * Rational(2 * (2 * static_cast<long>(n) - 1), static_cast<long>(n) + 1));
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("bivariate polynomial basics") {
    const BivariatePolynomial p(Terms{{{0, 1}, -2}, {{1, 0}, 2}, {{2, 3}, 0}});
    CHECK(p.terms().size() == 2);
    CHECK(p.coefficient(0, 1) == -2);
    CHECK(p.coefficient(5, 5) == 0);
    CHECK(p.degree_profile() == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(p.normalized() == BivariatePolynomial(Terms{{{0, 1}, 1}, {{1, 0}, -1}}));
    CHECK(p.normalized().normalized() == p.normalized());
    CHECK(BivariatePolynomial().is_zero());
    CHECK(degree_profile(fixture_algebraic_r2()) == std::pair<std::size_t, std::size_t>{6, 4});
    CHECK(degree_profile(BivariatePolynomial(Terms{{{0, 1}, 1}, {{1, 1}, -1}, {{0, 0}, -1}})) ==
          std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("evaluation at a series") {
    const BivariatePolynomial y_minus_x(Terms{{{0, 1}, 1}, {{1, 0}, -1}});
    CHECK(eval_at_series(y_minus_x, TruncatedSeries::monomial(1, 10)).is_zero());
    const BivariatePolynomial idempotent(Terms{{{0, 2}, 1}, {{0, 1}, -1}});
    CHECK(eval_at_series(idempotent, TruncatedSeries::constant(1, 10)).is_zero());
    CHECK(eval_at_series(fixture_algebraic_r2(), compute_f(2, 41)).is_zero());
    CHECK_FALSE(eval_at_series(fixture_algebraic_r2(), compute_f(1, 41)).is_zero());
}

TEST_CASE("guessing simple equations") {
    const auto g = guess_algebraic(geometric(30), 2, 2, 10);
    REQUIRE(g.has_value());
    CHECK(*g == BivariatePolynomial(Terms{{{0, 0}, -1}, {{0, 1}, 1}, {{1, 1}, -1}}).normalized());
    CHECK(degree_profile(*g) == std::pair<std::size_t, std::size_t>{1, 1});

    const auto c = guess_algebraic(catalan(40), 2, 3, 10);
    REQUIRE(c.has_value());
    CHECK(*c == BivariatePolynomial(Terms{{{1, 2}, 1}, {{0, 1}, -1}, {{0, 0}, 1}}).normalized());

    SUBCASE("scaling the series by a unit does not change the shape") {
        const auto scaled = guess_algebraic(Rational(-1) * catalan(40), 2, 3, 10);
        REQUIRE(scaled.has_value());
        CHECK(degree_profile(*scaled) == degree_profile(*c));
        CHECK(eval_at_series(*scaled, Rational(-1) * catalan(40)).is_zero());
    }
    SUBCASE("no equation within small bounds") {
        std::vector<Rational> e{Rational(1)};
        for (int n = 1; n < 40; ++n) e.push_back(e.back() / n);
        CHECK_FALSE(guess_algebraic(TruncatedSeries(e), 2, 2, 10).has_value());
    }
}

TEST_CASE("guessing f_1 and f_2") {
    const auto f1 = compute_f(1, 40);
    const auto p1 = guess_algebraic(f1, 4, 4, 10);
    REQUIRE(p1.has_value());
    CHECK(eval_at_series(*p1, compute_f(1, 120)).is_zero());
    // Regression fixture recorded from the guesser.
    CHECK(*p1 == BivariatePolynomial(Terms{{{0, 1}, 1}, {{1, 1}, -6}, {{2, 1}, 9}, {{3, 0}, -1}, {{3, 1}, -2}, {{3, 2}, -1}}));
    CHECK(degree_profile(*p1) == std::pair<std::size_t, std::size_t>{3, 2});

    const auto p2 = guess_algebraic(compute_f(2, 80), 6, 4, 10);
    REQUIRE(p2.has_value());
    CHECK(*p2 == fixture_algebraic_r2().normalized());
    CHECK(eval_at_series(*p2, compute_f(2, 150)).is_zero());
}

TEST_CASE("guess_algebraic precondition") {
    CHECK_THROWS_AS(guess_algebraic(compute_f(2, 10), 6, 4, 10), InsufficientTerms);
    CHECK_THROWS_AS(guess_algebraic(geometric(10), 0, 0, 10), InsufficientTerms);
    CHECK_FALSE(guess_algebraic(geometric(30), 3, 0, 10).has_value());
}
