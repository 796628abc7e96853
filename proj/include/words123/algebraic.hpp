#pragma once

// Bivariate polynomials P(x, y) and guess-and-verify of algebraic equations
// P(x, F(x)) = 0 for truncated series F.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "words123/numeric.hpp"
#include "words123/series.hpp"

namespace words123 {

class BivariatePolynomial {
public:
    using Exponents = std::pair<std::size_t, std::size_t>;  // (power of x, power of y)

    BivariatePolynomial() = default;
    explicit BivariatePolynomial(std::map<Exponents, Integer> terms);

    // Nonzero terms only, keyed by (a, b) for x^a y^b.
    const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
    Integer coefficient(std::size_t a, std::size_t b) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    // Actual degrees in x and y; (0, 0) for the zero polynomial.
    std::pair<std::size_t, std::size_t> degree_profile() const;

    // Content removed, first nonzero coefficient in (a, b) order positive.
    BivariatePolynomial normalized() const;

    std::string to_string() const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    std::map<Exponents, Integer> terms_;
};

inline std::pair<std::size_t, std::size_t> degree_profile(const BivariatePolynomial& p) {
    return p.degree_profile();
}

// P(x, F(x)) through F's order.
TruncatedSeries eval_at_series(const BivariatePolynomial& p, const TruncatedSeries& f);

// Sweeps deg_y = 1.. and deg_x = 0.. within the bounds; for each candidate
// the coefficients of P(x, F(x)) up to order - guard must vanish, and the
// last `guard` coefficients are the held-out check. Throws InsufficientTerms
// unless F.order() >= (deg_x+1)(deg_y+1) + guard.
std::optional<BivariatePolynomial> guess_algebraic(const TruncatedSeries& f, std::size_t deg_x,
                                                   std::size_t deg_y, std::size_t guard = 10);

}  // namespace words123
