#include "words123/algebraic.hpp"

#include <algorithm>

#include "words123/error.hpp"
#include "words123/linalg.hpp"

namespace words123 {

BivariatePolynomial::BivariatePolynomial(std::map<Exponents, Integer> terms) {
    for (auto& [e, c] : terms) {
        if (sgn(c) != 0) terms_.emplace(e, std::move(c));
    }
}

Integer BivariatePolynomial::coefficient(std::size_t a, std::size_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Integer(0) : it->second;
}

std::pair<std::size_t, std::size_t> BivariatePolynomial::degree_profile() const {
    std::size_t dx = 0, dy = 0;
    for (const auto& [e, c] : terms_) {
        dx = std::max(dx, e.first);
        dy = std::max(dy, e.second);
    }
    return {dx, dy};
}

BivariatePolynomial BivariatePolynomial::normalized() const {
    if (terms_.empty()) return *this;
    Integer g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(terms_.begin()->second) < 0) g = -g;
    std::map<Exponents, Integer> out;
    for (const auto& [e, c] : terms_) out.emplace(e, c / g);
    return BivariatePolynomial(std::move(out));
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string coeff = c.get_str();
        if (!out.empty()) {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) coeff = coeff.substr(1);
        }
        out += coeff;
        if (e.first) out += "*x" + (e.first > 1 ? "^" + std::to_string(e.first) : std::string());
        if (e.second) out += "*F" + (e.second > 1 ? "^" + std::to_string(e.second) : std::string());
    }
    return out;
}

TruncatedSeries eval_at_series(const BivariatePolynomial& p, const TruncatedSeries& f) {
    const long order = f.order();
    const auto [dx, dy] = p.degree_profile();
    auto result = TruncatedSeries::zero(order);
    auto power = TruncatedSeries::constant(1, order);
    for (std::size_t b = 0; b <= dy; ++b) {
        if (b) power = power * f;
        for (std::size_t a = 0; a <= dx; ++a) {
            const auto c = p.coefficient(a, b);
            if (sgn(c) == 0) continue;
            result = result + (Rational(c) * power).shifted_up(a).truncated(order);
        }
    }
    return result;
}

namespace {

// Row k of the ansatz holds the coefficient of x^k in x^a F^b for each column.
struct Ansatz {
    std::vector<TruncatedSeries> powers;  // F^0 .. F^deg_y
    std::vector<Integer> row_scale;       // clears denominators of row k
    std::size_t rows = 0;

    Integer entry(std::size_t k, std::size_t a, std::size_t b) const {
        if (k < a) return 0;
        const Rational& q = powers[b][k - a];
        return q.get_num() * (row_scale[k] / q.get_den());
    }
};

}  // namespace

std::optional<BivariatePolynomial> guess_algebraic(const TruncatedSeries& f, std::size_t deg_x,
                                                   std::size_t deg_y, std::size_t guard) {
    const std::size_t unknowns = (deg_x + 1) * (deg_y + 1);
    const std::size_t have = f.size();
    if (f.order() < static_cast<long>(unknowns + guard)) {
        throw InsufficientTerms(have, unknowns + guard + 1);
    }
    const long order = f.order();

    Ansatz ansatz;
    ansatz.rows = have;
    ansatz.powers.push_back(TruncatedSeries::constant(1, order));
    for (std::size_t b = 1; b <= deg_y; ++b) ansatz.powers.push_back(ansatz.powers.back() * f);
    ansatz.row_scale.assign(have, Integer(1));
    for (std::size_t k = 0; k < have; ++k) {
        for (const auto& pw : ansatz.powers)
            for (std::size_t a = 0; a <= k; ++a)
                mpz_lcm(ansatz.row_scale[k].get_mpz_t(), ansatz.row_scale[k].get_mpz_t(),
                        pw[k - a].get_den_mpz_t());
    }

    const std::size_t fit_rows = have - guard;
    const std::uint64_t screen_prime = nth_word_prime(0);
    for (std::size_t dy = 1; dy <= deg_y; ++dy) {
        for (std::size_t dx = 0; dx <= deg_x; ++dx) {
            std::vector<std::pair<std::size_t, std::size_t>> columns;
            for (std::size_t b = 0; b <= dy; ++b)
                for (std::size_t a = 0; a <= dx; ++a) columns.emplace_back(a, b);

            IntegerMatrix fit(fit_rows, columns.size());
            std::vector<std::vector<std::uint64_t>> screen(fit_rows, std::vector<std::uint64_t>(columns.size()));
            for (std::size_t k = 0; k < fit_rows; ++k) {
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    fit(k, c) = ansatz.entry(k, columns[c].first, columns[c].second);
                    screen[k][c] = reduce_mod(fit(k, c), screen_prime);
                }
            }
            const auto nullity = nullity_mod(std::move(screen), columns.size(), screen_prime);
            auto vec = pick_nullspace_vector(fit, nullity);
            if (!vec) continue;

            std::map<BivariatePolynomial::Exponents, Integer> terms;
            for (std::size_t c = 0; c < columns.size(); ++c) terms[columns[c]] = (*vec)[c];
            BivariatePolynomial candidate(std::move(terms));
            if (candidate.is_zero()) continue;
            // Guard window, and everything else we know, must vanish too.
            if (!eval_at_series(candidate, f).is_zero()) continue;
            return candidate.normalized();
        }
    }
    return std::nullopt;
}

}  // namespace words123
