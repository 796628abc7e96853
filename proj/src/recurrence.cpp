#include "words123/recurrence.hpp"

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>

#include "words123/error.hpp"
#include "words123/linalg.hpp"

namespace words123 {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::operator()(const Integer& n) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= n;
        acc += *it;
    }
    return acc;
}

RecurrenceOperator::RecurrenceOperator(std::vector<IntPolynomial> polys) : polys_(std::move(polys)) {
    while (!polys_.empty() && polys_.back().is_zero()) polys_.pop_back();
    if (polys_.empty()) throw InvalidArgument("recurrence operator is identically zero");
}

long RecurrenceOperator::max_degree() const {
    long d = -1;
    for (const auto& p : polys_) d = std::max(d, p.degree());
    return d;
}

RecurrenceOperator RecurrenceOperator::normalized() const {
    Integer g = 0;
    for (const auto& p : polys_)
        for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    const auto lead = leading().coefficients().back();
    if (sgn(lead) < 0) g = -g;
    std::vector<IntPolynomial> out;
    for (const auto& p : polys_) {
        std::vector<Integer> c(p.coefficients().begin(), p.coefficients().end());
        for (auto& z : c) z /= g;
        out.emplace_back(std::move(c));
    }
    return RecurrenceOperator(std::move(out));
}

std::string RecurrenceOperator::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (polys_[k].is_zero()) continue;
        std::string poly;
        const auto c = polys_[k].coefficients();
        for (std::size_t d = 0; d < c.size(); ++d) {
            if (sgn(c[d]) == 0) continue;
            if (!poly.empty()) poly += " + ";
            poly += c[d].get_str();
            if (d) poly += "*n" + (d > 1 ? "^" + std::to_string(d) : std::string());
        }
        if (!out.empty()) out += " + ";
        out += "(" + poly + ")";
        if (k) out += "*N" + (k > 1 ? "^" + std::to_string(k) : std::string());
    }
    return out;
}

std::vector<Integer> apply_operator(const RecurrenceOperator& op, const IntegerSequence& seq) {
    const std::size_t ord = op.order();
    if (seq.size() <= ord) {
        throw InvalidArgument("sequence must be longer than the operator order");
    }
    std::vector<Integer> residual;
    residual.reserve(seq.size() - ord);
    Integer acc;
    for (std::size_t n = 0; n + ord < seq.size(); ++n) {
        acc = 0;
        for (std::size_t k = 0; k <= ord; ++k) {
            acc += op.polys()[k](static_cast<long>(n)) * seq.values[n + k];
        }
        residual.push_back(acc);
    }
    return residual;
}

bool annihilates(const RecurrenceOperator& op, const IntegerSequence& seq) {
    const auto r = apply_operator(op, seq);
    return std::all_of(r.begin(), r.end(), [](const Integer& z) { return sgn(z) == 0; });
}

std::optional<RecurrenceOperator> guess_recurrence(const IntegerSequence& seq, std::size_t max_order,
                                                   std::size_t max_degree, std::size_t guard) {
    const std::size_t need = (max_order + 1) * (max_degree + 1) + guard + max_order;
    if (seq.size() < need) throw InsufficientTerms(seq.size(), need);

    const std::uint64_t prime = nth_word_prime(0);
    std::vector<std::uint64_t> seq_mod;
    for (const auto& v : seq.values) seq_mod.push_back(reduce_mod(v, prime));

    for (std::size_t ord = 1; ord <= max_order; ++ord) {
        const std::size_t equations = seq.size() - ord;
        const std::size_t fit_rows = equations - guard;
        for (std::size_t deg = 0; deg <= max_degree; ++deg) {
            const std::size_t cols = (ord + 1) * (deg + 1);
            // Column (k, d) holds n^d seq(n+k).
            std::vector<std::vector<std::uint64_t>> screen(fit_rows, std::vector<std::uint64_t>(cols));
            for (std::size_t n = 0; n < fit_rows; ++n) {
                std::size_t c = 0;
                for (std::size_t k = 0; k <= ord; ++k) {
                    std::uint64_t power = 1;
                    for (std::size_t d = 0; d <= deg; ++d) {
                        screen[n][c++] = mul_mod_u64(power, seq_mod[n + k], prime);
                        power = mul_mod_u64(power, n % prime, prime);
                    }
                }
            }
            const auto nullity = nullity_mod(std::move(screen), cols, prime);
            if (nullity == 0) continue;

            IntegerMatrix fit(fit_rows, cols);
            for (std::size_t n = 0; n < fit_rows; ++n) {
                std::size_t c = 0;
                for (std::size_t k = 0; k <= ord; ++k) {
                    Integer power = 1;
                    for (std::size_t d = 0; d <= deg; ++d) {
                        fit(n, c++) = power * seq.values[n + k];
                        power *= static_cast<unsigned long>(n);
                    }
                }
            }
            auto vec = pick_nullspace_vector(fit, nullity);
            if (!vec) continue;

            std::vector<IntPolynomial> polys;
            for (std::size_t k = 0; k <= ord; ++k) {
                polys.emplace_back(std::vector<Integer>(vec->begin() + static_cast<std::ptrdiff_t>(k * (deg + 1)),
                                                        vec->begin() + static_cast<std::ptrdiff_t>((k + 1) * (deg + 1))));
            }
            if (std::all_of(polys.begin(), polys.end(), [](const auto& p) { return p.is_zero(); })) continue;
            RecurrenceOperator op(std::move(polys));
            if (op.order() != ord) continue;  // a lower order operator would have been found already
            // Held-out guard equations (and the rest of the data).
            if (!annihilates(op, seq)) continue;
            return op.normalized();
        }
    }
    return std::nullopt;
}

IntegerSequence extend_sequence(const RecurrenceOperator& op, const IntegerSequence& seed, std::size_t upto) {
    const std::size_t ord = op.order();
    if (seed.size() < ord) throw InvalidArgument("seed shorter than the operator order");
    IntegerSequence out{seed.values, seed.label};
    if (out.values.size() > upto + 1) {
        out.values.resize(upto + 1);
        return out;
    }
    Integer acc, lead, q;
    while (out.values.size() <= upto) {
        const std::size_t target = out.values.size();
        const long n = static_cast<long>(target - ord);
        lead = op.leading()(n);
        if (sgn(lead) == 0) throw LeadingCoefficientZero(n);
        acc = 0;
        for (std::size_t k = 0; k < ord; ++k) {
            acc += op.polys()[k](n) * out.values[static_cast<std::size_t>(n) + k];
        }
        acc = -acc;
        if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) throw NonIntegerStep(n);
        mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
        out.values.push_back(q);
    }
    return out;
}

namespace {

using Float = boost::multiprecision::mpfr_float_100;

Float to_float(const Integer& z) {
    Float f;
    mpfr_set_z(f.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return f;
}

// Order-`levels` Richardson extrapolation of s, assuming s(n) = L + c1/n + ...,
// using the samples at n0 .. n0+levels.
Float richardson(const std::vector<Float>& s, std::size_t n0, unsigned levels) {
    Float total = 0;
    Float factorial_j = 1;
    for (unsigned j = 0; j <= levels; ++j) {
        if (j) factorial_j *= j;
        Float factorial_rest = 1;
        for (unsigned i = 2; i <= levels - j; ++i) factorial_rest *= i;
        Float term = s[n0 + j] * boost::multiprecision::pow(Float(n0 + j), levels) / (factorial_j * factorial_rest);
        if ((levels - j) % 2) term = -term;
        total += term;
    }
    return total;
}

}  // namespace

AsymptoticEstimate estimate_asymptotics(const IntegerSequence& seq, unsigned levels) {
    const std::size_t len = seq.size();
    if (len < kMinAsymptoticLength) throw TooShort(len, kMinAsymptoticLength);
    // The window feeding every extrapolation must be positive.
    const std::size_t window = levels + 3;
    for (std::size_t i = len - window; i < len; ++i) {
        if (sgn(seq.values[i]) <= 0) throw NonPositiveTail(i);
    }
    const std::size_t n0 = len - 2 - levels;  // last ratio index is len - 2

    std::vector<Float> values(len), ratio(len - 1);
    for (std::size_t n = len - window; n < len; ++n) values[n] = to_float(seq.values[n]);
    for (std::size_t n = len - window; n + 1 < len; ++n) ratio[n] = values[n + 1] / values[n];

    const Float mu = richardson(ratio, n0, levels);

    std::vector<Float> alpha_seq(len - 1);
    for (std::size_t n = n0; n + 1 < len; ++n) alpha_seq[n] = Float(n) * (ratio[n] / mu - 1);
    const Float alpha = richardson(alpha_seq, n0, levels);

    std::vector<Float> constant_seq(len);
    for (std::size_t n = n0; n < len; ++n) {
        constant_seq[n] = values[n] / (boost::multiprecision::pow(mu, Float(n)) *
                                       boost::multiprecision::pow(Float(n), alpha));
    }
    const Float c = richardson(constant_seq, n0, levels);

    AsymptoticEstimate est;
    est.mu = mu.convert_to<double>();
    est.alpha = alpha.convert_to<double>();
    est.C = c.convert_to<double>();
    est.n_used = len;
    return est;
}

ConjectureReport conjecture_check(unsigned r, const AsymptoticEstimate& est) {
    ConjectureReport rep;
    rep.r = r;
    rep.target_mu = static_cast<double>(r + 1) * static_cast<double>(1ULL << r);
    rep.mu_relative_error = std::abs(est.mu - rep.target_mu) / rep.target_mu;
    rep.alpha_error = std::abs(est.alpha - rep.target_alpha);
    rep.mu_pass = rep.mu_relative_error < kMuRelativeTolerance;
    rep.alpha_pass = rep.alpha_error < kAlphaTolerance;
    return rep;
}

}  // namespace words123
