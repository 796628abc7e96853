#pragma once

// P-recursive sequences: operators sum_k p_k(n) N^k, residuals, guessing,
// exact extension and asymptotic growth estimates.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "words123/numeric.hpp"

namespace words123 {

// Integer polynomial in n, coefficients ascending.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);

    std::span<const Integer> coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer operator()(const Integer& n) const;
    Integer operator()(long n) const { return (*this)(Integer(n)); }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Integer> coeffs_;  // no trailing zeros
};

class RecurrenceOperator {
public:
    RecurrenceOperator() = default;
    // Trailing zero polynomials are dropped; throws InvalidArgument if all vanish.
    explicit RecurrenceOperator(std::vector<IntPolynomial> polys);

    std::size_t order() const noexcept { return polys_.size() - 1; }
    const std::vector<IntPolynomial>& polys() const noexcept { return polys_; }
    const IntPolynomial& leading() const { return polys_.back(); }
    long max_degree() const;

    // Content 1; leading coefficient of the leading polynomial positive.
    RecurrenceOperator normalized() const;

    std::string to_string() const;

    friend bool operator==(const RecurrenceOperator&, const RecurrenceOperator&) = default;

private:
    std::vector<IntPolynomial> polys_;
};

struct IntegerSequence {
    std::vector<Integer> values;
    std::string label;

    std::size_t size() const noexcept { return values.size(); }
};

// r(n) = sum_k p_k(n) seq(n+k) for n = 0 .. size - order - 1.
std::vector<Integer> apply_operator(const RecurrenceOperator& op, const IntegerSequence& seq);
bool annihilates(const RecurrenceOperator& op, const IntegerSequence& seq);

// Lexicographic sweep over order 1..max_order, degree 0..max_degree. The
// last `guard` equations are held out. Throws InsufficientTerms unless
// size >= (max_order+1)(max_degree+1) + guard + max_order.
std::optional<RecurrenceOperator> guess_recurrence(const IntegerSequence& seq, std::size_t max_order,
                                                   std::size_t max_degree, std::size_t guard = 20);

// Values 0..upto. Throws LeadingCoefficientZero / NonIntegerStep.
IntegerSequence extend_sequence(const RecurrenceOperator& op, const IntegerSequence& seed, std::size_t upto);

struct AsymptoticEstimate {
    double mu = 0;     // exponential growth
    double alpha = 0;  // polynomial exponent
    double C = 0;      // leading constant
    std::size_t n_used = 0;
};

inline constexpr std::size_t kMinAsymptoticLength = 30;

// Richardson-accelerated estimates of a(n) ~ C mu^n n^alpha from the tail.
AsymptoticEstimate estimate_asymptotics(const IntegerSequence& seq, unsigned levels = 4);

struct ConjectureReport {
    unsigned r = 0;
    double target_mu = 0;
    double target_alpha = -1.5;
    double mu_relative_error = 0;
    double alpha_error = 0;
    bool mu_pass = false;
    bool alpha_pass = false;
    bool passed() const noexcept { return mu_pass && alpha_pass; }
};

inline constexpr double kMuRelativeTolerance = 1e-3;
inline constexpr double kAlphaTolerance = 0.05;
inline constexpr double kConstantRelativeTolerance = 0.02;

// Compares mu with (r+1) 2^r and alpha with -3/2.
ConjectureReport conjecture_check(unsigned r, const AsymptoticEstimate& est);

}  // namespace words123
