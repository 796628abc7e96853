#pragma once

// Truncated power series over exact rationals, the avoider weight-enumerator
// system g_r^{(i,j)}, the exactly-one-123 enumerator h_r and its OGF f_r.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "words123/numeric.hpp"

namespace words123 {

// Coefficients 0..order are known; everything above is unknown.
class TruncatedSeries {
public:
    TruncatedSeries() = default;  // order -1: nothing known
    explicit TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}
    TruncatedSeries(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {}

    static TruncatedSeries zero(long order);
    static TruncatedSeries constant(const Rational& c, long order);
    // x^k known through `order`.
    static TruncatedSeries monomial(std::size_t k, long order);
    static TruncatedSeries from_integers(std::span<const Integer> values);

    long order() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool all_integer() const;
    std::vector<Integer> integer_coefficients() const;  // throws MathError if any is fractional

    // Keeps coefficients 0..order (never extends).
    TruncatedSeries truncated(long order) const;
    // Multiplication by x^k; the low k coefficients are exactly zero.
    TruncatedSeries shifted_up(std::size_t k) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

// Cauchy product truncated to the smaller order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// a / x. Throws NonzeroConstantTerm when a(0) != 0.
TruncatedSeries series_div_x(const TruncatedSeries& a);

// b_n = a_{r n}. Throws StrayCoefficient at the first nonzero a_m with r not dividing m.
TruncatedSeries decimate(const TruncatedSeries& a, unsigned r);

// g_r^{(i,j)} for 0 <= i <= j <= r-1; lookups with i > j are swapped.
class GTable {
public:
    GTable(unsigned r, std::map<std::pair<unsigned, unsigned>, TruncatedSeries> entries);

    unsigned r() const noexcept { return r_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const TruncatedSeries& at(unsigned i, unsigned j) const;
    const std::map<std::pair<unsigned, unsigned>, TruncatedSeries>& entries() const noexcept {
        return entries_;
    }

private:
    unsigned r_;
    std::map<std::pair<unsigned, unsigned>, TruncatedSeries> entries_;
};

enum class GSolver {
    Triangular,  // one coefficient order per step; O(N^2) per product
    FullPass,    // repeated substitution of whole series; reference path
};

// Unique power-series solution of
//   g^{(i,j)} = [i=j=0] + x sum_t g^{(i,t)} g^{((r-t) mod r, (j-1) mod r)} + sum_{m<i} x^{m+1} g^{(i-m, j-1)}
// known through x^order. FullPass throws NoConvergence if pass order+3 still changes something.
GTable solve_g_system(unsigned r, long order, GSolver solver = GSolver::Triangular);

// Right-hand side of the system for entry (i,j) evaluated at `table`.
TruncatedSeries g_system_rhs(const GTable& table, unsigned i, unsigned j);

// General formula for the weight enumerator h_r, through x^order.
TruncatedSeries compute_h(unsigned r, long order);
TruncatedSeries compute_h(const GTable& table, long order);

// Closed forms used as cross-checks of compute_h.
TruncatedSeries h1_closed_form(const GTable& table, long order);
TruncatedSeries h2_closed_form(const GTable& table, long order);

// f_r: coefficient n is a_r(n), n = 0..terms-1.
TruncatedSeries compute_f(unsigned r, std::size_t terms);

// Residue class support check: coefficient m is zero unless m = residue (mod r).
bool supported_on_residue(const TruncatedSeries& a, unsigned r, unsigned residue);

}  // namespace words123
