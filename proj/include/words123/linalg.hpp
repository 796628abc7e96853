#pragma once

// Exact nullspace computations for the guess-and-verify fitters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "words123/numeric.hpp"

namespace words123 {

// Dense row-major integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const Integer> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

// Scales v by the lcm of denominators and divides by the gcd of the result.
std::vector<Integer> primitive_part(std::span<const Rational> v);
std::vector<Integer> primitive_part(std::span<const Integer> v);

// True iff m * v == 0 exactly.
bool annihilates(const IntegerMatrix& m, std::span<const Integer> v);

// Right nullspace over Q by Gauss-Jordan elimination; one primitive integer
// vector per free column, ordered by free column.
std::vector<std::vector<Integer>> nullspace_exact(const IntegerMatrix& m);

// Nullspace dimension over Z/p. Never smaller than the nullity over Q.
std::size_t nullity_mod(const IntegerMatrix& m, std::uint64_t prime);

// The nullspace vector of a matrix whose nullity over Q is one, via
// nullspaces mod many primes, CRT and rational reconstruction. The result is
// checked exactly; nullopt if no verified vector appears within max_primes.
std::optional<std::vector<Integer>> nullspace_vector_multimodular(const IntegerMatrix& m,
                                                                  std::size_t max_primes = 4000);

// Same, for a matrix already reduced mod `prime` (entries < prime).
std::size_t nullity_mod(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                        std::uint64_t prime);

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& z, std::uint64_t p);

// Primes below 2^61, descending, generated on demand.
std::uint64_t nth_word_prime(std::size_t index);

// Smallest-height a/b with a = b * u (mod modulus), |a|, |b| <= sqrt(modulus/2).
std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& modulus);

}  // namespace words123

namespace words123 {

// Columns at or below this count are solved by exact rational elimination.
inline constexpr std::size_t kExactEliminationLimit = 64;

// One nullspace vector of `fit` for a guesser: exact elimination when the
// matrix is narrow (the sparsest basis vector if the nullity exceeds one),
// multimodular reconstruction otherwise when the screened nullity is one.
std::optional<std::vector<Integer>> pick_nullspace_vector(const IntegerMatrix& fit,
                                                          std::size_t screened_nullity,
                                                          std::size_t exact_limit = kExactEliminationLimit);

}  // namespace words123
