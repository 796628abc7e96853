#include <doctest.h>

#include <random>

#include "words123/linalg.hpp"

using namespace words123;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// A rows x cols matrix whose nullspace is spanned by `v`: random rows
// projected to be orthogonal-free via v's last nonzero entry.
IntegerMatrix matrix_with_kernel(const std::vector<Integer>& v, std::size_t rows, std::mt19937_64& rng) {
    const std::size_t cols = v.size();
    std::size_t pivot = cols;
    while (pivot > 0 && sgn(v[pivot - 1]) == 0) --pivot;
    --pivot;
    IntegerMatrix m(rows, cols);
    std::uniform_int_distribution<long> d(-50, 50);
    for (std::size_t i = 0; i < rows; ++i) {
        Integer dot = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j == pivot) continue;
            m(i, j) = d(rng) * v[pivot];
            dot += m(i, j) * v[j];
        }
        m(i, pivot) = -dot / v[pivot];
    }
    return m;
}

}  // namespace

TEST_CASE("primitive part") {
    const std::vector<Rational> q{Rational(1, 2), Rational(-1, 3), Rational(0)};
    CHECK(primitive_part(std::span<const Rational>(q)) == std::vector<Integer>{3, -2, 0});
    const std::vector<Integer> z{6, -4, 0};
    CHECK(primitive_part(std::span<const Integer>(z)) == std::vector<Integer>{3, -2, 0});
}

TEST_CASE("exact nullspace") {
    const auto m = from_rows({{1, 2, 3}, {2, 4, 6}});
    const auto basis = nullspace_exact(m);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) CHECK(annihilates(m, v));
    CHECK(nullspace_exact(from_rows({{1, 0}, {0, 1}})).empty());
    const auto one = nullspace_exact(from_rows({{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(one.size() == 1);
    CHECK((one[0] == std::vector<Integer>{1, -1, 1} || one[0] == std::vector<Integer>{-1, 1, -1}));
    CHECK(nullspace_exact(IntegerMatrix(0, 3)).size() == 3);
}

TEST_CASE("modular arithmetic helpers") {
    const std::uint64_t p = nth_word_prime(0);
    CHECK(p == (std::uint64_t(1) << 61) - 1);
    CHECK(nth_word_prime(1) < p);
    CHECK(nth_word_prime(2) < nth_word_prime(1));
    CHECK(mul_mod_u64(p - 1, p - 1, p) == 1);
    CHECK(reduce_mod(Integer(-1), p) == p - 1);
    CHECK(nullity_mod(from_rows({{1, 2, 3}, {2, 4, 6}}), p) == 2);
    CHECK(nullity_mod(from_rows({{1, 0}, {0, 1}}), p) == 0);
    // 2/3 mod 1000003
    const Integer mod = 1000003;
    Integer inv3;
    mpz_invert(inv3.get_mpz_t(), Integer(3).get_mpz_t(), mod.get_mpz_t());
    const auto two_thirds = rational_reconstruction(Integer((2 * inv3) % mod), mod);
    REQUIRE(two_thirds.has_value());
    CHECK(*two_thirds == Rational(2, 3));
}

TEST_CASE("multimodular nullspace agrees with exact elimination") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t cols = 12 + 4 * static_cast<std::size_t>(trial);
        std::vector<Integer> v(cols);
        for (auto& x : v) x = d(rng);
        v[cols / 2] = Integer("123456789012345678901234567");
        const auto m = matrix_with_kernel(v, cols + 5, rng);
        const auto exact = nullspace_exact(m);
        REQUIRE(exact.size() == 1);
        const auto mm = nullspace_vector_multimodular(m);
        REQUIRE(mm.has_value());
        REQUIRE(annihilates(m, *mm));
        const auto pv = primitive_part(std::span<const Integer>(v));
        const bool same = *mm == exact[0];
        std::vector<Integer> neg(exact[0].size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -exact[0][i];
        REQUIRE((same || *mm == neg));
        REQUIRE((exact[0] == pv || neg == pv));
        REQUIRE(nullity_mod(m, nth_word_prime(0)) == 1);
    }
}

TEST_CASE("pick_nullspace_vector chooses a sparse vector") {
    const auto m = from_rows({{1, -1, 0, 0}, {0, 0, 1, -1}});
    const auto v = pick_nullspace_vector(m, 2);
    REQUIRE(v.has_value());
    CHECK(annihilates(m, *v));
    CHECK(std::count_if(v->begin(), v->end(), [](const Integer& z) { return sgn(z) != 0; }) == 2);
    CHECK_FALSE(pick_nullspace_vector(from_rows({{1, 0}, {0, 1}}), 0).has_value());
}
