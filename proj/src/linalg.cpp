#include "words123/linalg.hpp"

#include <algorithm>
#include <mutex>

#include "words123/error.hpp"

namespace words123 {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 reduce(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

struct ModularRref {
    std::vector<std::vector<u64>> rows;  // reduced pivot rows
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free_cols;
};

ModularRref rref_mod(std::vector<std::vector<u64>> a, std::size_t cols, u64 p) {
    ModularRref out;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
        if (pivot == a.size()) {
            out.free_cols.push_back(c);
            continue;
        }
        std::swap(a[rank], a[pivot]);
        const u64 inv = pow_mod(a[rank][c], p - 2, p);
        for (std::size_t k = c; k < cols; ++k) a[rank][k] = mul_mod(a[rank][k], inv, p);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const u64 f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (a[rank][k] == 0) continue;
                a[i][k] = (a[i][k] + p - mul_mod(f, a[rank][k], p)) % p;
            }
        }
        out.pivots.push_back(c);
        ++rank;
    }
    for (std::size_t c = (out.pivots.empty() ? 0 : out.pivots.back() + 1); c < cols; ++c) {
        if (std::find(out.free_cols.begin(), out.free_cols.end(), c) == out.free_cols.end())
            out.free_cols.push_back(c);
    }
    std::sort(out.free_cols.begin(), out.free_cols.end());
    a.resize(rank);
    out.rows = std::move(a);
    return out;
}

ModularRref rref_mod(const IntegerMatrix& m, u64 p) {
    std::vector<std::vector<u64>> a(m.rows(), std::vector<u64>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = reduce(m(i, j), p);
    return rref_mod(std::move(a), m.cols(), p);
}

// Pivot heuristic for exact elimination: smallest bit size of num * den.
std::size_t height(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

std::vector<Integer> primitive_part(std::span<const Rational> v) {
    Integer lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q.get_num() * (lcm / q.get_den()));
    return primitive_part(std::span<const Integer>(out));
}

std::vector<Integer> primitive_part(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    std::vector<Integer> out(v.begin(), v.end());
    if (g > 1) {
        for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    }
    return out;
}

bool annihilates(const IntegerMatrix& m, std::span<const Integer> v) {
    if (v.size() != m.cols()) throw InvalidArgument("vector length does not match matrix columns");
    Integer acc;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(v[j]) == 0) continue;
            mpz_addmul(acc.get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
        }
        if (sgn(acc) != 0) return false;
    }
    return true;
}

std::vector<std::vector<Integer>> nullspace_exact(const IntegerMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t best = SIZE_MAX;
        for (std::size_t i = rank; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            if (best == SIZE_MAX || height(a[i][c]) < height(a[best][c])) best = i;
        }
        if (best == SIZE_MAX) continue;
        std::swap(a[rank], a[best]);
        const Rational inv = 1 / a[rank][c];
        for (std::size_t k = c; k < cols; ++k) a[rank][k] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (a[rank][k] != 0) a[i][k] -= f * a[rank][k];
            }
        }
        pivot_of_col[c] = rank++;
    }

    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_of_col[f] != SIZE_MAX) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] != SIZE_MAX) v[c] = -a[pivot_of_col[c]][f];
        }
        basis.push_back(primitive_part(std::span<const Rational>(v)));
    }
    return basis;
}

std::size_t nullity_mod(const IntegerMatrix& m, std::uint64_t prime) {
    return m.cols() - rref_mod(m, prime).pivots.size();
}

std::size_t nullity_mod(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                        std::uint64_t prime) {
    return cols - rref_mod(std::move(rows), cols, prime).pivots.size();
}

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return mul_mod(a, b, p); }

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p) { return reduce(z, p); }

std::uint64_t nth_word_prime(std::size_t index) {
    static std::mutex mutex;
    static std::vector<u64> primes;
    std::lock_guard lock(mutex);
    u64 candidate = primes.empty() ? (1ULL << 61) - 1 : primes.back() - 2;
    while (primes.size() <= index) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[index];
}

std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& modulus) {
    // Extended Euclid on (modulus, u) stopped at the half-size remainder.
    Integer bound;
    mpz_fdiv_q_2exp(bound.get_mpz_t(), modulus.get_mpz_t(), 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    Integer r0 = modulus, r1 = u % modulus;
    if (r1 < 0) r1 += modulus;
    Integer t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational out(r1, t1);
    out.canonicalize();
    return out;
}

std::optional<std::vector<Integer>> nullspace_vector_multimodular(const IntegerMatrix& m,
                                                                  std::size_t max_primes) {
    const std::size_t cols = m.cols();
    std::optional<std::size_t> free_col;
    std::vector<Integer> residues(cols);
    Integer modulus = 1;
    std::size_t used = 0;
    std::size_t next_attempt = 1;
    for (std::size_t idx = 0; idx < max_primes; ++idx) {
        const u64 p = nth_word_prime(idx);
        const auto rr = rref_mod(m, p);
        if (rr.free_cols.size() != 1) {
            if (rr.free_cols.empty()) return std::nullopt;  // full rank mod p: trivial nullspace over Q
            continue;                                       // unlucky prime, or nullity > 1
        }
        if (free_col && *free_col != rr.free_cols[0]) {
            // Pivot pattern differs; keep the later free column, which
            // corresponds to the generic (larger) pivot set.
            if (rr.free_cols[0] < *free_col) continue;
            free_col.reset();
        }
        if (!free_col) {
            free_col = rr.free_cols[0];
            std::fill(residues.begin(), residues.end(), Integer(0));
            modulus = 1;
            used = 0;
            next_attempt = 1;
        }
        // Vector mod p with v[free] = 1.
        std::vector<u64> v(cols, 0);
        v[*free_col] = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            const u64 entry = rr.rows[r][*free_col];
            v[rr.pivots[r]] = entry ? p - entry : 0;
        }
        // CRT: x = residue + modulus * ((v - residue) / modulus mod p)
        const u64 inv = pow_mod(reduce(modulus, p), p - 2, p);
        for (std::size_t c = 0; c < cols; ++c) {
            const u64 cur = reduce(residues[c], p);
            const u64 diff = (v[c] + p - cur) % p;
            const u64 k = mul_mod(diff, inv, p);
            if (k) residues[c] += modulus * Integer(static_cast<unsigned long>(k));
        }
        modulus *= Integer(static_cast<unsigned long>(p));
        ++used;

        if (used < next_attempt) continue;
        next_attempt = used + std::max<std::size_t>(1, used / 4);
        std::vector<Rational> candidate;
        candidate.reserve(cols);
        bool ok = true;
        for (std::size_t c = 0; c < cols && ok; ++c) {
            auto q = rational_reconstruction(residues[c], modulus);
            if (!q) ok = false;
            else candidate.push_back(*q);
        }
        if (!ok) continue;
        auto vec = primitive_part(std::span<const Rational>(candidate));
        if (annihilates(m, vec)) return vec;
    }
    return std::nullopt;
}

}  // namespace words123

namespace words123 {

std::optional<std::vector<Integer>> pick_nullspace_vector(const IntegerMatrix& fit,
                                                          std::size_t screened_nullity,
                                                          std::size_t exact_limit) {
    if (screened_nullity == 0) return std::nullopt;
    if (fit.cols() <= exact_limit) {
        auto basis = nullspace_exact(fit);
        if (basis.empty()) return std::nullopt;
        auto support = [](const std::vector<Integer>& v) {
            return std::count_if(v.begin(), v.end(), [](const Integer& z) { return sgn(z) != 0; });
        };
        return *std::min_element(basis.begin(), basis.end(),
                                 [&](const auto& a, const auto& b) { return support(a) < support(b); });
    }
    if (screened_nullity != 1) return std::nullopt;
    return nullspace_vector_multimodular(fit);
}

}  // namespace words123
