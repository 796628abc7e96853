#pragma once

// Exact counts of 123-avoiding words, the double-sum count of words with a
// single 123 occurrence, and brute-force oracles.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <shared_mutex>

#include "words123/numeric.hpp"
#include "words123/word.hpp"

namespace words123 {

// Grow-only memo of A(l) keyed by the canonical (sorted, zero-free) list.
// Safe for concurrent use; concurrent misses may compute the same entry twice.
class AvoiderCountCache {
public:
    AvoiderCountCache() = default;
    AvoiderCountCache(const AvoiderCountCache&) = delete;
    AvoiderCountCache& operator=(const AvoiderCountCache&) = delete;

    // A(l); any permutation of l and any zero entries give the same value.
    Integer count(const MultiplicityList& l);

    std::size_t size() const;
    std::map<MultiplicityList, Integer> snapshot() const;

    // JSON lines, one {"list":[...],"count":N} record per line.
    void save(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;
    // Validates and merges records; throws FormatError naming the line.
    // A record that disagrees with a value computed here is also rejected.
    void load(std::istream& in);
    void load(const std::filesystem::path& path);

private:
    void insert_checked(const MultiplicityList& key, const Integer& value, std::size_t line);

    mutable std::shared_mutex mutex_;
    std::map<MultiplicityList, Integer> table_;
};

// Process-wide cache used by the free functions below.
AvoiderCountCache& default_avoider_cache();

// Early-abort enumeration of 123-avoiding words, uncached.
Integer count_avoiders_uncached(const MultiplicityList& l);

Integer count_avoiders(const MultiplicityList& l);
Integer count_avoiders(const MultiplicityList& l, AvoiderCountCache& cache);

// Sum over b in [2, n-1] and j in [0, l_b - 1] of
//   (A(l_1..l_{b-1}, j+1) - A(l_1..l_{b-1}, j)) * (A(l_b-j, l_{b+1}..l_n) - A(l_b-j-1, l_{b+1}..l_n))
// after removing zero entries from l.
Integer count_exactly_one_123(const MultiplicityList& l);
Integer count_exactly_one_123(const MultiplicityList& l, AvoiderCountCache& cache);

// Full enumeration; intended for totals up to about 12.
Integer count_exactly_k_bruteforce(const MultiplicityList& l, const Pattern& p, std::uint64_t k);

// (3/n) * C(2n, n+3): permutations of n with exactly one 123.
Integer noonan_count(long long n);

// C(2n-3, n-3): permutations of n with exactly one 132.
Integer bona_132_count(long long n);

}  // namespace words123
