#pragma once

// Words over {1,...,n}, multiplicity profiles, pattern occurrences and the
// good-pair bijection for words with exactly one 123 occurrence.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "words123/numeric.hpp"

namespace words123 {

using Letter = unsigned;

// [l_1,...,l_n]: l_i copies of letter i. Zero entries are allowed and keep
// the alphabet positions aligned.
class MultiplicityList {
public:
    MultiplicityList() = default;
    explicit MultiplicityList(std::vector<unsigned> counts) : counts_(std::move(counts)) {}
    MultiplicityList(std::initializer_list<unsigned> counts) : counts_(counts) {}

    // "2,2,2" -> [2,2,2]. Throws InvalidArgument on anything else.
    static MultiplicityList parse(std::string_view csv);

    std::size_t alphabet_size() const noexcept { return counts_.size(); }
    std::size_t total() const noexcept;
    bool empty() const noexcept { return counts_.empty(); }

    // Multiplicity of letter (1-based).
    unsigned count_of(Letter letter) const { return counts_.at(letter - 1); }
    std::span<const unsigned> counts() const noexcept { return counts_; }

    MultiplicityList reversed() const;
    MultiplicityList without_zeros() const;
    // Sorted ascending with zeros removed; the key under which A(l) is cached.
    MultiplicityList canonical() const;

    // total! / prod l_i!
    Integer multinomial() const;

    std::string to_string() const;

    friend bool operator==(const MultiplicityList&, const MultiplicityList&) = default;
    friend auto operator<=>(const MultiplicityList&, const MultiplicityList&) = default;

private:
    std::vector<unsigned> counts_;
};

class Word {
public:
    Word() = default;
    // Throws InvalidArgument if a letter falls outside {1,...,alphabet_size}.
    Word(std::vector<Letter> letters, unsigned alphabet_size);

    // Single-digit letters ("121322"), or comma-separated when the text holds
    // a comma. alphabet_size 0 means "largest letter present".
    static Word parse(std::string_view text, unsigned alphabet_size = 0);

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    unsigned alphabet_size() const noexcept { return alphabet_size_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    MultiplicityList profile() const;
    std::size_t count_letter(Letter letter) const;

    // Digits when every letter is < 10, otherwise comma-separated.
    std::string to_string() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
    unsigned alphabet_size_ = 0;
};

// A permutation of {1,2,3}.
class Pattern {
public:
    constexpr Pattern(int a, int b, int c) : values_{a, b, c} {}
    static Pattern parse(std::string_view text);

    constexpr const std::array<int, 3>& values() const noexcept { return values_; }
    std::string to_string() const;

    // True iff (x,y,z) is order-isomorphic to this pattern.
    constexpr bool matches(Letter x, Letter y, Letter z) const noexcept {
        const std::array<Letter, 3> t{x, y, z};
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if ((values_[i] < values_[j]) != (t[i] < t[j]) || t[i] == t[j]) {
                    return false;
                }
            }
        }
        return true;
    }

    friend constexpr bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::array<int, 3> values_;
};

inline constexpr Pattern kPattern123{1, 2, 3};
inline constexpr Pattern kPattern132{1, 3, 2};
inline constexpr Pattern kPattern321{3, 2, 1};

struct OccurrenceTriple {
    std::array<std::size_t, 3> positions;  // 1-based, increasing
    std::array<Letter, 3> values;          // a < b < c

    friend bool operator==(const OccurrenceTriple&, const OccurrenceTriple&) = default;
};

struct GoodPair {
    Word sigma1;  // over {1,...,b}
    Word sigma2;  // over {b,...,n}; its alphabet_size is n
    Letter b = 0;
    unsigned j = 0;

    friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

// Reference O(len^3) triple scan.
std::uint64_t count_pattern_occurrences(std::span<const Letter> letters, const Pattern& p);
inline std::uint64_t count_pattern_occurrences(const Word& w, const Pattern& p) {
    return count_pattern_occurrences(w.letters(), p);
}

// O(len * n) count of 123 occurrences via prefix/suffix letter counts.
std::uint64_t count_123_fast(std::span<const Letter> letters, unsigned alphabet_size);

bool avoids_123(std::span<const Letter> letters);

Word complement(const Word& w);

// Throws NotExactlyOne unless w has a single 123 occurrence.
OccurrenceTriple find_unique_123(const Word& w);

GoodPair decompose(const Word& w);

// Reason the pair is not good, or nullopt if every invariant holds.
std::optional<std::string> good_pair_violation(const GoodPair& g);

// Throws InvalidGoodPair when good_pair_violation reports a problem.
Word recompose(const GoodPair& g);

// Calls f(std::span<const Letter>) for every word associated with l, in
// lexicographic order.
template <typename F>
void for_each_word(const MultiplicityList& l, F&& f) {
    std::vector<Letter> letters;
    letters.reserve(l.total());
    for (Letter a = 1; a <= l.alphabet_size(); ++a) {
        letters.insert(letters.end(), l.count_of(a), a);
    }
    do {
        f(std::span<const Letter>(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
}

// The slice of for_each_word whose words start with `first`. Concatenating
// the slices for first = 1..n reproduces for_each_word exactly.
template <typename F>
void for_each_word_starting_with(const MultiplicityList& l, Letter first, F&& f) {
    if (first < 1 || first > l.alphabet_size() || l.count_of(first) == 0) {
        return;
    }
    std::vector<Letter> letters{first};
    letters.reserve(l.total());
    for (Letter a = 1; a <= l.alphabet_size(); ++a) {
        letters.insert(letters.end(), l.count_of(a) - (a == first ? 1 : 0), a);
    }
    do {
        f(std::span<const Letter>(letters));
    } while (std::next_permutation(letters.begin() + 1, letters.end()));
}

std::vector<Word> enumerate_words(const MultiplicityList& l);

}  // namespace words123
