#include <doctest.h>

#include <set>

#include "words123/counters.hpp"
#include "words123/error.hpp"
#include "words123/numeric.hpp"
#include "words123/word.hpp"

using namespace words123;

namespace {

Word w(std::string_view text, unsigned n = 0) { return Word::parse(text, n); }

std::vector<MultiplicityList> small_lists(std::size_t max_total) {
    std::vector<MultiplicityList> out;
    std::vector<unsigned> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (!cur.empty()) out.emplace_back(cur);
        for (unsigned p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(max_total);
    return out;
}

}  // namespace

TEST_CASE("binomial and parsing") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_integer("12a"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
}

TEST_CASE("multiplicity list parsing and helpers") {
    const auto l = MultiplicityList::parse("2,0,3");
    CHECK(l.alphabet_size() == 3);
    CHECK(l.total() == 5);
    CHECK(l.count_of(3) == 3);
    CHECK(l.reversed() == MultiplicityList({3, 0, 2}));
    CHECK(l.without_zeros() == MultiplicityList({2, 3}));
    CHECK(l.canonical() == MultiplicityList({2, 3}));
    CHECK(l.multinomial() == 10);
    CHECK(l.to_string() == "2,0,3");
    CHECK_THROWS_AS(MultiplicityList::parse(""), InvalidArgument);
    CHECK_THROWS_AS(MultiplicityList::parse("1,-2"), InvalidArgument);
    CHECK_THROWS_AS(MultiplicityList::parse("1, 2"), InvalidArgument);
    CHECK_THROWS_AS(MultiplicityList::parse("1,,2"), InvalidArgument);
}

TEST_CASE("word parsing and validation") {
    const auto a = w("121322");
    CHECK(a.size() == 6);
    CHECK(a.alphabet_size() == 3);
    CHECK(a.profile() == MultiplicityList({2, 3, 1}));
    CHECK(w("1,10,2").alphabet_size() == 10);
    CHECK(w("1,10,2")[1] == 10);
    CHECK_THROWS_AS(Word({1, 4}, 3), InvalidArgument);
    CHECK_THROWS_AS(Word({0, 1}, 3), InvalidArgument);
    CHECK(w("").empty());
}

TEST_CASE("pattern occurrence counting") {
    CHECK(count_pattern_occurrences(w("123"), kPattern123) == 1);
    CHECK(count_pattern_occurrences(w("1123"), kPattern123) == 2);
    CHECK(count_pattern_occurrences(w("1234"), kPattern123) == 4);
    CHECK(count_pattern_occurrences(w("111"), kPattern123) == 0);
    CHECK(count_pattern_occurrences(w("321"), kPattern321) == 1);
    CHECK(count_pattern_occurrences(w("132"), kPattern132) == 1);
    CHECK(count_pattern_occurrences(w(""), kPattern123) == 0);
    CHECK(Pattern::parse("132") == kPattern132);
    CHECK_THROWS_AS(Pattern::parse("122"), InvalidArgument);
    CHECK_THROWS_AS(Pattern::parse("1234"), InvalidArgument);
}

TEST_CASE("fast 123 count agrees with the triple scan") {
    for (const auto& l : small_lists(7)) {
        for_each_word(l, [&](std::span<const Letter> s) {
            const auto slow = count_pattern_occurrences(s, kPattern123);
            REQUIRE(count_123_fast(s, static_cast<unsigned>(l.alphabet_size())) == slow);
            REQUIRE(avoids_123(s) == (slow == 0));
        });
    }
}

TEST_CASE("complement is an involution exchanging 123 and 321") {
    CHECK(complement(w("121322")) == w("323122"));
    for (const auto& l : small_lists(6)) {
        for (const auto& word : enumerate_words(l)) {
            const auto c = complement(word);
            REQUIRE(complement(c) == word);
            REQUIRE(c.profile() == l.reversed());
            REQUIRE(count_pattern_occurrences(word, kPattern123) == count_pattern_occurrences(c, kPattern321));
        }
    }
}

TEST_CASE("word enumeration") {
    const auto l = MultiplicityList({2, 1, 2});
    const auto words = enumerate_words(l);
    CHECK(words.size() == 30);
    CHECK(words.front() == w("11233"));
    CHECK(words.back() == w("33211"));
    CHECK(std::is_sorted(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                            b.letters().end());
    }));
    CHECK(std::set<std::vector<Letter>>(
              [&] {
                  std::set<std::vector<Letter>> s;
                  for (const auto& x : words) s.emplace(x.letters().begin(), x.letters().end());
                  return s;
              }())
              .size() == 30);

    SUBCASE("size equals the multinomial") {
        for (const auto& m : small_lists(7)) {
            std::size_t n = 0;
            for_each_word(m, [&](std::span<const Letter>) { ++n; });
            REQUIRE(Integer(static_cast<unsigned long>(n)) == m.multinomial());
        }
    }
    SUBCASE("slices by first letter concatenate to the full enumeration") {
        for (const auto& m : small_lists(6)) {
            std::vector<std::vector<Letter>> all, sliced;
            for_each_word(m, [&](std::span<const Letter> s) { all.emplace_back(s.begin(), s.end()); });
            for (Letter a = 1; a <= m.alphabet_size(); ++a) {
                for_each_word_starting_with(m, a, [&](std::span<const Letter> s) { sliced.emplace_back(s.begin(), s.end()); });
            }
            REQUIRE(all == sliced);
        }
    }
    SUBCASE("empty list has the single empty word") { CHECK(enumerate_words(MultiplicityList()).size() == 1); }
}

TEST_CASE("unique occurrence and decomposition") {
    const auto t = find_unique_123(w("31242"));
    CHECK(t.positions == std::array<std::size_t, 3>{2, 3, 4});
    CHECK(t.values == std::array<Letter, 3>{1, 2, 4});
    CHECK_THROWS_AS(find_unique_123(w("1123")), NotExactlyOne);
    CHECK_THROWS_AS(find_unique_123(w("321")), NotExactlyOne);
    try {
        find_unique_123(w("1234"));
    } catch (const NotExactlyOne& e) {
        CHECK(e.occurrences() == 4);
    }

    SUBCASE("the example from 123 in a permutation") {
        const auto g = decompose(w("123"));
        CHECK(g.b == 2);
        CHECK(g.j == 0);
        CHECK(g.sigma1 == w("12"));
        CHECK(g.sigma2 == w("23"));
        CHECK(recompose(g) == w("123"));
    }
}

TEST_CASE("recompose rejects pairs that are not good") {
    GoodPair g{Word({2, 1}, 2), Word({2, 3}, 3), 2, 0};
    CHECK(good_pair_violation(g).has_value());
    CHECK_THROWS_AS(recompose(g), InvalidGoodPair);
    GoodPair h{Word({1, 2}, 2), Word({3, 2}, 3), 2, 0};
    CHECK(good_pair_violation(h).has_value());
    CHECK_THROWS_AS(recompose(h), InvalidGoodPair);
    GoodPair ok{Word({1, 2}, 2), Word({2, 3}, 3), 2, 0};
    CHECK_FALSE(good_pair_violation(ok).has_value());
}

TEST_CASE("bijection round trip on small lists") {
    for (const auto& l : small_lists(7)) {
        std::size_t n_one = 0;
        for (const auto& word : enumerate_words(l)) {
            if (count_pattern_occurrences(word, kPattern123) != 1) continue;
            ++n_one;
            const auto g = decompose(word);
            REQUIRE_FALSE(good_pair_violation(g).has_value());
            REQUIRE(g.b >= 2);
            REQUIRE(g.b + 1 <= l.alphabet_size());
            REQUIRE(g.j < l.count_of(g.b));
            REQUIRE(recompose(g) == word);
        }
        REQUIRE(Integer(static_cast<unsigned long>(n_one)) == count_exactly_one_123(l));
    }
}
