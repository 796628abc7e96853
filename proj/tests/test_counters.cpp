#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "words123/acceptance.hpp"
#include "words123/counters.hpp"
#include "words123/error.hpp"

using namespace words123;

namespace {

Integer avoiders_bruteforce(const MultiplicityList& l) {
    return count_exactly_k_bruteforce(l, kPattern123, 0);
}

std::vector<MultiplicityList> lists_with_zeros(std::size_t max_total, std::size_t max_parts) {
    std::vector<MultiplicityList> out;
    std::vector<unsigned> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (!cur.empty()) out.emplace_back(cur);
        if (cur.size() == max_parts) return;
        for (unsigned p = 0; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(max_total);
    return out;
}

}  // namespace

TEST_CASE("avoider counts on the documented examples") {
    CHECK(count_avoiders(MultiplicityList({1, 1, 1})) == 5);
    CHECK(count_avoiders(MultiplicityList({2, 2, 2})) == 43);
    CHECK(count_avoiders(MultiplicityList({2, 2, 1})) == 19);
    CHECK(count_avoiders(MultiplicityList({5})) == 1);
    CHECK(count_avoiders(MultiplicityList({3, 3})) == 20);
    CHECK(count_avoiders(MultiplicityList()) == 1);
}

TEST_CASE("avoider counts match brute force, zeros included") {
    for (const auto& l : lists_with_zeros(7, 5)) {
        REQUIRE(count_avoiders_uncached(l) == avoiders_bruteforce(l.without_zeros()));
    }
}

TEST_CASE("avoider counts are symmetric in the list") {
    for (const auto& l : composition_corpus(9, 9)) {
        std::vector<unsigned> v(l.counts().begin(), l.counts().end());
        std::sort(v.begin(), v.end());
        const auto reference = count_avoiders(MultiplicityList(v));
        do {
            REQUIRE(count_avoiders(MultiplicityList(v)) == reference);
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("a zero entry behaves like a dropped entry") {
    for (const auto& l : composition_corpus(8, 5)) {
        const auto counts = l.counts();
        for (std::size_t b = 0; b < counts.size(); ++b) {
            std::vector<unsigned> zeroed(counts.begin(), counts.end()), dropped(counts.begin(), counts.end());
            zeroed[b] = 0;
            dropped.erase(dropped.begin() + static_cast<long>(b));
            REQUIRE(count_avoiders(MultiplicityList(zeroed)) == count_avoiders(MultiplicityList(dropped)));
        }
    }
}

TEST_CASE("exactly-one-123 counts") {
    CHECK(count_exactly_one_123(MultiplicityList({1, 1, 1})) == 1);
    CHECK(count_exactly_one_123(MultiplicityList({2, 2, 2})) == 12);
    CHECK(count_exactly_one_123(MultiplicityList({1, 1})) == 0);
    CHECK(count_exactly_one_123(MultiplicityList({1, 1, 1, 1})) == 6);
    CHECK(count_exactly_one_123(MultiplicityList()) == 0);
    CHECK(count_exactly_one_123(MultiplicityList({2, 0, 1, 1})) == count_exactly_one_123(MultiplicityList({2, 1, 1})));

    SUBCASE("double sum agrees with brute force, including zero entries") {
        for (const auto& l : lists_with_zeros(7, 5)) {
            REQUIRE(count_exactly_one_123(l) == count_exactly_k_bruteforce(l, kPattern123, 1));
        }
    }
    SUBCASE("reversal and exactly-one-321") {
        for (const auto& l : composition_corpus(8, 5)) {
            const auto c = count_exactly_one_123(l);
            REQUIRE(c == count_exactly_one_123(l.reversed()));
            REQUIRE(c == count_exactly_k_bruteforce(l, kPattern321, 1));
        }
    }
}

TEST_CASE("brute-force counter") {
    CHECK(count_exactly_k_bruteforce(MultiplicityList({2, 2, 2}), kPattern123, 0) == 43);
    CHECK(count_exactly_k_bruteforce(MultiplicityList({1, 1, 1}), kPattern321, 1) == 1);
    CHECK(count_exactly_k_bruteforce(MultiplicityList({1, 1, 1}), kPattern123, 5) == 0);
    std::size_t total = 0;
    const MultiplicityList l({2, 1, 2});
    for (std::uint64_t k = 0; k <= 12; ++k) total += count_exactly_k_bruteforce(l, kPattern132, k).get_ui();
    CHECK(Integer(static_cast<unsigned long>(total)) == l.multinomial());
}

TEST_CASE("closed forms for permutations") {
    CHECK(noonan_count(3) == 1);
    CHECK(noonan_count(4) == 6);
    CHECK(noonan_count(2) == 0);
    CHECK(noonan_count(1) == 0);
    CHECK(bona_132_count(3) == 1);
    CHECK(bona_132_count(4) == 5);
    CHECK(bona_132_count(5) == 21);
    CHECK(bona_132_count(2) == 0);
    CHECK_THROWS_AS(noonan_count(0), InvalidArgument);
    CHECK_THROWS_AS(bona_132_count(0), InvalidArgument);
    for (long long n = 1; n <= 8; ++n) {
        const MultiplicityList ones(std::vector<unsigned>(static_cast<std::size_t>(n), 1));
        REQUIRE(count_exactly_one_123(ones) == noonan_count(n));
        if (n <= 7) REQUIRE(count_exactly_k_bruteforce(ones, kPattern132, 1) == bona_132_count(n));
    }
    const MultiplicityList five(std::vector<unsigned>(5, 1));
    CHECK(count_exactly_one_123(five) != count_exactly_k_bruteforce(five, kPattern132, 1));
}

TEST_CASE("cache stores canonical keys and round-trips") {
    AvoiderCountCache cache;
    CHECK(cache.count(MultiplicityList({2, 0, 1, 2})) == count_avoiders_uncached(MultiplicityList({2, 1, 2})));
    const auto before = cache.size();
    CHECK(cache.count(MultiplicityList({2, 2, 1})) == 19);
    CHECK(cache.count(MultiplicityList({1, 2, 2})) == 19);
    CHECK(cache.size() <= before + 1);
    count_exactly_one_123(MultiplicityList({3, 2, 3, 1}), cache);
    for (const auto& [key, value] : cache.snapshot()) {
        REQUIRE(key == key.canonical());
        REQUIRE(value == count_avoiders_uncached(key));
    }

    std::stringstream buffer;
    cache.save(buffer);
    AvoiderCountCache restored;
    restored.load(buffer);
    CHECK(restored.snapshot() == cache.snapshot());

    std::stringstream again;
    restored.save(again);
    std::stringstream first;
    cache.save(first);
    CHECK(again.str() == first.str());
}

TEST_CASE("cache rejects malformed records with a line number") {
    auto load = [](const std::string& text) {
        AvoiderCountCache c;
        std::istringstream in(text);
        c.load(in);
        return c.size();
    };
    CHECK(load("{\"list\":[1,2,2],\"count\":19}\n\n{\"list\":[1,1,1],\"count\":5}\n") == 2);
    CHECK(load("") == 0);

    auto line_of = [&](const std::string& text) -> std::size_t {
        try {
            load(text);
        } catch (const FormatError& e) {
            return e.line();
        }
        return 0;
    };
    const std::string good = "{\"list\":[1,1,1],\"count\":5}\n";
    CHECK(line_of(good + "not json\n") == 2);
    CHECK(line_of(good + "{\"list\":[2,1],\"count\":3}\n") == 2);            // not sorted
    CHECK(line_of(good + "{\"list\":[1,0,2],\"count\":3}\n") == 2);          // zero entry
    CHECK(line_of(good + "{\"list\":[1,1,1],\"count\":7}\n") == 2);          // exceeds multinomial
    CHECK(line_of(good + "{\"list\":[1,1],\"count\":0}\n") == 2);            // nonpositive
    CHECK(line_of(good + "{\"list\":[1,1],\"count\":2,\"x\":1}\n") == 2);    // extra key
    CHECK(line_of(good + "{\"list\":[1,1]}\n") == 2);                        // missing key
    CHECK(line_of(good + good + "{\"list\":[1,1,1],\"count\":4}\n") == 3);   // conflicting duplicate
    CHECK(line_of(good + "{\"list\":[1,2,2],\"count\":\"19\"}\n") == 0);     // string counts are accepted

    AvoiderCountCache c;
    std::istringstream bad(good + "{\"list\":[2,1],\"count\":3}\n");
    CHECK_THROWS_AS(c.load(bad), FormatError);
    CHECK(c.size() == 0);  // nothing merged from a rejected file
}
