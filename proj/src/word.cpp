#include "words123/word.hpp"

#include <charconv>
#include <numeric>

#include "words123/error.hpp"

namespace words123 {

namespace {

unsigned parse_unsigned(std::string_view token, std::string_view context) {
    unsigned value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw InvalidArgument("invalid entry '" + std::string(token) + "' in '" +
                              std::string(context) + "'");
    }
    return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return parts;
}

}  // namespace

MultiplicityList MultiplicityList::parse(std::string_view csv) {
    if (csv.empty()) {
        throw InvalidArgument("empty multiplicity list");
    }
    std::vector<unsigned> counts;
    for (auto token : split_commas(csv)) {
        counts.push_back(parse_unsigned(token, csv));
    }
    return MultiplicityList(std::move(counts));
}

std::size_t MultiplicityList::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

MultiplicityList MultiplicityList::reversed() const {
    return MultiplicityList(std::vector<unsigned>(counts_.rbegin(), counts_.rend()));
}

MultiplicityList MultiplicityList::without_zeros() const {
    std::vector<unsigned> out;
    std::copy_if(counts_.begin(), counts_.end(), std::back_inserter(out),
                 [](unsigned c) { return c != 0; });
    return MultiplicityList(std::move(out));
}

MultiplicityList MultiplicityList::canonical() const {
    auto out = without_zeros();
    std::sort(out.counts_.begin(), out.counts_.end());
    return out;
}

Integer MultiplicityList::multinomial() const {
    Integer result = 1;
    unsigned long running = 0;
    for (unsigned c : counts_) {
        running += c;
        result *= binomial(static_cast<long long>(running), c);
    }
    return result;
}

std::string MultiplicityList::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts_[i]);
    }
    return out;
}

Word::Word(std::vector<Letter> letters, unsigned alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    for (Letter a : letters_) {
        if (a < 1 || a > alphabet_size_) {
            throw InvalidArgument("letter " + std::to_string(a) + " outside alphabet {1,...," +
                                  std::to_string(alphabet_size_) + "}");
        }
    }
}

Word Word::parse(std::string_view text, unsigned alphabet_size) {
    std::vector<Letter> letters;
    if (text.find(',') != std::string_view::npos) {
        for (auto token : split_commas(text)) {
            letters.push_back(parse_unsigned(token, text));
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9') {
                throw InvalidArgument("invalid letter '" + std::string(1, ch) + "' in word '" +
                                      std::string(text) + "'");
            }
            letters.push_back(static_cast<Letter>(ch - '0'));
        }
    }
    if (alphabet_size == 0) {
        alphabet_size = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
    }
    return Word(std::move(letters), alphabet_size);
}

MultiplicityList Word::profile() const {
    std::vector<unsigned> counts(alphabet_size_, 0);
    for (Letter a : letters_) {
        ++counts[a - 1];
    }
    return MultiplicityList(std::move(counts));
}

std::size_t Word::count_letter(Letter letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string Word::to_string() const {
    const bool digits = std::all_of(letters_.begin(), letters_.end(), [](Letter a) { return a < 10; });
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!digits && i) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Pattern Pattern::parse(std::string_view text) {
    if (text.size() != 3) {
        throw InvalidArgument("pattern must have length 3: '" + std::string(text) + "'");
    }
    std::array<int, 3> v{};
    for (int i = 0; i < 3; ++i) {
        v[i] = text[i] - '0';
    }
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3}) {
        throw InvalidArgument("pattern must be a permutation of 123: '" + std::string(text) + "'");
    }
    return Pattern(v[0], v[1], v[2]);
}

std::string Pattern::to_string() const {
    return std::to_string(values_[0]) + std::to_string(values_[1]) + std::to_string(values_[2]);
}

std::uint64_t count_pattern_occurrences(std::span<const Letter> w, const Pattern& p) {
    std::uint64_t total = 0;
    const std::size_t k = w.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            for (std::size_t l = j + 1; l < k; ++l) {
                if (p.matches(w[i], w[j], w[l])) {
                    ++total;
                }
            }
        }
    }
    return total;
}

std::uint64_t count_123_fast(std::span<const Letter> w, unsigned alphabet_size) {
    // For each middle position: (#smaller letters to the left) * (#larger to the right).
    std::vector<std::uint64_t> left(alphabet_size + 2, 0);
    std::vector<std::uint64_t> right(alphabet_size + 2, 0);
    for (Letter a : w) {
        ++right[a];
    }
    std::uint64_t total = 0;
    for (Letter b : w) {
        --right[b];
        std::uint64_t smaller = 0;
        for (Letter a = 1; a < b; ++a) smaller += left[a];
        std::uint64_t larger = 0;
        for (Letter c = b + 1; c <= alphabet_size; ++c) larger += right[c];
        total += smaller * larger;
        ++left[b];
    }
    return total;
}

bool avoids_123(std::span<const Letter> w) {
    // A new letter closes a 123 iff it exceeds the smallest top of an
    // increasing pair seen so far.
    constexpr Letter kNone = ~Letter{0};
    Letter min_letter = kNone;
    Letter min_pair_top = kNone;
    for (Letter c : w) {
        if (min_pair_top != kNone && c > min_pair_top) {
            return false;
        }
        if (min_letter != kNone && c > min_letter) {
            min_pair_top = std::min(min_pair_top, c);
        }
        min_letter = std::min(min_letter, c);
    }
    return true;
}

Word complement(const Word& w) {
    const unsigned n = w.alphabet_size();
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter a : w.letters()) {
        out.push_back(n + 1 - a);
    }
    return Word(std::move(out), n);
}

OccurrenceTriple find_unique_123(const Word& w) {
    const auto letters = w.letters();
    const std::size_t k = letters.size();
    std::optional<OccurrenceTriple> found;
    std::size_t occurrences = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (letters[j] <= letters[i]) continue;
            for (std::size_t l = j + 1; l < k; ++l) {
                if (letters[l] <= letters[j]) continue;
                if (++occurrences == 1) {
                    found = OccurrenceTriple{{i + 1, j + 1, l + 1}, {letters[i], letters[j], letters[l]}};
                }
            }
        }
    }
    if (occurrences != 1) {
        throw NotExactlyOne(occurrences);
    }
    return *found;
}

GoodPair decompose(const Word& w) {
    const auto t = find_unique_123(w);
    const auto letters = w.letters();
    // 0-based positions of a, b, c.
    const std::size_t pa = t.positions[0] - 1;
    const std::size_t pb = t.positions[1] - 1;
    const std::size_t pc = t.positions[2] - 1;
    const Letter b = t.values[1];
    auto segment = [&](std::size_t from, std::size_t to) {
        return std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(from),
                                   letters.begin() + static_cast<std::ptrdiff_t>(to));
    };

    // w = pi1 a pi2 b pi3 c pi4  ->  (a pi3 b pi4, pi1 b pi2 c)
    std::vector<Letter> s1{t.values[0]};
    auto pi3 = segment(pb + 1, pc);
    auto pi4 = segment(pc + 1, letters.size());
    s1.insert(s1.end(), pi3.begin(), pi3.end());
    s1.push_back(b);
    s1.insert(s1.end(), pi4.begin(), pi4.end());

    std::vector<Letter> s2 = segment(0, pa);
    auto pi2 = segment(pa + 1, pb);
    s2.push_back(b);
    s2.insert(s2.end(), pi2.begin(), pi2.end());
    s2.push_back(t.values[2]);

    GoodPair g{Word(std::move(s1), b), Word(std::move(s2), w.alphabet_size()), b, 0};
    g.j = static_cast<unsigned>(g.sigma1.count_letter(b) - 1);
    return g;
}

std::optional<std::string> good_pair_violation(const GoodPair& g) {
    const Letter b = g.b;
    const unsigned n = g.sigma2.alphabet_size();
    if (b < 2 || b + 1 > n) {
        return "b = " + std::to_string(b) + " outside 2 <= b <= n-1 (n = " + std::to_string(n) + ")";
    }
    const auto s1 = g.sigma1.letters();
    const auto s2 = g.sigma2.letters();
    if (s1.empty() || s2.empty()) {
        return std::string("empty word in pair");
    }
    if (std::any_of(s1.begin(), s1.end(), [&](Letter a) { return a > b; })) {
        return std::string("sigma1 has a letter above b");
    }
    if (std::any_of(s2.begin(), s2.end(), [&](Letter a) { return a < b; })) {
        return std::string("sigma2 has a letter below b");
    }
    if (s1.front() == b) {
        return std::string("sigma1 starts with b");
    }
    if (s2.back() == b) {
        return std::string("sigma2 ends with b");
    }
    if (!avoids_123(s1)) {
        return std::string("sigma1 contains 123");
    }
    if (!avoids_123(s2)) {
        return std::string("sigma2 contains 123");
    }
    const auto copies1 = g.sigma1.count_letter(b);
    const auto copies2 = g.sigma2.count_letter(b);
    if (copies1 != static_cast<std::size_t>(g.j) + 1) {
        return "sigma1 has " + std::to_string(copies1) + " copies of b, expected j+1 = " +
               std::to_string(g.j + 1);
    }
    // l_b = copies1 + copies2 - 1, so j <= l_b - 1 is copies2 >= 1.
    if (copies2 == 0) {
        return std::string("sigma2 has no copy of b");
    }
    return std::nullopt;
}

Word recompose(const GoodPair& g) {
    if (auto why = good_pair_violation(g)) {
        throw InvalidGoodPair("invalid good pair: " + *why);
    }
    const auto s1 = g.sigma1.letters();
    const auto s2 = g.sigma2.letters();
    const Letter b = g.b;

    // sigma1 = a pi3 b pi4 with b its leftmost b.
    const auto b1 = std::find(s1.begin() + 1, s1.end(), b);
    // sigma2 = pi1 b pi2 c with b its rightmost b.
    const auto rb2 = std::find(s2.rbegin() + 1, s2.rend(), b);
    const auto b2 = std::prev(rb2.base());

    std::vector<Letter> out(s2.begin(), b2);  // pi1
    out.push_back(s1.front());                // a
    out.insert(out.end(), b2 + 1, s2.end() - 1);  // pi2
    out.push_back(b);
    out.insert(out.end(), s1.begin() + 1, b1);  // pi3
    out.push_back(s2.back());                  // c
    out.insert(out.end(), b1 + 1, s1.end());   // pi4
    return Word(std::move(out), g.sigma2.alphabet_size());
}

std::vector<Word> enumerate_words(const MultiplicityList& l) {
    std::vector<Word> out;
    const auto n = static_cast<unsigned>(l.alphabet_size());
    for_each_word(l, [&](std::span<const Letter> w) {
        out.emplace_back(std::vector<Letter>(w.begin(), w.end()), n);
    });
    return out;
}

}  // namespace words123
