#include "words123/counters.hpp"

#include <fstream>
#include <limits>
#include <mutex>
#include <json.hpp>
#include <sstream>
#include <unordered_map>

#include "words123/error.hpp"

namespace words123 {

namespace {

// Counts 123-avoiding completions. A letter c may be appended iff c does not
// exceed the smallest top of an increasing pair; the suffix count depends
// only on (remaining multiplicities, min letter, min pair top).
class AvoiderCounter {
public:
    explicit AvoiderCounter(std::vector<unsigned> counts) : remaining_(std::move(counts)) {}

    Integer run() { return count(kNone, kNone); }

private:
    static constexpr unsigned kNone = std::numeric_limits<unsigned>::max();

    std::string key(unsigned min_letter, unsigned min_pair_top) const {
        std::string k(reinterpret_cast<const char*>(remaining_.data()),
                      remaining_.size() * sizeof(unsigned));
        k.append(reinterpret_cast<const char*>(&min_letter), sizeof min_letter);
        k.append(reinterpret_cast<const char*>(&min_pair_top), sizeof min_pair_top);
        return k;
    }

    Integer count(unsigned min_letter, unsigned min_pair_top) {
        bool done = true;
        for (unsigned c : remaining_) {
            if (c) {
                done = false;
                break;
            }
        }
        if (done) {
            return 1;
        }
        auto k = key(min_letter, min_pair_top);
        if (auto it = memo_.find(k); it != memo_.end()) {
            return it->second;
        }
        Integer total = 0;
        for (unsigned idx = 0; idx < remaining_.size(); ++idx) {
            if (remaining_[idx] == 0) continue;
            if (min_pair_top != kNone && idx > min_pair_top) break;  // would close a 123
            --remaining_[idx];
            const unsigned top = (min_letter != kNone && idx > min_letter) ? std::min(min_pair_top, idx)
                                                                          : min_pair_top;
            total += count(std::min(min_letter, idx), top);
            ++remaining_[idx];
        }
        memo_.emplace(std::move(k), total);
        return total;
    }

    std::vector<unsigned> remaining_;
    std::unordered_map<std::string, Integer> memo_;
};

nlohmann::json count_to_json(const Integer& z) {
    if (z.fits_slong_p()) {
        return static_cast<std::int64_t>(z.get_si());
    }
    return z.get_str();
}

Integer count_from_json(const nlohmann::json& value, std::size_t line) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) {
            return Integer(std::to_string(value.get<std::uint64_t>()));
        }
        return Integer(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_string()) {
        Integer z;
        if (z.set_str(value.get<std::string>(), 10) != 0) {
            throw FormatError("count is not a decimal integer", line);
        }
        return z;
    }
    throw FormatError("count must be an integer or a decimal string", line);
}

MultiplicityList prefix_with(const MultiplicityList& l, std::size_t upto, unsigned last) {
    // [l_1, ..., l_upto, last]
    std::vector<unsigned> v(l.counts().begin(), l.counts().begin() + static_cast<std::ptrdiff_t>(upto));
    v.push_back(last);
    return MultiplicityList(std::move(v));
}

MultiplicityList suffix_with(const MultiplicityList& l, unsigned first, std::size_t from) {
    // [first, l_from, ..., l_n] with `from` a 0-based index
    std::vector<unsigned> v{first};
    v.insert(v.end(), l.counts().begin() + static_cast<std::ptrdiff_t>(from), l.counts().end());
    return MultiplicityList(std::move(v));
}

}  // namespace

Integer count_avoiders_uncached(const MultiplicityList& l) {
    const auto key = l.canonical();
    return AvoiderCounter(std::vector<unsigned>(key.counts().begin(), key.counts().end())).run();
}

Integer AvoiderCountCache::count(const MultiplicityList& l) {
    const auto key = l.canonical();
    {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) {
            return it->second;
        }
    }
    Integer value = count_avoiders_uncached(key);
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
}

std::size_t AvoiderCountCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

std::map<MultiplicityList, Integer> AvoiderCountCache::snapshot() const {
    std::shared_lock lock(mutex_);
    return table_;
}

void AvoiderCountCache::save(std::ostream& out) const {
    for (const auto& [key, value] : snapshot()) {
        nlohmann::json record;
        record["list"] = std::vector<unsigned>(key.counts().begin(), key.counts().end());
        record["count"] = count_to_json(value);
        out << record.dump() << '\n';
    }
}

void AvoiderCountCache::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgument("cannot write cache file " + path.string());
    }
    save(out);
}

void AvoiderCountCache::insert_checked(const MultiplicityList& key, const Integer& value,
                                       std::size_t line) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, value);
    if (!inserted && it->second != value) {
        throw FormatError("count " + value.get_str() + " for [" + key.to_string() +
                              "] conflicts with " + it->second.get_str(),
                          line);
    }
}

void AvoiderCountCache::load(std::istream& in) {
    std::string text;
    std::size_t line = 0;
    struct Record {
        MultiplicityList key;
        Integer value;
        std::size_t line;
    };
    std::vector<Record> records;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(std::string("malformed JSON: ") + e.what(), line);
        }
        if (!record.is_object() || !record.contains("list") || !record.contains("count") ||
            record.size() != 2) {
            throw FormatError("record must be {\"list\":[...],\"count\":N}", line);
        }
        const auto& list = record["list"];
        if (!list.is_array()) {
            throw FormatError("list must be an array", line);
        }
        std::vector<unsigned> counts;
        for (const auto& entry : list) {
            if (!entry.is_number_unsigned()) {
                throw FormatError("list entries must be nonnegative integers", line);
            }
            counts.push_back(entry.get<unsigned>());
        }
        MultiplicityList key(counts);
        if (key.canonical() != key) {
            throw FormatError("list must be sorted ascending with no zero entries", line);
        }
        Integer value = count_from_json(record["count"], line);
        if (value < 1) {
            throw FormatError("count must be positive", line);
        }
        if (value > key.multinomial()) {
            throw FormatError("count exceeds the number of words for the list", line);
        }
        records.push_back({std::move(key), std::move(value), line});
    }
    // Merge only after the whole file validated.
    for (const auto& r : records) {
        insert_checked(r.key, r.value, r.line);
    }
}

void AvoiderCountCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read cache file " + path.string());
    }
    load(in);
}

AvoiderCountCache& default_avoider_cache() {
    static AvoiderCountCache cache;
    return cache;
}

Integer count_avoiders(const MultiplicityList& l) { return default_avoider_cache().count(l); }

Integer count_avoiders(const MultiplicityList& l, AvoiderCountCache& cache) { return cache.count(l); }

Integer count_exactly_one_123(const MultiplicityList& l) {
    return count_exactly_one_123(l, default_avoider_cache());
}

Integer count_exactly_one_123(const MultiplicityList& list, AvoiderCountCache& cache) {
    const auto l = list.without_zeros();
    const std::size_t n = l.alphabet_size();
    Integer total = 0;
    // b is 1-based; l_b sits at index b-1.
    for (std::size_t b = 2; b + 1 <= n; ++b) {
        const unsigned lb = l.counts()[b - 1];
        for (unsigned j = 0; j < lb; ++j) {
            const Integer left = cache.count(prefix_with(l, b - 1, j + 1)) - cache.count(prefix_with(l, b - 1, j));
            const Integer right = cache.count(suffix_with(l, lb - j, b)) - cache.count(suffix_with(l, lb - j - 1, b));
            total += left * right;
        }
    }
    return total;
}

Integer count_exactly_k_bruteforce(const MultiplicityList& l, const Pattern& p, std::uint64_t k) {
    std::uint64_t hits = 0;
    for_each_word(l, [&](std::span<const Letter> w) {
        if (count_pattern_occurrences(w, p) == k) {
            ++hits;
        }
    });
    return Integer(static_cast<unsigned long>(hits));
}

Integer noonan_count(long long n) {
    if (n < 1) {
        throw InvalidArgument("noonan_count needs n >= 1");
    }
    Integer numerator = 3 * binomial(2 * n, n + 3);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(n));
    return q;
}

Integer bona_132_count(long long n) {
    if (n < 1) {
        throw InvalidArgument("bona_132_count needs n >= 1");
    }
    return binomial(2 * n - 3, n - 3);
}

}  // namespace words123
