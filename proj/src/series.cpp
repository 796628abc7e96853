#include "words123/series.hpp"

#include <algorithm>

#include "words123/error.hpp"

namespace words123 {

TruncatedSeries TruncatedSeries::zero(long order) {
    return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(std::max(order + 1, 0L))));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long order) {
    auto s = zero(order);
    if (order >= 0) s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, long order) {
    auto s = zero(order);
    if (static_cast<long>(k) <= order) s.coeffs_[k] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const Integer> values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (const auto& v : values) c.emplace_back(v);
    return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool TruncatedSeries::all_integer() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::vector<Integer> TruncatedSeries::integer_coefficients() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1) {
            throw MathError("coefficient " + std::to_string(i) + " is not an integer: " + coeffs_[i].get_str());
        }
        out.push_back(coeffs_[i].get_num());
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(long order) const {
    if (order >= this->order()) return *this;
    const auto keep = static_cast<std::size_t>(std::max(order + 1, 0L));
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t k) const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-() const {
    auto out = *this;
    for (auto& q : out.coeffs_) q = -q;
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const auto n = std::min(a.size(), b.size());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const auto n = std::min(a.size(), b.size());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const auto n = std::min(a.size(), b.size());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Rational& k, const TruncatedSeries& a) {
    auto out = a;
    for (auto& q : out.coeffs_) q *= k;
    return out;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].get_str();
        if (i == 1) out += "*x";
        if (i > 1) out += "*x^" + std::to_string(i);
    }
    if (out.empty()) out = "0";
    return out + " + O(x^" + std::to_string(coeffs_.size()) + ")";
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_div_x(const TruncatedSeries& a) {
    if (a.size() == 0) return {};
    if (a[0] != 0) throw NonzeroConstantTerm();
    auto c = a.coefficients();
    return TruncatedSeries(std::vector<Rational>(c.begin() + 1, c.end()));
}

TruncatedSeries decimate(const TruncatedSeries& a, unsigned r) {
    if (r == 0) throw InvalidArgument("decimation step must be positive");
    std::vector<Rational> out;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (m % r == 0) {
            out.push_back(a[m]);
        } else if (a[m] != 0) {
            throw StrayCoefficient(m);
        }
    }
    return TruncatedSeries(std::move(out));
}

bool supported_on_residue(const TruncatedSeries& a, unsigned r, unsigned residue) {
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (m % r != residue % r && a[m] != 0) return false;
    }
    return true;
}

GTable::GTable(unsigned r, std::map<std::pair<unsigned, unsigned>, TruncatedSeries> entries)
    : r_(r), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(r) * (r + 1) / 2) {
        throw InvalidArgument("GTable needs C(r+1,2) entries");
    }
}

const TruncatedSeries& GTable::at(unsigned i, unsigned j) const {
    if (i > j) std::swap(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end()) {
        throw InvalidArgument("no g entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    return it->second;
}

namespace {

using Key = std::pair<unsigned, unsigned>;

std::vector<Key> g_keys(unsigned r) {
    std::vector<Key> keys;
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = i; j < r; ++j) keys.emplace_back(i, j);
    return keys;
}

Key ordered(unsigned i, unsigned j) { return i <= j ? Key{i, j} : Key{j, i}; }

// Integer coefficients filled one order at a time: coefficient m of every
// right-hand side only reads coefficients < m.
GTable solve_triangular(unsigned r, long order) {
    const auto keys = g_keys(r);
    const auto len = static_cast<std::size_t>(order + 1);
    std::map<Key, std::vector<Integer>> g;
    for (const auto& k : keys) g[k].assign(len, 0);

    struct Product {
        const std::vector<Integer>* left;
        const std::vector<Integer>* right;
    };
    struct Shifted {
        const std::vector<Integer>* series;
        std::size_t shift;
    };
    std::map<Key, std::vector<Product>> products;
    std::map<Key, std::vector<Shifted>> shifted;
    for (const auto& [i, j] : keys) {
        for (unsigned t = 0; t < r; ++t) {
            products[{i, j}].push_back({&g[ordered(i, t)], &g[ordered((r - t) % r, (j + r - 1) % r)]});
        }
        for (unsigned m = 0; m < i; ++m) {
            shifted[{i, j}].push_back({&g[ordered(i - m, j - 1)], m + 1});
        }
    }

    Integer acc;
    for (std::size_t m = 0; m < len; ++m) {
        for (const auto& key : keys) {
            acc = (m == 0 && key == Key{0, 0}) ? 1 : 0;
            if (m >= 1) {
                for (const auto& p : products[key]) {
                    const auto& a = *p.left;
                    const auto& b = *p.right;
                    for (std::size_t u = 0; u < m; ++u) {
                        if (sgn(a[u]) == 0 || sgn(b[m - 1 - u]) == 0) continue;
                        mpz_addmul(acc.get_mpz_t(), a[u].get_mpz_t(), b[m - 1 - u].get_mpz_t());
                    }
                }
            }
            for (const auto& s : shifted[key]) {
                if (m >= s.shift) acc += (*s.series)[m - s.shift];
            }
            g[key][m] = acc;
        }
    }

    std::map<Key, TruncatedSeries> entries;
    for (const auto& k : keys) entries.emplace(k, TruncatedSeries::from_integers(g[k]));
    return GTable(r, std::move(entries));
}

GTable solve_full_pass(unsigned r, long order) {
    const auto keys = g_keys(r);
    std::map<Key, TruncatedSeries> zero;
    for (const auto& k : keys) zero.emplace(k, TruncatedSeries::zero(order));
    GTable table(r, std::move(zero));
    const long max_passes = order + 3;
    for (long pass = 1; pass <= max_passes; ++pass) {
        std::map<Key, TruncatedSeries> next;
        for (const auto& [i, j] : keys) next.emplace(Key{i, j}, g_system_rhs(table, i, j));
        GTable candidate(r, std::move(next));
        if (candidate.entries() == table.entries()) return candidate;
        table = std::move(candidate);
    }
    throw NoConvergence("g-system still changing after " + std::to_string(max_passes) + " passes");
}

TruncatedSeries delta(bool on, long order) { return TruncatedSeries::constant(on ? 1 : 0, order); }

}  // namespace

TruncatedSeries g_system_rhs(const GTable& table, unsigned i, unsigned j) {
    const unsigned r = table.r();
    const long order = table.at(0, 0).order();
    auto rhs = delta(i == 0 && j == 0, order);
    for (unsigned t = 0; t < r; ++t) {
        const auto product = table.at(i, t) * table.at((r - t) % r, (j + r - 1) % r);
        rhs = rhs + product.shifted_up(1).truncated(order);
    }
    for (unsigned m = 0; m < i; ++m) {
        rhs = rhs + table.at(i - m, j - 1).shifted_up(m + 1).truncated(order);
    }
    return rhs;
}

GTable solve_g_system(unsigned r, long order, GSolver solver) {
    if (r < 1) throw InvalidArgument("r must be positive");
    if (order < 0) throw InvalidArgument("truncation order must be nonnegative");
    return solver == GSolver::Triangular ? solve_triangular(r, order) : solve_full_pass(r, order);
}

TruncatedSeries compute_h(const GTable& table, long order) {
    const unsigned r = table.r();
    const long g_order = table.at(0, 0).order();
    if (g_order < order + 1) {
        throw InvalidArgument("g table known through x^" + std::to_string(g_order) + ", need x^" +
                              std::to_string(order + 1));
    }
    auto factor = [&](unsigned top, unsigned shifted) {
        const auto& g0 = table.at(0, top);
        return g0 - table.at(0, shifted).shifted_up(1) - delta(top == 0, g0.order());
    };
    auto sum = TruncatedSeries::zero(g_order);
    for (unsigned i = 1; i <= r; ++i) {
        sum = sum + factor(i % r, i - 1) * factor((r + 1 - i) % r, r - i);
    }
    return series_div_x(sum).truncated(order);
}

TruncatedSeries compute_h(unsigned r, long order) {
    return compute_h(solve_g_system(r, order + 1), order);
}

TruncatedSeries h1_closed_form(const GTable& table, long order) {
    const auto& g = table.at(0, 0);
    const auto inner = g - g.shifted_up(1) - delta(true, g.order());
    return series_div_x(inner * inner).truncated(order);
}

TruncatedSeries h2_closed_form(const GTable& table, long order) {
    const auto& g00 = table.at(0, 0);
    const auto& g01 = table.at(0, 1);
    const auto left = g00 - g01.shifted_up(1) - delta(true, g00.order());
    const auto right = g01 - g00.shifted_up(1);
    return series_div_x(Rational(2) * (left * right)).truncated(order);
}

TruncatedSeries compute_f(unsigned r, std::size_t terms) {
    if (r < 1) throw InvalidArgument("r must be positive");
    if (terms == 0) return {};
    const long h_order = static_cast<long>(r * terms + r);
    return decimate(compute_h(r, h_order), r).truncated(static_cast<long>(terms) - 1);
}

}  // namespace words123
