#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "words123/acceptance.hpp"
#include "words123/algebraic.hpp"
#include "words123/counters.hpp"
#include "words123/error.hpp"
#include "words123/json_io.hpp"
#include "words123/recurrence.hpp"
#include "words123/series.hpp"

namespace words123::cli {

namespace {

constexpr std::size_t kMaxVerifyTotal = 12;

struct Common {
    std::string cache_path;
    std::string fixtures;
    std::string format = "json";
};

struct Options {
    Common common;
    std::string list;
    bool verify = false;
    unsigned r = 1;
    std::size_t terms = 0;
    std::size_t degx = 6;
    std::size_t degy = 4;
    std::size_t guard = 0;
    std::optional<std::size_t> max_order;
    std::optional<std::size_t> max_degree;
    bool compare_fixture = false;
    std::size_t nmax = kAsymptoticsHorizon;
    bool stretch = false;
    std::vector<int> only;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Loads --cache when given and saves it back after the command.
class CacheScope {
public:
    explicit CacheScope(const std::string& path) : path_(path) {
        if (!path_.empty() && std::filesystem::exists(path_)) cache_.load(std::filesystem::path(path_));
    }
    AvoiderCountCache& cache() { return path_.empty() ? default_avoider_cache() : cache_; }
    void save() const {
        if (!path_.empty()) cache_.save(std::filesystem::path(path_));
    }

private:
    std::string path_;
    AvoiderCountCache cache_;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string format_double(double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
    MultiplicityList l;
    try {
        l = MultiplicityList::parse(o.list);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    if (o.verify && l.total() > kMaxVerifyTotal) {
        throw UsageError("--verify is limited to lists with total <= " + std::to_string(kMaxVerifyTotal));
    }
    CacheScope scope(o.common.cache_path);
    const auto count = count_exactly_one_123(l, scope.cache());
    const auto reversed = count_exactly_one_123(l.reversed(), scope.cache());
    // Complementing a word reverses its profile, so exactly-one-321 words of l
    // are counted by the formula applied to the reversed list.
    const auto count_321 = reversed;
    scope.save();

    std::optional<Integer> brute_123, brute_321;
    if (o.verify) {
        brute_123 = count_exactly_k_bruteforce(l, kPattern123, 1);
        brute_321 = count_exactly_k_bruteforce(l, kPattern321, 1);
    }
    const bool mismatch = o.verify && (*brute_123 != count || *brute_321 != count_321);

    if (o.common.format == "json") {
        Json j;
        j["list"] = l.to_string();
        j["exactly_one_123"] = count.get_str();
        j["reversed_list_exactly_one_123"] = reversed.get_str();
        j["exactly_one_321"] = count_321.get_str();
        if (o.verify) {
            j["bruteforce_123"] = brute_123->get_str();
            j["bruteforce_321"] = brute_321->get_str();
            j["verified"] = !mismatch;
        }
        print_json(out, j);
    } else if (o.common.format == "plain") {
        out << count.get_str();
        if (o.verify) out << (mismatch ? " MISMATCH" : ", verified");
        out << '\n';
        out << "reversed list " << l.reversed().to_string() << ": " << reversed.get_str() << '\n';
        out << "exactly one 321: " << count_321.get_str() << '\n';
    } else {
        throw UsageError("count supports --format json or plain");
    }
    if (mismatch) {
        err << "brute force disagrees: 123 " << brute_123->get_str() << " vs " << count.get_str() << ", 321 "
            << brute_321->get_str() << " vs " << count_321.get_str() << '\n';
        return kExitMath;
    }
    return kExitOk;
}

void write_coefficients(std::ostream& out, const std::string& format, unsigned r, const std::string& kind,
                        const TruncatedSeries& s) {
    if (format == "json") {
        print_json(out, series_to_json({r, kind, s}));
    } else if (format == "csv") {
        out << "n,coefficient\n";
        for (std::size_t n = 0; n < s.size(); ++n) out << n << ',' << s[n].get_str() << '\n';
    } else {
        for (std::size_t n = 0; n < s.size(); ++n) out << (n ? "," : "") << s[n].get_str();
        out << '\n';
    }
}

IntegerSequence sequence_for(unsigned r, std::size_t terms) {
    return {compute_f(r, terms).integer_coefficients(), "a_" + std::to_string(r)};
}

int cmd_series(const Options& o, std::ostream& out) {
    write_coefficients(out, o.common.format, o.r, "f", compute_f(o.r, o.terms));
    return kExitOk;
}

int cmd_guess_alg(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.common.format != "json") throw UsageError("guess-alg output is JSON only");
    if (o.compare_fixture && o.r != 2) throw UsageError("an algebraic fixture exists only for r = 2");
    const std::size_t guard = o.guard ? o.guard : 10;
    const auto f = compute_f(o.r, o.terms);
    const auto p = guess_algebraic(f, o.degx, o.degy, guard);
    if (!p) {
        err << "no algebraic equation with deg_x <= " << o.degx << " and deg_y <= " << o.degy << '\n';
        return kExitMath;
    }
    const auto residual = eval_at_series(*p, f);
    Json j;
    j["r"] = o.r;
    j["terms"] = o.terms;
    j["polynomial"] = polynomial_to_json(*p);
    j["verification"] = {{"guard", guard}, {"checked_through_order", f.order()}, {"residual_zero", residual.is_zero()}};
    bool match = true;
    if (o.compare_fixture) {
        match = fixture_algebraic_r2().normalized() == *p;
        j["fixture_match"] = match;
    }
    print_json(out, j);
    if (!match) {
        err << "guessed equation differs from the fixture\n";
        return kExitMath;
    }
    return kExitOk;
}

std::pair<std::size_t, std::size_t> default_recurrence_bounds(unsigned r) {
    switch (r) {
        case 1: return {2, 4};
        case 2: return {4, 8};
        default: return {kR3MaxOrder, kR3MaxDegree};
    }
}

int cmd_guess_rec(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.common.format != "json") throw UsageError("guess-rec output is JSON only");
    if (o.compare_fixture && o.r > 2) throw UsageError("recurrence fixtures exist only for r = 1 and r = 2");
    const auto [def_order, def_degree] = default_recurrence_bounds(o.r);
    const std::size_t max_order = o.max_order.value_or(def_order);
    const std::size_t max_degree = o.max_degree.value_or(def_degree);
    const std::size_t guard = o.guard ? o.guard : 20;
    const auto seq = sequence_for(o.r, o.terms);
    const auto op = guess_recurrence(seq, max_order, max_degree, guard);
    if (!op) {
        err << "no recurrence with order <= " << max_order << " and degree <= " << max_degree << '\n';
        return kExitMath;
    }
    Json j;
    j["r"] = o.r;
    j["terms"] = o.terms;
    j["operator"] = operator_to_json(*op);
    j["verification"] = {{"guard", guard}, {"checked_terms", seq.size()}, {"residual_zero", annihilates(*op, seq)}};
    bool match = true;
    if (o.compare_fixture) {
        match = fixture_recurrence(o.r).normalized() == *op;
        j["fixture_match"] = match;
    }
    print_json(out, j);
    if (!match) {
        err << "guessed operator differs from the fixture\n";
        return kExitMath;
    }
    return kExitOk;
}

std::optional<double> constant_target(unsigned r) {
    switch (r) {
        case 1: return 3 / std::sqrt(M_PI);
        case 2: return asymptotic_constant_r2();
        case 3: return asymptotic_constant_r3();
        default: return std::nullopt;
    }
}

int cmd_asymptotics(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.nmax + 1 < kMinAsymptoticLength) {
        throw UsageError("--nmax must be at least " + std::to_string(kMinAsymptoticLength - 1));
    }
    RecurrenceOperator op;
    IntegerSequence seed;
    std::string source;
    if (o.r <= 2) {
        op = fixture_recurrence(o.r);
        seed = sequence_for(o.r, o.r == 1 ? 10 : 40);
        source = "fixture";
    } else {
        const auto [def_order, def_degree] = default_recurrence_bounds(o.r);
        const std::size_t terms = o.terms ? o.terms : kR3GuessTerms;
        seed = sequence_for(o.r, terms);
        const auto guessed = guess_recurrence(seed, o.max_order.value_or(def_order),
                                              o.max_degree.value_or(def_degree), o.guard ? o.guard : 20);
        if (!guessed) {
            err << "no recurrence found for a_" << o.r << " from " << terms << " terms\n";
            return kExitMath;
        }
        op = *guessed;
        source = "guessed";
    }
    IntegerSequence seq;
    if (seed.size() > o.nmax + 1) {
        seq = seed;
        seq.values.resize(o.nmax + 1);
    } else {
        seq = extend_sequence(op, seed, o.nmax);
    }
    const auto est = estimate_asymptotics(seq);
    const auto report = conjecture_check(o.r, est);
    const auto c_target = constant_target(o.r);
    const bool c_pass = !c_target || std::abs(est.C - *c_target) / *c_target < kConstantRelativeTolerance;
    const bool all_pass = report.passed() && c_pass;

    if (o.common.format == "json") {
        Json j;
        j["r"] = o.r;
        j["nmax"] = o.nmax;
        j["recurrence"] = source;
        j["mu"] = {{"estimate", est.mu}, {"target", report.target_mu}, {"pass", report.mu_pass}};
        j["alpha"] = {{"estimate", est.alpha}, {"target", report.target_alpha}, {"pass", report.alpha_pass}};
        Json c = {{"estimate", est.C}};
        if (c_target) {
            c["target"] = *c_target;
            c["pass"] = c_pass;
        }
        j["C"] = c;
        j["pass"] = all_pass;
        print_json(out, j);
    } else if (o.common.format == "plain") {
        out << "r=" << o.r << " n_max=" << o.nmax << " (" << source << " recurrence)\n";
        out << "mu    " << format_double(est.mu) << " target " << format_double(report.target_mu)
            << (report.mu_pass ? " pass" : " FAIL") << '\n';
        out << "alpha " << format_double(est.alpha) << " target " << format_double(report.target_alpha)
            << (report.alpha_pass ? " pass" : " FAIL") << '\n';
        out << "C     " << format_double(est.C);
        if (c_target) out << " target " << format_double(*c_target) << (c_pass ? " pass" : " FAIL");
        out << '\n';
    } else {
        throw UsageError("asymptotics supports --format json or plain");
    }
    return all_pass ? kExitOk : kExitMath;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    AcceptanceOptions opts;
    opts.include_stretch = o.stretch;
    opts.only = o.only;
    bool gating_ok = true;
    run_acceptance(opts, [&](const CriterionResult& res) {
        out << (res.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << res.id << "  " << res.name
            << (res.gating ? "" : " (non-gating)") << "  " << std::fixed << std::setprecision(2) << res.seconds
            << " s" << std::defaultfloat << "\n        " << res.detail << '\n';
        out.flush();
        if (res.gating && !res.passed) gating_ok = false;
    });
    return gating_ok ? kExitOk : kExitMath;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Words containing the pattern 123 exactly once: counts, series, guessing, asymptotics", "words123"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub, bool with_format, std::vector<std::string> formats = {"json", "plain"}) {
        sub->add_option("--cache", o.common.cache_path, "avoider-count cache file (JSON lines)");
        sub->add_option("--fixtures", o.common.fixtures, "directory holding the reference fixtures");
        if (with_format) {
            sub->add_option("--format", o.common.format, "output format")->check(CLI::IsMember(formats));
        }
    };

    auto* count = app.add_subcommand("count", "count words with exactly one 123 occurrence");
    count->add_option("--list", o.list, "multiplicities, comma-separated")->required();
    count->add_flag("--verify", o.verify, "cross-check by brute force (total <= 12)");
    add_common(count, true);

    auto* series = app.add_subcommand("series", "coefficients of f_r");
    series->add_option("--r", o.r, "repetition count")->required()->check(CLI::PositiveNumber);
    series->add_option("--terms", o.terms, "number of coefficients")->required();
    add_common(series, true, {"json", "csv", "plain"});

    auto* galg = app.add_subcommand("guess-alg", "guess an algebraic equation for f_r");
    galg->add_option("--r", o.r, "repetition count")->required()->check(CLI::PositiveNumber);
    galg->add_option("--terms", o.terms, "number of coefficients of f_r")->required();
    galg->add_option("--degx", o.degx, "maximum degree in x");
    galg->add_option("--degy", o.degy, "maximum degree in y")->check(CLI::PositiveNumber);
    galg->add_option("--guard", o.guard, "held-out equations (default 10)");
    galg->add_flag("--compare-fixture", o.compare_fixture, "compare with the reference equation");
    add_common(galg, true, {"json"});

    auto* grec = app.add_subcommand("guess-rec", "guess a linear recurrence for a_r");
    grec->add_option("--r", o.r, "repetition count")->required()->check(CLI::PositiveNumber);
    grec->add_option("--terms", o.terms, "number of terms of a_r")->required();
    grec->add_option("--max-order", o.max_order, "maximum order")->check(CLI::PositiveNumber);
    grec->add_option("--max-degree", o.max_degree, "maximum coefficient degree");
    grec->add_option("--guard", o.guard, "held-out equations (default 20)");
    grec->add_flag("--compare-fixture", o.compare_fixture, "compare with the reference operator");
    add_common(grec, true, {"json"});

    auto* asym = app.add_subcommand("asymptotics", "estimate mu, alpha and C for a_r");
    asym->add_option("--r", o.r, "repetition count")->required()->check(CLI::PositiveNumber);
    asym->add_option("--nmax", o.nmax, "extend the sequence to this index");
    asym->add_option("--terms", o.terms, "seed terms when a recurrence must be guessed");
    asym->add_option("--max-order", o.max_order, "maximum order for the guessed recurrence");
    asym->add_option("--max-degree", o.max_degree, "maximum degree for the guessed recurrence");
    asym->add_option("--guard", o.guard, "held-out equations for the guessed recurrence");
    add_common(asym, true);

    auto* self = app.add_subcommand("selftest", "run the acceptance ladder");
    self->add_flag("--stretch", o.stretch, "include the non-gating f_3 equation search");
    self->add_option("--only", o.only, "run only these criteria")->delimiter(',');
    add_common(self, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!o.common.fixtures.empty()) ::setenv("WORDS123_FIXTURES", o.common.fixtures.c_str(), 1);
        if (count->parsed()) return cmd_count(o, out, err);
        if (series->parsed()) return cmd_series(o, out);
        if (galg->parsed()) return cmd_guess_alg(o, out, err);
        if (grec->parsed()) return cmd_guess_rec(o, out, err);
        if (asym->parsed()) return cmd_asymptotics(o, out, err);
        if (self->parsed()) return cmd_selftest(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InsufficientTerms& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMath;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMath;
    }
    return kExitUsage;
}

}  // namespace words123::cli
