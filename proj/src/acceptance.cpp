#include "words123/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "words123/algebraic.hpp"
#include "words123/counters.hpp"
#include "words123/error.hpp"
#include "words123/json_io.hpp"
#include "words123/recurrence.hpp"
#include "words123/series.hpp"

namespace words123 {

namespace {

using Clock = std::chrono::steady_clock;

MultiplicityList repeated(unsigned value, std::size_t times, std::vector<unsigned> prefix = {}) {
    prefix.insert(prefix.end(), times, value);
    return MultiplicityList(std::move(prefix));
}

IntegerSequence f_sequence(unsigned r, std::size_t terms) {
    return {compute_f(r, terms).integer_coefficients(), "a_" + std::to_string(r)};
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    return out.str();
}

// Every check returns (passed, detail).
using Outcome = std::pair<bool, std::string>;

Outcome avoider_fixtures() {
    struct Case {
        const char* name;
        std::vector<MultiplicityList> lists;
        std::vector<int> expected;
    };
    std::vector<Case> cases(3);
    cases[0].name = "g_1";
    cases[0].expected = {1, 1, 2, 5, 14, 42};
    for (std::size_t n = 0; n < 6; ++n) cases[0].lists.push_back(repeated(1, n));
    cases[1].name = "g_2^(0,0)";
    cases[1].expected = {1, 1, 6, 43, 352, 3114};
    for (std::size_t n = 0; n < 6; ++n) cases[1].lists.push_back(repeated(2, n));
    cases[2].name = "g_2^(0,1)";
    cases[2].expected = {1, 3, 19, 145};
    for (std::size_t n = 0; n < 4; ++n) cases[2].lists.push_back(repeated(2, n, {1}));

    std::string detail;
    bool ok = true;
    for (const auto& c : cases) {
        std::vector<std::string> got;
        for (std::size_t i = 0; i < c.lists.size(); ++i) {
            const auto v = count_avoiders(c.lists[i]);
            got.push_back(v.get_str());
            ok = ok && v == c.expected[i];
        }
        detail += std::string(detail.empty() ? "" : "; ") + c.name + ": " + join(got);
    }
    return {ok, detail};
}

Outcome double_sum_vs_oracle(const std::vector<MultiplicityList>& corpus) {
    std::size_t mismatches = 0;
    std::string first;
    for (const auto& l : corpus) {
        const auto formula = count_exactly_one_123(l);
        const auto brute = count_exactly_k_bruteforce(l, kPattern123, 1);
        if (formula != brute) {
            if (!mismatches) first = "[" + l.to_string() + "]: " + formula.get_str() + " vs " + brute.get_str();
            ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(corpus.size()) + " lists, " + std::to_string(mismatches) +
                                 " mismatches" + (first.empty() ? "" : " (first " + first + ")")};
}

Outcome symmetry_checks(const std::vector<MultiplicityList>& corpus) {
    std::size_t reversal_bad = 0, complement_bad = 0;
    for (const auto& l : corpus) {
        const auto count = count_exactly_one_123(l);
        if (count != count_exactly_one_123(l.reversed())) ++reversal_bad;
        if (count != count_exactly_k_bruteforce(l, kPattern321, 1)) ++complement_bad;
    }
    return {reversal_bad == 0 && complement_bad == 0,
            std::to_string(corpus.size()) + " lists; reversal mismatches " + std::to_string(reversal_bad) +
                ", exactly-one-321 mismatches " + std::to_string(complement_bad)};
}

Outcome remark_separation() {
    bool ok = true;
    std::vector<std::string> counts;
    for (long long n = 1; n <= 7; ++n) {
        const auto brute = count_exactly_k_bruteforce(repeated(1, static_cast<std::size_t>(n)), kPattern132, 1);
        counts.push_back(brute.get_str());
        ok = ok && brute == bona_132_count(n);
    }
    const auto one_123 = count_exactly_one_123(repeated(1, 5));
    const auto one_132 = count_exactly_k_bruteforce(repeated(1, 5), kPattern132, 1);
    ok = ok && one_123 == 27 && one_132 == 21 && one_123 != one_132;
    return {ok, "exactly-one-132 for n=1..7: " + join(counts) + "; n=5: 123 -> " + one_123.get_str() +
                    ", 132 -> " + one_132.get_str()};
}

Outcome bijection_round_trip() {
    std::size_t words = 0, failures = 0;
    std::string first;
    for (const auto& l : composition_corpus(8, 8)) {
        const auto n = static_cast<unsigned>(l.alphabet_size());
        for_each_word(l, [&](std::span<const Letter> letters) {
            if (count_pattern_occurrences(letters, kPattern123) != 1) return;
            ++words;
            const Word w(std::vector<Letter>(letters.begin(), letters.end()), n);
            const auto g = decompose(w);
            const bool good = !good_pair_violation(g) && g.j + 1 <= l.count_of(g.b);
            const bool ok = good && recompose(g) == w && decompose(recompose(g)) == g;
            if (!ok) {
                if (!failures) first = w.to_string();
                ++failures;
            }
        });
    }
    return {failures == 0 && words > 0, std::to_string(words) + " words, " + std::to_string(failures) +
                                            " failures" + (first.empty() ? "" : " (first " + first + ")")};
}

Outcome g_residuals() {
    constexpr long kOrder = 40;
    std::string detail;
    bool ok = true;
    for (unsigned r = 1; r <= 3; ++r) {
        const auto table = solve_g_system(r, kOrder);
        std::size_t bad = 0;
        for (const auto& [key, series] : table.entries()) {
            if (g_system_rhs(table, key.first, key.second) != series) ++bad;
        }
        ok = ok && bad == 0;
        detail += (r > 1 ? "; " : "") + std::string("r=") + std::to_string(r) + ": " +
                  std::to_string(table.size()) + " entries, " + std::to_string(bad) + " nonzero residuals";
    }
    return {ok, detail};
}

Outcome h_formula_consistency() {
    constexpr long kOrder = 40;
    const auto t1 = solve_g_system(1, kOrder + 1);
    const auto t2 = solve_g_system(2, kOrder + 1);
    const bool r1 = compute_h(t1, kOrder) == h1_closed_form(t1, kOrder);
    const bool r2 = compute_h(t2, kOrder) == h2_closed_form(t2, kOrder);
    bool support = true;
    for (unsigned r = 1; r <= 3; ++r) support = support && supported_on_residue(compute_h(r, kOrder), r, 0);
    return {r1 && r2 && support, std::string("r=1 closed form ") + (r1 ? "equal" : "DIFFERENT") +
                                     ", r=2 closed form " + (r2 ? "equal" : "DIFFERENT") + ", support on multiples of r " +
                                     (support ? "holds" : "FAILS")};
}

Outcome f1_closed_form() {
    const auto f1 = compute_f(1, 41);
    std::size_t bad = 0;
    for (long long n = 3; n <= 40; ++n) {
        if (f1[static_cast<std::size_t>(n)] != Rational(noonan_count(n))) ++bad;
    }
    return {bad == 0, "n = 3..40, " + std::to_string(bad) + " mismatches"};
}

Outcome algebraic_fixture() {
    const auto quartic = fixture_algebraic_r2();
    const auto f2_60 = compute_f(2, 61);
    const bool vanishes = eval_at_series(quartic, f2_60).is_zero();
    const auto guessed = guess_algebraic(compute_f(2, 80), 6, 4, 10);
    const bool same = guessed && *guessed == quartic.normalized();
    return {vanishes && same, std::string("fixture at f_2 (order 60): ") + (vanishes ? "zero" : "NONZERO") +
                                  "; guessed " + (guessed ? guessed->to_string() : "nothing") + " -> " +
                                  (same ? "matches fixture" : "DIFFERS")};
}

Outcome recurrence_fixtures() {
    const auto op1 = fixture_recurrence(1);
    IntegerSequence a1{{}, "a_1"};
    for (long long n = 0; n <= 30; ++n) a1.values.push_back(n == 0 ? Integer(0) : noonan_count(n));
    const bool r1 = annihilates(op1, a1);

    const auto op2 = fixture_recurrence(2);
    const auto a2_41 = f_sequence(2, 41);
    const bool r2 = annihilates(op2, a2_41);

    const auto a2 = f_sequence(2, kR2GuessTerms);
    const auto guessed = guess_recurrence(a2, 4, 8, 20);
    bool equivalent = false;
    std::string shape = "nothing";
    if (guessed) {
        shape = "order " + std::to_string(guessed->order()) + ", degree " + std::to_string(guessed->max_degree()) +
                (*guessed == op2.normalized() ? " (identical to the fixture)" : "");
        const std::size_t upto = kR2GuessTerms + 100;
        const auto by_guess = extend_sequence(*guessed, a2, upto);
        const auto by_fixture = extend_sequence(op2, a2, upto);
        equivalent = guessed->order() == 4 && annihilates(op2, by_guess) && annihilates(*guessed, by_fixture) &&
                     by_guess.values == by_fixture.values;
    }
    return {r1 && r2 && equivalent,
            std::string("r=1 fixture on a_1(0..30): ") + (r1 ? "zero" : "NONZERO") + "; r=2 fixture on f_2(0..40): " +
                (r2 ? "zero" : "NONZERO") + "; guessed " + shape + ", cross-annihilation on 100 extended terms " +
                (equivalent ? "holds" : "FAILS")};
}

struct AsymptoticData {
    AsymptoticEstimate r1, r2, r3;
    std::size_t r3_order = 0;
    long r3_degree = 0;
};

AsymptoticData& asymptotic_data() {
    static AsymptoticData data = [] {
        AsymptoticData d;
        const auto a1 = extend_sequence(fixture_recurrence(1), f_sequence(1, 10), kAsymptoticsHorizon);
        d.r1 = estimate_asymptotics(a1);
        const auto a2 = extend_sequence(fixture_recurrence(2), f_sequence(2, 40), kAsymptoticsHorizon);
        d.r2 = estimate_asymptotics(a2);
        const auto seed3 = f_sequence(3, kR3GuessTerms);
        const auto op3 = guess_recurrence(seed3, kR3MaxOrder, kR3MaxDegree, 20);
        if (!op3) throw MathError("no recurrence for a_3 within order " + std::to_string(kR3MaxOrder) +
                                  ", degree " + std::to_string(kR3MaxDegree));
        d.r3_order = op3->order();
        d.r3_degree = op3->max_degree();
        d.r3 = estimate_asymptotics(extend_sequence(*op3, seed3, kAsymptoticsHorizon));
        return d;
    }();
    return data;
}

std::string describe(const AsymptoticEstimate& e) {
    std::ostringstream out;
    out.precision(10);
    out << "mu=" << e.mu << " alpha=" << e.alpha << " C=" << e.C;
    return out.str();
}

Outcome asymptotics() {
    const auto& d = asymptotic_data();
    auto check = [](const AsymptoticEstimate& e, double mu, double c) {
        return std::abs(e.mu - mu) / mu < kMuRelativeTolerance && std::abs(e.alpha + 1.5) < kAlphaTolerance &&
               std::abs(e.C - c) / c < kConstantRelativeTolerance;
    };
    const bool ok2 = check(d.r2, 12, asymptotic_constant_r2());
    const bool ok3 = check(d.r3, 32, asymptotic_constant_r3());
    std::ostringstream out;
    out.precision(10);
    out << "a_2: " << describe(d.r2) << " (C target " << asymptotic_constant_r2() << ")"
        << "; a_3 [guessed order " << d.r3_order << ", degree " << d.r3_degree << "]: " << describe(d.r3)
        << " (C target " << asymptotic_constant_r3() << ")";
    return {ok2 && ok3, out.str()};
}

Outcome conjecture_probe() {
    const auto& d = asymptotic_data();
    bool ok = true;
    std::ostringstream out;
    out.precision(10);
    const AsymptoticEstimate* ests[] = {&d.r1, &d.r2, &d.r3};
    for (unsigned r = 1; r <= 3; ++r) {
        const auto rep = conjecture_check(r, *ests[r - 1]);
        ok = ok && rep.passed();
        out << (r > 1 ? "; " : "") << "r=" << r << ": mu=" << ests[r - 1]->mu << " vs " << rep.target_mu
            << " alpha=" << ests[r - 1]->alpha << (rep.passed() ? " pass" : " FAIL");
    }
    return {ok, out.str()};
}

Outcome stretch_r3_algebraic(double budget_seconds) {
    // Degree bounds are an experiment parameter; 24 in x is enough room for
    // the quick screen to detect the y-degree.
    constexpr std::size_t kDegX = 24;
    constexpr std::size_t kDegY = 12;
    constexpr std::size_t kGuard = 10;
    const auto start = Clock::now();
    const auto f3 = compute_f(3, (kDegX + 1) * (kDegY + 1) + kGuard + 20);
    const auto p = guess_algebraic(f3, kDegX, kDegY, kGuard);
    const double spent = std::chrono::duration<double>(Clock::now() - start).count();
    if (!p) {
        return {false, "no equation with deg_x <= " + std::to_string(kDegX) + ", deg_y <= " + std::to_string(kDegY) +
                           " (" + std::to_string(spent) + " s)"};
    }
    const auto [dx, dy] = p->degree_profile();
    const bool ok = dy == 12 && spent <= budget_seconds;
    return {ok, "first equation found has deg_x=" + std::to_string(dx) + ", deg_y=" + std::to_string(dy) +
                    " (expected deg_y=12), verified on " + std::to_string(f3.size()) + " coefficients, " +
                    std::to_string(spent) + " s"};
}

}  // namespace

std::vector<MultiplicityList> composition_corpus(std::size_t max_total, std::size_t max_parts) {
    std::vector<MultiplicityList> out;
    std::vector<unsigned> current;
    std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
        if (!current.empty()) out.emplace_back(current);
        if (current.size() == max_parts) return;
        for (unsigned part = 1; part <= remaining; ++part) {
            current.push_back(part);
            extend(remaining - part);
            current.pop_back();
        }
    };
    extend(max_total);
    std::sort(out.begin(), out.end(), [](const MultiplicityList& a, const MultiplicityList& b) {
        return std::pair(a.total(), a) < std::pair(b.total(), b);
    });
    return out;
}

double asymptotic_constant_r2() { return 3 * (13 - std::sqrt(21.0)) / (49 * std::sqrt(M_PI)); }

double asymptotic_constant_r3() { return (-7 + 6 * std::sqrt(7.0)) / (56 * std::sqrt(M_PI)); }

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    const auto corpus = composition_corpus(9, 5);
    struct Entry {
        int id;
        const char* name;
        bool gating;
        std::function<Outcome()> check;
    };
    const std::vector<Entry> ladder = {
        {1, "avoider fixtures", true, avoider_fixtures},
        {2, "double-sum count equals brute force", true, [&] { return double_sum_vs_oracle(corpus); }},
        {3, "reversal and exactly-one-321 symmetries", true, [&] { return symmetry_checks(corpus); }},
        {4, "132 counts separate from 123 counts", true, remark_separation},
        {5, "good-pair bijection round trip", true, bijection_round_trip},
        {6, "g-system residuals", true, g_residuals},
        {7, "general h_r formula consistency", true, h_formula_consistency},
        {8, "f_1 matches closed form", true, f1_closed_form},
        {9, "r=2 algebraic equation", true, algebraic_fixture},
        {10, "recurrence fixtures and guessed r=2 operator", true, recurrence_fixtures},
        {11, "asymptotics of a_2 and a_3", true, asymptotics},
        {12, "growth-rate conjecture probe", true, conjecture_probe},
        {13, "algebraic equation for f_3 (stretch)", false,
         [&] { return stretch_r3_algebraic(options.stretch_budget_seconds); }},
    };

    std::vector<CriterionResult> results;
    for (const auto& e : ladder) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), e.id) == options.only.end()) {
            continue;
        }
        if (e.id == 13 && !options.include_stretch) continue;
        CriterionResult res;
        res.id = e.id;
        res.name = e.name;
        res.gating = e.gating;
        const auto start = Clock::now();
        try {
            auto [passed, detail] = e.check();
            res.passed = passed;
            res.detail = std::move(detail);
        } catch (const std::exception& ex) {
            res.passed = false;
            res.detail = std::string("error: ") + ex.what();
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (on_result) on_result(res);
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace words123
