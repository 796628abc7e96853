#pragma once

// The acceptance ladder: every gating check of the toolkit, runnable from
// the test suite and from `words123 selftest`.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "words123/word.hpp"

namespace words123 {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool gating = true;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    bool include_stretch = false;        // criterion 13 (algebraic equation for f_3)
    double stretch_budget_seconds = 900;
    std::vector<int> only;               // empty: run all
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// Positive compositions with total <= max_total and at most max_parts parts.
std::vector<MultiplicityList> composition_corpus(std::size_t max_total, std::size_t max_parts);

// Leading constants of the published asymptotic formulas for a_2 and a_3.
double asymptotic_constant_r2();
double asymptotic_constant_r3();

// Data sizes used by the asymptotics criterion.
inline constexpr std::size_t kAsymptoticsHorizon = 300;
inline constexpr std::size_t kR3GuessTerms = 200;
inline constexpr std::size_t kR3MaxOrder = 6;
inline constexpr std::size_t kR3MaxDegree = 23;
inline constexpr std::size_t kR2GuessTerms = 90;

}  // namespace words123
