#pragma once

// JSON encodings for series, bivariate polynomials and recurrence operators,
// plus access to the checked-in fixtures.

#include <filesystem>
#include <json.hpp>
#include <string>

#include "words123/algebraic.hpp"
#include "words123/recurrence.hpp"
#include "words123/series.hpp"

namespace words123 {

using Json = nlohmann::json;

struct SeriesRecord {
    unsigned r = 0;
    std::string kind;  // "f", "h", "g00", ...
    TruncatedSeries series;
};

// {"r":2,"kind":"f","order":N,"coeffs":["0","0",...]}
Json series_to_json(const SeriesRecord& record);
SeriesRecord series_from_json(const Json& j);

// {"deg_x":6,"deg_y":4,"coeffs":{"a,b":"integer",...}}
Json polynomial_to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const Json& j);

// {"order":4,"polys":[["c0","c1",...],...]}, coefficients ascending in n.
Json operator_to_json(const RecurrenceOperator& op);
RecurrenceOperator operator_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

// WORDS123_FIXTURES from the environment, else the source tree's data/fixtures.
std::filesystem::path fixture_directory();

// The published r=2 quartic for f_2.
BivariatePolynomial fixture_algebraic_r2();
// The published recurrence operators for a_1 and a_2.
RecurrenceOperator fixture_recurrence(unsigned r);

}  // namespace words123
