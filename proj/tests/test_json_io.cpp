#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "words123/error.hpp"
#include "words123/json_io.hpp"
#include "words123/series.hpp"

using namespace words123;

TEST_CASE("series JSON round trip") {
    const SeriesRecord rec{2, "f", compute_f(2, 8)};
    const auto j = series_to_json(rec);
    CHECK(j["order"] == 7);
    CHECK(j["coeffs"][3] == "12");
    const auto back = series_from_json(j);
    CHECK(back.r == 2);
    CHECK(back.kind == "f");
    CHECK(back.series == rec.series);
    CHECK(series_to_json(rec).dump() == j.dump());

    const auto empty = series_to_json({2, "f", TruncatedSeries()});
    CHECK(empty["order"] == -1);
    CHECK(empty["coeffs"].empty());

    auto bad = j;
    bad["order"] = 3;
    CHECK_THROWS_AS(series_from_json(bad), FormatError);
    bad = j;
    bad["coeffs"][0] = "x";
    CHECK_THROWS_AS(series_from_json(bad), FormatError);
    CHECK_THROWS_AS(series_from_json(Json::array()), FormatError);
}

TEST_CASE("polynomial and operator JSON") {
    const auto p = fixture_algebraic_r2();
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    CHECK(polynomial_to_json(p)["deg_y"] == 4);
    auto bad = polynomial_to_json(p);
    bad["deg_y"] = 2;
    CHECK_THROWS_AS(polynomial_from_json(bad), FormatError);

    const auto op = fixture_recurrence(2);
    CHECK(op.order() == 4);
    CHECK(op.max_degree() == 8);
    CHECK(operator_from_json(operator_to_json(op)) == op);
    auto bad_op = operator_to_json(op);
    bad_op["order"] = 3;
    CHECK_THROWS_AS(operator_from_json(bad_op), FormatError);
}

TEST_CASE("files and fixture lookup") {
    const auto dir = std::filesystem::temp_directory_path() / "words123_json_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "s.json";
    write_json_file(path, series_to_json({1, "f", compute_f(1, 5)}));
    CHECK(series_from_json(read_json_file(path)).series == compute_f(1, 5));
    CHECK_THROWS_AS(read_json_file(dir / "missing.json"), Error);
    CHECK_THROWS_AS(fixture_recurrence(3), InvalidArgument);
    std::filesystem::remove_all(dir);
}
