#include "words123/json_io.hpp"

#include <cstdlib>
#include <fstream>

#include "words123/error.hpp"

#ifndef WORDS123_FIXTURE_DIR
#define WORDS123_FIXTURE_DIR "data/fixtures"
#endif

namespace words123 {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw FormatError(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

std::string string_of(const Json& j, const char* what) {
    if (!j.is_string()) throw FormatError(std::string(what) + " must be a decimal string");
    return j.get<std::string>();
}

Integer integer_of(const Json& j, const char* what) {
    Integer z;
    if (z.set_str(string_of(j, what), 10) != 0) {
        throw FormatError(std::string(what) + " is not a decimal integer: " + j.get<std::string>());
    }
    return z;
}

std::size_t size_of(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) throw FormatError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json series_to_json(const SeriesRecord& record) {
    Json coeffs = Json::array();
    for (const auto& q : record.series.coefficients()) coeffs.push_back(q.get_str());
    return Json{{"r", record.r}, {"kind", record.kind}, {"order", record.series.order()}, {"coeffs", coeffs}};
}

SeriesRecord series_from_json(const Json& j) {
    SeriesRecord out;
    out.r = static_cast<unsigned>(size_of(field(j, "r"), "r"));
    out.kind = string_of(field(j, "kind"), "kind");
    const auto& order = field(j, "order");
    if (!order.is_number_integer()) throw FormatError("order must be an integer");
    const auto& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw FormatError("coeffs must be an array");
    if (static_cast<long>(coeffs.size()) != order.get<long>() + 1) {
        throw FormatError("coeffs length does not match order");
    }
    std::vector<Rational> values;
    for (const auto& c : coeffs) {
        try {
            values.push_back(parse_rational(string_of(c, "coefficient")));
        } catch (const InvalidArgument& e) {
            throw FormatError(e.what());
        }
    }
    out.series = TruncatedSeries(std::move(values));
    return out;
}

Json polynomial_to_json(const BivariatePolynomial& p) {
    const auto [dx, dy] = p.degree_profile();
    Json coeffs = Json::object();
    for (const auto& [e, c] : p.terms()) {
        coeffs[std::to_string(e.first) + "," + std::to_string(e.second)] = c.get_str();
    }
    return Json{{"deg_x", dx}, {"deg_y", dy}, {"coeffs", coeffs}};
}

BivariatePolynomial polynomial_from_json(const Json& j) {
    const auto dx = size_of(field(j, "deg_x"), "deg_x");
    const auto dy = size_of(field(j, "deg_y"), "deg_y");
    const auto& coeffs = field(j, "coeffs");
    if (!coeffs.is_object()) throw FormatError("coeffs must be an object");
    std::map<BivariatePolynomial::Exponents, Integer> terms;
    for (const auto& [key, value] : coeffs.items()) {
        const auto comma = key.find(',');
        std::size_t a = 0, b = 0;
        try {
            if (comma == std::string::npos) throw std::invalid_argument(key);
            std::size_t used_a = 0, used_b = 0;
            a = std::stoul(key.substr(0, comma), &used_a);
            b = std::stoul(key.substr(comma + 1), &used_b);
            if (used_a != comma || used_b != key.size() - comma - 1) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw FormatError("bad exponent key '" + key + "'");
        }
        if (a > dx || b > dy) throw FormatError("exponent key '" + key + "' exceeds declared degrees");
        terms[{a, b}] = integer_of(value, "coefficient");
    }
    BivariatePolynomial p(std::move(terms));
    if (p.degree_profile() != std::pair{dx, dy}) throw FormatError("declared degrees do not match coefficients");
    return p;
}

Json operator_to_json(const RecurrenceOperator& op) {
    Json polys = Json::array();
    for (const auto& p : op.polys()) {
        Json row = Json::array();
        for (const auto& c : p.coefficients()) row.push_back(c.get_str());
        polys.push_back(row);
    }
    return Json{{"order", op.order()}, {"polys", polys}};
}

RecurrenceOperator operator_from_json(const Json& j) {
    const auto order = size_of(field(j, "order"), "order");
    const auto& polys = field(j, "polys");
    if (!polys.is_array() || polys.size() != order + 1) throw FormatError("polys must hold order+1 polynomials");
    std::vector<IntPolynomial> out;
    for (const auto& row : polys) {
        if (!row.is_array()) throw FormatError("each polynomial must be an array");
        std::vector<Integer> c;
        for (const auto& v : row) c.push_back(integer_of(v, "coefficient"));
        out.emplace_back(std::move(c));
    }
    try {
        RecurrenceOperator op(std::move(out));
        if (op.order() != order) throw FormatError("leading polynomial is zero");
        return op;
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << j.dump() << '\n';
}

std::filesystem::path fixture_directory() {
    if (const char* env = std::getenv("WORDS123_FIXTURES"); env && *env) return env;
    return WORDS123_FIXTURE_DIR;
}

BivariatePolynomial fixture_algebraic_r2() {
    return polynomial_from_json(read_json_file(fixture_directory() / "algebraic_r2.json"));
}

RecurrenceOperator fixture_recurrence(unsigned r) {
    if (r != 1 && r != 2) throw InvalidArgument("recurrence fixtures exist for r = 1 and r = 2 only");
    return operator_from_json(read_json_file(fixture_directory() / ("recurrence_r" + std::to_string(r) + ".json")));
}

}  // namespace words123
