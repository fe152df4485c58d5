#include "fintop/io.hpp"

#include <json.hpp>

#include "fintop/errors.hpp"
#include "fintop/rational.hpp"

namespace fintop {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(std::string(what) + ": malformed JSON");
    if (!j.is_object())
        throw ParseError(std::string(what) + ": top level must be an object");
    return j;
}

int read_carrier_size(const ordered_json& j, const char* what) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError(std::string(what) + ": missing integer field \"n\"");
    const long long n = j["n"].get<long long>();
    if (n < 0 || n > kMaxPoints)
        throw ParseError(std::string(what) + ": \"n\" must be in [0, " +
                         std::to_string(kMaxPoints) + "]");
    return static_cast<int>(n);
}

PointSet read_point_list(const ordered_json& arr, int n, const char* what) {
    if (!arr.is_array())
        throw ParseError(std::string(what) + ": expected an array of points");
    PointSet s = PointSet::empty(n);
    for (const auto& e : arr) {
        if (!e.is_number_integer())
            throw ParseError(std::string(what) + ": points must be integers");
        const long long p = e.get<long long>();
        if (p < 0 || p >= n)
            throw ParseError(std::string(what) + ": point " + std::to_string(p) +
                             " outside [0, " + std::to_string(n) + ")");
        s = s.with(static_cast<int>(p));
    }
    return s;
}

Rational read_value(const ordered_json& e) {
    if (e.is_number_integer()) return Rational(e.get<long long>());
    if (e.is_number_float())
        throw ParseError("function file: floating-point values are not accepted; "
                         "write rationals as \"p/q\" strings");
    if (e.is_string()) return parse_rational(e.get<std::string>());
    throw ParseError("function file: values must be integers or \"p/q\" strings");
}

} // namespace

Topology parse_space(const std::string& text) {
    const ordered_json j = parse_json(text, "space file");
    const int n = read_carrier_size(j, "space file");
    const bool has_table = j.contains("min_nbrs");
    const bool has_opens = j.contains("opens");
    if (has_table == has_opens)
        throw ParseError("space file: exactly one of \"min_nbrs\"/\"opens\" required");

    if (has_table) {
        const auto& arr = j["min_nbrs"];
        if (!arr.is_array() || static_cast<int>(arr.size()) != n)
            throw ParseError("space file: \"min_nbrs\" must list one set per point");
        std::vector<PointSet> rows;
        rows.reserve(arr.size());
        for (const auto& row : arr) rows.push_back(read_point_list(row, n, "space file"));
        return Topology::from_min_neighborhoods(std::move(rows));
    }

    const auto& arr = j["opens"];
    if (!arr.is_array())
        throw ParseError("space file: \"opens\" must be an array of sets");
    std::vector<PointSet> opens;
    opens.reserve(arr.size());
    for (const auto& s : arr) opens.push_back(read_point_list(s, n, "space file"));
    return Topology::from_opens(n, opens);
}

std::string emit_space(const Topology& t) {
    ordered_json j;
    j["n"] = t.size();
    ordered_json rows = ordered_json::array();
    for (int x = 0; x < t.size(); ++x)
        rows.push_back(t.min_neighborhood(x).points());
    j["min_nbrs"] = std::move(rows);
    return j.dump();
}

FiniteFunction parse_function(const std::string& text) {
    const ordered_json j = parse_json(text, "function file");
    if (!j.contains("values") || !j["values"].is_array())
        throw ParseError("function file: missing array field \"values\"");
    std::vector<Rational> values;
    values.reserve(j["values"].size());
    for (const auto& e : j["values"]) values.push_back(read_value(e));
    if (static_cast<int>(values.size()) > kMaxPoints)
        throw ParseError("function file: more than " + std::to_string(kMaxPoints) +
                         " values");
    return FiniteFunction(std::move(values));
}

std::string emit_function(const FiniteFunction& f) {
    ordered_json j;
    ordered_json vals = ordered_json::array();
    for (int x = 0; x < f.size(); ++x) {
        const Rational v = f.at(x);
        if (v.denominator() == 1)
            vals.push_back(v.numerator());
        else
            vals.push_back(to_string(v));
    }
    j["values"] = std::move(vals);
    return j.dump();
}

} // namespace fintop
