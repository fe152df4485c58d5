#include "fintop/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

long long parse_integer(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer in rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw ParseError("sign without digits in rational literal");
    long long value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad rational literal: '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return neg ? -value : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));

    long long num = parse_integer(text.substr(0, slash));
    long long den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += '/';
        s += std::to_string(r.denominator());
    }
    return s;
}

std::string to_string(const std::vector<Rational>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += to_string(values[i]);
    }
    return s;
}

} // namespace fintop
