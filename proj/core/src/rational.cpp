#include "polyrec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace polyrec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = trim(s.substr(0, slash));
        den = trim(s.substr(slash + 1));
    }
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");

    // GMP rejects a leading '+', so strip it here.
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);

    // Construct via mpz division: mpq_rational's string constructor does not
    // canonicalize "6/4", but dividing two mpz_int values does.
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
    return Rational(n) / Rational(d);
}

std::string rational_to_string(const Rational& q) {
    return q.str();
}

} // namespace polyrec
