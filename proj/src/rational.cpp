#include "holodisc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace holodisc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal: '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        Integer d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        value = Rational(Integer{std::string(num)}, d);
    } else if (auto dotpos = s.find('.'); dotpos != std::string_view::npos) {
        std::string_view whole = s.substr(0, dotpos);
        std::string_view frac = s.substr(dotpos + 1);
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer units = whole.empty() ? Integer(0) : Integer{std::string(whole)};
        Integer frac_units = frac.empty() ? Integer(0) : Integer{std::string(frac)};
        value = Rational(units * scale + frac_units, scale);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
        value = Rational(Integer{std::string(s)});
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace holodisc
