#include "hprop/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "hprop/errors.hpp"

namespace hprop {

namespace {

using Int = boost::multiprecision::mpz_int;

Int pow10(long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rational rational_from_decimal(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&]() -> Rational {
        throw Error(ErrorCode::ParseError, "not a decimal number: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();

    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    std::string digits;     // integer+fraction digits concatenated
    long frac_digits = 0;   // count of digits after the point
    bool any_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits.push_back(text[pos++]);
        any_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits.push_back(text[pos++]);
            ++frac_digits;
            any_digit = true;
        }
    }
    if (!any_digit) return fail();

    long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            eneg = text[pos] == '-';
            ++pos;
        }
        if (pos == text.size()) return fail();
        long e = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            e = e * 10 + (text[pos++] - '0');
            if (e > 100000) return fail();
        }
        exponent = eneg ? -e : e;
    }
    if (pos != text.size()) return fail();

    // strip leading zeros; mpz treats a leading 0 as an octal prefix
    std::size_t first = digits.find_first_not_of('0');
    digits = (first == std::string::npos) ? "0" : digits.substr(first);
    Int num = Int(digits);
    long den_exp = frac_digits - exponent;
    Rational r;
    if (den_exp >= 0)
        r = Rational(num, pow10(den_exp));
    else
        r = Rational(num * pow10(-den_exp), 1);
    return neg ? -r : r;
}

Rational rational_from_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return rational_from_decimal(std::string_view(buf, res.ptr - buf));
}

std::string to_fraction_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hprop
