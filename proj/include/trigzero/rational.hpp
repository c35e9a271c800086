#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "trigzero/errors.hpp"

namespace trigzero {

using Rational = mpq_class;

/// Exact rational value of a finite double (every double is dyadic).
inline Rational dyadic(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite value has no rational lift");
    Rational q(x);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// [+-]digits[.digits][(e|E)[+-]digits], at least one digit in the mantissa.
inline Rational parse_decimal(std::string_view s, std::string_view original) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view exp_text = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6)
            throw ParseError("malformed exponent in '" + std::string(original) + "'");
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = s, frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
        throw ParseError("malformed number '" + std::string(original) + "'");

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    Rational q;
    if (exponent >= 0) {
        q = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
        q = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace detail

/// Parses an integer, a decimal (optionally with exponent) or "p/q", exactly.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw ParseError("empty numeric entry");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = detail::trim(s.substr(0, slash));
        std::string_view den = detail::trim(s.substr(slash + 1));
        std::string_view num_digits = num;
        if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-'))
            num_digits.remove_prefix(1);
        if (!detail::all_digits(num_digits) || !detail::all_digits(den))
            throw ParseError("malformed rational '" + std::string(s) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        mpz_class n(std::string(num_digits), 10);
        if (num.front() == '-') n = -n;
        Rational q(n, d);
        q.canonicalize();
        return q;
    }
    return detail::parse_decimal(s, s);
}

/// Splits comma-separated coefficient text into exact rationals.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (detail::trim(text).empty()) throw ParseError("empty coefficient list");
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace trigzero
