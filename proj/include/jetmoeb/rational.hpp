#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace jetmoeb {

// Arbitrary-precision rational, always kept canonical (lowest terms,
// positive denominator). GMP maintains that after every arithmetic op; the
// constructors below canonicalize explicitly.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw jet_error(errc::division_by_zero, "rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace detail {

inline bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

} // namespace detail

// Parses "p" or "p/q" with an optional sign on p. Anything else, including a
// zero denominator, is a parse_error.
inline Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
        throw parse_error("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

} // namespace jetmoeb
