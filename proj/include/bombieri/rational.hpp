#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bombieri {

using Integer = mpz_class;
/// Exact coefficient. GMP keeps it reduced with a positive denominator after
/// every arithmetic operation; zero is always 0/1.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer to_integer(std::uint64_t v) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

/// "num/den", always with the denominator. Used on the wire.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// "num" for integers, "num/den" otherwise. Used for people.
inline std::string to_display_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_fraction_string(q);
}

namespace detail {
inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}
} // namespace detail

/// Accepts "a", "a/b" and plain decimals "0.25", with an optional sign.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den))
            throw std::invalid_argument("not a rational: " + std::string(text));
        out = make_rational(Integer(std::string(num)), Integer(std::string(den)));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!detail::all_digits(whole) || (!frac.empty() && !detail::all_digits(frac)))
            throw std::invalid_argument("not a rational: " + std::string(text));
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer num{std::string(whole)};
        num = num * scale + (frac.empty() ? Integer(0) : Integer(std::string(frac)));
        out = make_rational(num, scale);
    } else {
        if (!detail::all_digits(s))
            throw std::invalid_argument("not a rational: " + std::string(text));
        out = Rational(Integer(std::string(s)));
    }
    return negative ? Rational(-out) : out;
}

} // namespace bombieri
