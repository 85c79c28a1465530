#pragma once

#include "bombieri/combinatorics.hpp"
#include "bombieri/polynomial.hpp"
#include "bombieri/rational.hpp"

#include <cstddef>
#include <string>

namespace bombieri {

/// [P, Q] = sum over i of (i_1! ... i_n!) a_i b_i.
///
/// Only exponents present in both supports contribute, so the loop walks the
/// smaller polynomial and probes the larger one.
inline Rational inner_product(const Polynomial& p, const Polynomial& q) {
    detail::require_same_dimension(p, q);
    const Polynomial& small = p.size() <= q.size() ? p : q;
    const Polynomial& large = p.size() <= q.size() ? q : p;
    Rational sum = 0;
    for (const auto& [e, c] : small) {
        auto it = large.terms().find(e);
        if (it == large.terms().end()) continue;
        sum += Rational(multi_factorial(e)) * c * it->second;
    }
    return sum;
}

/// ||P||^2 = [P, P]. Nonnegative, and zero only for P = 0.
class NormSquared {
public:
    const Rational& value() const noexcept { return value_; }
    operator const Rational&() const noexcept { return value_; }

    friend bool operator==(const NormSquared&, const NormSquared&) = default;

private:
    friend NormSquared norm_squared(const Polynomial& p);
    explicit NormSquared(Rational v) : value_(std::move(v)) {}
    Rational value_;
};

inline NormSquared norm_squared(const Polynomial& p) {
    Rational sum = 0;
    for (const auto& [e, c] : p) sum += Rational(multi_factorial(e)) * c * c;
    return NormSquared(std::move(sum));
}

/// sqrt(q) truncated toward zero to `digits` decimals, e.g. "1.414" for 2.
///
/// Computed as isqrt(floor(num * 10^(2 digits) / den)); floor(sqrt(floor(x)))
/// equals floor(sqrt(x)) for x >= 0, so every printed digit is exact.
inline std::string sqrt_decimal(const Rational& q, std::size_t digits) {
    if (q < 0) throw std::domain_error("square root of a negative value");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 2 * digits);
    Integer scaled = q.get_num() * scale;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());

    std::string s = root.get_str();
    if (digits == 0) return s;
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return s;
}

/// Decimal approximation of ||P||, truncated (rounded toward zero).
inline std::string norm_approx(const Polynomial& p, std::size_t decimal_digits) {
    return sqrt_decimal(norm_squared(p).value(), decimal_digits);
}

} // namespace bombieri
