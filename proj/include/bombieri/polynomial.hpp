#pragma once

#include "bombieri/combinatorics.hpp"
#include "bombieri/errors.hpp"
#include "bombieri/multi_index.hpp"
#include "bombieri/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bombieri {

class TermAccumulator;

/// Sparse multivariate polynomial with exact rational coefficients in a fixed
/// number of variables.
///
/// Canonical form: no zero coefficients, no duplicate exponents, every
/// exponent vector has length dimension(), and terms iterate in graded
/// lexicographic order, largest first. Instances are only produced already
/// canonical, so operator== is structural equality.
class Polynomial {
public:
    using Terms = std::map<MultiIndex, Rational, GradedLexGreater>;
    using value_type = Terms::value_type;

    /// The zero polynomial in `dimension` variables.
    explicit Polynomial(std::size_t dimension) : dimension_(dimension) {
        if (dimension == 0) throw std::invalid_argument("polynomial dimension must be positive");
    }

    static Polynomial constant(std::size_t dimension, const Rational& c);
    static Polynomial monomial(const MultiIndex& exponents, const Rational& c = 1);
    /// x_axis, axis counted from 1.
    static Polynomial variable(std::size_t dimension, std::size_t axis);

    std::size_t dimension() const noexcept { return dimension_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    /// Coefficient of x^i; zero when absent.
    Rational coefficient(const MultiIndex& i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    friend class TermAccumulator;
    Polynomial(std::size_t dimension, Terms terms) : dimension_(dimension), terms_(std::move(terms)) {}

    std::size_t dimension_;
    Terms terms_;
};

/// Builds a canonical polynomial one term at a time: coefficients of equal
/// exponents merge, and entries that cancel to zero are dropped.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t dimension) : dimension_(dimension) {
        if (dimension == 0) throw std::invalid_argument("polynomial dimension must be positive");
    }

    void add(const MultiIndex& exponents, const Rational& c) {
        if (exponents.size() != dimension_) throw DimensionMismatch(dimension_, exponents.size());
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponents, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const Polynomial& p, const Rational& scale = 1) {
        if (p.dimension() != dimension_) throw DimensionMismatch(dimension_, p.dimension());
        for (const auto& [e, c] : p) add(e, scale * c);
    }

    Polynomial finish() && { return Polynomial(dimension_, std::move(terms_)); }

private:
    std::size_t dimension_;
    Polynomial::Terms terms_;
};

inline Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
    TermAccumulator acc(dimension);
    acc.add(MultiIndex(dimension), c);
    return std::move(acc).finish();
}

inline Polynomial Polynomial::monomial(const MultiIndex& exponents, const Rational& c) {
    TermAccumulator acc(exponents.size());
    acc.add(exponents, c);
    return std::move(acc).finish();
}

inline Polynomial Polynomial::variable(std::size_t dimension, std::size_t axis) {
    if (axis == 0 || axis > dimension) throw AxisOutOfRange(axis, dimension);
    return monomial(MultiIndex::unit(dimension, axis));
}

inline Polynomial make_polynomial(std::size_t dimension,
                                  const std::vector<std::pair<MultiIndex, Rational>>& raw_terms) {
    TermAccumulator acc(dimension);
    for (const auto& [e, c] : raw_terms) acc.add(e, c);
    return std::move(acc).finish();
}

namespace detail {
inline void require_same_dimension(const Polynomial& p, const Polynomial& q) {
    if (p.dimension() != q.dimension()) throw DimensionMismatch(p.dimension(), q.dimension());
}
} // namespace detail

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
    detail::require_same_dimension(p, q);
    TermAccumulator acc(p.dimension());
    acc.add(p);
    acc.add(q);
    return std::move(acc).finish();
}

inline Polynomial subtract(const Polynomial& p, const Polynomial& q) {
    detail::require_same_dimension(p, q);
    TermAccumulator acc(p.dimension());
    acc.add(p);
    acc.add(q, -1);
    return std::move(acc).finish();
}

inline Polynomial scale(const Rational& c, const Polynomial& p) {
    TermAccumulator acc(p.dimension());
    if (c != 0) acc.add(p, c);
    return std::move(acc).finish();
}

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    detail::require_same_dimension(p, q);
    TermAccumulator acc(p.dimension());
    for (const auto& [ep, cp] : p)
        for (const auto& [eq, cq] : q) acc.add(ep + eq, cp * cq);
    return std::move(acc).finish();
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }
inline Polynomial operator-(const Polynomial& p) { return scale(-1, p); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }
inline Polynomial operator*(const Rational& c, const Polynomial& p) { return scale(c, p); }

/// D_axis P, axis counted from 1.
inline Polynomial partial_derivative(const Polynomial& p, std::size_t axis) {
    if (axis == 0 || axis > p.dimension()) throw AxisOutOfRange(axis, p.dimension());
    const std::size_t k = axis - 1;
    TermAccumulator acc(p.dimension());
    for (const auto& [e, c] : p) {
        if (e[k] == 0) continue;
        MultiIndex lowered = e;
        --lowered[k];
        acc.add(lowered, c * static_cast<unsigned long>(e[k]));
    }
    return std::move(acc).finish();
}

namespace detail {
/// Coefficient of D^i (x^e): prod_t e_t!/(e_t - i_t)!, given i divides e.
inline Integer derivative_weight(const MultiIndex& e, const MultiIndex& i) {
    Integer w = 1;
    for (std::size_t t = 0; t < e.size(); ++t) w *= falling_factorial(e[t], i[t]);
    return w;
}
} // namespace detail

/// P^{(i)} = D_1^{i_1} ... D_n^{i_n} P.
inline Polynomial multi_derivative(const Polynomial& p, const MultiIndex& i) {
    if (i.size() != p.dimension()) throw DimensionMismatch(p.dimension(), i.size());
    TermAccumulator acc(p.dimension());
    for (const auto& [e, c] : p) {
        if (!i.divides(e)) continue;
        acc.add(e - i, c * Rational(detail::derivative_weight(e, i)));
    }
    return std::move(acc).finish();
}

/// A(D_1, ..., D_n) Q: each x_k in A becomes D_k, so the result is
/// sum over terms (j, a) of A of a * Q^{(j)}.
inline Polynomial apply_operator(const Polynomial& a, const Polynomial& q) {
    detail::require_same_dimension(a, q);
    TermAccumulator acc(q.dimension());
    for (const auto& [j, cj] : a) {
        for (const auto& [e, c] : q) {
            if (!j.divides(e)) continue;
            acc.add(e - j, cj * c * Rational(detail::derivative_weight(e, j)));
        }
    }
    return std::move(acc).finish();
}

/// Highest |i| over stored terms; nullopt for the zero polynomial.
inline std::optional<std::uint64_t> total_degree(const Polynomial& p) {
    // Graded order puts a top-degree term first.
    if (p.is_zero()) return std::nullopt;
    return p.begin()->first.degree();
}

/// All terms share one total degree. Zero counts as homogeneous.
inline bool is_homogeneous(const Polynomial& p) {
    if (p.is_zero()) return true;
    const auto d = p.begin()->first.degree();
    for (const auto& [e, c] : p)
        if (e.degree() != d) return false;
    return true;
}

/// The common degree of a nonzero homogeneous polynomial, nullopt otherwise.
inline std::optional<std::uint64_t> homogeneous_degree(const Polynomial& p) {
    if (p.is_zero() || !is_homogeneous(p)) return std::nullopt;
    return total_degree(p);
}

} // namespace bombieri
