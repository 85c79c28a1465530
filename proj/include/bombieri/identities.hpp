#pragma once

#include "bombieri/combinatorics.hpp"
#include "bombieri/errors.hpp"
#include "bombieri/inner_product.hpp"
#include "bombieri/multi_index.hpp"
#include "bombieri/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace bombieri {

// The chain checked here:
//
//   Chu-Vandermonde   sum_i C(r,i) C(s,p-i) = C(r+s,p)
//   Identity C        [PQ, RS] = sum_i [R^{(i)}(D) Q, P^{(i)}(D) S] / i!
//   Identity B        ||PQ||^2 = sum_i ||P^{(i)}(D) Q||^2 / i!        (C with R=P, S=Q)
//   Inequality A      ||PQ||^2 >= ||P||^2 ||Q||^2 for homogeneous P, Q
//
// where i! = i_1! ... i_n!. Every sum over i is finite: P^{(i)} vanishes once
// |i| exceeds deg P, so the loops stop there.

enum class Statement { chu, identity_C, identity_B, inequality_A };

constexpr std::string_view to_string(Statement s) {
    switch (s) {
    case Statement::chu: return "chu";
    case Statement::identity_C: return "identity_C";
    case Statement::identity_B: return "identity_B";
    case Statement::inequality_A: return "inequality_A";
    }
    return "unknown";
}

enum class Block { top_degree, excess };

constexpr std::string_view to_string(Block b) {
    return b == Block::top_degree ? "top_degree" : "excess";
}

/// One summand ||P^{(i)}(D) Q||^2 / i! of Identity B.
struct ReznickTerm {
    MultiIndex index;
    Rational value;
    Block block;

    friend bool operator==(const ReznickTerm&, const ReznickTerm&) = default;
};

/// ||PQ||^2 split into the |i| = deg P block and the |i| < deg P block.
/// For homogeneous P the top block is ||P||^2 ||Q||^2, so excess_sum is
/// exactly the slack in the inequality.
struct ReznickCertificate {
    std::vector<ReznickTerm> terms;
    Rational lhs;
    Rational top_sum;
    Rational excess_sum;
};

/// Inputs a report was computed from. Fuzzed reports also carry the trial
/// index and the seed that regenerates the instance.
struct Instance {
    std::vector<Polynomial> polynomials;
    std::vector<std::uint64_t> integers;
    std::optional<std::uint64_t> trial;
    std::optional<std::uint64_t> seed;
};

struct VerificationReport {
    Statement statement;
    Rational lhs;
    Rational rhs;
    Rational difference; ///< lhs - rhs
    bool verdict;
    Instance instance;
    std::optional<ReznickCertificate> certificate;
};

namespace detail {
inline VerificationReport equality_report(Statement s, Rational lhs, Rational rhs, Instance inst) {
    Rational diff = lhs - rhs;
    const bool ok = diff == 0;
    return {s, std::move(lhs), std::move(rhs), std::move(diff), ok, std::move(inst), std::nullopt};
}
} // namespace detail

/// sum_{i>=0} C(r,i) C(s,p-i) against C(r+s,p).
inline VerificationReport chu_vandermonde_check(std::uint64_t r, std::uint64_t s, std::uint64_t p) {
    Integer sum = 0;
    for (std::uint64_t i = 0; i <= std::min(r, p); ++i) sum += binomial(r, i) * binomial(s, p - i);
    return detail::equality_report(Statement::chu, Rational(sum), Rational(binomial(r + s, p)),
                                   Instance{{}, {r, s, p}, std::nullopt, std::nullopt});
}

/// Right-hand side of Identity C, one entry per multi-index with a nonzero
/// summand [R^{(i)}(D) Q, P^{(i)}(D) S] / i!.
inline std::vector<std::pair<MultiIndex, Rational>>
identity_C_terms(const Polynomial& p, const Polynomial& q, const Polynomial& r, const Polynomial& s) {
    detail::require_same_dimension(p, q);
    detail::require_same_dimension(p, r);
    detail::require_same_dimension(p, s);
    std::vector<std::pair<MultiIndex, Rational>> out;
    const auto dp = total_degree(p);
    const auto dr = total_degree(r);
    if (!dp || !dr) return out;
    for (const auto& i : indices_up_to_degree(p.dimension(), std::min(*dp, *dr))) {
        auto r_i = multi_derivative(r, i);
        if (r_i.is_zero()) continue;
        auto p_i = multi_derivative(p, i);
        if (p_i.is_zero()) continue;
        Rational value = inner_product(apply_operator(r_i, q), apply_operator(p_i, s));
        if (value == 0) continue;
        value /= Rational(multi_factorial(i));
        out.emplace_back(i, std::move(value));
    }
    return out;
}

/// Right-hand side of Identity B, one entry per nonzero ||P^{(i)}(D) Q||^2 / i!.
inline std::vector<std::pair<MultiIndex, Rational>> identity_B_terms(const Polynomial& p,
                                                                     const Polynomial& q) {
    detail::require_same_dimension(p, q);
    std::vector<std::pair<MultiIndex, Rational>> out;
    const auto dp = total_degree(p);
    if (!dp) return out;
    for (const auto& i : indices_up_to_degree(p.dimension(), *dp)) {
        auto p_i = multi_derivative(p, i);
        if (p_i.is_zero()) continue;
        Rational value = norm_squared(apply_operator(p_i, q)).value();
        if (value == 0) continue;
        value /= Rational(multi_factorial(i));
        out.emplace_back(i, std::move(value));
    }
    return out;
}

namespace detail {
inline Rational sum_values(const std::vector<std::pair<MultiIndex, Rational>>& terms) {
    Rational sum = 0;
    for (const auto& t : terms) sum += t.second;
    return sum;
}
} // namespace detail

/// [PQ, RS] against the operator-side sum.
inline VerificationReport identity_C_sides(const Polynomial& p, const Polynomial& q,
                                           const Polynomial& r, const Polynomial& s) {
    auto rhs = detail::sum_values(identity_C_terms(p, q, r, s));
    auto lhs = inner_product(multiply(p, q), multiply(r, s));
    return detail::equality_report(Statement::identity_C, std::move(lhs), std::move(rhs),
                                   Instance{{p, q, r, s}, {}, std::nullopt, std::nullopt});
}

/// ||PQ||^2 against the operator-side sum.
inline VerificationReport identity_B_sides(const Polynomial& p, const Polynomial& q) {
    auto rhs = detail::sum_values(identity_B_terms(p, q));
    Rational lhs = norm_squared(multiply(p, q)).value();
    return detail::equality_report(Statement::identity_B, std::move(lhs), std::move(rhs),
                                   Instance{{p, q}, {}, std::nullopt, std::nullopt});
}

/// Every nonvanishing Identity B term for (P, Q), tagged by whether |i|
/// reaches deg P. Terms come in canonical multi-index order.
inline ReznickCertificate reznick_certificate(const Polynomial& p, const Polynomial& q) {
    detail::require_same_dimension(p, q);
    const auto dp = total_degree(p);
    if (!dp) throw ZeroPolynomial("certificate needs a nonzero P");

    ReznickCertificate cert;
    cert.lhs = norm_squared(multiply(p, q)).value();
    cert.top_sum = 0;
    cert.excess_sum = 0;
    for (auto& [i, value] : identity_B_terms(p, q)) {
        const Block block = i.degree() == *dp ? Block::top_degree : Block::excess;
        (block == Block::top_degree ? cert.top_sum : cert.excess_sum) += value;
        cert.terms.push_back({std::move(i), std::move(value), block});
    }
    return cert;
}

/// ||PQ||^2 - ||P||^2 ||Q||^2 >= 0 for homogeneous P and Q. With
/// `with_certificate` and P nonzero, the report carries the certificate whose
/// excess_sum equals the difference.
inline VerificationReport inequality_A_check(const Polynomial& p, const Polynomial& q,
                                             bool with_certificate = false) {
    detail::require_same_dimension(p, q);
    if (!is_homogeneous(p)) throw NotHomogeneous("P");
    if (!is_homogeneous(q)) throw NotHomogeneous("Q");

    Rational lhs = norm_squared(multiply(p, q)).value();
    Rational rhs = norm_squared(p).value() * norm_squared(q).value();
    Rational diff = lhs - rhs;
    const bool ok = diff >= 0;
    VerificationReport report{Statement::inequality_A, std::move(lhs), std::move(rhs),
                              std::move(diff), ok,
                              Instance{{p, q}, {}, std::nullopt, std::nullopt}, std::nullopt};
    if (with_certificate && !p.is_zero()) report.certificate = reznick_certificate(p, q);
    return report;
}

} // namespace bombieri
