#pragma once

#include "bombieri/multi_index.hpp"
#include "bombieri/polynomial.hpp"
#include "bombieri/rational.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace bombieri {

/// splitmix64 finalizer. Maps (master seed + trial index) to a per-trial seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) noexcept {
    return splitmix64(master_seed + trial);
}

/// Deterministic generator: std::mt19937_64, whose output sequence is fixed
/// by the standard, plus rejection sampling for bounded draws. The standard
/// distributions are avoided on purpose since their algorithms vary between
/// library vendors.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        const std::uint64_t span = hi - lo;
        if (span == std::numeric_limits<std::uint64_t>::max()) return next();
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + x % range;
    }

    std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi) {
        const auto offset = static_cast<std::uint64_t>(hi - lo);
        return lo + static_cast<std::int64_t>(uniform(0, offset));
    }

    /// True with probability num/den.
    bool bernoulli(std::uint64_t num, std::uint64_t den) { return uniform(0, den - 1) < num; }

private:
    std::mt19937_64 engine_;
};

struct RandomPolynomialSpec {
    std::size_t dimension = 1;
    std::uint64_t max_degree = 0;
    /// Probability that each candidate monomial gets a term, in (0, 1].
    Rational density = 1;
    /// Coefficients are a/b with 1 <= |a| <= bound and 1 <= b <= bound.
    std::uint64_t coefficient_bound = 5;
    /// Only monomials of degree exactly max_degree.
    bool homogeneous = false;
};

inline Rational random_coefficient(Rng& rng, std::uint64_t bound) {
    const auto b = static_cast<std::int64_t>(bound);
    std::int64_t num = 0;
    while (num == 0) num = rng.uniform_signed(-b, b);
    const auto den = rng.uniform(1, bound);
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<unsigned long>(den)));
}

/// Walks candidate monomials in canonical order, keeps each with probability
/// `density`, and draws a coefficient for every kept one. Output depends only
/// on the generator state and the spec.
inline Polynomial random_polynomial(Rng& rng, const RandomPolynomialSpec& spec) {
    if (spec.dimension == 0) throw std::invalid_argument("dimension must be positive");
    if (spec.density <= 0 || spec.density > 1) throw std::invalid_argument("density must be in (0, 1]");
    if (spec.coefficient_bound == 0) throw std::invalid_argument("coefficient bound must be positive");
    if (!spec.density.get_num().fits_ulong_p() || !spec.density.get_den().fits_ulong_p())
        throw std::invalid_argument("density numerator/denominator too large");

    const auto num = spec.density.get_num().get_ui();
    const auto den = spec.density.get_den().get_ui();
    const auto candidates = spec.homogeneous ? indices_of_degree(spec.dimension, spec.max_degree)
                                             : indices_up_to_degree(spec.dimension, spec.max_degree);
    TermAccumulator acc(spec.dimension);
    for (const auto& e : candidates) {
        if (!rng.bernoulli(num, den)) continue;
        acc.add(e, random_coefficient(rng, spec.coefficient_bound));
    }
    return std::move(acc).finish();
}

} // namespace bombieri
