#pragma once

#include "bombieri/identities.hpp"
#include "bombieri/random.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bombieri {

/// Parameters of a seeded verification campaign. Trial t regenerates from
/// trial_seed(seed, t) alone, so any single failure can be replayed.
struct FuzzConfig {
    Statement statement = Statement::identity_C;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    /// Each trial draws its variable count from [1, max_dimension].
    std::size_t max_dimension = 3;
    /// Each polynomial draws its degree from [0, max_degree].
    std::uint64_t max_degree = 4;
    Rational density = Rational(1, 2);
    std::uint64_t coefficient_bound = 5;
    /// Forced on for inequality_A.
    bool homogeneous = false;
    bool with_certificate = false;
    /// Worker threads. Does not affect results or their order.
    unsigned jobs = 1;
};

namespace detail {
inline Polynomial draw_polynomial(Rng& rng, const FuzzConfig& cfg, std::size_t n, bool homogeneous) {
    RandomPolynomialSpec spec;
    spec.dimension = n;
    spec.max_degree = rng.uniform(0, cfg.max_degree);
    spec.density = cfg.density;
    spec.coefficient_bound = cfg.coefficient_bound;
    spec.homogeneous = homogeneous;
    return random_polynomial(rng, spec);
}
} // namespace detail

inline VerificationReport run_trial(const FuzzConfig& cfg, std::uint64_t trial) {
    const std::uint64_t seed = trial_seed(cfg.seed, trial);
    Rng rng(seed);
    VerificationReport report = [&] {
        if (cfg.statement == Statement::chu) {
            const std::uint64_t hi = 5 * cfg.max_degree;
            const auto r = rng.uniform(0, hi);
            const auto s = rng.uniform(0, hi);
            const auto p = rng.uniform(0, hi);
            return chu_vandermonde_check(r, s, p);
        }
        const std::size_t n = rng.uniform(1, cfg.max_dimension);
        if (cfg.statement == Statement::identity_C) {
            auto p = detail::draw_polynomial(rng, cfg, n, cfg.homogeneous);
            auto q = detail::draw_polynomial(rng, cfg, n, cfg.homogeneous);
            auto r = detail::draw_polynomial(rng, cfg, n, cfg.homogeneous);
            auto s = detail::draw_polynomial(rng, cfg, n, cfg.homogeneous);
            return identity_C_sides(p, q, r, s);
        }
        const bool homogeneous = cfg.homogeneous || cfg.statement == Statement::inequality_A;
        auto p = detail::draw_polynomial(rng, cfg, n, homogeneous);
        auto q = detail::draw_polynomial(rng, cfg, n, homogeneous);
        if (cfg.statement == Statement::identity_B) return identity_B_sides(p, q);
        return inequality_A_check(p, q, cfg.with_certificate);
    }();
    report.instance.trial = trial;
    report.instance.seed = seed;
    return report;
}

/// All trials, indexed by trial number whatever the completion order.
inline std::vector<VerificationReport> run_campaign(const FuzzConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("trials must be at least 1");
    std::vector<std::optional<VerificationReport>> slots(cfg.trials);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const auto t = next.fetch_add(1);
            if (t >= cfg.trials) return;
            try {
                slots[t] = run_trial(cfg, t);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = cfg.trials;
            }
        }
    };

    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.trials)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    std::vector<VerificationReport> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

struct CampaignSummary {
    std::uint64_t trials = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;

    /// Associative and commutative, so partial summaries combine in any order.
    friend CampaignSummary merge(const CampaignSummary& a, const CampaignSummary& b) {
        return {a.trials + b.trials, a.passed + b.passed, a.failed + b.failed};
    }
    friend bool operator==(const CampaignSummary&, const CampaignSummary&) = default;
};

inline CampaignSummary summarize(const VerificationReport& r) {
    return {1, r.verdict ? 1u : 0u, r.verdict ? 0u : 1u};
}

inline CampaignSummary summarize(const std::vector<VerificationReport>& reports) {
    CampaignSummary total;
    for (const auto& r : reports) total = merge(total, summarize(r));
    return total;
}

/// Failures first, each group keeping its trial order.
inline void order_failures_first(std::vector<VerificationReport>& reports) {
    std::stable_partition(reports.begin(), reports.end(),
                          [](const VerificationReport& r) { return !r.verdict; });
}

} // namespace bombieri
