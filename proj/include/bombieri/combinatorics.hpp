#pragma once

#include "bombieri/multi_index.hpp"
#include "bombieri/rational.hpp"

#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace bombieri {

namespace detail {

/// Process-wide factorial memo. A deque never relocates existing elements, so
/// references handed out stay valid while other threads extend the table.
class FactorialTable {
public:
    static FactorialTable& instance() {
        static FactorialTable table;
        return table;
    }

    const Integer& get(std::uint64_t k) {
        {
            std::shared_lock lock(mutex_);
            if (k < values_.size()) return values_[k];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= k) {
            Integer next = values_.back() * static_cast<unsigned long>(values_.size());
            values_.push_back(std::move(next));
        }
        return values_[k];
    }

private:
    FactorialTable() { values_.emplace_back(1); }

    std::shared_mutex mutex_;
    std::deque<Integer> values_;
};

} // namespace detail

/// k!, exact and memoized.
inline const Integer& factorial(std::uint64_t k) { return detail::FactorialTable::instance().get(k); }

/// i_1! ... i_n!
inline Integer multi_factorial(const MultiIndex& i) {
    Integer out = 1;
    for (auto e : i) out *= factorial(e);
    return out;
}

/// k (k-1) ... (k-j+1); zero when j > k. The coefficient D^j brings down on x^k.
inline Integer falling_factorial(std::uint64_t k, std::uint64_t j) {
    if (j > k) return 0;
    Integer out = 1;
    for (std::uint64_t t = k - j + 1; t <= k; ++t) out *= static_cast<unsigned long>(t);
    return out;
}

/// C(r, i), zero for i > r.
inline Integer binomial(std::uint64_t r, std::uint64_t i) {
    if (i > r) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(i));
    return out;
}

} // namespace bombieri
