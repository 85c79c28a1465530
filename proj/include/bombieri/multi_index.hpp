#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bombieri {

/// Exponent vector (i_1, ..., i_n) of a monomial x_1^{i_1} ... x_n^{i_n}.
/// Entries are unsigned, so nonnegativity holds by construction. The length is
/// the ambient variable count.
class MultiIndex {
public:
    using value_type = std::uint32_t;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t dimension) : exponents_(dimension, 0) {}
    MultiIndex(std::initializer_list<value_type> exponents) : exponents_(exponents) {}
    explicit MultiIndex(std::vector<value_type> exponents) : exponents_(std::move(exponents)) {}

    /// x_axis in n variables, axis counted from 1.
    static MultiIndex unit(std::size_t dimension, std::size_t axis) {
        MultiIndex m(dimension);
        m.exponents_.at(axis - 1) = 1;
        return m;
    }

    std::size_t size() const noexcept { return exponents_.size(); }
    value_type operator[](std::size_t k) const { return exponents_[k]; }
    value_type& operator[](std::size_t k) { return exponents_[k]; }

    auto begin() const noexcept { return exponents_.begin(); }
    auto end() const noexcept { return exponents_.end(); }

    /// |i| = i_1 + ... + i_n
    std::uint64_t degree() const noexcept {
        return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
    }

    bool is_zero() const noexcept {
        return std::all_of(exponents_.begin(), exponents_.end(),
                           [](value_type e) { return e == 0; });
    }

    /// Componentwise <=, i.e. x^this divides x^other.
    bool divides(const MultiIndex& other) const {
        for (std::size_t k = 0; k < exponents_.size(); ++k)
            if (exponents_[k] > other.exponents_[k]) return false;
        return true;
    }

    const std::vector<value_type>& exponents() const noexcept { return exponents_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
        MultiIndex out(a);
        for (std::size_t k = 0; k < a.size(); ++k) out.exponents_[k] += b.exponents_[k];
        return out;
    }

    /// Requires b.divides(a).
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
        if (!b.divides(a)) throw std::domain_error("multi-index difference would be negative");
        MultiIndex out(a);
        for (std::size_t k = 0; k < a.size(); ++k) out.exponents_[k] -= b.exponents_[k];
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < exponents_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(exponents_[k]);
        }
        return s + ")";
    }

private:
    std::vector<value_type> exponents_;
};

/// Graded lexicographic order, largest first: higher total degree comes
/// first, ties broken by lexicographically larger exponent tuple. This is the
/// canonical term order (x1^2 > x1*x2 > x2^2 > x1 > x2 > 1).
struct GradedLexGreater {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        auto da = a.degree();
        auto db = b.degree();
        if (da != db) return da > db;
        return a > b;
    }
};

namespace detail {
inline void enumerate_degree(std::size_t dimension, std::uint64_t degree, std::size_t axis,
                             MultiIndex& current, std::vector<MultiIndex>& out) {
    if (axis + 1 == dimension) {
        current[axis] = static_cast<MultiIndex::value_type>(degree);
        out.push_back(current);
        return;
    }
    for (std::uint64_t e = degree + 1; e-- > 0;) {
        current[axis] = static_cast<MultiIndex::value_type>(e);
        enumerate_degree(dimension, degree - e, axis + 1, current, out);
    }
    current[axis] = 0;
}
} // namespace detail

/// All multi-indices of length `dimension` with |i| = degree, in canonical order.
inline std::vector<MultiIndex> indices_of_degree(std::size_t dimension, std::uint64_t degree) {
    std::vector<MultiIndex> out;
    if (dimension == 0) return out;
    MultiIndex current(dimension);
    detail::enumerate_degree(dimension, degree, 0, current, out);
    return out;
}

/// All multi-indices with |i| <= max_degree, in canonical order.
inline std::vector<MultiIndex> indices_up_to_degree(std::size_t dimension,
                                                    std::uint64_t max_degree) {
    std::vector<MultiIndex> out;
    for (std::uint64_t d = max_degree + 1; d-- > 0;) {
        auto block = indices_of_degree(dimension, d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

} // namespace bombieri
