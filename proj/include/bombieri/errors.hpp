#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bombieri {

/// Two operands live in polynomial rings with different variable counts.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

class AxisOutOfRange : public std::out_of_range {
public:
    AxisOutOfRange(std::size_t axis, std::size_t dimension)
        : std::out_of_range("axis " + std::to_string(axis) + " outside [1, " +
                            std::to_string(dimension) + "]") {}
};

/// Inequality checks require homogeneous inputs.
class NotHomogeneous : public std::invalid_argument {
public:
    explicit NotHomogeneous(const std::string& which)
        : std::invalid_argument(which + " is not homogeneous") {}
};

/// Raised where an operation needs a degree and the polynomial is zero.
class ZeroPolynomial : public std::invalid_argument {
public:
    explicit ZeroPolynomial(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bombieri
