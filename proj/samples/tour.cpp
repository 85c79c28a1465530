// Walks through the worked example P = Q = x + y and prints the certificate.

#include "bombieri/bombieri.hpp"

#include <iostream>

int main() {
    using namespace bombieri;

    const auto p = parse_polynomial("x + y");
    const auto q = parse_polynomial("x + y");

    std::cout << "P Q = " << format_polynomial(p * q) << "\n";
    std::cout << "||P Q||^2 = " << to_display_string(norm_squared(p * q).value()) << "\n";
    std::cout << "||P||^2 ||Q||^2 = "
              << to_display_string(norm_squared(p).value() * norm_squared(q).value()) << "\n\n";

    const auto cert = reznick_certificate(p, q);
    for (const auto& t : cert.terms)
        std::cout << "  i = " << t.index.to_string() << "  ||P^(i)(D) Q||^2 / i! = " << to_display_string(t.value)
                  << "  [" << to_string(t.block) << "]\n";
    std::cout << "top block    = " << to_display_string(cert.top_sum) << "\n"
              << "excess block = " << to_display_string(cert.excess_sum) << "\n";

    const auto c = identity_C_sides(p, q, parse_polynomial("x + 2*y"), parse_polynomial("2*x + y"));
    std::cout << "\n[PQ, RS] = " << to_display_string(c.lhs) << ", operator side = " << to_display_string(c.rhs)
              << "\n";
}
