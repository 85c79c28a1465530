// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria (capped at 1).

#include "test_support.hpp"

#include "bombieri/report_json.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace bombieri;
using testing_support::random_poly;
using testing_support::to_oracle;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

// 1. Chu-Vandermonde for all 0 <= r, s, p <= 20, under 1 s.
Outcome chu_exhaustive() {
    const auto t0 = Clock::now();
    int cases = 0, passed = 0;
    for (std::uint64_t r = 0; r <= 20; ++r)
        for (std::uint64_t s = 0; s <= 20; ++s)
            for (std::uint64_t p = 0; p <= 20; ++p) {
                ++cases;
                const auto rep = chu_vandermonde_check(r, s, p);
                passed += rep.verdict && rep.difference == 0 && rep.lhs == rep.rhs;
            }
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << passed << "/" << cases << " exact, " << fmt_seconds(dt) << " (limit 1 s)";
    return {cases == 9261 && passed == cases && dt < 1.0, d.str()};
}

// 2. Identity C on 1000 seeded quadruples, n <= 3, degree <= 4, bound 5, under 30 s.
Outcome identity_C_fuzz() {
    FuzzConfig cfg;
    cfg.statement = Statement::identity_C;
    cfg.trials = 1000;
    cfg.seed = 20240601;
    cfg.max_dimension = 3;
    cfg.max_degree = 4;
    cfg.coefficient_bound = 5;
    cfg.density = Rational(1, 2);
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    const auto t0 = Clock::now();
    const auto reports = run_campaign(cfg);
    const double dt = seconds_since(t0);
    int exact = 0, zeros = 0, constants = 0;
    for (const auto& r : reports) {
        exact += r.verdict && r.difference == 0;
        for (const auto& p : r.instance.polynomials) {
            zeros += p.is_zero();
            constants += !p.is_zero() && total_degree(p) == 0u;
        }
    }
    std::ostringstream d;
    d << exact << "/1000 exact, " << zeros << " zero and " << constants << " constant inputs, "
      << fmt_seconds(dt) << " (limit 30 s)";
    return {exact == 1000 && zeros > 0 && constants > 0 && dt < 30.0, d.str()};
}

// 3. Identity B on 1000 seeded pairs, with the C specialisation R = P, S = Q.
Outcome identity_B_fuzz() {
    FuzzConfig cfg;
    cfg.statement = Statement::identity_B;
    cfg.trials = 1000;
    cfg.seed = 20240602;
    int exact = 0, specialised = 0;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const auto r = run_trial(cfg, t);
        exact += r.verdict && r.difference == 0;
        const auto& p = r.instance.polynomials[0];
        const auto& q = r.instance.polynomials[1];
        const auto c = identity_C_sides(p, q, p, q);
        specialised += c.rhs == r.rhs && c.lhs == r.lhs && identity_B_terms(p, q) == identity_C_terms(p, q, p, q);
    }
    std::ostringstream d;
    d << exact << "/1000 exact, " << specialised << "/1000 term-by-term equal to C(P,Q,P,Q)";
    return {exact == 1000 && specialised == 1000, d.str()};
}

// 4. Inequality A on 1000 homogeneous pairs; difference = excess_sum, every term >= 0.
Outcome inequality_A_fuzz() {
    FuzzConfig cfg;
    cfg.statement = Statement::inequality_A;
    cfg.trials = 1000;
    cfg.seed = 20240603;
    // Full density keeps P nonzero, so every trial carries a certificate.
    cfg.density = 1;
    cfg.with_certificate = true;
    const auto reports = run_campaign(cfg);
    int ok = 0, zero_p = 0, strict = 0;
    for (const auto& r : reports) {
        bool good = r.verdict && r.difference >= 0 && r.difference == r.lhs - r.rhs;
        if (r.certificate) {
            good = good && r.certificate->excess_sum == r.difference && r.certificate->lhs == r.lhs;
            for (const auto& term : r.certificate->terms) good = good && term.value >= 0;
        } else {
            // Only P = 0 lacks a certificate; then both sides vanish.
            ++zero_p;
            good = good && r.instance.polynomials[0].is_zero() && r.difference == 0;
        }
        strict += r.difference > 0;
        ok += good;
    }
    std::ostringstream d;
    d << ok << "/1000 with difference = excess_sum >= 0 (" << strict << " strict, " << zero_p << " with P = 0)";
    return {ok == 1000, d.str()};
}

// 5. P = Q = x + y.
Outcome worked_example() {
    const auto s = parse_polynomial("x+y");
    // Independent expansion: (x+y)^2 = x^2 + 2xy + y^2, weights 2!, 1!1!, 2!.
    const auto square = oracle::multiply(to_oracle(s), to_oracle(s));
    const mpq_class oracle_lhs = oracle::inner(square, square);
    const mpq_class oracle_rhs = oracle::inner(to_oracle(s), to_oracle(s)) * oracle::inner(to_oracle(s), to_oracle(s));

    const auto cert = reznick_certificate(s, s);
    const auto a = inequality_A_check(s, s, true);
    auto value_at = [&](MultiIndex i) -> Rational {
        for (const auto& t : cert.terms)
            if (t.index == i) return t.value;
        return -1;
    };
    const bool ok = oracle_lhs == 8 && oracle_rhs == 4 && a.lhs == 8 && a.rhs == 4 && a.difference == 4 &&
                    cert.terms.size() == 3 && value_at({0, 0}) == 4 && value_at({1, 0}) == 2 &&
                    value_at({0, 1}) == 2 && cert.excess_sum == 4 && cert.top_sum == 4 && cert.lhs == 8;
    std::ostringstream d;
    d << "||PQ||^2 = " << to_display_string(a.lhs) << ", ||P||^2||Q||^2 = " << to_display_string(a.rhs)
      << ", terms {(0,0): " << to_display_string(value_at({0, 0})) << ", (1,0): " << to_display_string(value_at({1, 0}))
      << ", (0,1): " << to_display_string(value_at({0, 1})) << "}, excess_sum = " << to_display_string(cert.excess_sum);
    return {ok, d.str()};
}

// 6. Single-monomial quadruples against the per-axis Chu-Vandermonde product.
Outcome monomial_reduction() {
    Rng rng(20240606);
    int ok = 0, nonzero = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = rng.uniform(1, 3);
        MultiIndex p(n), q(n), r(n), s(n);
        const bool matched = rng.uniform(0, 3) != 0;
        for (std::size_t k = 0; k < n; ++k) {
            p[k] = rng.uniform(0, 4);
            q[k] = rng.uniform(0, 4);
            r[k] = matched ? rng.uniform(0, p[k] + q[k]) : rng.uniform(0, 4);
            s[k] = matched ? p[k] + q[k] - r[k] : rng.uniform(0, 4);
        }
        const Rational a = random_coefficient(rng, 5), b = random_coefficient(rng, 5);
        const Rational c = random_coefficient(rng, 5), e = random_coefficient(rng, 5);
        const auto rep = identity_C_sides(Polynomial::monomial(p, a), Polynomial::monomial(q, b),
                                          Polynomial::monomial(r, c), Polynomial::monomial(s, e));

        // Axis t contributes p_t! q_t! sum_i C(r_t,i) C(s_t,p_t-i) when
        // p_t + q_t = r_t + s_t, and kills the pairing otherwise.
        Rational expected = a * b * c * e;
        bool chu_all = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (p[k] + q[k] != r[k] + s[k]) {
                expected = 0;
                continue;
            }
            const auto chu = chu_vandermonde_check(r[k], s[k], p[k]);
            chu_all = chu_all && chu.verdict;
            expected *= Rational(oracle::fact(p[k]) * oracle::fact(q[k])) * chu.lhs;
        }
        nonzero += expected != 0;
        ok += rep.verdict && chu_all && rep.lhs == expected && rep.rhs == expected;
    }
    std::ostringstream d;
    d << ok << "/200 match the axis-wise Chu product (" << nonzero << " nonzero)";
    return {ok == 200, d.str()};
}

// 7. Identity C is linear in each slot: swap slot k for a X + b X'.
Outcome multilinearity() {
    Rng rng(20240607);
    int ok = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = rng.uniform(1, 3);
        std::array<Polynomial, 4> f{random_poly(rng, n, rng.uniform(0, 3)), random_poly(rng, n, rng.uniform(0, 3)),
                                    random_poly(rng, n, rng.uniform(0, 3)), random_poly(rng, n, rng.uniform(0, 3))};
        const auto alt = random_poly(rng, n, rng.uniform(0, 3));
        const Rational a = random_coefficient(rng, 5), b = random_coefficient(rng, 5);
        const std::size_t slot = t % 4;

        auto sides = [](const std::array<Polynomial, 4>& g) { return identity_C_sides(g[0], g[1], g[2], g[3]); };
        auto mixed = f;
        mixed[slot] = a * f[slot] + b * alt;
        auto other = f;
        other[slot] = alt;
        const auto m = sides(mixed), x = sides(f), y = sides(other);
        ok += m.verdict && m.lhs == a * x.lhs + b * y.lhs && m.rhs == a * x.rhs + b * y.rhs;
    }
    std::ostringstream d;
    d << ok << "/200 exact on both sides (slots P, Q, R, S in rotation)";
    return {ok == 200, d.str()};
}

// 8. parse(format(P)) = P, and identical campaign configs give identical JSON.
Outcome round_trip_and_determinism() {
    Rng rng(20240608);
    int round = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = rng.uniform(1, 4);
        const auto p = random_poly(rng, n, rng.uniform(0, 5), t % 3 == 0, Rational(1, 2), 9);
        round += parse_polynomial(format_polynomial(p), n) == p;
    }
    int identical = 0;
    const Statement statements[] = {Statement::chu, Statement::identity_B, Statement::identity_C, Statement::inequality_A};
    for (auto st : statements) {
        FuzzConfig cfg;
        cfg.statement = st;
        cfg.trials = 100;
        cfg.seed = 8;
        cfg.with_certificate = true;
        cfg.jobs = 1;
        const auto first = json::campaign(cfg, run_campaign(cfg)).dump(2);
        cfg.jobs = 3;
        const auto second = json::campaign(cfg, run_campaign(cfg)).dump(2);
        identical += first == second;
    }
    std::ostringstream d;
    d << round << "/500 round trips, " << identical << "/4 campaigns byte-identical on rerun";
    return {round == 500 && identical == 4, d.str()};
}

// 9. [x_k P, Q] = [P, D_k Q].
Outcome adjointness() {
    Rng rng(20240609);
    int ok = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = rng.uniform(1, 3);
        const auto p = random_poly(rng, n, rng.uniform(0, 4));
        const auto q = random_poly(rng, n, rng.uniform(0, 5));
        bool good = true;
        for (std::size_t k = 1; k <= n; ++k)
            good = good && inner_product(Polynomial::variable(n, k) * p, q) == inner_product(p, partial_derivative(q, k));
        ok += good;
    }
    std::ostringstream d;
    d << ok << "/500 exact on every axis";
    return {ok == 500, d.str()};
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"AC1 chu-vandermonde exhaustive", chu_exhaustive},
        {"AC2 identity C fuzz", identity_C_fuzz},
        {"AC3 identity B fuzz + C specialisation", identity_B_fuzz},
        {"AC4 inequality A + certificate accounting", inequality_A_fuzz},
        {"AC5 worked example P = Q = x + y", worked_example},
        {"AC6 monomial reduction", monomial_reduction},
        {"AC7 multilinearity", multilinearity},
        {"AC8 round trip + determinism", round_trip_and_determinism},
        {"AC9 adjointness", adjointness},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
