// bombieri: command-line front end for the Bombieri norm library.
//
// Exit codes: 0 every verdict passed, 1 a verdict failed, 2 bad input or usage.

#include "bombieri/bombieri.hpp"
#include "bombieri/report_json.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace bombieri;
using bombieri::json::Json;

constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    bool json = false;
    std::size_t digits = 6;
    std::optional<std::size_t> dimension;
};

/// `@path` reads the polynomial from a file; anything else is inline text.
std::string load_text(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string parse_error_text(const std::string& text, const ParseError& e) {
    std::string caret(e.diagnostic().position, ' ');
    return e.what() + std::string("\n  ") + text + "\n  " + caret + "^";
}

/// Parses every argument at one shared dimension: --dim when given, else the
/// largest dimension any single argument implies.
std::vector<Polynomial> load_polynomials(const std::vector<std::string>& args, const GlobalOptions& g) {
    std::vector<std::string> texts;
    for (const auto& a : args) texts.push_back(load_text(a));
    std::size_t dimension = 1;
    for (const auto& t : texts) {
        try {
            dimension = std::max(dimension, parse_polynomial(t).dimension());
        } catch (const ParseError& e) {
            throw UsageError(parse_error_text(t, e));
        }
    }
    if (g.dimension) dimension = *g.dimension;
    std::vector<Polynomial> out;
    for (const auto& t : texts) {
        try {
            out.push_back(parse_polynomial(t, dimension));
        } catch (const ParseError& e) {
            throw UsageError(parse_error_text(t, e));
        }
    }
    return out;
}

void emit(const GlobalOptions& g, const Json& doc, const std::string& human) {
    if (g.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

std::string show(const Rational& q) { return to_display_string(q); }

int cmd_norm(const GlobalOptions& g, const std::string& arg) {
    const auto p = load_polynomials({arg}, g).front();
    const auto n2 = norm_squared(p);
    const auto approx = norm_approx(p, g.digits);
    std::ostringstream h;
    h << "P = " << format_polynomial(p) << "\n"
      << "||P||^2 = " << show(n2.value()) << "\n"
      << "||P|| ~ " << approx << " (truncated to " << g.digits << " digits)\n";
    emit(g,
         {{"command", "norm"},
          {"dimension", p.dimension()},
          {"P", format_polynomial(p)},
          {"norm_squared", json::rational(n2.value())},
          {"norm", approx},
          {"digits", g.digits},
          {"rounding", "toward_zero"}},
         h.str());
    return 0;
}

int cmd_inner(const GlobalOptions& g, const std::string& a, const std::string& b) {
    const auto ps = load_polynomials({a, b}, g);
    const auto v = inner_product(ps[0], ps[1]);
    emit(g,
         {{"command", "inner"},
          {"dimension", ps[0].dimension()},
          {"P", format_polynomial(ps[0])},
          {"Q", format_polynomial(ps[1])},
          {"inner_product", json::rational(v)}},
         "[P, Q] = " + show(v) + "\n");
    return 0;
}

int emit_polynomial(const GlobalOptions& g, const std::string& command, const Polynomial& p) {
    emit(g, {{"command", command}, {"dimension", p.dimension()}, {"result", format_polynomial(p)}},
         format_polynomial(p) + "\n");
    return 0;
}

int cmd_multiply(const GlobalOptions& g, const std::vector<std::string>& args) {
    const auto ps = load_polynomials(args, g);
    Polynomial product = Polynomial::constant(ps.front().dimension(), 1);
    for (const auto& p : ps) product = multiply(product, p);
    return emit_polynomial(g, "multiply", product);
}

int cmd_diff(const GlobalOptions& g, const std::string& arg, const std::vector<std::uint32_t>& orders) {
    const auto p = load_polynomials({arg}, g).front();
    if (orders.size() > p.dimension())
        throw UsageError("more derivative orders than variables (" + std::to_string(p.dimension()) + ")");
    MultiIndex i(p.dimension());
    for (std::size_t k = 0; k < orders.size(); ++k) i[k] = orders[k];
    return emit_polynomial(g, "diff", multi_derivative(p, i));
}

int cmd_apply(const GlobalOptions& g, const std::string& a, const std::string& q) {
    const auto ps = load_polynomials({a, q}, g);
    return emit_polynomial(g, "apply", apply_operator(ps[0], ps[1]));
}

int cmd_certificate(const GlobalOptions& g, const std::string& a, const std::string& b) {
    const auto ps = load_polynomials({a, b}, g);
    const auto& p = ps[0];
    const auto& q = ps[1];
    if (p.is_zero()) throw UsageError("certificate needs a nonzero P");
    const auto cert = reznick_certificate(p, q);
    const bool homogeneous = is_homogeneous(p) && is_homogeneous(q);

    std::ostringstream h;
    h << "P = " << format_polynomial(p) << "\n"
      << "Q = " << format_polynomial(q) << "\n";
    for (const auto& t : cert.terms)
        h << "term " << t.index.to_string() << "  " << show(t.value) << "  " << to_string(t.block) << "\n";
    h << "top_sum = " << show(cert.top_sum) << "\n"
      << "excess_sum = " << show(cert.excess_sum) << "\n"
      << "lhs = ||PQ||^2 = " << show(cert.lhs) << "\n";

    Json doc = {{"command", "certificate"},
                {"dimension", p.dimension()},
                {"P", format_polynomial(p)},
                {"Q", format_polynomial(q)},
                {"homogeneous", homogeneous},
                {"certificate", json::certificate(cert)}};
    if (homogeneous) {
        const Rational product = norm_squared(p).value() * norm_squared(q).value();
        const Rational difference = cert.lhs - product;
        h << "||PQ||^2 - ||P||^2||Q||^2 = excess_sum: " << show(cert.lhs) << " - " << show(product)
          << " = " << show(difference) << "\n";
        doc["norm_product"] = json::rational(product);
        doc["difference"] = json::rational(difference);
    }
    emit(g, doc, h.str());
    return 0;
}

struct VerifyOptions {
    std::string statement;
    std::vector<std::string> args;
    bool fuzz = false;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t n = 3;
    std::uint64_t degree = 4;
    std::string density = "1/2";
    std::uint64_t coeff_bound = 5;
    bool homogeneous = false;
    bool with_certificate = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

Statement statement_from_name(const std::string& name) {
    if (name == "chu") return Statement::chu;
    if (name == "identity-b") return Statement::identity_B;
    if (name == "identity-c") return Statement::identity_C;
    if (name == "inequality-a") return Statement::inequality_A;
    throw UsageError("unknown statement '" + name + "'");
}

std::uint64_t parse_count(const std::string& s) {
    if (!detail::all_digits(s) || s.size() > 19) throw UsageError("expected a nonnegative integer, got '" + s + "'");
    return std::stoull(s);
}

std::string describe_report(const VerificationReport& r) {
    std::ostringstream h;
    h << to_string(r.statement) << ": lhs = " << show(r.lhs) << ", rhs = " << show(r.rhs)
      << ", difference = " << show(r.difference) << ": " << (r.verdict ? "pass" : "FAIL");
    if (r.instance.trial) h << " [trial " << *r.instance.trial << ", seed " << *r.instance.seed << "]";
    h << "\n";
    if (!r.verdict) {
        static constexpr const char* names[] = {"P", "Q", "R", "S"};
        for (std::size_t k = 0; k < r.instance.polynomials.size(); ++k)
            h << "  " << names[k] << " = " << format_polynomial(r.instance.polynomials[k]) << "\n";
    }
    if (r.certificate) h << "  excess_sum = " << show(r.certificate->excess_sum) << "\n";
    return h.str();
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& v) {
    const Statement statement = statement_from_name(v.statement);

    if (v.fuzz) {
        if (!v.args.empty()) throw UsageError("--fuzz takes no positional arguments");
        if (v.trials == 0) throw UsageError("--trials must be at least 1");
        if (v.n == 0) throw UsageError("--n must be at least 1");
        if (v.coeff_bound == 0) throw UsageError("--coeff-bound must be at least 1");
        FuzzConfig cfg;
        cfg.statement = statement;
        cfg.trials = v.trials;
        cfg.seed = v.seed;
        cfg.max_dimension = v.n;
        cfg.max_degree = v.degree;
        try {
            cfg.density = parse_rational(v.density);
        } catch (const std::exception&) {
            throw UsageError("--density must be a rational in (0, 1]");
        }
        if (cfg.density <= 0 || cfg.density > 1) throw UsageError("--density must be a rational in (0, 1]");
        cfg.coefficient_bound = v.coeff_bound;
        cfg.homogeneous = v.homogeneous;
        cfg.with_certificate = v.with_certificate;
        cfg.jobs = v.jobs;

        auto reports = run_campaign(cfg);
        const auto totals = summarize(reports);
        std::ostringstream h;
        h << to_string(statement) << " fuzz: " << totals.trials << " trials, seed " << cfg.seed << ", n <= "
          << cfg.max_dimension << ", degree <= " << cfg.max_degree << ": " << totals.passed << " passed, "
          << totals.failed << " failed\n";
        for (const auto& r : reports)
            if (!r.verdict) h << describe_report(r);
        emit(g, json::campaign(cfg, std::move(reports)), h.str());
        return totals.failed == 0 ? 0 : exit_failed;
    }

    VerificationReport report = [&] {
        auto arity = [&](std::size_t k) {
            if (v.args.size() != k)
                throw UsageError(v.statement + " takes " + std::to_string(k) + " arguments, got " +
                                 std::to_string(v.args.size()));
        };
        switch (statement) {
        case Statement::chu:
            arity(3);
            return chu_vandermonde_check(parse_count(v.args[0]), parse_count(v.args[1]), parse_count(v.args[2]));
        case Statement::identity_B: {
            arity(2);
            auto ps = load_polynomials(v.args, g);
            return identity_B_sides(ps[0], ps[1]);
        }
        case Statement::identity_C: {
            arity(4);
            auto ps = load_polynomials(v.args, g);
            return identity_C_sides(ps[0], ps[1], ps[2], ps[3]);
        }
        case Statement::inequality_A: {
            arity(2);
            auto ps = load_polynomials(v.args, g);
            try {
                return inequality_A_check(ps[0], ps[1], v.with_certificate);
            } catch (const NotHomogeneous& e) {
                throw UsageError(e.what());
            }
        }
        }
        throw UsageError("unknown statement");
    }();

    const CampaignSummary totals = summarize(report);
    Json doc = {{"command", "verify"},
                {"statement", std::string(to_string(statement))},
                {"mode", "inline"},
                {"summary", json::summary(totals)},
                {"reports", Json::array({json::report(report)})}};
    emit(g, doc, describe_report(report));
    return report.verdict ? 0 : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bombieri norms, differential operators and the identities behind Bombieri's inequality"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--digits", g.digits, "Decimal digits for norm approximations")->check(CLI::Range(0, 10000));
    app.add_option("--dim", g.dimension, "Number of variables (default: highest index used)")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> args;
    std::vector<std::uint32_t> orders;
    std::string first, second;
    std::function<int()> action;

    auto* norm = app.add_subcommand("norm", "Exact ||P||^2 and a truncated decimal ||P||");
    norm->add_option("P", first, "Polynomial text or @file")->required();
    norm->callback([&] { action = [&] { return cmd_norm(g, first); }; });

    auto* inner = app.add_subcommand("inner", "Exact Bombieri inner product [P, Q]");
    inner->add_option("P", first)->required();
    inner->add_option("Q", second)->required();
    inner->callback([&] { action = [&] { return cmd_inner(g, first, second); }; });

    auto* mult = app.add_subcommand("multiply", "Product of polynomials");
    mult->add_option("polynomials", args)->required();
    mult->callback([&] { action = [&] { return cmd_multiply(g, args); }; });

    auto* diff = app.add_subcommand("diff", "D_1^k1 ... D_n^kn P");
    diff->add_option("P", first)->required();
    diff->add_option("orders", orders, "Derivative order per variable; missing ones are 0");
    diff->callback([&] { action = [&] { return cmd_diff(g, first, orders); }; });

    auto* apply = app.add_subcommand("apply", "Apply A(D_1, ..., D_n) to Q");
    apply->add_option("A", first)->required();
    apply->add_option("Q", second)->required();
    apply->callback([&] { action = [&] { return cmd_apply(g, first, second); }; });

    auto* cert = app.add_subcommand("certificate", "Term-by-term decomposition of ||PQ||^2");
    cert->add_option("P", first)->required();
    cert->add_option("Q", second)->required();
    cert->callback([&] { action = [&] { return cmd_certificate(g, first, second); }; });

    VerifyOptions v;
    auto* verify = app.add_subcommand("verify", "Check chu | identity-b | identity-c | inequality-a");
    verify->fallthrough();
    verify->add_option("statement", v.statement)
        ->required()
        ->check(CLI::IsMember({"chu", "identity-b", "identity-c", "inequality-a"}));
    verify->add_option("args", v.args, "Inline arguments (polynomials, or r s p for chu)");
    verify->add_flag("--fuzz", v.fuzz, "Check seeded random instances");
    verify->add_option("--trials", v.trials)->check(CLI::PositiveNumber);
    verify->add_option("--seed", v.seed);
    verify->add_option("--n", v.n, "Largest variable count")->check(CLI::PositiveNumber);
    verify->add_option("--degree", v.degree, "Largest degree per polynomial");
    verify->add_option("--density", v.density, "Term probability in (0, 1], e.g. 1/2");
    verify->add_option("--coeff-bound", v.coeff_bound)->check(CLI::PositiveNumber);
    verify->add_flag("--homogeneous", v.homogeneous);
    verify->add_flag("--with-certificate", v.with_certificate, "Attach certificates (inequality-a)");
    verify->add_option("--jobs", v.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->callback([&] { action = [&] { return cmd_verify(g, v); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
}
