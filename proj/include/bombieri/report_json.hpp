#pragma once

#include "bombieri/fuzz.hpp"
#include "bombieri/identities.hpp"
#include "bombieri/parser.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bombieri::json {

using Json = nlohmann::ordered_json;

/// Exact rationals travel as "num/den" strings, never as floats.
inline Json rational(const Rational& q) { return to_fraction_string(q); }

inline Json multi_index(const MultiIndex& i) {
    Json out = Json::array();
    for (auto e : i) out.push_back(e);
    return out;
}

inline Json certificate(const ReznickCertificate& cert) {
    Json terms = Json::array();
    for (const auto& t : cert.terms)
        terms.push_back({{"index", multi_index(t.index)},
                         {"value", rational(t.value)},
                         {"block", std::string(to_string(t.block))}});
    return {{"terms", std::move(terms)},
            {"lhs", rational(cert.lhs)},
            {"top_sum", rational(cert.top_sum)},
            {"excess_sum", rational(cert.excess_sum)}};
}

inline Json instance(const Statement statement, const Instance& inst) {
    Json out = Json::object();
    if (statement == Statement::chu) {
        static constexpr const char* names[] = {"r", "s", "p"};
        for (std::size_t k = 0; k < inst.integers.size() && k < 3; ++k) out[names[k]] = inst.integers[k];
    } else {
        static constexpr const char* names[] = {"P", "Q", "R", "S"};
        if (!inst.polynomials.empty()) out["dimension"] = inst.polynomials.front().dimension();
        for (std::size_t k = 0; k < inst.polynomials.size() && k < 4; ++k)
            out[names[k]] = format_polynomial(inst.polynomials[k]);
    }
    if (inst.trial) out["trial"] = *inst.trial;
    if (inst.seed) out["seed"] = *inst.seed;
    return out;
}

inline Json report(const VerificationReport& r) {
    Json out = {{"statement", std::string(to_string(r.statement))},
                {"lhs", rational(r.lhs)},
                {"rhs", rational(r.rhs)},
                {"difference", rational(r.difference)},
                {"verdict", r.verdict},
                {"instance", instance(r.statement, r.instance)}};
    if (r.certificate) out["certificate"] = certificate(*r.certificate);
    return out;
}

inline Json summary(const CampaignSummary& s) {
    return {{"trials", s.trials}, {"passed", s.passed}, {"failed", s.failed}};
}

/// Whole-campaign document. Depends only on the config and the reports, so
/// equal configs give byte-identical output.
inline Json campaign(const FuzzConfig& cfg, std::vector<VerificationReport> reports) {
    const auto totals = summarize(reports);
    order_failures_first(reports);
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report(r));
    return {{"command", "verify"},
            {"statement", std::string(to_string(cfg.statement))},
            {"mode", "fuzz"},
            {"config",
             {{"trials", cfg.trials},
              {"seed", cfg.seed},
              {"n", cfg.max_dimension},
              {"degree", cfg.max_degree},
              {"density", rational(cfg.density)},
              {"coeff_bound", cfg.coefficient_bound},
              {"homogeneous", cfg.homogeneous || cfg.statement == Statement::inequality_A},
              {"generator", "mt19937_64, trial seed = splitmix64(seed + trial)"}}},
            {"summary", summary(totals)},
            {"reports", std::move(list)}};
}

} // namespace bombieri::json
