#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "layercast/analysis.hpp"
#include "layercast/channel.hpp"
#include "layercast/scheduler.hpp"
#include "layercast/system.hpp"

namespace layercast {

// Rendering contract: rationals appear as reduced "num/den" strings,
// decimals carry exactly 12 significant digits (round-half-even). Doubles are
// first converted to their exact rational value so both columns share one
// renderer and output stays byte-deterministic.

inline std::string frac(const Rational& r) { return r.to_fraction_string(); }
inline std::string dec12(const Rational& r) { return r.to_decimal_string(12); }
inline std::string dec12(double d) { return Rational::from_double_exact(d).to_decimal_string(12); }

inline std::string frac_or_undefined(const std::optional<Rational>& r) {
    return r ? frac(*r) : "undefined";
}

inline nlohmann::ordered_json delay_report_json(const SystemConfig& cfg,
                                                const CapacityProfile& profile,
                                                const DelayReport& rep, const LayerPlan& plan) {
    nlohmann::ordered_json j;
    j["K"] = cfg.K;
    j["t"] = cfg.t;
    j["N"] = cfg.N;
    j["gamma"] = frac(cfg.gamma());
    nlohmann::ordered_json alphas = nlohmann::ordered_json::array();
    for (const Rational& a : profile.alphas) alphas.push_back(frac(a));
    j["alphas_sorted"] = std::move(alphas);
    j["user_of_rank"] = profile.user_of_rank;
    j["w"] = rep.w;
    j["T_mn"] = frac(rep.baseline);
    j["T_uc"] = frac(rep.uncoded);
    j["T_sc"] = frac(rep.superposed);
    j["T_lb"] = frac(rep.lower);
    j["gap_ratio"] = frac_or_undefined(rep.gap_ratio);
    j["speedup_vs_naive"] = frac_or_undefined(rep.speedup_vs_naive);
    nlohmann::ordered_json betas = nlohmann::ordered_json::array();
    for (const Rational& b : plan.breakpoints) betas.push_back(frac(b));
    j["betas"] = std::move(betas);
    nlohmann::ordered_json rates = nlohmann::ordered_json::array();
    for (const Rational& r : plan.rates) rates.push_back(frac(r));
    j["rates"] = std::move(rates);
    return j;
}

inline nlohmann::ordered_json schedule_json(const Schedule& sched) {
    nlohmann::ordered_json layers = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < sched.layers.size(); ++i) {
        nlohmann::ordered_json layer;
        layer["layer"] = i + 1;
        layer["rate"] = frac(sched.plan.rates[i]);
        nlohmann::ordered_json msgs = nlohmann::ordered_json::array();
        for (const ScheduledXor& sx : sched.layers[i]) {
            nlohmann::ordered_json m;
            m["sigma"] = sx.msg.sigma.members;
            m["start"] = frac(sx.start);
            m["end"] = frac(sx.end);
            msgs.push_back(std::move(m));
        }
        layer["messages"] = std::move(msgs);
        layers.push_back(std::move(layer));
    }
    return layers;
}

inline nlohmann::ordered_json sim_report_json(const SystemConfig& cfg, const SimReport& rep) {
    nlohmann::ordered_json j;
    j["K"] = cfg.K;
    j["t"] = cfg.t;
    j["N"] = cfg.N;
    j["verified"] = rep.verified;
    j["completion"] = frac(rep.global_completion);
    j["completion_decimal"] = dec12(rep.global_completion);
    nlohmann::ordered_json users = nlohmann::ordered_json::array();
    for (const UserSimResult& u : rep.users) {
        nlohmann::ordered_json uj;
        uj["rank"] = u.rank;
        uj["layers_decoded"] = u.layers_decoded;
        uj["cached_subfiles"] = u.cached_subfiles;
        uj["recovered_subfiles"] = u.recovered_subfiles;
        uj["completion"] = frac(u.completion);
        uj["file_ok"] = u.file_ok;
        users.push_back(std::move(uj));
    }
    j["users"] = std::move(users);
    return j;
}

/// CSV for the threshold table. Exact thresholds stay exact (fractions);
/// the approximation column is decimal.
inline std::string thresholds_csv(const ThresholdTable& table) {
    std::string out = "k,alpha_th_exact,alpha_th_approx\n";
    for (const ThresholdRow& row : table.rows) {
        out += std::to_string(row.k);
        out += ',';
        out += frac(row.exact);
        out += ',';
        out += dec12(row.approx);
        out += '\n';
    }
    return out;
}

}  // namespace layercast
