// layercast CLI: analyze / simulate / thresholds / sweep / verify.
//
// Exit codes: 0 success, 2 invalid input or config, 3 verification or
// property failure. All rationals print as reduced num/den; decimals carry
// 12 significant digits. Identical inputs produce byte-identical output.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <layercast/layercast.hpp>

namespace lc = layercast;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
    lc::SystemConfig cfg;
    std::vector<lc::Rational> alphas_by_user;
    lc::CapacityProfile profile;
    std::optional<std::vector<int>> demand;
    std::optional<std::uint64_t> file_size_bytes;
    std::uint64_t seed = 0;
};

lc::Rational parse_capacity(const json& v, const char* where) {
    if (v.is_string()) return lc::Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return lc::Rational(v.get<long long>());
    lc::fail(lc::errc::parse_error,
             std::string(where) + ": capacities must be strings like \"3/4\" or \"0.75\" "
                                  "(floating-point JSON numbers are not exact)");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) lc::fail(lc::errc::parse_error, "cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        lc::fail(lc::errc::parse_error, "config is not valid JSON: " + std::string(e.what()));
    }
    if (!j.contains("K")) lc::fail(lc::errc::parse_error, "config needs \"K\"");
    if (!j.contains("N")) lc::fail(lc::errc::parse_error, "config needs \"N\"");
    if (!j.contains("alphas")) lc::fail(lc::errc::parse_error, "config needs \"alphas\"");

    RunConfig rc;
    int K = j.at("K").get<int>();
    int t = 0;
    if (j.contains("t") && j.contains("gamma"))
        lc::fail(lc::errc::parse_error, "give either \"t\" or \"gamma\", not both");
    if (j.contains("t"))
        t = j.at("t").get<int>();
    else if (j.contains("gamma"))
        t = lc::cache_param_from_gamma(K, parse_capacity(j.at("gamma"), "gamma"));
    else
        lc::fail(lc::errc::parse_error, "config needs \"t\" (or \"gamma\")");
    rc.cfg = lc::validate_config(K, t, j.at("N").get<int>());

    const json& alphas = j.at("alphas");
    if (!alphas.is_array() || static_cast<int>(alphas.size()) != K)
        lc::fail(lc::errc::parse_error, "\"alphas\" must list exactly K capacities");
    for (const json& a : alphas) rc.alphas_by_user.push_back(parse_capacity(a, "alphas"));
    rc.profile = lc::sort_capacities(rc.alphas_by_user);

    if (j.contains("demand")) rc.demand = j.at("demand").get<std::vector<int>>();
    if (j.contains("file_size_bytes"))
        rc.file_size_bytes = j.at("file_size_bytes").get<std::uint64_t>();
    if (j.contains("seed")) rc.seed = j.at("seed").get<std::uint64_t>();
    return rc;
}

lc::DemandVector demand_of(const RunConfig& rc) {
    if (rc.demand) return lc::validate_demand(rc.cfg, *rc.demand);
    return lc::distinct_demand(rc.cfg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) lc::fail(lc::errc::parse_error, "cannot write " + out_path);
    out << text;
}

int cmd_analyze(const std::string& config_path) {
    RunConfig rc = load_config(config_path);
    lc::DelayReport rep = lc::full_report(rc.cfg, rc.profile);
    lc::LayerPlan plan = lc::make_layer_plan(rc.cfg, rc.profile);
    std::cout << lc::delay_report_json(rc.cfg, rc.profile, rep, plan).dump(2) << "\n";
    return 0;
}

int cmd_simulate(const std::string& config_path, std::optional<std::uint64_t> file_size,
                 std::optional<std::uint64_t> seed, bool with_schedule) {
    RunConfig rc = load_config(config_path);
    if (file_size) rc.file_size_bytes = *file_size;
    if (seed) rc.seed = *seed;
    const std::uint64_t parts = lc::binom(rc.cfg.K, rc.cfg.t).to_u64();
    const std::uint64_t bytes = rc.file_size_bytes.value_or(64 * parts);

    lc::FileStore store = lc::FileStore::random(rc.cfg.N, bytes, rc.seed);
    lc::SubfileTable table = lc::subpacketize(store, rc.cfg);
    std::vector<lc::CacheContents> caches;
    for (int k = 1; k <= rc.cfg.K; ++k) caches.push_back(lc::build_cache(k, rc.cfg, &table));
    lc::DemandVector d = demand_of(rc);
    lc::Schedule sched = lc::make_schedule(rc.cfg, rc.profile, d, &table);
    lc::SimReport rep = lc::simulate_delivery(rc.cfg, rc.profile, sched, caches, d, store);

    ordered_json out = lc::sim_report_json(rc.cfg, rep);
    out["file_size_bytes"] = bytes;
    out["seed"] = rc.seed;
    if (with_schedule) out["schedule"] = lc::schedule_json(sched);
    std::cout << out.dump(2) << "\n";
    return rep.verified ? 0 : 3;
}

int cmd_thresholds(int K, int t, const std::string& out_path) {
    lc::SystemConfig cfg = lc::validate_config(K, t, K);
    emit(lc::thresholds_csv(lc::thresholds(cfg)), out_path);
    return 0;
}

std::string sweep_row(const std::string& param, const lc::SystemConfig& cfg,
                      const lc::CapacityProfile& profile) {
    lc::DelayReport rep = lc::full_report(cfg, profile);
    std::string row = param;
    row += ',' + lc::frac(rep.baseline);
    row += ',' + lc::frac(rep.uncoded);
    row += ',' + lc::frac(rep.superposed);
    row += ',' + lc::frac(rep.lower);
    row += ',' + lc::frac_or_undefined(rep.gap_ratio);
    row += '\n';
    return row;
}

int cmd_sweep(const std::string& config_path, const std::string& vary, const std::string& from,
              const std::string& to, int steps, const std::string& out_path) {
    RunConfig rc = load_config(config_path);
    std::string csv = "param_value,T_mn,T_uc,T_sc,T_lb,gap_ratio\n";

    if (vary == "t") {
        long long lo = std::stoll(from), hi = std::stoll(to);
        if (lo > hi) lc::fail(lc::errc::bad_range, "empty t range");
        for (long long t = lo; t <= hi; ++t) {
            lc::SystemConfig cfg = lc::validate_config(rc.cfg.K, static_cast<int>(t), rc.cfg.N);
            csv += sweep_row(std::to_string(t), cfg, rc.profile);
        }
        emit(csv, out_path);
        return 0;
    }

    if (vary.rfind("alpha_", 0) != 0)
        lc::fail(lc::errc::parse_error, "--vary takes t or alpha_<user>");
    int user = 0;
    try {
        user = std::stoi(vary.substr(6));
    } catch (...) {
        lc::fail(lc::errc::parse_error, "bad user index in " + vary);
    }
    if (user < 1 || user > rc.cfg.K) lc::fail(lc::errc::bad_range, "alpha index outside [1..K]");
    if (steps < 1) lc::fail(lc::errc::bad_range, "--steps must be >= 1");

    lc::Rational lo = lc::Rational::parse(from);
    lc::Rational hi = lc::Rational::parse(to);
    for (int s = 0; s < steps; ++s) {
        lc::Rational value =
            steps == 1 ? lo
                       : lo + (hi - lo) * lc::Rational(lc::BigInt(s), lc::BigInt(steps - 1));
        if (value.signum() <= 0 || value > lc::Rational(1))
            lc::fail(lc::errc::bad_range,
                     "swept capacity " + value.to_fraction_string() + " outside (0, 1]");
        std::vector<lc::Rational> alphas = rc.alphas_by_user;
        alphas[static_cast<std::size_t>(user - 1)] = value;
        csv += sweep_row(value.to_fraction_string(), rc.cfg, lc::sort_capacities(alphas));
    }
    emit(csv, out_path);
    return 0;
}

ordered_json config_json(const lc::SystemConfig& cfg, const lc::CapacityProfile& profile) {
    ordered_json j;
    j["K"] = cfg.K;
    j["t"] = cfg.t;
    j["N"] = cfg.N;
    ordered_json alphas = ordered_json::array();
    for (const lc::Rational& a : profile.alphas) alphas.push_back(lc::frac(a));
    j["alphas_sorted"] = std::move(alphas);
    return j;
}

int report_mismatch(std::uint64_t seed, const lc::SystemConfig& cfg,
                    const lc::CapacityProfile& profile, const std::string& quantity,
                    const std::string& got, const std::string& expected) {
    ordered_json j;
    j["status"] = "counterexample";
    j["seed"] = seed;
    j["quantity"] = quantity;
    j["got"] = got;
    j["expected"] = expected;
    j["config"] = config_json(cfg, profile);
    std::cout << j.dump(2) << "\n";
    return 3;
}

int cmd_verify(std::uint64_t seeds, int kmax, int grid, bool inject_fault) {
    if (kmax < 2) lc::fail(lc::errc::bad_range, "--kmax must be >= 2");
    if (grid < 1) lc::fail(lc::errc::bad_range, "--grid must be >= 1");

    // end-to-end byte-level sweep at small K, exhaustive over demands
    for (int K = 2; K <= std::min(4, kmax); ++K) {
        for (int t = 1; t < K; ++t) {
            lc::SystemConfig cfg = lc::validate_config(K, t, K);
            std::vector<lc::Rational> unit(static_cast<std::size_t>(K), lc::Rational(1));
            std::vector<lc::Rational> edge;
            for (int k = 1; k <= K; ++k) edge.push_back(lc::threshold_exact(cfg, k));
            for (const auto& alphas : {unit, edge}) {
                lc::CapacityProfile profile = lc::sort_capacities(alphas);
                lc::OracleResult r = lc::brute_decode_check(cfg, profile, true);
                if (!r.agree)
                    return report_mismatch(0, cfg, profile, r.quantity, lc::frac(r.brute),
                                           lc::frac(r.formula));
            }
        }
    }

    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        auto [cfg, profile] = lc::random_config(seed, kmax, grid);

        lc::Rational grouped = lc::naive_delay(cfg, profile);
        if (lc::binom(cfg.K, cfg.t + 1) <= lc::BigInt(1000000)) {
            lc::Rational brute = lc::brute_naive_delay(cfg, profile);
            if (inject_fault) brute += lc::Rational(lc::BigInt(1), lc::BigInt(1000000));
            if (brute != grouped)
                return report_mismatch(seed, cfg, profile, "uncoded_delay", lc::frac(brute),
                                       lc::frac(grouped));
        }

        auto [t_sc, w] = lc::superposition_delay(cfg, profile);
        (void)w;
        if (cfg.K <= 12) {
            lc::Schedule sched = lc::make_schedule(cfg, profile, lc::distinct_demand(cfg));
            lc::Rational done = lc::completion_time(sched);
            if (done != t_sc)
                return report_mismatch(seed, cfg, profile, "schedule_completion", lc::frac(done),
                                       lc::frac(t_sc));
            for (const lc::Rational& c : sched.layer_completion)
                if (c != done)
                    return report_mismatch(seed, cfg, profile, "equal_layer_completion",
                                           lc::frac(c), lc::frac(done));
        }

        lc::LayerPlan plan = lc::make_layer_plan(cfg, profile);
        for (int k = 1; k <= plan.layer_count(); ++k) {
            if (plan.beta(k) <= plan.beta(k - 1) || plan.beta(k) > profile.alpha(k))
                return report_mismatch(seed, cfg, profile, "plan_invariants",
                                       lc::frac(plan.beta(k)), lc::frac(profile.alpha(k)));
        }
        if (plan.layer_count() > 0 && plan.beta(plan.layer_count()) > lc::Rational(1))
            return report_mismatch(seed, cfg, profile, "plan_invariants",
                                   lc::frac(plan.beta(plan.layer_count())), "1/1");

        lc::DelayReport rep = lc::full_report(cfg, profile);
        if (rep.baseline > rep.superposed || rep.superposed > rep.uncoded)
            return report_mismatch(seed, cfg, profile, "delay_ordering", lc::frac(rep.superposed),
                                   lc::frac(rep.uncoded));
        if (rep.gap_ratio && *rep.gap_ratio > lc::Rational(4))
            return report_mismatch(seed, cfg, profile, "gap_bound", lc::frac(*rep.gap_ratio),
                                   "4/1");
    }

    ordered_json j;
    j["status"] = "ok";
    j["trials"] = seeds;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superposition-coded caching over uneven broadcast links"};
    app.require_subcommand(1);

    std::string config_path, out_path, vary, from, to;
    int K = 0, t = 0, steps = 10, kmax = 10, grid = 64;
    std::uint64_t seeds = 1000;
    std::optional<std::uint64_t> file_size, seed;
    bool with_schedule = false, inject_fault = false;

    CLI::App* analyze = app.add_subcommand("analyze", "delay report for one configuration");
    analyze->add_option("config", config_path, "JSON config file")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "byte-level delivery and decoding");
    simulate->add_option("config", config_path, "JSON config file")->required();
    simulate->add_option("--file-size", file_size, "bytes per library file");
    simulate->add_option("--seed", seed, "payload RNG seed");
    simulate->add_flag("--schedule", with_schedule, "include the transmission schedule");

    CLI::App* thr = app.add_subcommand("thresholds", "capacity thresholds CSV");
    thr->add_option("--K", K, "number of users")->required();
    thr->add_option("--t", t, "integer cache parameter")->required();
    thr->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "delay curves over a parameter range");
    sweep->add_option("config", config_path, "JSON config file")->required();
    sweep->add_option("--vary", vary, "t or alpha_<user>")->required();
    sweep->add_option("--from", from, "range start")->required();
    sweep->add_option("--to", to, "range end")->required();
    sweep->add_option("--steps", steps, "points for capacity sweeps (default 10)");
    sweep->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "cross-check formulas against brute force");
    verify->add_option("--seeds", seeds, "number of random trials (default 1000)");
    verify->add_option("--kmax", kmax, "largest K to sample (default 10)");
    verify->add_option("--grid", grid, "capacity grid denominator (default 64)");
    verify->add_flag("--inject-fault", inject_fault,
                     "perturb one comparison to prove the harness detects it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(config_path);
        if (simulate->parsed()) return cmd_simulate(config_path, file_size, seed, with_schedule);
        if (thr->parsed()) return cmd_thresholds(K, t, out_path);
        if (sweep->parsed()) return cmd_sweep(config_path, vary, from, to, steps, out_path);
        if (verify->parsed()) return cmd_verify(seeds, kmax, grid, inject_fault);
    } catch (const lc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case lc::errc::internal_check:
            case lc::errc::infeasible_layer:
            case lc::errc::undeliverable_subfile:
                return 3;  // a property the scheme guarantees failed to hold
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
