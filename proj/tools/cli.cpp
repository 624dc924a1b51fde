#include "cli.hpp"

#include <jcs/channel.hpp>
#include <jcs/config.hpp>
#include <jcs/errors.hpp>
#include <jcs/montecarlo.hpp>
#include <jcs/opa.hpp>
#include <jcs/outage.hpp>
#include <jcs/parallel.hpp>
#include <jcs/rate.hpp>
#include <jcs/rng.hpp>
#include <jcs/scenario.hpp>
#include <jcs/sensing.hpp>
#include <jcs/specfun.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>

namespace jcs::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", v);
    return buf;
}

class CsvWriter {
  public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out) {
        for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
        out_ << '\n';
    }
    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << num(values[i]);
        out_ << '\n';
    }

  private:
    std::ostream& out_;
};

std::vector<double> linspace(double from, double to, int points) {
    if (points < 1) throw ConfigError("--points must be at least 1");
    std::vector<double> v;
    for (int i = 0; i < points; ++i)
        v.push_back(points == 1 ? from : from + (to - from) * i / (points - 1));
    return v;
}

struct Common {
    std::string config;
    std::string output;
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

struct Sweep {
    std::string axis;
    double from = 0.0;
    double to = 40.0;
    int points = 9;
};

Scenario load(const Common& c) { return c.config.empty() ? paper_defaults() : load_scenario(c.config); }

McConfig mc_config(const Common& c, double trials) {
    McConfig mc;
    mc.trials = static_cast<std::uint64_t>(trials);
    mc.seed = c.seed;
    mc.workers = c.workers;
    return mc;
}

// ------------------------------------------------------------------ outage

int cmd_outage(const Common& c, const Sweep& sw, double trials, std::ostream& out) {
    if (sw.axis != "snr") throw ConfigError("outage supports --sweep snr only");
    const Scenario sc = load(c);
    CsvWriter csv(out, {"snr_db", "exact_far", "exact_near", "asym_far", "asym_near", "mc_far",
                        "mc_far_se", "mc_near", "mc_near_se"});
    for (double snr : linspace(sw.from, sw.to, sw.points)) {
        const SystemParams p = with_snr(sc.params, snr);
        const LinkVariances v = derive_variances(p, sc.geometry);
        double mf = kNaN, mfs = kNaN, mn = kNaN, mns = kNaN;
        if (trials > 0) {
            const McEstimate ef = estimate_outage(Device::Far, p, v, mc_config(c, trials));
            const McEstimate en = estimate_outage(Device::Near, p, v, mc_config(c, trials));
            mf = ef.mean, mfs = ef.std_error, mn = en.mean, mns = en.std_error;
        }
        csv.row({snr, outage_far(p, v), outage_near(p, v), outage_far_asymptotic(p, v),
                 outage_near_asymptotic(p, v), mf, mfs, mn, mns});
    }
    return kOk;
}

// ------------------------------------------------------------------ rate

struct RateRow {
    SystemParams params;
    LinkVariances vars;
};

// Non-cooperative transmission spends the relay's share at the source so the
// three schemes use the same total power.
SystemParams scheme_params(SystemParams p, DuplexMode mode) {
    if (mode == DuplexMode::NonCooperative) {
        p.p_com += p.p_sen;
        p.p_max = std::max(p.p_max, p.p_com);
    }
    return with_mode(p, mode);
}

int cmd_rate(const Common& c, const Sweep& sw, double trials, double snr_db, double d_sdn,
             double d_sdf, double phi_deg, std::ostream& out) {
    const Scenario sc = load(c);
    std::vector<std::string> header;
    if (sw.axis == "snr") header.push_back("snr_db");
    else if (sw.axis == "relay-distance") header.push_back("d_sr");
    else throw ConfigError("rate supports --sweep snr|relay-distance");

    const std::pair<DuplexMode, const char*> modes[] = {
        {DuplexMode::FD, "fd"}, {DuplexMode::HD, "hd"}, {DuplexMode::NonCooperative, "noncoop"}};
    for (const auto& m : modes)
        for (const char* dev : {"far", "near"})
            for (const char* col : {"exact", "approx", "mc", "mc_se"})
                header.push_back(std::string(m.second) + "_" + dev + "_" + col);
    CsvWriter csv(out, header);

    for (double x : linspace(sw.from, sw.to, sw.points)) {
        SystemParams base = sc.params;
        Geometry geo = sc.geometry;
        if (sw.axis == "snr") {
            base = with_snr(base, x);
        } else {
            base = with_snr(base, snr_db);
            if (!(x > 0.0 && x < d_sdn)) throw ConfigError("relay distance must lie in (0, d_sdn)");
            const double phi = phi_deg * M_PI / 180.0;
            geo.d_sr = x;
            geo.d_sdn = d_sdn;
            geo.d_sdf = d_sdf;
            geo.d_rdn = d_sdn - x;
            geo.d_rdf = std::sqrt(x * x + d_sdf * d_sdf - 2.0 * x * d_sdf * std::cos(phi));
        }
        std::vector<double> row{x};
        for (const auto& m : modes) {
            const SystemParams p = scheme_params(base, m.first);
            const LinkVariances v = derive_variances(p, geo);
            for (Device dev : {Device::Far, Device::Near}) {
                const bool far = dev == Device::Far;
                row.push_back(far ? ergodic_rate_far(p, v) : ergodic_rate_near(p, v));
                row.push_back(far ? ergodic_rate_far_approx(p, v) : ergodic_rate_near_approx(p, v));
                if (trials > 0) {
                    const McEstimate e = estimate_ergodic_rate(dev, p, v, mc_config(c, trials));
                    row.push_back(e.mean);
                    row.push_back(e.std_error);
                } else {
                    row.push_back(kNaN);
                    row.push_back(kNaN);
                }
            }
        }
        csv.row(row);
    }
    return kOk;
}

// ------------------------------------------------------------------ sensing

int cmd_sensing(const Common& c, const Sweep& sw, double pfa, double pcom_db, std::size_t ensemble,
                bool nominal, std::ostream& out) {
    if (sw.axis != "psen") throw ConfigError("sensing supports --sweep psen only");
    const Scenario sc = load(c);
    DetectionConfig dc;
    dc.p_fa_target = pfa;
    dc.ensemble_size = ensemble;
    dc.validate();
    CsvWriter csv(out, {"psen_db", "pd_fd", "pd_hd"});
    for (double psen_db : linspace(sw.from, sw.to, sw.points)) {
        std::vector<double> row{psen_db};
        for (DuplexMode mode : {DuplexMode::FD, DuplexMode::HD}) {
            SystemParams p = with_mode(sc.params, mode);
            p.p_com = p.n0 * db_to_linear(pcom_db);
            p.p_sen = p.n0 * db_to_linear(psen_db);
            p.p_max = std::max({p.p_max, p.p_com, p.p_sen});
            const LinkVariances v = derive_variances(p, sc.geometry);
            if (nominal) {
                const ChannelRealization g = mean_surrogate(v);
                row.push_back(detection_probability(p, g, calibrate_threshold(p, g, pfa)));
            } else {
                row.push_back(ensemble_detection(p, v, dc, c.seed, c.workers));
            }
        }
        csv.row(row);
    }
    return kOk;
}

// ------------------------------------------------------------------ optimize

struct OptimizeArgs {
    std::string scheme = "scd";
    std::string gains = "mean";
    double fixed_pcom_db = 15.0;
    double fixed_psen_db = 15.0;
    double fixed_an = 0.2;
};

ChannelRealization pick_gains(const OptimizeArgs& o, const LinkVariances& v, std::uint64_t seed) {
    if (o.gains == "mean") return mean_surrogate(v);
    if (o.gains == "sample") {
        RandomStream rs(seed, 0);
        return sample(v, rs);
    }
    throw ConfigError("--gains must be mean or sample");
}

OpaSolution solve(const std::string& scheme, const SystemParams& p, const ChannelRealization& g,
                  const FixedVariables& fixed) {
    if (scheme == "scd") return solve_scd(p, g, {}, fixed);
    if (scheme == "ccd") return solve_ccd(p, g, {}, fixed);
    throw ConfigError("--scheme must be scd or ccd");
}

double objective_or_nan(const OpaSolution& s) { return s.feasible ? s.objective : kNaN; }

int cmd_optimize(const Common& c, const std::optional<Sweep>& sw, const OptimizeArgs& o,
                 std::ostream& out) {
    const Scenario sc = load(c);
    const LinkVariances v = derive_variances(sc.params, sc.geometry);
    const ChannelRealization g = pick_gains(o, v, c.seed);
    if (o.scheme != "scd" && o.scheme != "ccd") throw ConfigError("--scheme must be scd or ccd");

    if (sw) {
        if (sw->axis != "pmax") throw ConfigError("optimize supports --sweep pmax only");
        CsvWriter csv(out, {"pmax_dbm", "objective_full", "objective_fixed_pcom",
                            "objective_fixed_psen", "objective_fixed_an"});
        for (double pmax_db : linspace(sw->from, sw->to, sw->points)) {
            SystemParams p = sc.params;
            p.p_max = p.n0 * db_to_linear(pmax_db);
            FixedVariables pc, ps, an;
            pc.p_com = p.n0 * db_to_linear(o.fixed_pcom_db);
            ps.p_sen = p.n0 * db_to_linear(o.fixed_psen_db);
            an.a_n = o.fixed_an;
            csv.row({pmax_db, objective_or_nan(solve(o.scheme, p, g, {})),
                     objective_or_nan(solve(o.scheme, p, g, pc)),
                     objective_or_nan(solve(o.scheme, p, g, ps)),
                     objective_or_nan(solve(o.scheme, p, g, an))});
        }
        return kOk;
    }

    const OpaSolution s = solve(o.scheme, sc.params, g, {});
    nlohmann::json doc = {{"scheme", o.scheme},
                          {"feasible", s.feasible},
                          {"iterations", s.iterations},
                          {"violated", s.violated},
                          {"trace", s.trace}};
    auto put = [&](const char* key, double v) {
        doc[key] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
    };
    put("p_com", s.p_com);
    put("p_sen", s.p_sen);
    put("a_n", s.a_n);
    put("objective", s.objective);
    put("exact_objective", s.exact_objective);
    out << doc.dump(2) << '\n';
    return s.feasible ? kOk : kInfeasible;
}

// ------------------------------------------------------------------ selftest

struct Check {
    const char* name;
    std::function<bool()> test;
};

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

int cmd_selftest(const Common& c, std::ostream& out) {
    const Scenario sc = load(c);
    const std::vector<Check> checks = {
        {"erfc reference", [] { return close_rel(erfc(1.0), 0.15729920705028513, 1e-14); }},
        {"erfcx reference", [] { return close_rel(erfcx(2.0), 0.25539567631050574, 1e-13); }},
        {"echo kernel small-c limit",
         [] { return close_rel(echo_kernel(0.7, 1e-14), 1.4, 1e-6) && echo_kernel(0.7, 0.0) == 1.4; }},
        {"marcum q at a = 0 equals gamma q",
         [] { return close_rel(marcum_q(2.5, 0.0, 1.7), gamma_q(2.5, 1.7 * 1.7 / 2.0), 1e-12); }},
        {"marcum inverse round trip",
         [] {
             const double b = marcum_q_inv_b(2.0, 3.0, 1e-5);
             return close_rel(marcum_q(2.0, 3.0, b), 1e-5, 1e-9);
         }},
        {"outage in [0, 1] and near >= 0",
         [&] {
             for (double snr : {0.0, 20.0, 40.0}) {
                 const SystemParams p = with_snr(sc.params, snr);
                 const LinkVariances v = derive_variances(p, sc.geometry);
                 for (double x : {outage_far(p, v), outage_near(p, v)})
                     if (!(x >= 0.0 && x <= 1.0)) return false;
             }
             return true;
         }},
        {"outage decreasing in snr",
         [&] {
             double last_f = 2.0, last_n = 2.0;
             for (double snr = 10.0; snr <= 60.0; snr += 10.0) {
                 const SystemParams p = with_snr(sc.params, snr);
                 const LinkVariances v = derive_variances(p, sc.geometry);
                 const double f = outage_far(p, v), n = outage_near(p, v);
                 if (f > last_f || n > last_n) return false;
                 last_f = f, last_n = n;
             }
             return true;
         }},
        {"outage matches monte carlo at 30 dB",
         [&] {
             const SystemParams p = with_snr(sc.params, 30.0);
             const LinkVariances v = derive_variances(p, sc.geometry);
             McConfig mc = mc_config(c, 2e5);
             const McEstimate f = estimate_outage(Device::Far, p, v, mc);
             const McEstimate n = estimate_outage(Device::Near, p, v, mc);
             return std::abs(f.mean - outage_far(p, v)) <= 4.0 * f.std_error &&
                    std::abs(n.mean - outage_near(p, v)) <= 4.0 * n.std_error;
         }},
        {"non-cooperative far rate limit",
         [&] {
             SystemParams p = with_mode(with_snr(sc.params, 60.0), DuplexMode::NonCooperative);
             const LinkVariances v = derive_variances(p, sc.geometry);
             return close_rel(ergodic_rate_far(p, v), std::log2(1.0 + p.a_f / p.a_n), 0.01);
         }},
        {"hd detection at least fd",
         [&] {
             SystemParams fd = with_mode(sc.params, DuplexMode::FD);
             SystemParams hd = with_mode(sc.params, DuplexMode::HD);
             const LinkVariances v = derive_variances(fd, sc.geometry);
             const ChannelRealization g = mean_surrogate(v);
             return detection_probability(hd, g, calibrate_threshold(hd, g, 1e-5)) >=
                    detection_probability(fd, g, calibrate_threshold(fd, g, 1e-5));
         }},
        {"a_n dagger for thresholds (1, 2)", [] { return a_n_dagger(1.0, 2.0) == 0.4; }},
        {"scd solution feasible and beats a coarse grid",
         [&] {
             const LinkVariances v = derive_variances(sc.params, sc.geometry);
             const ChannelRealization g = mean_surrogate(v);
             const OpaSolution s = solve_scd(sc.params, g);
             const OpaSolution grid = grid_oracle(Problem::SCD, sc.params, g, 40, c.workers);
             return s.feasible && (!grid.feasible || s.objective >= grid.objective * (1.0 - 1e-6));
         }},
        {"ccd solution feasible and beats a coarse grid",
         [&] {
             const LinkVariances v = derive_variances(sc.params, sc.geometry);
             const ChannelRealization g = mean_surrogate(v);
             const OpaSolution s = solve_ccd(sc.params, g);
             const OpaSolution grid = grid_oracle(Problem::CCD, sc.params, g, 40, c.workers);
             if (!grid.feasible) return true;
             return s.feasible && s.objective >= grid.objective * (1.0 - 1e-6);
         }},
    };
    bool all = true;
    for (const Check& ch : checks) {
        bool ok = false;
        try {
            ok = ch.test();
        } catch (const std::exception&) {
            ok = false;
        }
        all &= ok;
        out << (ok ? "PASS " : "FAIL ") << ch.name << '\n';
    }
    return all ? kOk : kSelftestFailed;
}

// ------------------------------------------------------------------ dispatch

void add_common(CLI::App* app, Common& c) {
    app->add_option("--config", c.config, "scenario JSON file");
    app->add_option("--output,-o", c.output, "write results to this file instead of stdout");
    app->add_option("--seed", c.seed, "random seed");
    app->add_option("--workers", c.workers, "worker threads (default: JCS_WORKERS or hardware)");
}

void add_sweep(CLI::App* app, Sweep& s) {
    app->add_option("--from", s.from);
    app->add_option("--to", s.to);
    app->add_option("--points", s.points);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"JCS full-duplex NOMA evaluator"};
    app.require_subcommand(1);
    Common common;
    add_common(&app, common);
    app.fallthrough();

    Sweep sw;
    double trials = 1e5;

    auto* outage = app.add_subcommand("outage", "outage probability versus SNR");
    outage->add_option("--sweep", sw.axis)->required();
    outage->add_option("--mc", trials, "Monte Carlo trials per point (0 disables)");
    add_sweep(outage, sw);

    double snr_db = 20.0, d_sdn = 5.0, d_sdf = 6.0, phi_deg = 30.0;
    auto* rate = app.add_subcommand("rate", "ergodic rates versus SNR or relay position");
    rate->add_option("--sweep", sw.axis)->required()->check(CLI::IsMember({"snr", "relay-distance"}));
    rate->add_option("--mc", trials, "Monte Carlo trials per point (0 disables)");
    rate->add_option("--snr-db", snr_db, "transmit SNR for the relay-distance sweep");
    rate->add_option("--d-sdn", d_sdn);
    rate->add_option("--d-sdf", d_sdf);
    rate->add_option("--phi-deg", phi_deg);
    add_sweep(rate, sw);

    double pfa = 1e-5, pcom_db = 10.0;
    std::size_t ensemble = 2000;
    bool nominal = false;
    auto* sensing = app.add_subcommand("sensing", "detection probability versus sensing power");
    sensing->add_option("--sweep", sw.axis)->required();
    sensing->add_option("--pfa", pfa);
    sensing->add_option("--pcom-db", pcom_db);
    sensing->add_option("--ensemble", ensemble);
    sensing->add_flag("--nominal", nominal, "use mean gains instead of an ensemble");
    add_sweep(sensing, sw);

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "power allocation");
    optimize->add_option("--scheme", opt.scheme)->check(CLI::IsMember({"scd", "ccd"}));
    optimize->add_option("--sweep", sw.axis);
    optimize->add_option("--gains", opt.gains)->check(CLI::IsMember({"mean", "sample"}));
    optimize->add_option("--fixed-pcom-db", opt.fixed_pcom_db);
    optimize->add_option("--fixed-psen-db", opt.fixed_psen_db);
    optimize->add_option("--fixed-an", opt.fixed_an);
    add_sweep(optimize, sw);

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");

    std::vector<const char*> argv{"jcs"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!common.output.empty()) {
        file = std::make_unique<std::ofstream>(common.output);
        if (!*file) {
            err << "error: cannot open " << common.output << '\n';
            return kUsage;
        }
        sink = file.get();
    }

    try {
        if (*outage) return cmd_outage(common, sw, trials, *sink);
        if (*rate) return cmd_rate(common, sw, trials, snr_db, d_sdn, d_sdf, phi_deg, *sink);
        if (*sensing) return cmd_sensing(common, sw, pfa, pcom_db, ensemble, nominal, *sink);
        if (*optimize) {
            std::optional<Sweep> s;
            if (!sw.axis.empty()) s = sw;
            return cmd_optimize(common, s, opt, *sink);
        }
        if (*selftest) return cmd_selftest(common, *sink);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << " (estimate " << e.estimate() << ", bound "
            << e.error_bound() << ")\n";
        return kConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace jcs::cli
