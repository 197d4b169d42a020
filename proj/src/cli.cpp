#include "ojam/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ojam/analytic.hpp"
#include "ojam/errors.hpp"
#include "ojam/optimize.hpp"

namespace ojam::cli {

namespace {

constexpr double kFixedPointTol = 1e-9;
constexpr double kTrendZero = 1e-12;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    const std::string s(trim(text));
    if (s.empty()) throw ConfigError("missing value for '" + std::string(key) + "'");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ConfigError("'" + std::string(key) + "' expects a finite number, got '" + s + "'");
    }
    return v;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
    const std::string_view s = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError("'" + std::string(key) + "' expects a nonnegative integer, got '" +
                          std::string(s) + "'");
    }
    return v;
}

SweepSpec default_sweep(std::string_view command) {
    if (command == "compare") return {"lambda_e", 0.001, 0.1, 9, SweepScale::Log};
    return {"lambda_j", 0.1, 1.0, 10, SweepScale::Linear};
}

void require_known_variable(const std::string& v) {
    if (v != "delta" && v != "lambda_j" && v != "lambda_e" && v != "p_j_dbm") {
        throw ConfigError("sweep_var must be one of delta, lambda_j, lambda_e, p_j_dbm; got '" + v + "'");
    }
}

void assign(RunConfig& c, const std::string& variable, double value) {
    if (variable == "delta") c.delta = value;
    else if (variable == "lambda_j") c.lambda_j = value;
    else if (variable == "lambda_e") c.lambda_e = value;
    else if (variable == "p_j_dbm") c.p_j_dbm = value;
}

void verify_fixed_points(const SystemParams& p, const SelectionStats& s, const DesignPoint& dp) {
    const double co = connection_outage(p, s, dp.beta_b);
    const double so = secrecy_outage(p, s, dp.beta_e);
    if (std::abs(co - p.sigma()) > kFixedPointTol || std::abs(so - p.epsilon()) > kFixedPointTol) {
        throw NumericalError("outage constraints not met at delta=" + format_number(dp.delta));
    }
}

const std::vector<std::string> kAnalyzeHeader{"lambda_j", "lambda_e", "p_j_dbm", "delta",
                                              "prob_j",   "lambda_j_s", "beta_b", "beta_e",
                                              "r_t",      "r_e",        "mu"};

std::vector<std::string> analyze_row(const RunConfig& c, const SystemParams& p, const DesignPoint& dp) {
    verify_fixed_points(p, threshold_selection(dp.delta, 2.0 / p.alpha()), dp);
    return {format_number(c.lambda_j),
            format_number(c.lambda_e),
            format_number(c.p_j_dbm),
            format_number(dp.delta),
            format_number(selection_probability(dp.delta)),
            format_number(selected_intensity(dp.delta, p.lambda_j())),
            format_number(dp.beta_b),
            format_number(dp.beta_e),
            format_number(dp.r_t),
            format_number(dp.r_e),
            format_number(dp.mu)};
}

OptimizationResult optimize(const RunConfig& c, const SystemParams& p) {
    return optimize_delta(p, c.search_lo, c.search_hi);
}

double parse_column(const Table& t, std::size_t row, const std::string& column) {
    const auto it = std::find(t.header.begin(), t.header.end(), column);
    return std::stod(t.rows[row][static_cast<std::size_t>(it - t.header.begin())]);
}

// Number of sign reversals in successive differences, ignoring tiny steps.
struct Shape {
    int rises_after_fall = 0;
    int peaks = 0;
};

Shape shape_of(const std::vector<double>& v) {
    Shape s;
    int last = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double diff = v[i] - v[i - 1];
        const int sign = std::abs(diff) < kTrendZero ? 0 : (diff > 0 ? 1 : -1);
        if (sign == 0) continue;
        if (last == 1 && sign == -1) ++s.peaks;
        if (last == -1 && sign == 1) ++s.rises_after_fall;
        last = sign;
    }
    return s;
}

bool diminishing_returns(const std::vector<double>& mu, std::vector<std::string>& notes) {
    for (std::size_t i = 1; i < mu.size(); ++i) {
        if (mu[i] < mu[i - 1] - kTrendZero) {
            notes.push_back("check failed: mu decreases between rows " + std::to_string(i - 1) +
                            " and " + std::to_string(i));
            return false;
        }
    }
    // Increments must be nonincreasing from some index in the first half on.
    std::vector<double> inc;
    for (std::size_t i = 1; i < mu.size(); ++i) inc.push_back(mu[i] - mu[i - 1]);
    if (inc.size() < 2) return true;
    std::size_t from = inc.size() - 1;
    while (from > 0 && inc[from - 1] >= inc[from] - kTrendZero) --from;
    if (from > inc.size() / 2) {
        notes.push_back("check failed: increments of mu are not eventually nonincreasing");
        return false;
    }
    return true;
}

std::vector<double> column(const Table& t, const std::string& name) {
    std::vector<double> out;
    for (std::size_t r = 0; r < t.rows.size(); ++r) out.push_back(parse_column(t, r, name));
    return out;
}

} // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys{
        "p_s_dbm",      "p_j_dbm",    "n0_dbm",     "d_m",         "alpha",
        "lambda_j",     "lambda_e",   "sigma",      "epsilon",     "delta",
        "sim_radius_m", "sim_trials", "sim_seed",   "sweep_var",   "sweep_start",
        "sweep_stop",   "sweep_count", "sweep_scale", "out_path"};
    return keys;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view raw) {
    const std::string_view value = trim(raw);
    if (key == "p_s_dbm") c.p_s_dbm = parse_double(key, value);
    else if (key == "p_j_dbm") c.p_j_dbm = parse_double(key, value);
    else if (key == "n0_dbm") c.n0_dbm = parse_double(key, value);
    else if (key == "d_m") c.d_m = parse_double(key, value);
    else if (key == "alpha") c.alpha = parse_double(key, value);
    else if (key == "lambda_j") c.lambda_j = parse_double(key, value);
    else if (key == "lambda_e") c.lambda_e = parse_double(key, value);
    else if (key == "sigma") c.sigma = parse_double(key, value);
    else if (key == "epsilon") c.epsilon = parse_double(key, value);
    else if (key == "delta") c.delta = parse_double(key, value);
    else if (key == "sim_radius_m") c.sim.radius = parse_double(key, value);
    else if (key == "sim_trials") c.sim.trials = parse_unsigned(key, value);
    else if (key == "sim_seed") c.sim.seed = parse_unsigned(key, value);
    else if (key == "sweep_var") {
        require_known_variable(std::string(value));
        c.sweep.variable = std::string(value);
    } else if (key == "sweep_start") c.sweep.start = parse_double(key, value);
    else if (key == "sweep_stop") c.sweep.stop = parse_double(key, value);
    else if (key == "sweep_count") {
        const auto n = parse_unsigned(key, value);
        if (n < 1 || n > 100000) throw ConfigError("sweep_count must lie in [1, 100000]");
        c.sweep.count = static_cast<int>(n);
    } else if (key == "sweep_scale") {
        if (value == "linear") c.sweep.scale = SweepScale::Linear;
        else if (value == "log") c.sweep.scale = SweepScale::Log;
        else throw ConfigError("sweep_scale must be 'linear' or 'log'");
    } else if (key == "out_path") c.out_path = std::string(value);
    else throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

void apply_config_text(RunConfig& c, std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        apply_setting(c, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

void apply_config_file(RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read configuration file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    apply_config_text(c, buffer.str());
}

SystemParams to_params(const RunConfig& c) {
    return SystemParams::make({
        .p_s = dbm_to_linear(c.p_s_dbm),
        .p_j = dbm_to_linear(c.p_j_dbm),
        .n0 = dbm_to_linear(c.n0_dbm),
        .d = c.d_m,
        .alpha = c.alpha,
        .lambda_j = c.lambda_j,
        .lambda_e = c.lambda_e,
        .sigma = c.sigma,
        .epsilon = c.epsilon,
    });
}

SweepSpec resolve_sweep(const SweepSettings& given, std::string_view command) {
    SweepSpec spec = default_sweep(command);
    if (given.variable && *given.variable != spec.variable) {
        if (!given.start || !given.stop || !given.count) {
            throw ConfigError("sweeping " + *given.variable +
                              " needs sweep_start, sweep_stop and sweep_count");
        }
        spec = SweepSpec{*given.variable, *given.start, *given.stop, *given.count, SweepScale::Linear};
    }
    if (given.start) spec.start = *given.start;
    if (given.stop) spec.stop = *given.stop;
    if (given.count) spec.count = *given.count;
    if (given.scale) spec.scale = *given.scale;
    return spec;
}

std::vector<double> sweep_grid(const SweepSpec& s) {
    require_known_variable(s.variable);
    if (s.count < 1) throw ConfigError("sweep_count must be at least 1");
    if (s.scale == SweepScale::Log && !(s.start > 0.0 && s.stop > 0.0)) {
        throw ConfigError("log sweeps need positive sweep_start and sweep_stop");
    }
    std::vector<double> grid(static_cast<std::size_t>(s.count));
    for (int i = 0; i < s.count; ++i) {
        const double t = s.count == 1 ? 0.0 : static_cast<double>(i) / (s.count - 1);
        grid[i] = s.scale == SweepScale::Linear
                      ? s.start + (s.stop - s.start) * t
                      : std::exp(std::log(s.start) + (std::log(s.stop) - std::log(s.start)) * t);
    }
    grid.front() = s.start;
    if (s.count > 1) grid.back() = s.stop;
    return grid;
}

std::string format_number(double value) {
    if (!std::isfinite(value)) throw NumericalError("non-finite value in analytic output");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_diagnostic(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return format_number(value);
}

std::string to_csv(const Table& t) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out;
}

CommandOutput cmd_analyze(const RunConfig& c) {
    if (!c.delta) throw ConfigError("analyze needs a threshold (--delta or 'delta' key)");
    const SystemParams p = to_params(c);
    const DesignPoint dp = throughput(p, *c.delta);
    CommandOutput out;
    out.table.header = kAnalyzeHeader;
    out.table.rows.push_back(analyze_row(c, p, dp));
    out.summary.push_back("delta=" + format_number(dp.delta) + " R_t=" + format_number(dp.r_t) +
                          " R_e=" + format_number(dp.r_e) + " mu=" + format_number(dp.mu));
    return out;
}

CommandOutput cmd_optimize(const RunConfig& c) {
    const SystemParams p = to_params(c);
    const OptimizationResult r = optimize(c, p);
    verify_fixed_points(p, threshold_selection(r.delta_star, 2.0 / p.alpha()), r.design);
    CommandOutput out;
    out.table.header = {"lambda_j", "lambda_e", "p_j_dbm", "delta_star", "prob_j", "beta_b",
                        "beta_e",   "r_t",      "r_e",     "mu",         "method", "iterations"};
    out.table.rows.push_back({format_number(c.lambda_j), format_number(c.lambda_e),
                              format_number(c.p_j_dbm), format_number(r.delta_star),
                              format_number(selection_probability(r.delta_star)),
                              format_number(r.design.beta_b), format_number(r.design.beta_e),
                              format_number(r.design.r_t), format_number(r.design.r_e),
                              format_number(r.design.mu), std::string(to_string(r.method)),
                              std::to_string(r.iterations)});
    out.summary.push_back("delta*=" + format_number(r.delta_star) + " mu=" + format_number(r.design.mu) +
                          " (" + std::string(to_string(r.method)) + ")");
    if (r.method == OptimizationMethod::Boundary) {
        out.summary.push_back("note: optimum on the search boundary [" + format_number(c.search_lo) +
                              ", " + format_number(c.search_hi) + "]");
    }
    return out;
}

CommandOutput cmd_simulate(const RunConfig& c) {
    if (!c.delta) throw ConfigError("simulate needs a threshold (--delta or 'delta' key)");
    const SystemParams p = to_params(c);
    const double delta = *c.delta;
    const double beta_b = c.beta_b ? *c.beta_b : beta_b_star(p, delta);
    const double beta_e = c.beta_e ? *c.beta_e : beta_e_star(p, delta);
    const mc::OutagePair est = mc::estimate_outages(p, delta, beta_b, beta_e, c.sim);
    const double co = connection_outage(p, delta, beta_b);
    const double so = secrecy_outage(p, delta, beta_e);
    auto z = [](const mc::OutageEstimate& e, double analytic) {
        const double diff = e.p_hat - analytic;
        if (e.std_err == 0.0) return diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
        return diff / e.std_err;
    };
    CommandOutput out;
    out.table.header = {"delta",    "beta_b",      "beta_e",        "trials",  "seed",
                        "radius_m", "p_co_hat",    "p_co_std_err",  "p_co_analytic", "p_co_z",
                        "p_so_hat", "p_so_std_err", "p_so_analytic", "p_so_z"};
    const double z_co = z(est.connection, co);
    const double z_so = z(est.secrecy, so);
    out.table.rows.push_back({format_number(delta), format_number(beta_b), format_number(beta_e),
                              std::to_string(c.sim.trials), std::to_string(c.sim.seed),
                              format_number(c.sim.radius), format_number(est.connection.p_hat),
                              format_number(est.connection.std_err), format_number(co),
                              format_diagnostic(z_co), format_number(est.secrecy.p_hat),
                              format_number(est.secrecy.std_err), format_number(so),
                              format_diagnostic(z_so)});
    out.summary.push_back("p_co: simulated " + format_number(est.connection.p_hat) + " +- " +
                          format_number(est.connection.std_err) + ", analytic " + format_number(co) +
                          ", z=" + format_diagnostic(z_co));
    out.summary.push_back("p_so: simulated " + format_number(est.secrecy.p_hat) + " +- " +
                          format_number(est.secrecy.std_err) + ", analytic " + format_number(so) +
                          ", z=" + format_diagnostic(z_so));
    return out;
}

CommandOutput cmd_sweep(const RunConfig& c) {
    const SweepSpec spec = resolve_sweep(c.sweep, "sweep");
    CommandOutput out;
    out.table.header = kAnalyzeHeader;
    for (const double v : sweep_grid(spec)) {
        RunConfig point = c;
        assign(point, spec.variable, v);
        const SystemParams p = to_params(point);
        const double delta = point.delta ? *point.delta : optimize(point, p).delta_star;
        out.table.rows.push_back(analyze_row(point, p, throughput(p, delta)));
    }
    out.summary.push_back("swept " + spec.variable + " over " + std::to_string(spec.count) +
                          " points" + (c.delta || spec.variable == "delta" ? "" : " (optimal delta per point)"));
    if (!c.check) return out;

    const std::vector<double> mu = column(out.table, "mu");
    if (spec.variable == "delta") {
        const Shape s = shape_of(mu);
        out.check_passed = s.peaks <= 1 && s.rises_after_fall == 0;
        out.summary.push_back(out.check_passed ? "check passed: mu is unimodal in delta"
                                               : "check failed: mu is not unimodal in delta");
    } else if (spec.variable == "lambda_j") {
        out.check_passed = diminishing_returns(mu, out.summary);
        if (out.check_passed) out.summary.push_back("check passed: mu nondecreasing with diminishing increments");
    } else if (spec.variable == "lambda_e") {
        bool ok = true;
        for (std::size_t i = 1; i < mu.size(); ++i) ok = ok && mu[i] <= mu[i - 1] + kTrendZero;
        out.check_passed = ok;
        out.summary.push_back(ok ? "check passed: mu nonincreasing in lambda_e"
                                 : "check failed: mu increases with lambda_e");
    } else {
        out.summary.push_back("note: no trend check defined for " + spec.variable);
    }
    return out;
}

CommandOutput cmd_compare(const RunConfig& c) {
    const SweepSpec spec = resolve_sweep(c.sweep, "compare");
    if (spec.variable == "delta") throw ConfigError("compare sweeps a network parameter, not delta");
    CommandOutput out;
    out.table.header = {"lambda_j", "lambda_e", "p_j_dbm", "delta", "retention",
                        "mu_proposed", "mu_baseline", "gain"};
    bool dominated = true;
    for (const double v : sweep_grid(spec)) {
        RunConfig point = c;
        assign(point, spec.variable, v);
        const SystemParams p = to_params(point);
        const double delta = point.delta ? *point.delta : optimize(point, p).delta_star;
        const DesignPoint proposed = throughput(p, delta);
        const double retention = c.retention ? *c.retention : selection_probability(delta);
        const DesignPoint baseline = random_baseline_throughput(p, retention);
        verify_fixed_points(p, threshold_selection(delta, 2.0 / p.alpha()), proposed);
        verify_fixed_points(p, random_selection(retention, 2.0 / p.alpha()), baseline);
        dominated = dominated && proposed.mu >= baseline.mu - kTrendZero;
        out.table.rows.push_back({format_number(point.lambda_j), format_number(point.lambda_e),
                                  format_number(point.p_j_dbm), format_number(delta),
                                  format_number(retention), format_number(proposed.mu),
                                  format_number(baseline.mu), format_number(proposed.mu - baseline.mu)});
    }
    out.summary.push_back("compared threshold selection against random selection over " + spec.variable);
    if (c.check) {
        out.check_passed = dominated;
        out.summary.push_back(dominated ? "check passed: threshold selection never worse"
                                        : "check failed: random selection wins somewhere");
    }
    return out;
}

namespace {

std::string describe(std::string_view key) {
    static const std::map<std::string_view, std::string> help{
        {"p_s_dbm", "Alice transmit power [dBm]"},
        {"p_j_dbm", "per-jammer transmit power [dBm]"},
        {"n0_dbm", "noise power at Bob [dBm]"},
        {"d_m", "Alice-Bob distance [m]"},
        {"alpha", "path-loss exponent (> 2)"},
        {"lambda_j", "jammer density [1/m^2]"},
        {"lambda_e", "eavesdropper density [1/m^2]"},
        {"sigma", "connection outage budget"},
        {"epsilon", "secrecy outage budget"},
        {"delta", "jammer selection threshold"},
        {"sim_radius_m", "simulation window radius [m]"},
        {"sim_trials", "Monte Carlo trials"},
        {"sim_seed", "Monte Carlo base seed"},
        {"sweep_var", "delta | lambda_j | lambda_e | p_j_dbm"},
        {"sweep_start", "first sweep value"},
        {"sweep_stop", "last sweep value"},
        {"sweep_count", "number of sweep points"},
        {"sweep_scale", "linear | log"},
        {"out_path", "CSV destination (default or '-': standard output)"},
    };
    const auto it = help.find(key);
    return it == help.end() ? std::string() : it->second;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secrecy throughput of opportunistic jammer selection"};
    app.require_subcommand(1, 1);

    std::string config_path;
    app.add_option("--config", config_path, "flat key = value configuration file");

    std::map<std::string, std::string> settings;
    std::map<std::string, CLI::Option*> setting_opts;
    for (const std::string_view key : config_keys()) {
        std::string flag = "--" + std::string(key);
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (key == "sim_trials") flag += ",--trials";
        if (key == "sim_seed") flag += ",--seed";
        if (key == "sim_radius_m") flag += ",--radius";
        if (key == "out_path") flag += ",--out";
        setting_opts[std::string(key)] = app.add_option(flag, settings[std::string(key)], describe(key));
    }
    std::optional<double> beta_b, beta_e, retention, search_lo, search_hi;
    unsigned threads = 1;
    bool check = false;
    bool no_far_field = false;
    app.add_option("--beta-b", beta_b, "simulate: SINR threshold at Bob (default: analytic optimum)");
    app.add_option("--beta-e", beta_e, "simulate: SIR threshold at eavesdroppers (default: analytic optimum)");
    app.add_option("--retention", retention, "compare: random-selection retention (default: density matched)");
    app.add_option("--search-lo", search_lo, "lower end of the threshold search interval");
    app.add_option("--search-hi", search_hi, "upper end of the threshold search interval");
    app.add_option("--threads", threads, "simulation worker threads (0 = all cores)");
    app.add_flag("--check", check, "assert the expected trend of sweep/compare output");
    app.add_flag("--no-far-field", no_far_field, "simulate: disable the far-field interference term");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"analyze", "evaluate one threshold"},
        {"optimize", "find the throughput-maximizing threshold"},
        {"simulate", "Monte Carlo outage estimates against the closed forms"},
        {"sweep", "evaluate over a parameter grid"},
        {"compare", "threshold vs random jammer selection"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, help] : commands) {
        subs[name] = app.add_subcommand(name, help);
        subs[name]->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) apply_config_file(config, config_path);
        for (const std::string_view key : config_keys()) {
            const std::string k(key);
            if (setting_opts[k]->count() > 0) apply_setting(config, key, settings[k]);
        }
        config.beta_b = beta_b;
        config.beta_e = beta_e;
        config.retention = retention;
        if (search_lo) config.search_lo = *search_lo;
        if (search_hi) config.search_hi = *search_hi;
        config.sim.threads = threads;
        config.sim.far_field_correction = !no_far_field;
        config.check = check;

        CommandOutput result;
        if (subs["analyze"]->parsed()) result = cmd_analyze(config);
        else if (subs["optimize"]->parsed()) result = cmd_optimize(config);
        else if (subs["simulate"]->parsed()) result = cmd_simulate(config);
        else if (subs["sweep"]->parsed()) result = cmd_sweep(config);
        else result = cmd_compare(config);

        const std::string csv = to_csv(result.table);
        if (config.out_path.empty() || config.out_path == "-") {
            out << csv;
        } else {
            std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
            if (!file || !(file << csv) || !file.flush()) {
                throw IoError("cannot write '" + config.out_path + "'");
            }
        }
        for (const std::string& line : result.summary) err << line << '\n';
        return result.check_passed ? kOk : kCheckFailed;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::domain_error& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
}

} // namespace ojam::cli
