#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ojam/model.hpp"
#include "ojam/montecarlo.hpp"

namespace ojam::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kConfigError = 2,
    kNumericalFailure = 3,
    kIoError = 4,
};

enum class SweepScale { Linear, Log };

struct SweepSpec {
    std::string variable;  ///< delta | lambda_j | lambda_e | p_j_dbm
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    SweepScale scale = SweepScale::Linear;
};

/// Sweep keys as given; unset fields fall back to the command's default grid
/// (lambda_j over [0.1, 1] for sweep, lambda_e over [1e-3, 1e-1] log for compare).
struct SweepSettings {
    std::optional<std::string> variable;
    std::optional<double> start;
    std::optional<double> stop;
    std::optional<int> count;
    std::optional<SweepScale> scale;
};

/// Everything a command needs. Powers are in dBm here and nowhere else.
struct RunConfig {
    double p_s_dbm = 20.0;
    double p_j_dbm = 30.0;
    double n0_dbm = -90.0;
    double d_m = 1.0;
    double alpha = 3.0;
    double lambda_j = 0.1;
    double lambda_e = 0.01;
    double sigma = 0.1;
    double epsilon = 0.01;
    std::optional<double> delta;
    mc::SimConfig sim;
    SweepSettings sweep;
    std::string out_path;  ///< empty = standard output

    // Command-line only.
    std::optional<double> beta_b;
    std::optional<double> beta_e;
    std::optional<double> retention;
    double search_lo = 1e-9;
    double search_hi = 20.0;
    bool check = false;
};

/// Keys accepted in a configuration file, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Applies one `key = value` assignment. Throws ConfigError on an unknown key
/// or a malformed value.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses flat `key = value` text; `#` starts a comment.
void apply_config_text(RunConfig& config, std::string_view text);

/// Reads and applies a configuration file. Throws IoError if unreadable.
void apply_config_file(RunConfig& config, const std::string& path);

/// Builds validated physical parameters (throws std::invalid_argument).
SystemParams to_params(const RunConfig& config);

/// Merges the given sweep settings over the default grid of `command`.
SweepSpec resolve_sweep(const SweepSettings& settings, std::string_view command);

/// Grid of sweep values: `count` points from start to stop inclusive.
std::vector<double> sweep_grid(const SweepSpec& spec);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// 12 significant digits; non-finite values are rejected.
std::string format_number(double value);
/// As format_number but maps infinities to `inf` / `-inf`.
std::string format_diagnostic(double value);
std::string to_csv(const Table& table);

struct CommandOutput {
    Table table;
    std::vector<std::string> summary;  ///< human-readable lines for stderr
    bool check_passed = true;
};

CommandOutput cmd_analyze(const RunConfig& config);
CommandOutput cmd_optimize(const RunConfig& config);
CommandOutput cmd_simulate(const RunConfig& config);
CommandOutput cmd_sweep(const RunConfig& config);
CommandOutput cmd_compare(const RunConfig& config);

/// Full command-line entry point: parses args (excluding the program name),
/// runs the subcommand, writes CSV to the configured destination or `out` and
/// the summary to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ojam::cli
