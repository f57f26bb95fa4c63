#ifndef OVERNET_EXPERIMENT_HPP
#define OVERNET_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "overnet/metrics.hpp"
#include "overnet/search.hpp"

namespace overnet {

/// Full parameterization of one simulation run. Defaults correspond to the
/// reference scenario: 300 nodes, 15-connection cap, 50 requests per node,
/// 10-hop budget, integer error levels 0 through 6, all three configs.
struct ExperimentConfig {
    std::size_t num_nodes = 300;
    std::size_t max_connections = 15;
    std::size_t requests_per_node = 50;
    unsigned hop_limit = 10;
    std::vector<double> error_levels = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    std::vector<SearchMode> configs = {SearchMode::flood_bfs, SearchMode::guided,
                                       SearchMode::guided_adaptive};
    std::size_t replications = 1;
    std::uint64_t seed = 0;
    std::size_t snapshot_nodes = 50;  // 0 disables the snapshot pass
    std::string out_csv;              // empty: CSV goes to stdout
    std::string out_dot_prefix;       // empty: snapshots are not written
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by parse_config when --help is requested; carries the help text.
struct HelpRequested {
    std::string text;
};

/// Parses command-line tokens (without the program name). A `--config FILE`
/// of key = value lines supplies defaults that explicit flags override.
/// Throws UsageError on malformed, out-of-range, or unknown input.
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Inputs of the small self-adaptation showcase run.
struct SnapshotParams {
    std::size_t num_nodes;
    std::size_t max_connections;
    std::size_t requests_per_node;
    unsigned hop_limit;
    double allowable_error;
    std::uint64_t seed;
};

/// Topology renderings taken before and after a guided-adaptive run, plus the
/// matching mean neighbor distances and the number of performed swaps.
struct SnapshotPair {
    std::string initial_dot;
    std::string adapted_dot;
    double initial_mean_distance = 0.0;
    double adapted_mean_distance = 0.0;
    std::uint64_t swaps = 0;
};

struct ExperimentResult {
    MetricsReport report;
    std::optional<SnapshotPair> snapshot;
};

/// One full sweep for replication index `rep`: per (config, error level), a
/// fresh topology and request schedule are derived from the replication seed
/// (identical across cells, so the three configs compare like for like) and
/// every node's requests run in round-robin order.
MetricsReport run_replication(const ExperimentConfig& cfg, std::size_t rep);

/// Runs a guided-adaptive pass on a small network and captures before/after
/// topology snapshots.
SnapshotPair run_snapshot_pass(const SnapshotParams& params);

/// All replications merged, plus the snapshot pass when enabled.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// CSV rendering of a finalized report: fixed header, one row per cell,
/// six-significant-digit numbers, NA for aggregates of zero successes.
std::string csv_string(const MetricsReport& report);

/// Writes csv_string(report) to `path`. Throws on I/O failure.
void emit_csv(const MetricsReport& report, const std::string& path);

/// Complete CLI entry point: parse, run, write outputs. Returns the process
/// exit code; diagnostics go to `err`, help and stdout-CSV to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overnet

#endif
