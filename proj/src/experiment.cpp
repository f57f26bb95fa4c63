#include "overnet/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "overnet/adaptation.hpp"
#include "overnet/network.hpp"
#include "overnet/rng.hpp"

namespace overnet {

namespace {

// Stream tags; any fixed distinct constants do, these spell out their role.
constexpr std::uint64_t kTopologyStream = 0x746f706f;
constexpr std::uint64_t kScheduleStream = 0x73636865;
constexpr std::uint64_t kSnapshotStream = 0x736e6170;

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<ResourceDescription> make_schedule(std::size_t num_nodes,
                                               std::size_t requests_per_node,
                                               std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ResourceDescription> targets;
    targets.reserve(num_nodes * requests_per_node);
    // Generated in execution order: round-robin over originators.
    for (std::size_t round = 0; round < requests_per_node; ++round)
        for (std::size_t node = 0; node < num_nodes; ++node)
            targets.push_back(random_description(rng));
    return targets;
}

}  // namespace

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    ExperimentConfig cfg;
    std::vector<std::string> config_names = {"config1", "config2", "config3"};

    CLI::App app{"Overlay network search simulator", "overnet-sim"};
    app.set_config("--config", "", "Read key = value configuration from FILE");
    app.allow_config_extras(false);

    constexpr auto kMaxSize = std::numeric_limits<std::size_t>::max();
    app.add_option("--num-nodes", cfg.num_nodes, "Number of overlay nodes")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{2}, kMaxSize));
    app.add_option("--max-connections", cfg.max_connections,
                   "Connection cap per node")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, kMaxSize));
    app.add_option("--requests-per-node", cfg.requests_per_node,
                   "Requests each node originates")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, kMaxSize));
    app.add_option("--hop-limit", cfg.hop_limit, "Hop budget per request")
        ->capture_default_str()
        ->check(CLI::Range(1u, std::numeric_limits<unsigned>::max()));
    app.add_option("--error-levels", cfg.error_levels,
                   "Comma-separated allowable-error levels, ascending, each in [0,12]")
        ->delimiter(',')
        ->capture_default_str()
        ->check(CLI::Range(0.0, 12.0));
    app.add_option("--configs", config_names,
                   "Comma-separated subset of config1,config2,config3")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--replications", cfg.replications, "Independent replications")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, kMaxSize));
    app.add_option("--seed", cfg.seed, "Base RNG seed")->capture_default_str();
    app.add_option("--snapshot-nodes", cfg.snapshot_nodes,
                   "Node count of the before/after snapshot pass (0 disables)")
        ->capture_default_str();
    app.add_option("--out-csv", cfg.out_csv, "Write metrics CSV to PATH");
    app.add_option("--out-dot-prefix", cfg.out_dot_prefix,
                   "Write <prefix>-initial.dot and <prefix>-adapted.dot");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (cfg.error_levels.empty()) throw UsageError("--error-levels: list is empty");
    for (std::size_t i = 1; i < cfg.error_levels.size(); ++i)
        if (cfg.error_levels[i] <= cfg.error_levels[i - 1])
            throw UsageError("--error-levels: values must be strictly ascending");

    if (config_names.empty()) throw UsageError("--configs: list is empty");
    std::vector<SearchMode> modes;
    for (const std::string& name : config_names) {
        auto mode = mode_from_name(name);
        if (!mode) throw UsageError("--configs: unknown configuration '" + name + "'");
        if (std::find(modes.begin(), modes.end(), *mode) == modes.end())
            modes.push_back(*mode);
    }
    std::sort(modes.begin(), modes.end());
    cfg.configs = std::move(modes);

    if (cfg.max_connections == 1 && cfg.num_nodes > 2)
        throw UsageError(
            "--max-connections: a cap of 1 cannot connect more than two nodes");
    if (!cfg.out_dot_prefix.empty() && cfg.snapshot_nodes == 0)
        throw UsageError("--out-dot-prefix: requires --snapshot-nodes greater than 0");
    if (cfg.snapshot_nodes == 1 ||
        (cfg.max_connections == 1 && cfg.snapshot_nodes > 2))
        throw UsageError("--snapshot-nodes: value cannot form a connected topology");

    return cfg;
}

MetricsReport run_replication(const ExperimentConfig& cfg, std::size_t rep) {
    const std::uint64_t rep_seed = mix_seed(cfg.seed, rep);
    MetricsReport report;

    for (SearchMode mode : cfg.configs) {
        for (double level : cfg.error_levels) {
            try {
                // Same two streams for every (mode, level): each cell starts
                // from an identical topology and request schedule.
                Rng topo_rng(mix_seed(rep_seed, kTopologyStream));
                OverlayNetwork net = OverlayNetwork::generate_random(
                    cfg.num_nodes, cfg.max_connections, topo_rng);
                std::vector<ResourceDescription> targets = make_schedule(
                    cfg.num_nodes, cfg.requests_per_node, mix_seed(rep_seed, kScheduleStream));

                const CellKey key{mode, level};
                std::size_t t = 0;
                for (std::size_t round = 0; round < cfg.requests_per_node; ++round) {
                    for (std::size_t origin = 0; origin < cfg.num_nodes; ++origin, ++t) {
                        SearchRequest req;
                        req.originator = static_cast<NodeId>(origin);
                        req.target = targets[t];
                        req.allowable_error = level;
                        req.hop_limit = cfg.hop_limit;

                        if (mode == SearchMode::flood_bfs) {
                            report.record_outcome(key, bfs_search(net, req));
                        } else if (mode == SearchMode::guided) {
                            report.record_outcome(key, guided_search(net, req));
                        } else {
                            std::uint64_t swaps = 0;
                            auto policy = [&swaps](OverlayNetwork& n, NodeId at,
                                                   NodeId next) {
                                if (adapt_node(n, at, next)) ++swaps;
                            };
                            report.record_outcome(key, guided_search(net, req, policy),
                                                  swaps);
                        }
                    }
                }
            } catch (const std::exception& e) {
                throw std::runtime_error("replication " + std::to_string(rep) + ", " +
                                         mode_name(mode) + ", error level " +
                                         fmt6(level) + ": " + e.what());
            }
        }
    }
    return report;
}

SnapshotPair run_snapshot_pass(const SnapshotParams& params) {
    Rng topo_rng(mix_seed(params.seed, kTopologyStream));
    OverlayNetwork net = OverlayNetwork::generate_random(params.num_nodes,
                                                         params.max_connections, topo_rng);
    SnapshotPair snap;
    snap.initial_dot = net.export_dot();
    snap.initial_mean_distance = net.mean_neighbor_distance().value_or(0.0);

    std::vector<ResourceDescription> targets = make_schedule(
        params.num_nodes, params.requests_per_node, mix_seed(params.seed, kScheduleStream));
    auto policy = [&snap](OverlayNetwork& n, NodeId at, NodeId next) {
        if (adapt_node(n, at, next)) ++snap.swaps;
    };

    std::size_t t = 0;
    for (std::size_t round = 0; round < params.requests_per_node; ++round) {
        for (std::size_t origin = 0; origin < params.num_nodes; ++origin, ++t) {
            SearchRequest req;
            req.originator = static_cast<NodeId>(origin);
            req.target = targets[t];
            req.allowable_error = params.allowable_error;
            req.hop_limit = params.hop_limit;
            guided_search(net, req, policy);
        }
    }

    snap.adapted_dot = net.export_dot();
    snap.adapted_mean_distance = net.mean_neighbor_distance().value_or(0.0);
    return snap;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult result;
    for (std::size_t rep = 0; rep < cfg.replications; ++rep)
        result.report.merge(run_replication(cfg, rep));

    if (cfg.snapshot_nodes > 0) {
        SnapshotParams params;
        params.num_nodes = cfg.snapshot_nodes;
        params.max_connections = cfg.max_connections;
        params.requests_per_node = cfg.requests_per_node;
        params.hop_limit = cfg.hop_limit;
        // Exact-match traffic keeps walks long, which maximizes learning and
        // rewiring pressure for the showcase.
        params.allowable_error = 0.0;
        params.seed = mix_seed(cfg.seed, kSnapshotStream);
        result.snapshot = run_snapshot_pass(params);
    }
    return result;
}

std::string csv_string(const MetricsReport& report) {
    std::ostringstream out;
    out << "config,allowable_error,mean_average_error,avg_success_hops,failure_ratio,"
           "swaps,successes,total\n";
    for (const MetricsRow& row : report.finalize()) {
        out << mode_name(row.mode) << ',' << fmt6(row.allowable_error) << ',';
        if (row.defined)
            out << fmt6(row.mean_average_error) << ',' << fmt6(row.avg_success_hops);
        else
            out << "NA,NA";
        out << ',' << fmt6(row.failure_ratio) << ',' << row.swaps << ','
            << row.successes << ',' << row.total << '\n';
    }
    return out.str();
}

void emit_csv(const MetricsReport& report, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << csv_string(report);
    file.flush();
    if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << content;
    file.flush();
    if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const HelpRequested& help) {
        out << help.text;
        return 0;
    } catch (const UsageError& e) {
        err << "overnet-sim: " << e.what() << "\n";
        return 2;
    }

    try {
        ExperimentResult result = run_experiment(cfg);
        if (cfg.out_csv.empty())
            out << csv_string(result.report);
        else
            emit_csv(result.report, cfg.out_csv);
        if (!cfg.out_dot_prefix.empty() && result.snapshot) {
            write_file(cfg.out_dot_prefix + "-initial.dot", result.snapshot->initial_dot);
            write_file(cfg.out_dot_prefix + "-adapted.dot", result.snapshot->adapted_dot);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "overnet-sim: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace overnet
