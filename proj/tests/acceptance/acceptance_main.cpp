// Acceptance gate for the simulator: each criterion is an end-to-end check
// with a wall-clock budget, runnable one at a time (--criterion N) or all
// together. Prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "overnet/adaptation.hpp"
#include "overnet/experiment.hpp"
#include "overnet/metrics.hpp"
#include "overnet/network.hpp"
#include "overnet/search.hpp"
#include "overnet/semantic.hpp"

using namespace overnet;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

// ---------------------------------------------------------------- criterion 1

Check formula_suite() {
    Check c;
    std::vector<ResourceDescription> all;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int d = 0; d <= 4; ++d) all.emplace_back(a, b, d);

    long long pairs = 0;
    for (const auto& x : all) {
        for (const auto& y : all) {
            ++pairs;
            int expect =
                std::abs(x[0] - y[0]) + std::abs(x[1] - y[1]) + std::abs(x[2] - y[2]);
            if (distance(x, y).value() != expect) {
                c.fail("distance mismatch at " + x.to_string() + " / " + y.to_string());
                return c;
            }
            double sim = similarity(x, y).percent();
            double expect_sim = (12.0 - expect) / 12.0 * 100.0;
            if (std::fabs(sim - expect_sim) > 1e-12) {
                c.fail("similarity mismatch at " + x.to_string() + " / " + y.to_string());
                return c;
            }
        }
    }
    if (pairs != 15625) c.fail("expected 15625 pairs, saw " + std::to_string(pairs));

    ResourceDescription zero(0, 0, 0), far(4, 4, 4);
    if (similarity(zero, zero).percent() != 100.0) c.fail("identical pair is not 100%");
    if (similarity(zero, far).percent() != 0.0) c.fail("maximal pair is not 0%");
    if (c.ok) c.detail = "15625 pairs, endpoints exact";
    return c;
}

// ---------------------------------------------------------------- criterion 2

Check bfs_oracle() {
    Check c;
    long long mismatches = 0;
    long long requests = 0;

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        auto net = OverlayNetwork::generate_random(50, 8, rng);
        Rng req_rng(seed * 7919 + 1);
        std::uniform_int_distribution<NodeId> origin(0, 49);
        std::uniform_int_distribution<int> err(0, 12);

        for (int i = 0; i < 20; ++i) {
            SearchRequest req;
            req.originator = origin(req_rng);
            req.target = random_description(req_rng);
            req.allowable_error = err(req_rng);
            req.hop_limit = 10;
            ++requests;

            // Independent oracle: plain queue BFS distances.
            std::vector<int> dist(net.size(), -1);
            std::queue<NodeId> q;
            dist[req.originator] = 0;
            q.push(req.originator);
            while (!q.empty()) {
                NodeId u = q.front();
                q.pop();
                for (NodeId v : net.neighbors(u))
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        q.push(v);
                    }
            }
            int oracle_hops = -1;
            for (NodeId v = 0; v < net.size(); ++v) {
                if (v == req.originator || dist[v] < 0 || dist[v] > 10) continue;
                if (distance(req.target, net.description(v)).value() >
                    req.allowable_error)
                    continue;
                if (oracle_hops < 0 || dist[v] < oracle_hops) oracle_hops = dist[v];
            }

            auto out = bfs_search(net, req);
            bool agree = out.success == (oracle_hops >= 0) &&
                         (!out.success || static_cast<int>(out.hops) == oracle_hops);
            if (!agree) ++mismatches;
        }
    }

    if (mismatches != 0)
        c.fail(std::to_string(mismatches) + " mismatches over " +
               std::to_string(requests) + " requests");
    else
        c.detail = "0 mismatches over " + std::to_string(requests) + " requests";
    return c;
}

// ---------------------------------------------------------------- criterion 3

bool structure_ok(const OverlayNetwork& net) {
    for (NodeId u = 0; u < net.size(); ++u) {
        const auto& nbrs = net.neighbors(u);
        if (net.size() > 1 && nbrs.empty()) return false;
        if (nbrs.size() > net.max_connections()) return false;
        for (NodeId v : nbrs) {
            if (v == u) return false;
            if (!net.neighbors(v).count(u)) return false;
        }
    }
    return true;
}

Check graph_invariants() {
    Check c;
    long long ops = 0;
    for (std::uint64_t seq = 0; seq < 10000; ++seq) {
        Rng rng(seq);
        std::uniform_int_distribution<std::size_t> size_dist(2, 30);
        std::uniform_int_distribution<std::size_t> cap_dist(2, 8);
        std::size_t n = size_dist(rng);
        std::size_t cap = cap_dist(rng);
        auto net = OverlayNetwork::generate_random(n, cap, rng);

        std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
        for (NodeId v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) {
                NodeId peer = node(rng);
                if (peer != v)
                    record_observation(net.node(v), peer, net.description(peer));
            }

        std::uniform_int_distribution<int> op_dist(0, 2);
        for (int i = 0; i < 25; ++i) {
            ++ops;
            int op = op_dist(rng);
            NodeId a = node(rng);
            NodeId b = node(rng);
            if (op == 0) {
                if (a != b) net.add_link(a, b);
            } else if (op == 1) {
                net.remove_link(a, b);
            } else {
                const auto& nbrs = net.neighbors(a);
                if (!nbrs.empty()) {
                    std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
                    NodeId protected_hop = *std::next(nbrs.begin(), pick(rng));
                    adapt_node(net, a, protected_hop);
                }
            }
            if (!structure_ok(net)) {
                c.fail("invariant violated, sequence " + std::to_string(seq) +
                       ", op " + std::to_string(i));
                return c;
            }
        }
    }
    c.detail = "10000 sequences, " + std::to_string(ops) + " ops";
    return c;
}

// ---------------------------------------------------------------- criterion 4

Check trend_reproduction() {
    Check c;
    ExperimentConfig cfg;
    cfg.error_levels = {1.0, 2.0, 3.0, 4.0};
    cfg.replications = 20;
    cfg.seed = 0;
    cfg.snapshot_nodes = 0;

    auto report = run_experiment(cfg).report;
    std::map<std::pair<int, double>, MetricsRow> rows;
    for (const auto& row : report.finalize())
        rows[{static_cast<int>(row.mode), row.allowable_error}] = row;

    std::printf("    %-6s %-12s %-12s %-12s %-10s %-10s\n", "level", "fr(config1)",
                "fr(config2)", "fr(config3)", "h(config1)", "h(config3)");
    int strict32 = 0, strict21 = 0;
    bool chain_ok = true, hops_ok = true;
    for (double level : cfg.error_levels) {
        const auto& r1 = rows.at({0, level});
        const auto& r2 = rows.at({1, level});
        const auto& r3 = rows.at({2, level});
        std::printf("    %-6g %-12.6f %-12.6f %-12.6f %-10.4f %-10.4f\n", level,
                    r1.failure_ratio, r2.failure_ratio, r3.failure_ratio,
                    r1.avg_success_hops, r3.avg_success_hops);
        if (!(r3.failure_ratio <= r2.failure_ratio &&
              r2.failure_ratio <= r1.failure_ratio))
            chain_ok = false;
        if (r3.failure_ratio < r2.failure_ratio) ++strict32;
        if (r2.failure_ratio < r1.failure_ratio) ++strict21;
        if (!(r3.avg_success_hops <= r1.avg_success_hops)) hops_ok = false;
    }

    if (!chain_ok) c.fail("failure-ratio chain config3 <= config2 <= config1 broken");
    if (strict32 < 3)
        c.fail("config3 < config2 strict on " + std::to_string(strict32) + "/4 levels");
    if (strict21 < 3)
        c.fail("config2 < config1 strict on " + std::to_string(strict21) + "/4 levels");
    if (!hops_ok) c.fail("success-hop chain config3 <= config1 broken");
    if (c.ok) c.detail = "all trend legs hold";
    return c;
}

// ---------------------------------------------------------------- criterion 5

Check homophily_snapshot() {
    Check c;
    int strict = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SnapshotParams params{50, 15, 50, 10, 0.0, seed};
        auto snap = run_snapshot_pass(params);
        if (snap.adapted_mean_distance > snap.initial_mean_distance) {
            c.fail("mean distance rose for seed " + std::to_string(seed));
            return c;
        }
        if (snap.adapted_mean_distance < snap.initial_mean_distance) ++strict;
    }
    if (strict < 18)
        c.fail("strict decrease in only " + std::to_string(strict) + "/20 runs");
    else
        c.detail = "strict decrease in " + std::to_string(strict) + "/20 runs";
    return c;
}

// ---------------------------------------------------------------- criterion 6

std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

Check determinism() {
    Check c;
    auto dir = std::filesystem::temp_directory_path();

    std::vector<std::string> outputs[2];
    for (int round = 0; round < 2; ++round) {
        std::string tag = "overnet_accept_" + std::to_string(round);
        auto csv = (dir / (tag + ".csv")).string();
        auto prefix = (dir / (tag + "_topo")).string();
        std::vector<std::string> args = {
            "--num-nodes", "60",        "--max-connections",   "8",
            "--requests-per-node", "3", "--error-levels",      "0,3,6",
            "--replications", "2",      "--seed",              "97",
            "--snapshot-nodes", "25",   "--out-csv",           csv,
            "--out-dot-prefix", prefix};
        std::ostringstream out, err;
        if (run_cli(args, out, err) != 0) {
            c.fail("run " + std::to_string(round) + " exited nonzero: " + err.str());
            return c;
        }
        outputs[round] = {slurp(csv), slurp(prefix + "-initial.dot"),
                          slurp(prefix + "-adapted.dot")};
        std::filesystem::remove(csv);
        std::filesystem::remove(prefix + "-initial.dot");
        std::filesystem::remove(prefix + "-adapted.dot");
        if (outputs[round][0].empty() || outputs[round][1].empty() ||
            outputs[round][2].empty()) {
            c.fail("run " + std::to_string(round) + " produced an empty output file");
            return c;
        }
    }

    const char* names[3] = {"csv", "initial dot", "adapted dot"};
    for (int k = 0; k < 3; ++k)
        if (outputs[0][k] != outputs[1][k])
            c.fail(std::string(names[k]) + " differs between identical invocations");
    if (c.ok) c.detail = "csv and both dot files byte-identical";
    return c;
}

// ---------------------------------------------------------------- criterion 7

Check threshold_monotonicity() {
    Check c;
    ExperimentConfig cfg;
    cfg.configs = {SearchMode::flood_bfs};
    cfg.seed = 11;
    cfg.snapshot_nodes = 0;

    for (std::size_t rep = 0; rep < 20; ++rep) {
        auto rows = run_replication(cfg, rep).finalize();
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].failure_ratio > rows[i - 1].failure_ratio) {
                c.fail("replication " + std::to_string(rep) + ": ratio rises from level " +
                       std::to_string(rows[i - 1].allowable_error));
                return c;
            }
        }
    }
    c.detail = "non-increasing across 0..6 in all 20 replications";
    return c;
}

// --------------------------------------------------------------------- driver

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = no stated budget
    Check (*run)();
};

const Criterion kCriteria[] = {
    {1, "formula suite", 1.0, formula_suite},
    {2, "flooding against shortest-path oracle", 30.0, bfs_oracle},
    {3, "graph invariant suite", 10.0, graph_invariants},
    {4, "trend reproduction", 600.0, trend_reproduction},
    {5, "homophily snapshot", 30.0, homophily_snapshot},
    {6, "determinism", 0.0, determinism},
    {7, "threshold monotonicity", 0.0, threshold_monotonicity},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& criterion : kCriteria) {
        if (selected != 0 && criterion.id != selected) continue;

        auto start = std::chrono::steady_clock::now();
        Check result = criterion.run();
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();

        if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds)
            result.fail("exceeded " + std::to_string(criterion.budget_seconds) +
                        "s budget");

        std::printf("criterion %d (%s): %s (%.2fs)%s%s\n", criterion.id, criterion.name,
                    result.ok ? "PASS" : "FAIL", elapsed,
                    result.detail.empty() ? "" : " - ", result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
