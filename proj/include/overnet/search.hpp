#ifndef OVERNET_SEARCH_HPP
#define OVERNET_SEARCH_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "overnet/network.hpp"
#include "overnet/semantic.hpp"

namespace overnet {

/// The three simulated strategies: flooding BFS, greedy guided forwarding,
/// and guided forwarding with per-hop topology rewiring.
enum class SearchMode { flood_bfs, guided, guided_adaptive };

struct SearchConfig {
    SearchMode mode;
};

/// Canonical names used on the CLI and in CSV output.
std::string mode_name(SearchMode mode);
std::optional<SearchMode> mode_from_name(const std::string& name);

/// One in-flight query. `visited` is carried by the message itself; search
/// entry points seed it with the originator.
struct SearchRequest {
    NodeId originator = 0;
    ResourceDescription target;
    double allowable_error = 0.0;
    unsigned hop_limit = 1;
    std::set<NodeId> visited;
};

struct SearchOutcome {
    bool success = false;
    std::optional<NodeId> matched_node;
    unsigned hops = 0;
    std::optional<int> achieved_distance;
    unsigned long long messages_sent = 0;
};

/// Hook invoked at a forwarding node just before the message leaves it;
/// the second argument is the forwarder, the third the chosen next hop.
using AdaptationPolicy = std::function<void(OverlayNetwork&, NodeId, NodeId)>;

/// Hop-limited flooding: explores the network level by level from the
/// originator (which is never itself a match candidate) and succeeds at the
/// first level containing a matching node, reporting the lowest-id match
/// there. messages_sent counts visited nodes excluding the originator.
SearchOutcome bfs_search(const OverlayNetwork& net, SearchRequest req);

/// Greedy single-message walk: each node on the path learns the originator's
/// and previous hop's descriptions, then forwards to a matching unvisited
/// neighbor if one exists (lowest id), else to the unvisited neighbor
/// semantically closest to the target (lowest id on ties). No backtracking;
/// dead ends and hop-budget exhaustion are failures. When `adapt` is given it
/// runs at every node that actually forwards, after the next hop is chosen.
SearchOutcome guided_search(OverlayNetwork& net, SearchRequest req,
                            const AdaptationPolicy& adapt = {},
                            std::vector<NodeId>* trace = nullptr);

/// Lets `node` learn that `peer` carries `desc`. Returns false (no mutation)
/// when peer is the node itself.
bool record_observation(NodeState& node, NodeId peer, const ResourceDescription& desc);

}  // namespace overnet

#endif
