#include "overnet/adaptation.hpp"

namespace overnet {

std::optional<NodeId> worst_neighbor(const OverlayNetwork& net, NodeId a,
                                     std::optional<NodeId> exclude) {
    const NodeState& na = net.node(a);
    std::optional<NodeId> worst;
    int worst_dist = -1;
    for (NodeId v : na.neighbors) {
        if (exclude && v == *exclude) continue;
        int d = distance(na.description, net.description(v)).value();
        // >= over ascending ids leaves the highest id holding a tie.
        if (d >= worst_dist) {
            worst = v;
            worst_dist = d;
        }
    }
    return worst;
}

std::optional<NodeId> best_candidate(const OverlayNetwork& net, NodeId a) {
    const NodeState& na = net.node(a);
    std::optional<NodeId> best;
    int best_dist = kMaxDistance + 1;
    for (const auto& [peer, desc] : na.cache.entries()) {
        if (peer == a || na.neighbors.count(peer)) continue;
        if (net.degree(peer) >= net.max_connections()) continue;
        int d = distance(na.description, desc).value();
        // Strict < over ascending ids leaves the lowest id holding a tie.
        if (d < best_dist) {
            best = peer;
            best_dist = d;
        }
    }
    return best;
}

std::optional<RewiringAction> adapt_node(OverlayNetwork& net, NodeId a,
                                         NodeId protected_hop) {
    std::optional<NodeId> w = worst_neighbor(net, a, protected_hop);
    std::optional<NodeId> c = best_candidate(net, a);
    if (!w || !c) return std::nullopt;

    const ResourceDescription& own = net.description(a);
    if (distance(own, net.description(*c)) >= distance(own, net.description(*w)))
        return std::nullopt;

    if (!net.remove_link(a, *w)) return std::nullopt;
    if (!net.add_link(a, *c)) {
        net.add_link(a, *w);  // restore, keeping the operation all-or-nothing
        return std::nullopt;
    }
    return RewiringAction{a, w, c};
}

}  // namespace overnet
