#ifndef OVERNET_ADAPTATION_HPP
#define OVERNET_ADAPTATION_HPP

#include <optional>

#include "overnet/network.hpp"

namespace overnet {

/// One performed rewiring: `node` dropped its link to `dropped` and linked
/// to `added` instead. Both are present together or not at all.
struct RewiringAction {
    NodeId node = 0;
    std::optional<NodeId> dropped;
    std::optional<NodeId> added;
};

/// Neighbor of `a` whose description lies farthest from a's own, ties to the
/// highest id. `exclude` shields one neighbor from consideration. Absent when
/// a has no (other) neighbors.
std::optional<NodeId> worst_neighbor(const OverlayNetwork& net, NodeId a,
                                     std::optional<NodeId> exclude = std::nullopt);

/// Best rewiring target from a's peer cache: the cached entry closest to a's
/// description, ties to the lowest id, skipping current neighbors, a itself,
/// and nodes already at the connection cap. Absent when nothing qualifies.
std::optional<NodeId> best_candidate(const OverlayNetwork& net, NodeId a);

/// Swaps a's worst neighbor (never `protected_hop`) for its best cached
/// candidate, but only when the candidate is strictly closer and the removal
/// passes the min-degree guard. All-or-nothing: either the full swap happens
/// and the action is returned, or the network is untouched.
std::optional<RewiringAction> adapt_node(OverlayNetwork& net, NodeId a,
                                         NodeId protected_hop);

}  // namespace overnet

#endif
