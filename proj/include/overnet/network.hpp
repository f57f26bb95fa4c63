#ifndef OVERNET_NETWORK_HPP
#define OVERNET_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "overnet/rng.hpp"
#include "overnet/semantic.hpp"

namespace overnet {

using NodeId = std::uint32_t;

/// Bounded store of descriptions a node has learned about remote peers.
/// Capacity is 2x the owner's connection cap; when full, the entry whose
/// description lies farthest from the owner's own description is evicted,
/// so the cache drifts toward semantically close peers.
class PeerCache {
public:
    explicit PeerCache(std::size_t capacity) : capacity_(capacity) {}

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return entries_.size(); }

    bool contains(NodeId peer) const { return entries_.count(peer) != 0; }

    std::optional<ResourceDescription> lookup(NodeId peer) const {
        auto it = entries_.find(peer);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<NodeId, ResourceDescription>& entries() const { return entries_; }

    /// Records (or refreshes) what the owner knows about `peer`. If the cache
    /// overflows, the entry farthest from `owner_desc` is dropped: the
    /// newcomer when it is strictly farther than every incumbent, otherwise
    /// the highest-id farthest incumbent (so an insertion wins ties).
    void observe(NodeId peer, const ResourceDescription& desc,
                 const ResourceDescription& owner_desc) {
        if (capacity_ == 0) return;
        entries_[peer] = desc;
        if (entries_.size() <= capacity_) return;

        auto victim = entries_.end();
        int victim_dist = -1;
        for (auto it = entries_.begin(); it != entries_.end(); ++it) {
            if (it->first == peer) continue;
            int d = distance(it->second, owner_desc).value();
            if (d >= victim_dist) {
                victim = it;
                victim_dist = d;
            }
        }
        if (distance(desc, owner_desc).value() > victim_dist)
            entries_.erase(peer);
        else
            entries_.erase(victim);
    }

    void erase(NodeId peer) { entries_.erase(peer); }

private:
    std::size_t capacity_;
    std::map<NodeId, ResourceDescription> entries_;
};

/// One overlay participant: its own description, its current neighbor set,
/// and its peer cache.
struct NodeState {
    NodeState(NodeId id_, ResourceDescription desc_, std::size_t cache_capacity)
        : id(id_), description(desc_), cache(cache_capacity) {}

    NodeId id;
    ResourceDescription description;
    std::set<NodeId> neighbors;
    PeerCache cache;
};

/// Undirected overlay graph over a fixed node population. Edges are
/// symmetric, self-loops are rejected, each node holds at most
/// `max_connections` links, and no node is ever left with zero links once
/// connected.
class OverlayNetwork {
public:
    /// Builds a network with the given descriptions and no links.
    OverlayNetwork(std::vector<ResourceDescription> descriptions,
                   std::size_t max_connections);

    /// Samples a connected random topology: a uniform spanning tree under the
    /// degree cap, then `num_nodes` extra random links where capacity allows.
    static OverlayNetwork generate_random(std::size_t num_nodes,
                                          std::size_t max_connections, Rng& rng);

    std::size_t size() const { return nodes_.size(); }
    std::size_t max_connections() const { return max_connections_; }
    std::size_t edge_count() const { return edge_count_; }

    const NodeState& node(NodeId id) const { return checked(id); }
    NodeState& node(NodeId id) { return checked(id); }

    const ResourceDescription& description(NodeId id) const {
        return checked(id).description;
    }
    const std::set<NodeId>& neighbors(NodeId id) const { return checked(id).neighbors; }
    std::size_t degree(NodeId id) const { return checked(id).neighbors.size(); }

    /// Adds the undirected link {a, b}. Returns false when the link already
    /// exists or either endpoint is at its connection cap. Throws on a == b
    /// or an unknown id.
    bool add_link(NodeId a, NodeId b);

    /// Removes the undirected link {a, b}. Returns false when the link does
    /// not exist or removing it would leave either endpoint with no links.
    bool remove_link(NodeId a, NodeId b);

    bool has_link(NodeId a, NodeId b) const;

    /// Mean semantic distance between link endpoints, over every link.
    /// A network without links has no defined value.
    std::optional<double> mean_neighbor_distance() const;

    /// Graphviz rendering of the current topology; stable ordering makes the
    /// output byte-for-byte reproducible.
    std::string export_dot() const;

private:
    const NodeState& checked(NodeId id) const;
    NodeState& checked(NodeId id);

    std::vector<NodeState> nodes_;
    std::size_t max_connections_;
    std::size_t edge_count_ = 0;
};

}  // namespace overnet

#endif
