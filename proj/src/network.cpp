#include "overnet/network.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace overnet {

OverlayNetwork::OverlayNetwork(std::vector<ResourceDescription> descriptions,
                               std::size_t max_connections)
    : max_connections_(max_connections) {
    if (descriptions.empty()) throw std::invalid_argument("network needs at least one node");
    if (max_connections == 0)
        throw std::invalid_argument("max_connections must be positive");
    nodes_.reserve(descriptions.size());
    for (std::size_t i = 0; i < descriptions.size(); ++i) {
        // Cache capacity is twice the connection cap.
        nodes_.emplace_back(static_cast<NodeId>(i), descriptions[i], 2 * max_connections);
    }
}

const NodeState& OverlayNetwork::checked(NodeId id) const {
    if (id >= nodes_.size()) throw std::out_of_range("unknown node id");
    return nodes_[id];
}

NodeState& OverlayNetwork::checked(NodeId id) {
    if (id >= nodes_.size()) throw std::out_of_range("unknown node id");
    return nodes_[id];
}

bool OverlayNetwork::add_link(NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    NodeState& na = checked(a);
    NodeState& nb = checked(b);
    if (na.neighbors.count(b)) return false;
    if (na.neighbors.size() >= max_connections_ || nb.neighbors.size() >= max_connections_)
        return false;
    na.neighbors.insert(b);
    nb.neighbors.insert(a);
    ++edge_count_;
    return true;
}

bool OverlayNetwork::remove_link(NodeId a, NodeId b) {
    if (a == b) return false;
    NodeState& na = checked(a);
    NodeState& nb = checked(b);
    if (!na.neighbors.count(b)) return false;
    // Never disconnect a node entirely.
    if (na.neighbors.size() == 1 || nb.neighbors.size() == 1) return false;
    na.neighbors.erase(b);
    nb.neighbors.erase(a);
    --edge_count_;
    return true;
}

bool OverlayNetwork::has_link(NodeId a, NodeId b) const {
    if (a == b) return false;
    return checked(a).neighbors.count(b) != 0;
}

std::optional<double> OverlayNetwork::mean_neighbor_distance() const {
    if (edge_count_ == 0) return std::nullopt;
    long long total = 0;
    for (const NodeState& n : nodes_)
        for (NodeId m : n.neighbors)
            if (n.id < m) total += distance(n.description, nodes_[m].description).value();
    return static_cast<double>(total) / static_cast<double>(edge_count_);
}

std::string OverlayNetwork::export_dot() const {
    std::ostringstream out;
    out << "graph overlay {\n";
    for (const NodeState& n : nodes_)
        out << "  n" << n.id << " [label=\"" << n.description.to_string() << "\"];\n";
    for (const NodeState& n : nodes_)
        for (NodeId m : n.neighbors)
            if (n.id < m) out << "  n" << n.id << " -- n" << m << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

// Degree sequence implied by a Prufer sequence: each node appears once as a
// leaf slot plus once per occurrence in the sequence.
bool prufer_respects_cap(const std::vector<NodeId>& prufer, std::size_t n,
                         std::size_t cap) {
    std::vector<std::size_t> deg(n, 1);
    for (NodeId v : prufer) {
        if (++deg[v] > cap) return false;
    }
    return true;
}

std::vector<std::pair<NodeId, NodeId>> tree_from_prufer(const std::vector<NodeId>& prufer,
                                                        std::size_t n) {
    std::vector<std::size_t> deg(n, 1);
    for (NodeId v : prufer) ++deg[v];

    std::set<NodeId> leaves;
    for (NodeId v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n - 1);
    for (NodeId v : prufer) {
        NodeId leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1) leaves.insert(v);
    }
    NodeId u = *leaves.begin();
    NodeId w = *std::next(leaves.begin());
    edges.emplace_back(u, w);
    return edges;
}

// Random tree that respects the degree cap, built by attaching each node to a
// uniformly chosen earlier node that still has spare capacity. Used when
// rejection sampling over Prufer sequences keeps failing (tight caps).
std::vector<std::pair<NodeId, NodeId>> capped_attachment_tree(std::size_t n,
                                                              std::size_t cap, Rng& rng) {
    std::vector<std::size_t> deg(n, 0);
    std::vector<NodeId> open;  // nodes with spare capacity, kept sorted
    open.push_back(0);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n - 1);
    for (NodeId v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        std::size_t slot = pick(rng);
        NodeId parent = open[slot];
        edges.emplace_back(parent, v);
        ++deg[parent];
        ++deg[v];
        if (deg[parent] >= cap) open.erase(open.begin() + static_cast<long>(slot));
        if (deg[v] < cap) open.push_back(v);
    }
    return edges;
}

}  // namespace

OverlayNetwork OverlayNetwork::generate_random(std::size_t num_nodes,
                                               std::size_t max_connections, Rng& rng) {
    // Min-degree 1 needs a peer, so a generated network has at least two nodes.
    if (num_nodes < 2) throw std::invalid_argument("generation needs at least two nodes");
    if (max_connections == 0)
        throw std::invalid_argument("max_connections must be positive");
    if (max_connections == 1 && num_nodes > 2)
        throw std::invalid_argument(
            "max_connections = 1 cannot connect more than two nodes");

    std::vector<ResourceDescription> descs;
    descs.reserve(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i) descs.push_back(random_description(rng));
    OverlayNetwork net(std::move(descs), max_connections);

    const std::size_t n = num_nodes;

    // Spanning tree first, so the network starts connected.
    std::vector<std::pair<NodeId, NodeId>> tree_edges;
    if (n == 2) {
        tree_edges.emplace_back(0, 1);
    } else {
        bool found = false;
        std::uniform_int_distribution<NodeId> any_node(0, static_cast<NodeId>(n - 1));
        for (int attempt = 0; attempt < 100 && !found; ++attempt) {
            std::vector<NodeId> prufer(n - 2);
            if (max_connections == 2) {
                // A cap of 2 admits only paths; their Prufer sequences are
                // exactly those with all-distinct symbols, so sample one
                // directly instead of rejecting almost everything.
                std::vector<NodeId> pool(n);
                for (NodeId v = 0; v < n; ++v) pool[v] = v;
                for (std::size_t i = 0; i < n - 2; ++i) {
                    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
                    std::swap(pool[i], pool[pick(rng)]);
                    prufer[i] = pool[i];
                }
            } else {
                for (NodeId& v : prufer) v = any_node(rng);
            }
            if (prufer_respects_cap(prufer, n, max_connections)) {
                tree_edges = tree_from_prufer(prufer, n);
                found = true;
            }
        }
        if (!found) tree_edges = capped_attachment_tree(n, max_connections, rng);
    }
    for (auto [a, b] : tree_edges) net.add_link(a, b);

    // Extra links: one uniform attempt per node, silently skipping attempts
    // that would duplicate a link or exceed a cap.
    std::uniform_int_distribution<NodeId> any_node(0, static_cast<NodeId>(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        NodeId a = any_node(rng);
        NodeId b = any_node(rng);
        if (a == b) continue;
        net.add_link(a, b);
    }
    return net;
}

}  // namespace overnet
