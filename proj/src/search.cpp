#include "overnet/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace overnet {

std::string mode_name(SearchMode mode) {
    switch (mode) {
    case SearchMode::flood_bfs: return "config1";
    case SearchMode::guided: return "config2";
    case SearchMode::guided_adaptive: return "config3";
    }
    throw std::logic_error("unreachable");
}

std::optional<SearchMode> mode_from_name(const std::string& name) {
    if (name == "config1") return SearchMode::flood_bfs;
    if (name == "config2") return SearchMode::guided;
    if (name == "config3") return SearchMode::guided_adaptive;
    return std::nullopt;
}

bool record_observation(NodeState& node, NodeId peer, const ResourceDescription& desc) {
    if (peer == node.id) return false;
    node.cache.observe(peer, desc, node.description);
    return true;
}

namespace {

void validate(const OverlayNetwork& net, const SearchRequest& req) {
    if (req.originator >= net.size()) throw std::out_of_range("unknown originator");
    if (req.hop_limit < 1) throw std::invalid_argument("hop_limit must be at least 1");
    if (!(req.allowable_error >= 0.0 && req.allowable_error <= kMaxDistance))
        throw std::invalid_argument("allowable_error outside [0, 12]");
}

}  // namespace

SearchOutcome bfs_search(const OverlayNetwork& net, SearchRequest req) {
    validate(net, req);
    req.visited.insert(req.originator);

    SearchOutcome out;
    std::vector<char> seen(net.size(), 0);
    for (NodeId v : req.visited) seen[v] = 1;
    std::vector<NodeId> frontier{req.originator};
    std::vector<NodeId> next;
    unsigned depth = 0;

    while (depth < req.hop_limit && !frontier.empty()) {
        next.clear();
        for (NodeId u : frontier)
            for (NodeId v : net.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    next.push_back(v);
                }
        if (next.empty()) break;
        ++depth;
        out.messages_sent += next.size();

        // The whole level is generated before the match test, so the
        // reported match is the lowest id at the shallowest matching depth.
        std::sort(next.begin(), next.end());
        for (NodeId v : next) {
            int d = distance(req.target, net.description(v)).value();
            if (d <= req.allowable_error) {
                out.success = true;
                out.matched_node = v;
                out.achieved_distance = d;
                out.hops = depth;
                return out;
            }
        }
        frontier.swap(next);
    }
    out.hops = depth;
    return out;
}

SearchOutcome guided_search(OverlayNetwork& net, SearchRequest req,
                            const AdaptationPolicy& adapt, std::vector<NodeId>* trace) {
    validate(net, req);
    req.visited.insert(req.originator);
    if (trace) {
        trace->clear();
        trace->push_back(req.originator);
    }

    SearchOutcome out;
    NodeId current = req.originator;
    std::optional<NodeId> prev;

    for (;;) {
        NodeState& here = net.node(current);
        record_observation(here, req.originator, net.description(req.originator));
        if (prev) record_observation(here, *prev, net.description(*prev));

        int best_dist = kMaxDistance + 1;
        NodeId best = 0;
        std::optional<NodeId> match;
        int match_dist = 0;
        bool any = false;
        for (NodeId v : net.neighbors(current)) {
            if (req.visited.count(v)) continue;
            int d = distance(req.target, net.description(v)).value();
            if (!match && d <= req.allowable_error) {
                match = v;  // neighbors iterate in id order, so first = lowest
                match_dist = d;
            }
            if (!any || d < best_dist) {
                any = true;
                best_dist = d;
                best = v;
            }
        }
        if (!any) return out;               // dead end
        if (out.hops >= req.hop_limit) return out;  // budget spent

        NodeId next = match ? *match : best;
        if (adapt) adapt(net, current, next);

        req.visited.insert(next);
        prev = current;
        current = next;
        ++out.hops;
        ++out.messages_sent;
        if (trace) trace->push_back(next);

        if (match) {
            out.success = true;
            out.matched_node = next;
            out.achieved_distance = match_dist;
            return out;
        }
    }
}

}  // namespace overnet
