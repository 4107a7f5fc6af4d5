#ifndef DEASY_ROAD_NETWORK_HPP
#define DEASY_ROAD_NETWORK_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deasy/common.hpp"

namespace deasy {

struct Node {
    NodeId id = kInvalidId;
    Vec2 pos;
};

struct Edge {
    EdgeId id = kInvalidId;
    NodeId from = kInvalidId;
    NodeId to = kInvalidId;
    double length_m = 0.0;
    int lanes = 1;
    double vmax_mps = 0.0;
};

// Directed road graph. Node/edge ids are arbitrary 32-bit values from the
// network file; lookups go through id->index maps. Out-edge lists are kept
// sorted by edge id so that traversal order is deterministic.
class RoadGraph {
public:
    void add_node(NodeId id, Vec2 pos);
    void add_edge(EdgeId id, NodeId from, NodeId to, double length_m, int lanes, double vmax_mps);

    bool has_node(NodeId id) const { return node_index_.count(id) != 0; }
    bool has_edge(EdgeId id) const { return edge_index_.count(id) != 0; }
    const Node& node(NodeId id) const;
    const Edge& edge(EdgeId id) const;
    const std::vector<EdgeId>& out_edges(NodeId id) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Text format, one record per line:
    //   node <id> <x> <y>
    //   edge <id> <from> <to> <length_m> <lanes> <vmax_mps>
    // '#' starts a comment. Errors name the offending line.
    static RoadGraph load(const std::string& path);
    static RoadGraph parse(std::istream& in, const std::string& name);
    void write(std::ostream& out) const;

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::map<NodeId, std::size_t> node_index_;
    std::map<EdgeId, std::size_t> edge_index_;
    std::map<NodeId, std::vector<EdgeId>> out_;
};

struct Route {
    std::vector<EdgeId> edges;
    NodeId origin = kInvalidId;
    NodeId destination = kInvalidId;
};

// Vehicles announced to traverse each segment within the current
// congestion episode.
struct PopularityTable {
    std::map<EdgeId, std::uint32_t> counts;

    void clear() { counts.clear(); }
    bool empty() const { return counts.empty(); }
    std::uint32_t count(EdgeId e) const {
        auto it = counts.find(e);
        return it == counts.end() ? 0u : it->second;
    }
};

using EdgeCostFn = std::function<double(EdgeId)>;

// Minimal-cost path with deterministic tie-break: among equal-cost paths the
// lexicographically smallest edge-id sequence wins. Throws UnreachableError
// when no path exists; the try_ variant returns nullopt instead.
Route shortest_path(const RoadGraph& g, NodeId from, NodeId to, const EdgeCostFn& cost);
std::optional<Route> try_shortest_path(const RoadGraph& g, NodeId from, NodeId to,
                                       const EdgeCostFn& cost,
                                       const std::set<NodeId>* banned_nodes = nullptr,
                                       const std::set<EdgeId>* banned_edges = nullptr);

// Yen's k loop-less shortest paths, ascending (cost, edge sequence).
// Result size is less than k only when fewer simple paths exist.
std::vector<Route> k_shortest_paths(const RoadGraph& g, NodeId from, NodeId to, int k,
                                    const EdgeCostFn& cost);

// w_rs = n * length / lanes.
double segment_popularity_weight(const Edge& edge, std::uint32_t n);

// H = sum (w/Q) ln(Q/w) over segments, with 0 ln(Q/0) taken as 0.
// All-zero weights give 0.
double route_entropy(const std::vector<double>& weights);
double route_entropy(const Route& route, const std::map<EdgeId, double>& weights);

double free_flow_time(const RoadGraph& g, const Route& route);

EdgeCostFn free_flow_cost(const RoadGraph& g);

}  // namespace deasy

#endif
