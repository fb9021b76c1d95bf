#pragma once

#include "pzf/color_state.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pzf {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on vertices 0..n-1, stored as
 * compressed sorted adjacency. Each directed edge (u, slot) has a stable
 * id offset(u) + slot, which the simulation uses to key its randomness.
 */
class Graph
{
public:
    /// Builds from an edge list. Throws std::invalid_argument on self-loops,
    /// duplicates, out-of-range endpoints or n == 0.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return offsets_.size() - 1; }
    std::size_t size() const { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t directed_edge_id(Vertex u, std::size_t slot) const { return offsets_[u] + slot; }
    std::size_t directed_edge_count() const { return targets_.size(); }

    bool has_edge(Vertex u, Vertex v) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Closed neighbourhood N[v] as a state.
    ColorState closed_neighborhood(Vertex v) const;

    /// FNV-1a over the canonical edge list.
    std::uint64_t fingerprint() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

/// Subgraph induced by a vertex set, with the map back to parent labels.
struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const ColorState& keep);

enum class Family { path, cycle, star, complete, spider, star_chain, gnp };

struct GraphFamilySpec
{
    Family family = Family::path;
    std::size_t n = 0;       // path, cycle, complete, gnp
    std::size_t leaves = 0;  // star
    std::size_t legs = 0;    // spider
    std::size_t length = 0;  // spider leg length
    std::size_t half = 0;    // star_chain r
    std::size_t star_size = 0; // star_chain s
    double p = 0.0;          // gnp
    std::uint64_t seed = 0;  // gnp

    /// Canonical spec string, e.g. "star_chain:r=2,s=10".
    std::string to_string() const;
};

/// Parses "path:5", "star:leaves=4", "spider:legs=3,length=2",
/// "star_chain:r=2,s=10", "gnp:n=50,p=0.1,seed=7". Throws std::invalid_argument.
GraphFamilySpec parse_family_spec(std::string_view text);

inline constexpr int gnp_retry_budget = 100;

/// Deterministic given its parameters. Throws std::invalid_argument for bad
/// parameters and pzf::Error when no connected G(n,p) sample is found.
Graph generate(const GraphFamilySpec& spec);

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_complete(std::size_t n);
Graph make_spider(std::size_t legs, std::size_t length);
/// 2r+1 stars of s vertices each; centers are vertices 0..2r joined in a path,
/// leaves of star i are 2r+1 + i(s-1) .. 2r+1 + (i+1)(s-1) - 1.
Graph make_star_chain(std::size_t r, std::size_t s);
Graph make_gnp(std::size_t n, double p, std::uint64_t seed);

bool is_connected(const Graph& g);

/// BFS distances from `source`; unreachable vertices hold nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);

std::size_t eccentricity(const Graph& g, Vertex v);

/// Throws DisconnectedGraph.
std::size_t radius(const Graph& g);

/// Lowest-index vertex of minimum eccentricity. Throws DisconnectedGraph.
Vertex center_vertex(const Graph& g);

/// Edge-list text: header "n m" then m lines "u v". Errors are ParseError
/// with a distinct kind per failure.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

} // namespace pzf
