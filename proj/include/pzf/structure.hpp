#pragma once

#include "pzf/color_state.hpp"
#include "pzf/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pzf {

/// Split of V minus some removed vertices into two sides with no edge
/// between them, |s_set| <= |t_set|.
struct Partition
{
    bool disconnects = false; ///< whether the removal left >= 2 components
    std::size_t value = 0;    ///< max(|S|, |T|) = |t_set|
    ColorState s_set;
    ColorState t_set;
};

/**
 * Most balanced split of the components of g - removed into two sides.
 * When the removal does not disconnect g the split is S = ∅ and T = the
 * remaining vertices, so value = n - |removed|.
 */
Partition balanced_partition(const Graph& g, const ColorState& removed);

/// Articulation points (vertices whose removal disconnects g), ascending.
std::vector<Vertex> one_cornerstones(const Graph& g);

/// g(v): balanced component split around a cut vertex, n - 1 otherwise.
std::size_t g_one(const Graph& g, Vertex v);

/// True if v != w and they are adjacent or share a neighbour.
bool eligible_pair(const Graph& g, Vertex v, Vertex w);

/// g(v, w) for an eligible pair, nullopt otherwise.
std::optional<std::size_t> g_two(const Graph& g, Vertex v, Vertex w);

struct CornerstoneReport
{
    std::vector<std::pair<Vertex, std::size_t>> one_cornerstones;
    std::vector<std::pair<Edge, std::size_t>> two_cornerstones;
    /// The minimiser: one vertex, or a pair (v, v') with v < v'.
    std::vector<Vertex> best;
    std::size_t best_value = 0;
    ColorState s_set;
    ColorState t_set;

    bool best_is_pair() const { return best.size() == 2; }
};

/**
 * Minimises g over all vertices and eligible pairs. Ties prefer a single
 * vertex over a pair, an adjacent pair over one that only shares a
 * neighbour, then the lowest index (lexicographic for pairs).
 * When nothing disconnects the graph s_set is empty.
 */
CornerstoneReport best_cornerstone(const Graph& g);

} // namespace pzf
