#pragma once

#include "pzf/color_state.hpp"
#include "pzf/graph.hpp"
#include "pzf/random.hpp"
#include "pzf/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pzf {

/// Outcome of one run of the phased process used to bound ept by n/2 + O(log n).
struct ModifiedRunRecord
{
    std::vector<Vertex> chosen; ///< v, or (v, v')
    ColorState s_set;
    ColorState t_set;
    std::size_t phase4_steps = 0;
    std::size_t phase6_steps = 0;
    std::size_t phase7_steps = 0;
    std::size_t total_steps = 0;
    bool stalled = false;
    std::string diagnostic;
    std::uint64_t seed = 0;
};

struct ModifiedOptions
{
    /// Step budget per phase; 0 selects 64 n. Exhausting it records a stall.
    std::size_t max_phase_steps = 0;
};

/**
 * Runs the phased process:
 *  (1) pick the g-minimising vertex or pair and its (S, T) split;
 *  (2) start from {v};
 *  (4) ordinary PZF on G until N[v] (and N[v'] if a pair) is blue;
 *  (5) keep only v, v' and their neighbours blue;
 *  (6) ordinary PZF on G[T] until at most |S| + 3 vertices of T are white;
 *  (7) in G[T] and G[S] at once, the lowest-index blue vertex with k white
 *      neighbours forces each with probability 1 (k = 1) or 4/(3k).
 * Vertex order is the natural index order. Induced-subgraph degrees apply
 * in (6) and (7). Throws std::invalid_argument for n < 2 and
 * DisconnectedGraph for disconnected input.
 */
ModifiedRunRecord run_modified(const Graph& g, std::uint64_t seed, const ModifiedOptions& opts = {});

/// Same, reusing a precomputed best_cornerstone(g).
ModifiedRunRecord run_modified(const Graph& g, const CornerstoneReport& choice, std::uint64_t seed,
                               const ModifiedOptions& opts = {});

/// Lowest-index blue vertex of `sub` that has a white neighbour, or nullopt.
std::optional<Vertex> phase7_forcer(const Graph& sub, const ColorState& b);

/// One step (7) move on an induced subgraph; identity if no blue vertex
/// has a white neighbour.
ColorState phase7_step(const Graph& sub, const ColorState& b, const UniformStream& stream, std::uint64_t time);

/// Blue counts X_0, X_1, ... of repeated phase7_step from `start` until all
/// blue or max_steps steps.
std::vector<std::size_t> phase7_blue_counts(const Graph& sub, const ColorState& start, std::uint64_t seed,
                                            std::size_t max_steps);

} // namespace pzf
