#pragma once

#include "pzf/color_state.hpp"
#include "pzf/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pzf {

inline constexpr std::size_t default_exact_cap = 16;
inline constexpr std::size_t hard_exact_cap = 22;
/// Largest frontier whose 2^|F| outcomes are enumerated for one state.
inline constexpr std::size_t max_frontier = 22;
/// Comparison tolerance for ties and bound checks on exact values.
inline constexpr double exact_tolerance = 1e-9;

struct ExactOptions
{
    /// Maximum graph order; values above hard_exact_cap are rejected.
    std::size_t cap = default_exact_cap;
    /// Solve only supersets of this set (everything reachable from it).
    std::optional<ColorState> restrict_to;
    /// Absorb once this set is blue; defaults to all of V.
    std::optional<ColorState> target;
};

/**
 * Expected remaining propagation time E[B] for every blue set B of one
 * graph (or every superset of a base set when restricted). Immutable once
 * built.
 */
class ExactTable
{
public:
    std::size_t order() const { return n_; }
    std::uint64_t graph_hash() const { return hash_; }
    const ColorState& base() const { return base_; }
    const ColorState& target() const { return target_; }

    /// Number of nonempty stored states.
    std::size_t state_count() const;

    bool contains(const ColorState& b) const;

    /// Throws std::out_of_range if b is empty or not a stored state.
    double at(const ColorState& b) const;

    /// Visits (state, E) for every nonempty stored state in increasing mask order.
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t idx = 0; idx < values_.size(); ++idx) {
            std::uint32_t mask = expand(idx);
            if (mask == 0)
                continue;
            f(ColorState::from_mask(n_, mask), values_[idx]);
        }
    }

    /// Mask-level access used by the solvers; mask must contain base().
    double at_mask(std::uint32_t mask) const { return values_[compress(mask)]; }

private:
    friend ExactTable exact_ept_table(const Graph&, const ExactOptions&);

    std::size_t compress(std::uint32_t mask) const;
    std::uint32_t expand(std::size_t idx) const;

    std::size_t n_ = 0;
    std::uint64_t hash_ = 0;
    ColorState base_;
    ColorState target_;
    std::vector<Vertex> free_;         // vertices outside base, ascending
    std::vector<std::size_t> slot_of_; // vertex -> bit in compressed index
    std::vector<double> values_;
};

/// Outcomes b ∪ A for A ⊆ frontier(b) with nonzero probability. Throws
/// std::invalid_argument when b is full or empty, pzf::Error when the
/// frontier exceeds max_frontier.
std::vector<std::pair<ColorState, double>> transition_distribution(const Graph& g, const ColorState& b);

/// Throws CapExceeded and DisconnectedGraph.
ExactTable exact_ept_table(const Graph& g, const ExactOptions& opts = {});

/// E[s]; solves only the supersets of s.
double exact_ept(const Graph& g, const ColorState& s, std::size_t cap = default_exact_cap);

struct GraphEpt
{
    double value = 0.0;
    Vertex vertex = 0;
};

/// min over v of ept(G, {v}); ties (within exact_tolerance) go to the lowest index.
GraphEpt exact_ept_graph(const Graph& g, std::size_t cap = default_exact_cap);
GraphEpt exact_ept_graph(const ExactTable& full_table);

struct ReachProbability
{
    std::size_t t = 0;
    double value = 0.0;
};

/// Probability that target ⊆ B_t when starting from s, by pushing the
/// distribution over blue sets forward t steps.
ReachProbability exact_reach_probability(const Graph& g, const ColorState& s, const ColorState& target,
                                         std::size_t t, std::size_t cap = default_exact_cap);

/**
 * Backward route to the same quantity: result[l][mask] is the probability
 * that `target` is blue after l steps from blue set `mask`, for l = 0..steps
 * and every mask of the graph.
 */
std::vector<std::vector<double>> reach_probability_table(const Graph& g, const ColorState& target,
                                                         std::size_t steps, std::size_t cap = default_exact_cap);

struct Throttling
{
    double value = 0.0;
    ColorState argmin;
};

/// min over nonempty B of |B| + E[B]; ties go to the smallest bit vector.
Throttling exact_throttling(const Graph& g, std::size_t cap = default_exact_cap);
Throttling exact_throttling(const ExactTable& full_table);

} // namespace pzf
