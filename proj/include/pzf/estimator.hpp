#pragma once

#include "pzf/color_state.hpp"
#include "pzf/graph.hpp"

#include <cstdint>
#include <vector>

namespace pzf {

struct EstimateOptions
{
    /// Worker threads; 0 uses the hardware concurrency. Results do not depend on it.
    std::size_t workers = 1;
    /// Per-trial step budget; 0 selects default_max_steps(g).
    std::size_t max_steps = 0;
    double confidence = 0.95;
};

/**
 * Monte Carlo estimate of a propagation time. The interval is the normal
 * approximation mean ± z·sd/√trials, which is loose for small trial counts.
 * A run that hits the step budget is counted in `truncated` and makes the
 * estimate invalid; statistics then cover the completed trials only.
 */
struct EstimateResult
{
    double mean = 0.0;
    double std_dev = 0.0;
    std::size_t trials = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double confidence = 0.95;
    std::uint64_t seed = 0;
    std::size_t truncated = 0;
    bool valid = true;

    double std_error() const;
};

/// Seed of trial `index` under master `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

/// Raw per-trial propagation times (nullopt-free; truncated trials hold
/// max_steps + 1), indexed by trial.
std::vector<std::size_t> sample_propagation_times(const Graph& g, const ColorState& s, std::size_t trials,
                                                  std::uint64_t seed, const EstimateOptions& opts = {});

EstimateResult estimate_ept(const Graph& g, const ColorState& s, std::size_t trials, std::uint64_t seed,
                            const EstimateOptions& opts = {});

/// Fraction of trials still incomplete after t steps, with a Wilson interval.
struct TailEstimate
{
    std::size_t t = 0;
    double probability = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double confidence = 0.95;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

TailEstimate estimate_tail(const Graph& g, const ColorState& s, std::size_t t, std::size_t trials,
                           std::uint64_t seed, const EstimateOptions& opts = {});

struct GraphEstimateOptions
{
    EstimateOptions estimate;
    /// Above this order only a center vertex plus a random sample are tried.
    std::size_t restrict_above = 64;
    std::size_t sample_size = 8;
};

struct GraphEstimate
{
    EstimateResult result;
    Vertex vertex = 0;
    bool restricted = false;
    std::vector<Vertex> candidates;
};

/// Minimum-mean singleton start; ties go to the lowest index.
GraphEstimate estimate_ept_graph(const Graph& g, std::size_t trials_per_vertex, std::uint64_t seed,
                                 const GraphEstimateOptions& opts = {});

/// Two-sided standard normal quantile for the given confidence level.
double normal_quantile(double confidence);

} // namespace pzf
