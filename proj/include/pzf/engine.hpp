#pragma once

#include "pzf/color_state.hpp"
#include "pzf/graph.hpp"
#include "pzf/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pzf {

/// States of one probabilistic zero forcing run, states[t] being the blue
/// set after t steps.
struct Trajectory
{
    std::vector<ColorState> states;
    std::uint64_t seed = 0;
    bool terminated = false;

    /// Steps taken (states.size() - 1).
    std::size_t steps() const { return states.empty() ? 0 : states.size() - 1; }
};

/// Number of blue neighbours of u.
std::size_t blue_degree(const Graph& g, const ColorState& b, Vertex u);

/// Pr[u -> v] = |N[u] ∩ B| / deg u for blue u and white neighbour v.
/// Throws std::invalid_argument when the precondition fails.
double force_probability(const Graph& g, const ColorState& b, Vertex u, Vertex v);

/// Probability that white v is blue after one step: 1 - prod over blue
/// neighbours u of (1 - Pr[u -> v]). Throws if v is already blue.
double blue_probability(const Graph& g, const ColorState& b, Vertex v);

/// White vertices with at least one blue neighbour.
std::vector<Vertex> frontier(const Graph& g, const ColorState& b);

/// Expected number of new blue vertices after one step, sum of blue_probability
/// over the frontier.
double expected_increase(const Graph& g, const ColorState& b);

/**
 * One synchronous application of the rule. Every directed edge u -> v with
 * u blue and v white draws stream.uniform(edge id, time) and v turns blue if
 * any such draw is <= Pr[u -> v].
 */
ColorState step(const Graph& g, const ColorState& b, const UniformStream& stream, std::uint64_t time);

/// 64 n, comfortably above the n - 1 bound on expected termination.
std::size_t default_max_steps(const Graph& g);

/// Iterates step() from `start` until all blue or max_steps steps taken.
/// Throws std::invalid_argument for an empty start.
Trajectory run(const Graph& g, const ColorState& start, std::uint64_t seed, std::size_t max_steps);

/// Termination time of run() without keeping the states; nullopt when
/// max_steps is exhausted first.
std::optional<std::size_t> propagation_time(const Graph& g, const ColorState& start, std::uint64_t seed, std::size_t max_steps);

struct CoupledRun
{
    Trajectory lower;
    Trajectory upper;
    bool subset_ok = true;
    /// First step at which containment failed, if it did.
    std::size_t first_violation = 0;
};

/// Runs from s and from t ⊇ s on the same uniform draws for up to `steps`
/// steps, checking states_s[τ] ⊆ states_t[τ] at every τ. Throws
/// std::invalid_argument when s is not a subset of t.
CoupledRun coupled_run(const Graph& g, const ColorState& s, const ColorState& t, std::uint64_t seed,
                       std::size_t steps);

} // namespace pzf
