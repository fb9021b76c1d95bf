#pragma once

#include "pzf/color_state.hpp"
#include "pzf/estimator.hpp"
#include "pzf/exact.hpp"
#include "pzf/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pzf {

/// ept(P_n): n/2 + 2/3 for even n, n/2 + 1/2 for odd n. Valid for n >= 3
/// only (P_2 is forced in one step); throws std::invalid_argument below that.
double path_ept_closed_form(std::size_t n);

/// max(0, log2 log2 (2n) - log2 log2 (2k)), a lower bound on ept(G, S) for |S| = k.
double lower_bound_loglog(std::size_t n, std::size_t k);

struct UpperBounds
{
    double linear = 0.0; ///< n - k
    double chan = 0.0;   ///< e/(e-1) (n - k)
};

UpperBounds upper_bounds(std::size_t n, std::size_t k);

/// Leaves that must turn blue in the star increase bounds: ceil((k+1)/6) when
/// 3k <= n, ceil((n-k)/6) otherwise.
std::size_t star_increase_threshold(std::size_t leaves, std::size_t k);

/// E[X] = (n-k)(k+1)/n for X ~ Bin(n-k, (k+1)/n).
double star_expected_increase(std::size_t leaves, std::size_t k);

/**
 * Star with `leaves` leaves, blue center and k blue leaves: exact
 * probability that at least star_increase_threshold(leaves, k) white leaves
 * turn blue in one step, X ~ Bin(leaves - k, (k+1)/leaves). Summed from
 * log-space terms. Requires 0 <= k < leaves.
 */
double star_increase_tail(std::size_t leaves, std::size_t k);

/// Root C > 1 of e^{4/3 (1 - 1/C)} = C found by bisection on (1, 4].
double step7_constant();

/**
 * Empirical distribution of the time a fixed leaf of a star needs to turn
 * blue, starting from the center (and one other leaf if `extra_leaf`).
 * Diagnostic only; histogram[t] counts trials finishing at step t.
 */
std::vector<std::size_t> star_leaf_time_histogram(std::size_t leaves, bool extra_leaf, std::size_t trials,
                                                  std::uint64_t seed);

enum class BoundMode { exact, monte_carlo };

struct BoundEntry
{
    std::string name;
    /// "upper", "lower", "equal" or "info".
    std::string direction;
    double bound_value = 0.0;
    double observed_value = 0.0;
    bool satisfied = true;
};

struct BoundReport
{
    std::string graph_id;
    BoundMode mode = BoundMode::exact;
    std::size_t n = 0;
    std::size_t k = 0;
    double observed = 0.0;
    /// Standard error of the observation; 0 in exact mode.
    double std_error = 0.0;
    std::vector<BoundEntry> entries;

    bool all_satisfied() const;
};

struct VerifyOptions
{
    std::string graph_id;
    std::size_t cap = default_exact_cap;
    std::size_t trials = 10000;
    std::uint64_t seed = 0x5EED;
    EstimateOptions estimate;
};

/// True for P_n: connected, n - 1 edges, maximum degree <= 2.
bool is_path_graph(const Graph& g);

/**
 * Checks the observed ept(G, start) against the linear, e/(e-1) and log-log
 * bounds; against the path closed form when g is a path and start is an
 * optimal single vertex; and reports ept / (r ln(n/r)) as information.
 * Exact mode compares within exact_tolerance, Monte Carlo mode within 4 SE.
 */
BoundReport verify_bounds(const Graph& g, const ColorState& start, BoundMode mode, const VerifyOptions& opts = {});

} // namespace pzf
