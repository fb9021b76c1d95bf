#include "pzf/estimator.hpp"

#include "pzf/engine.hpp"
#include "pzf/parallel.hpp"
#include "pzf/random.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pzf {

namespace {

constexpr std::uint64_t vertex_stream_tag = 0x7665727465780000ULL;
constexpr std::uint64_t sample_stream_tag = 0x73616d706c650000ULL;

std::size_t budget(const Graph& g, const EstimateOptions& opts)
{
    return opts.max_steps == 0 ? default_max_steps(g) : opts.max_steps;
}

void check_inputs(const Graph& g, const ColorState& s, std::size_t trials)
{
    if (trials == 0)
        throw std::invalid_argument("trials must be >= 1");
    if (s.size() != g.order() || s.none())
        throw std::invalid_argument("start set must be nonempty and match the graph order");
}

} // namespace

double EstimateResult::std_error() const
{
    return trials == 0 ? 0.0 : std_dev / std::sqrt(static_cast<double>(trials));
}

double normal_quantile(double confidence)
{
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("confidence must lie in (0, 1)");
    boost::math::normal_distribution<double> unit;
    return boost::math::quantile(unit, 1.0 - (1.0 - confidence) / 2.0);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index)
{
    return derive_seed(seed, index);
}

std::vector<std::size_t> sample_propagation_times(const Graph& g, const ColorState& s, std::size_t trials,
                                                  std::uint64_t seed, const EstimateOptions& opts)
{
    check_inputs(g, s, trials);
    std::size_t max_steps = budget(g, opts);
    std::vector<std::size_t> times(trials);
    parallel_for_index(trials, opts.workers, [&](std::size_t i) {
        times[i] = propagation_time(g, s, trial_seed(seed, i), max_steps).value_or(max_steps + 1);
    });
    return times;
}

EstimateResult estimate_ept(const Graph& g, const ColorState& s, std::size_t trials, std::uint64_t seed,
                            const EstimateOptions& opts)
{
    auto times = sample_propagation_times(g, s, trials, seed, opts);
    std::size_t max_steps = budget(g, opts);

    EstimateResult r;
    r.seed = seed;
    r.confidence = opts.confidence;
    double sum = 0.0;
    for (auto t : times) {
        if (t > max_steps) {
            ++r.truncated;
            continue;
        }
        sum += static_cast<double>(t);
        ++r.trials;
    }
    r.valid = r.truncated == 0;
    if (r.trials == 0) {
        r.valid = false;
        return r;
    }
    r.mean = sum / static_cast<double>(r.trials);
    double ss = 0.0;
    for (auto t : times)
        if (t <= max_steps)
            ss += (static_cast<double>(t) - r.mean) * (static_cast<double>(t) - r.mean);
    r.std_dev = r.trials > 1 ? std::sqrt(ss / static_cast<double>(r.trials - 1)) : 0.0;
    double half = normal_quantile(opts.confidence) * r.std_error();
    r.ci_low = r.mean - half;
    r.ci_high = r.mean + half;
    return r;
}

TailEstimate estimate_tail(const Graph& g, const ColorState& s, std::size_t t, std::size_t trials,
                           std::uint64_t seed, const EstimateOptions& opts)
{
    check_inputs(g, s, trials);
    std::vector<unsigned char> incomplete(trials, 0);
    parallel_for_index(trials, opts.workers, [&](std::size_t i) {
        incomplete[i] = propagation_time(g, s, trial_seed(seed, i), t).has_value() ? 0 : 1;
    });
    std::size_t hits = 0;
    for (auto x : incomplete)
        hits += x;

    TailEstimate out;
    out.t = t;
    out.trials = trials;
    out.seed = seed;
    out.confidence = opts.confidence;
    double nn = static_cast<double>(trials);
    double phat = static_cast<double>(hits) / nn;
    double z = normal_quantile(opts.confidence);
    double denom = 1.0 + z * z / nn;
    double centre = (phat + z * z / (2.0 * nn)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn)) / denom;
    out.probability = phat;
    out.ci_low = std::max(0.0, centre - half);
    out.ci_high = std::min(1.0, centre + half);
    return out;
}

GraphEstimate estimate_ept_graph(const Graph& g, std::size_t trials_per_vertex, std::uint64_t seed,
                                 const GraphEstimateOptions& opts)
{
    GraphEstimate out;
    std::size_t n = g.order();
    if (n > opts.restrict_above) {
        out.restricted = true;
        out.candidates.push_back(center_vertex(g));
        UniformStream pick(derive_seed(seed, sample_stream_tag));
        for (std::uint64_t k = 0; out.candidates.size() < std::min(n, opts.sample_size + 1); ++k) {
            auto v = static_cast<Vertex>(pick.bits(k, 0) % n);
            if (std::find(out.candidates.begin(), out.candidates.end(), v) == out.candidates.end())
                out.candidates.push_back(v);
        }
        std::sort(out.candidates.begin(), out.candidates.end());
    } else {
        for (Vertex v = 0; v < n; ++v)
            out.candidates.push_back(v);
    }

    bool first = true;
    for (auto v : out.candidates) {
        auto r = estimate_ept(g, ColorState::singleton(n, v), trials_per_vertex,
                              derive_seed(seed, vertex_stream_tag + v), opts.estimate);
        if (first || r.mean < out.result.mean) {
            out.result = r;
            out.vertex = v;
            first = false;
        }
    }
    return out;
}

} // namespace pzf
