#include "pzf/engine.hpp"

#include <stdexcept>
#include <string>

namespace pzf {

std::size_t blue_degree(const Graph& g, const ColorState& b, Vertex u)
{
    std::size_t c = 0;
    for (auto w : g.neighbors(u))
        c += b.test(w);
    return c;
}

double force_probability(const Graph& g, const ColorState& b, Vertex u, Vertex v)
{
    if (u >= g.order() || v >= g.order())
        throw std::invalid_argument("vertex out of range");
    if (!b.test(u))
        throw std::invalid_argument("forcing vertex " + std::to_string(u) + " is not blue");
    if (b.test(v))
        throw std::invalid_argument("target vertex " + std::to_string(v) + " is not white");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
    return static_cast<double>(1 + blue_degree(g, b, u)) / static_cast<double>(g.degree(u));
}

double blue_probability(const Graph& g, const ColorState& b, Vertex v)
{
    if (v >= g.order())
        throw std::invalid_argument("vertex out of range");
    if (b.test(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is already blue");
    double stay_white = 1.0;
    for (auto u : g.neighbors(v))
        if (b.test(u))
            stay_white *= 1.0 - static_cast<double>(1 + blue_degree(g, b, u)) / static_cast<double>(g.degree(u));
    double p = 1.0 - stay_white;
    return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

std::vector<Vertex> frontier(const Graph& g, const ColorState& b)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (b.test(v))
            continue;
        for (auto u : g.neighbors(v))
            if (b.test(u)) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

double expected_increase(const Graph& g, const ColorState& b)
{
    double sum = 0.0;
    for (auto v : frontier(g, b))
        sum += blue_probability(g, b, v);
    return sum;
}

ColorState step(const Graph& g, const ColorState& b, const UniformStream& stream, std::uint64_t time)
{
    ColorState next = b;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (!b.test(u))
            continue;
        auto nb = g.neighbors(u);
        std::size_t db = 0;
        for (auto w : nb)
            db += b.test(w);
        if (db == nb.size())
            continue;
        double p = static_cast<double>(1 + db) / static_cast<double>(nb.size());
        for (std::size_t slot = 0; slot < nb.size(); ++slot) {
            Vertex v = nb[slot];
            if (b.test(v) || next.test(v))
                continue;
            if (stream.uniform(g.directed_edge_id(u, slot), time) <= p)
                next.set(v);
        }
    }
    return next;
}

std::size_t default_max_steps(const Graph& g)
{
    return 64 * g.order();
}

namespace {

void check_start(const Graph& g, const ColorState& start)
{
    if (start.size() != g.order())
        throw std::invalid_argument("start set width does not match graph order");
    if (start.none())
        throw std::invalid_argument("start set must be nonempty");
}

} // namespace

Trajectory run(const Graph& g, const ColorState& start, std::uint64_t seed, std::size_t max_steps)
{
    check_start(g, start);
    UniformStream stream(seed);
    Trajectory tr;
    tr.seed = seed;
    tr.states.push_back(start);
    std::size_t n = g.order();
    for (std::uint64_t t = 1; tr.states.back().count() < n && t <= max_steps; ++t)
        tr.states.push_back(step(g, tr.states.back(), stream, t));
    tr.terminated = tr.states.back().count() == n;
    return tr;
}

std::optional<std::size_t> propagation_time(const Graph& g, const ColorState& start, std::uint64_t seed,
                                            std::size_t max_steps)
{
    check_start(g, start);
    UniformStream stream(seed);
    ColorState b = start;
    std::size_t n = g.order();
    std::size_t t = 0;
    while (b.count() < n) {
        if (t == max_steps)
            return std::nullopt;
        ++t;
        b = step(g, b, stream, t);
    }
    return t;
}

CoupledRun coupled_run(const Graph& g, const ColorState& s, const ColorState& t, std::uint64_t seed,
                       std::size_t steps)
{
    check_start(g, s);
    check_start(g, t);
    if (!s.is_subset_of(t))
        throw std::invalid_argument("coupled_run requires s ⊆ t");
    UniformStream stream(seed);
    CoupledRun out;
    out.lower.seed = out.upper.seed = seed;
    out.lower.states.push_back(s);
    out.upper.states.push_back(t);
    std::size_t n = g.order();
    for (std::uint64_t time = 1; time <= steps; ++time) {
        const ColorState& a = out.lower.states.back();
        const ColorState& b = out.upper.states.back();
        if (a.count() == n && b.count() == n)
            break;
        ColorState a2 = a.count() == n ? a : step(g, a, stream, time);
        ColorState b2 = b.count() == n ? b : step(g, b, stream, time);
        if (out.subset_ok && !a2.is_subset_of(b2)) {
            out.subset_ok = false;
            out.first_violation = time;
        }
        out.lower.states.push_back(std::move(a2));
        out.upper.states.push_back(std::move(b2));
    }
    out.lower.terminated = out.lower.states.back().count() == n;
    out.upper.terminated = out.upper.states.back().count() == n;
    return out;
}

} // namespace pzf
