#include "pzf/modified.hpp"

#include "pzf/engine.hpp"
#include "pzf/errors.hpp"

#include <stdexcept>

namespace pzf {

namespace {

constexpr std::uint64_t phase4_tag = 4;
constexpr std::uint64_t phase6_tag = 6;
constexpr std::uint64_t phase7_t_tag = 7;
constexpr std::uint64_t phase7_s_tag = 8;

/// One side of the split as an induced subgraph with its own blue set.
struct Side
{
    std::optional<InducedSubgraph> sub;
    ColorState blue;

    std::size_t whites() const { return sub ? sub->graph.order() - blue.count() : 0; }
};

Side make_side(const Graph& g, const ColorState& members, const ColorState& blue)
{
    Side side;
    if (members.none())
        return side;
    side.sub = induced_subgraph(g, members);
    side.blue = ColorState::empty(side.sub->graph.order());
    for (Vertex i = 0; i < side.sub->to_parent.size(); ++i)
        if (blue.test(side.sub->to_parent[i]))
            side.blue.set(i);
    return side;
}

bool can_progress(const Graph& sub, const ColorState& b)
{
    return phase7_forcer(sub, b).has_value();
}

} // namespace

std::optional<Vertex> phase7_forcer(const Graph& sub, const ColorState& b)
{
    for (Vertex u = 0; u < sub.order(); ++u) {
        if (!b.test(u))
            continue;
        for (auto w : sub.neighbors(u))
            if (!b.test(w))
                return u;
    }
    return std::nullopt;
}

ColorState phase7_step(const Graph& sub, const ColorState& b, const UniformStream& stream, std::uint64_t time)
{
    auto forcer = phase7_forcer(sub, b);
    if (!forcer)
        return b;
    Vertex u = *forcer;
    auto nb = sub.neighbors(u);
    std::size_t k = 0;
    for (auto w : nb)
        k += !b.test(w);
    double p = k == 1 ? 1.0 : 4.0 / (3.0 * static_cast<double>(k));
    ColorState next = b;
    for (std::size_t slot = 0; slot < nb.size(); ++slot) {
        Vertex w = nb[slot];
        if (!b.test(w) && stream.uniform(sub.directed_edge_id(u, slot), time) <= p)
            next.set(w);
    }
    return next;
}

std::vector<std::size_t> phase7_blue_counts(const Graph& sub, const ColorState& start, std::uint64_t seed,
                                            std::size_t max_steps)
{
    UniformStream stream(seed);
    ColorState b = start;
    std::vector<std::size_t> counts{b.count()};
    for (std::uint64_t t = 1; t <= max_steps && counts.back() < sub.order(); ++t) {
        b = phase7_step(sub, b, stream, t);
        counts.push_back(b.count());
    }
    return counts;
}

ModifiedRunRecord run_modified(const Graph& g, std::uint64_t seed, const ModifiedOptions& opts)
{
    if (g.order() < 2)
        throw std::invalid_argument("the modified process needs n >= 2");
    if (!is_connected(g))
        throw DisconnectedGraph("the modified process requires a connected graph");
    return run_modified(g, best_cornerstone(g), seed, opts);
}

ModifiedRunRecord run_modified(const Graph& g, const CornerstoneReport& choice, std::uint64_t seed,
                               const ModifiedOptions& opts)
{
    std::size_t n = g.order();
    if (n < 2)
        throw std::invalid_argument("the modified process needs n >= 2");
    std::size_t budget = opts.max_phase_steps == 0 ? 64 * n : opts.max_phase_steps;
    UniformStream master(seed);

    ModifiedRunRecord rec;
    rec.seed = seed;
    rec.chosen = choice.best;
    rec.s_set = choice.s_set;
    rec.t_set = choice.t_set;
    auto stall = [&rec](std::string why) {
        rec.stalled = true;
        rec.diagnostic = std::move(why);
        rec.total_steps = rec.phase4_steps + rec.phase6_steps + rec.phase7_steps;
        return rec;
    };

    // (2) and (4)
    ColorState must_be_blue = ColorState::empty(n);
    for (auto c : rec.chosen)
        must_be_blue |= g.closed_neighborhood(c);
    ColorState blue = ColorState::singleton(n, rec.chosen.front());
    UniformStream stream4 = master.derive(phase4_tag);
    while (!must_be_blue.is_subset_of(blue)) {
        if (rec.phase4_steps == budget)
            return stall("phase 4 exceeded its step budget");
        ++rec.phase4_steps;
        blue = step(g, blue, stream4, rec.phase4_steps);
    }

    // (5)
    blue = must_be_blue;

    // (6)
    std::size_t s_size = rec.s_set.count();
    Side t_side = make_side(g, rec.t_set, blue);
    Side s_side = make_side(g, rec.s_set, blue);
    UniformStream stream6 = master.derive(phase6_tag);
    while (t_side.whites() > s_size + 3) {
        if (!can_progress(t_side.sub->graph, t_side.blue))
            return stall("phase 6: " + std::to_string(t_side.whites())
                         + " white vertices in T but no blue vertex of G[T] has a white neighbour");
        if (rec.phase6_steps == budget)
            return stall("phase 6 exceeded its step budget");
        ++rec.phase6_steps;
        t_side.blue = step(t_side.sub->graph, t_side.blue, stream6, rec.phase6_steps);
    }

    // (7)
    UniformStream stream7t = master.derive(phase7_t_tag);
    UniformStream stream7s = master.derive(phase7_s_tag);
    while (t_side.whites() > 0 || s_side.whites() > 0) {
        for (auto* side : {&t_side, &s_side})
            if (side->whites() > 0 && !can_progress(side->sub->graph, side->blue))
                return stall(std::string("phase 7: white vertices in G[") + (side == &t_side ? "T" : "S")
                             + "] but no blue vertex there has a white neighbour");
        if (rec.phase7_steps == budget)
            return stall("phase 7 exceeded its step budget");
        ++rec.phase7_steps;
        if (t_side.whites() > 0)
            t_side.blue = phase7_step(t_side.sub->graph, t_side.blue, stream7t, rec.phase7_steps);
        if (s_side.whites() > 0)
            s_side.blue = phase7_step(s_side.sub->graph, s_side.blue, stream7s, rec.phase7_steps);
    }

    rec.total_steps = rec.phase4_steps + rec.phase6_steps + rec.phase7_steps;
    return rec;
}

} // namespace pzf
