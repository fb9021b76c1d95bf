#include "pzf/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pzf {

namespace {

/// Connected components of g restricted to the complement of `removed`.
std::vector<std::vector<Vertex>> components_without(const Graph& g, const ColorState& removed)
{
    std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || removed.test(s))
            continue;
        comps.emplace_back();
        std::deque<Vertex> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comps.back().push_back(u);
            for (auto w : g.neighbors(u))
                if (!seen[w] && !removed.test(w)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return comps;
}

} // namespace

Partition balanced_partition(const Graph& g, const ColorState& removed)
{
    std::size_t n = g.order();
    auto comps = components_without(g, removed);
    Partition out;
    out.s_set = ColorState::empty(n);
    out.t_set = removed.complement();
    out.value = out.t_set.count();
    out.disconnects = comps.size() >= 2;
    if (!out.disconnects)
        return out;

    // Subset-sum reachability over component sizes, keeping every layer so
    // the chosen side can be recovered.
    std::size_t total = out.value;
    std::size_t k = comps.size();
    std::vector<std::vector<char>> reach(k + 1, std::vector<char>(total + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t c = comps[i].size();
        for (std::size_t s = 0; s <= total; ++s) {
            if (!reach[i][s])
                continue;
            reach[i + 1][s] = 1;
            if (s + c <= total)
                reach[i + 1][s + c] = 1;
        }
    }
    std::size_t small = total / 2;
    while (!reach[k][small])
        --small;

    std::size_t s = small;
    for (std::size_t i = k; i-- > 0;) {
        if (reach[i][s])
            continue;
        s -= comps[i].size();
        for (auto v : comps[i]) {
            out.s_set.set(v);
            out.t_set.reset(v);
        }
    }
    out.value = total - small;
    if (out.s_set.count() == out.t_set.count() && out.t_set.vertices().front() < out.s_set.vertices().front())
        std::swap(out.s_set, out.t_set);
    return out;
}

std::vector<Vertex> one_cornerstones(const Graph& g)
{
    // Iterative lowpoint DFS.
    std::size_t n = g.order();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0), parent(n, unvisited), cursor(n, 0);
    std::vector<char> cut(n, 0);
    std::size_t timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unvisited)
            continue;
        std::size_t root_children = 0;
        std::vector<Vertex> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Vertex u = stack.back();
            auto nb = g.neighbors(u);
            if (cursor[u] < nb.size()) {
                Vertex w = nb[cursor[u]++];
                if (disc[w] == unvisited) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    if (u == root)
                        ++root_children;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            if (parent[u] != unvisited) {
                Vertex p = static_cast<Vertex>(parent[u]);
                low[p] = std::min(low[p], low[u]);
                if (p != root && low[u] >= disc[p])
                    cut[p] = 1;
            }
        }
        if (root_children >= 2)
            cut[root] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (cut[v])
            out.push_back(v);
    return out;
}

std::size_t g_one(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw std::invalid_argument("vertex out of range");
    return balanced_partition(g, ColorState::singleton(g.order(), v)).value;
}

bool eligible_pair(const Graph& g, Vertex v, Vertex w)
{
    if (v == w || v >= g.order() || w >= g.order())
        return false;
    if (g.has_edge(v, w))
        return true;
    auto a = g.neighbors(v);
    auto b = g.neighbors(w);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return true;
        a[i] < b[j] ? ++i : ++j;
    }
    return false;
}

std::optional<std::size_t> g_two(const Graph& g, Vertex v, Vertex w)
{
    if (!eligible_pair(g, v, w))
        return std::nullopt;
    Vertex pair[] = {v, w};
    return balanced_partition(g, ColorState::from_vertices(g.order(), pair)).value;
}

CornerstoneReport best_cornerstone(const Graph& g)
{
    std::size_t n = g.order();
    CornerstoneReport rep;
    bool have_best = false;
    auto consider = [&](std::vector<Vertex> chosen, const Partition& p) {
        if (!have_best || p.value < rep.best_value) {
            rep.best = std::move(chosen);
            rep.best_value = p.value;
            rep.s_set = p.s_set;
            rep.t_set = p.t_set;
            have_best = true;
        }
    };

    for (Vertex v = 0; v < n; ++v) {
        auto p = balanced_partition(g, ColorState::singleton(n, v));
        if (p.disconnects)
            rep.one_cornerstones.emplace_back(v, p.value);
        consider({v}, p);
    }
    // Adjacent pairs are tried before pairs that only share a neighbour.
    std::vector<std::pair<Edge, Partition>> pairs;
    for (bool adjacent : {true, false})
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = v + 1; w < n; ++w) {
                if (g.has_edge(v, w) != adjacent || !eligible_pair(g, v, w))
                    continue;
                Vertex pair[] = {v, w};
                auto p = balanced_partition(g, ColorState::from_vertices(n, pair));
                consider({v, w}, p);
                if (p.disconnects)
                    pairs.emplace_back(Edge{v, w}, p);
            }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [e, p] : pairs)
        rep.two_cornerstones.emplace_back(e, p.value);
    return rep;
}

} // namespace pzf
