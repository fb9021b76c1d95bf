#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works on small graphs given as adjacency bitmasks and
// deliberately avoids the library's solver code paths.

#include "pzf/graph.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

struct SmallGraph
{
    int n = 0;
    std::vector<std::uint32_t> adj; // adj[v] bit u set iff uv is an edge
};

inline SmallGraph from_graph(const pzf::Graph& g)
{
    SmallGraph s;
    s.n = static_cast<int>(g.order());
    s.adj.assign(s.n, 0);
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= 1U << v;
        s.adj[v] |= 1U << u;
    }
    return s;
}

inline bool connected(const SmallGraph& g)
{
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if (frontier >> v & 1U)
                next |= g.adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (g.n == 32 ? ~0U : (1U << g.n) - 1);
}

/// Every labeled connected graph on n vertices, via edge-subset enumeration.
inline std::vector<pzf::Graph> connected_graphs(int n)
{
    std::vector<pzf::Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(u, v);
    std::vector<pzf::Graph> out;
    std::uint64_t limit = std::uint64_t{1} << all.size();
    for (std::uint64_t m = 0; m < limit; ++m) {
        SmallGraph s{n, std::vector<std::uint32_t>(n, 0)};
        std::vector<pzf::Edge> es;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (m >> i & 1U) {
                es.push_back(all[i]);
                s.adj[all[i].first] |= 1U << all[i].second;
                s.adj[all[i].second] |= 1U << all[i].first;
            }
        if (connected(s))
            out.emplace_back(n, es);
    }
    return out;
}

/// p_v(B) computed from the rule directly.
inline double p_blue(const SmallGraph& g, std::uint32_t b, int v)
{
    double stay_white = 1.0;
    for (int u = 0; u < g.n; ++u) {
        if (!(g.adj[v] >> u & 1U) || !(b >> u & 1U))
            continue;
        double deg = std::popcount(g.adj[u]);
        double blue_nb = std::popcount(g.adj[u] & b);
        stay_white *= 1.0 - (1.0 + blue_nb) / deg;
    }
    return 1.0 - stay_white;
}

/// Dense one-step transition matrix over masks 0..2^n-1.
inline std::vector<std::vector<double>> transition_matrix(const SmallGraph& g)
{
    std::uint32_t states = 1U << g.n;
    std::vector<std::vector<double>> P(states, std::vector<double>(states, 0.0));
    for (std::uint32_t b = 1; b < states; ++b) {
        std::vector<double> p(g.n, 0.0);
        for (int v = 0; v < g.n; ++v)
            if (!(b >> v & 1U))
                p[v] = p_blue(g, b, v);
        // Enumerate every superset of b; impossible ones get probability 0.
        std::uint32_t white = (states - 1) & ~b;
        for (std::uint32_t a = white;; a = (a - 1) & white) {
            double pr = 1.0;
            for (int v = 0; v < g.n; ++v)
                if (white >> v & 1U)
                    pr *= (a >> v & 1U) ? p[v] : 1.0 - p[v];
            P[b][b | a] += pr;
            if (a == 0)
                break;
        }
    }
    return P;
}

/// Expected hitting time of the full set from every nonempty mask, by
/// Gaussian elimination on (I - Q) E = 1.
inline std::vector<double> ept_by_linear_solve(const SmallGraph& g)
{
    auto P = transition_matrix(g);
    std::uint32_t states = 1U << g.n;
    std::uint32_t full = states - 1;
    std::vector<std::uint32_t> idx; // transient states
    std::vector<int> pos(states, -1);
    for (std::uint32_t b = 1; b < full; ++b) {
        pos[b] = static_cast<int>(idx.size());
        idx.push_back(b);
    }
    std::size_t m = idx.size();
    std::vector<std::vector<double>> A(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        A[i][i] = 1.0;
        for (std::size_t j = 0; j < m; ++j)
            A[i][j] -= P[idx[i]][idx[j]];
        A[i][m] = 1.0;
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < m; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c]))
                piv = r;
        std::swap(A[c], A[piv]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || A[r][c] == 0.0)
                continue;
            double f = A[r][c] / A[c][c];
            for (std::size_t k = c; k <= m; ++k)
                A[r][k] -= f * A[c][k];
        }
    }
    std::vector<double> E(states, 0.0);
    E[0] = std::nan("");
    for (std::size_t i = 0; i < m; ++i)
        E[idx[i]] = A[i][m] / A[i][i];
    return E;
}

/// P(blue set contains `target` after t steps) from every start mask.
inline std::vector<double> reach_after(const SmallGraph& g, std::uint32_t target, int t)
{
    auto P = transition_matrix(g);
    std::uint32_t states = 1U << g.n;
    std::vector<double> r(states, 0.0);
    for (std::uint32_t b = 0; b < states; ++b)
        r[b] = (b & target) == target ? 1.0 : 0.0;
    for (int step = 0; step < t; ++step) {
        std::vector<double> next(states, 0.0);
        for (std::uint32_t b = 1; b < states; ++b)
            for (std::uint32_t c = 0; c < states; ++c)
                next[b] += P[b][c] * r[c];
        r = next;
    }
    return r;
}

/// g value by trying every 2-colouring of the remaining vertices.
inline std::size_t g_brute(const pzf::Graph& g, std::uint32_t removed)
{
    SmallGraph s = from_graph(g);
    std::uint32_t rest = ((1U << s.n) - 1) & ~removed;
    std::size_t fallback = std::popcount(rest);
    std::size_t best = fallback;
    for (std::uint32_t side = rest;; side = (side - 1) & rest) {
        std::uint32_t other = rest & ~side;
        if (side && other) {
            bool cut = true;
            for (int v = 0; v < s.n && cut; ++v)
                if (side >> v & 1U)
                    cut = (s.adj[v] & other) == 0;
            if (cut)
                best = std::min<std::size_t>(best, std::max(std::popcount(side), std::popcount(other)));
        }
        if (side == 0)
            break;
    }
    return best;
}

/// Cut vertex test by removal and BFS.
inline bool is_cut_vertex(const pzf::Graph& g, pzf::Vertex v)
{
    std::size_t n = g.order();
    if (n <= 2)
        return false;
    std::vector<char> seen(n, 0);
    seen[v] = 1;
    pzf::Vertex s = v == 0 ? 1 : 0;
    std::vector<pzf::Vertex> stack{s};
    seen[s] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached < n - 1;
}

/// P(Bin(m, p) >= k) by direct summation with long double binomials.
inline long double binomial_tail(unsigned m, long double p, unsigned k)
{
    long double total = 0.0L;
    for (unsigned j = k; j <= m; ++j) {
        long double c = 1.0L;
        for (unsigned i = 1; i <= j; ++i)
            c = c * static_cast<long double>(m - j + i) / static_cast<long double>(i);
        total += c * std::pow(p, static_cast<long double>(j)) * std::pow(1.0L - p, static_cast<long double>(m - j));
    }
    return total;
}

} // namespace oracle
