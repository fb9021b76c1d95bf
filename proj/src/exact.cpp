#include "pzf/exact.hpp"

#include "pzf/engine.hpp"
#include "pzf/errors.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace pzf {

namespace {

/// Graph with neighbourhoods as bit masks, for n <= 32.
struct MaskGraph
{
    explicit MaskGraph(const Graph& g) : n(g.order()), nbr(n, 0), deg(n, 0)
    {
        for (Vertex v = 0; v < n; ++v) {
            for (auto w : g.neighbors(v))
                nbr[v] |= std::uint32_t{1} << w;
            deg[v] = static_cast<unsigned>(g.degree(v));
        }
    }

    std::size_t n;
    std::vector<std::uint32_t> nbr;
    std::vector<unsigned> deg;
};

struct FrontierProbs
{
    Vertex vertex[32];
    double prob[32];
    std::size_t size = 0;
};

/// Frontier of B and the probability each frontier vertex turns blue.
void frontier_probabilities(const MaskGraph& mg, std::uint32_t blue, FrontierProbs& out)
{
    double stay[32];
    bool touched[32] = {};
    for (std::size_t v = 0; v < mg.n; ++v)
        stay[v] = 1.0;
    for (std::uint32_t rest = blue; rest; rest &= rest - 1) {
        unsigned u = std::countr_zero(rest);
        std::uint32_t white_nbrs = mg.nbr[u] & ~blue;
        if (!white_nbrs)
            continue;
        unsigned db = std::popcount(mg.nbr[u] & blue);
        double pu = static_cast<double>(1 + db) / static_cast<double>(mg.deg[u]);
        for (; white_nbrs; white_nbrs &= white_nbrs - 1) {
            unsigned v = std::countr_zero(white_nbrs);
            stay[v] *= 1.0 - pu;
            touched[v] = true;
        }
    }
    out.size = 0;
    for (std::size_t v = 0; v < mg.n; ++v) {
        if (!touched[v])
            continue;
        double p = 1.0 - stay[v];
        out.vertex[out.size] = static_cast<Vertex>(v);
        out.prob[out.size] = p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
        ++out.size;
    }
    if (out.size > max_frontier)
        throw Error("frontier of size " + std::to_string(out.size) + " exceeds the enumeration cap of "
                    + std::to_string(max_frontier));
}

/// Calls visit(added_mask, probability) for every outcome with nonzero
/// probability, including the empty outcome.
template <class Visit>
void enumerate_outcomes(const FrontierProbs& fp, std::size_t i, double prob, std::uint32_t added, Visit& visit)
{
    if (i == fp.size) {
        visit(added, prob);
        return;
    }
    double p = fp.prob[i];
    if (p > 0.0)
        enumerate_outcomes(fp, i + 1, prob * p, added | (std::uint32_t{1} << fp.vertex[i]), visit);
    if (p < 1.0)
        enumerate_outcomes(fp, i + 1, prob * (1.0 - p), added, visit);
}

std::size_t effective_cap(std::size_t cap)
{
    return cap < hard_exact_cap ? cap : hard_exact_cap;
}

void check_solvable(const Graph& g, std::size_t cap)
{
    if (g.order() > effective_cap(cap))
        throw CapExceeded(g.order(), effective_cap(cap));
    if (!is_connected(g))
        throw DisconnectedGraph("exact solver requires a connected graph");
}

} // namespace

// ---------------------------------------------------------------------------

std::size_t ExactTable::compress(std::uint32_t mask) const
{
    std::size_t idx = 0;
    for (std::uint32_t rest = mask & ~static_cast<std::uint32_t>(base_.to_mask()); rest; rest &= rest - 1)
        idx |= std::size_t{1} << slot_of_[std::countr_zero(rest)];
    return idx;
}

std::uint32_t ExactTable::expand(std::size_t idx) const
{
    auto mask = static_cast<std::uint32_t>(base_.to_mask());
    for (; idx; idx &= idx - 1)
        mask |= std::uint32_t{1} << free_[std::countr_zero(idx)];
    return mask;
}

std::size_t ExactTable::state_count() const
{
    return base_.none() ? values_.size() - 1 : values_.size();
}

bool ExactTable::contains(const ColorState& b) const
{
    return b.size() == n_ && !b.none() && base_.is_subset_of(b);
}

double ExactTable::at(const ColorState& b) const
{
    if (!contains(b))
        throw std::out_of_range("blue set " + b.to_set_string() + " is not in the exact table");
    return values_[compress(static_cast<std::uint32_t>(b.to_mask()))];
}

// ---------------------------------------------------------------------------

std::vector<std::pair<ColorState, double>> transition_distribution(const Graph& g, const ColorState& b)
{
    std::size_t n = g.order();
    if (b.size() != n)
        throw std::invalid_argument("state width does not match graph order");
    if (b.none())
        throw std::invalid_argument("transition_distribution requires a nonempty blue set");
    if (b.all())
        throw std::invalid_argument("transition_distribution is undefined for the all-blue state");

    std::vector<Vertex> fr;
    std::vector<double> probs;
    for (Vertex v = 0; v < n; ++v) {
        if (b.test(v))
            continue;
        bool has_blue = false;
        for (auto u : g.neighbors(v))
            has_blue = has_blue || b.test(u);
        if (has_blue) {
            fr.push_back(v);
            probs.push_back(blue_probability(g, b, v));
        }
    }
    if (fr.size() > max_frontier)
        throw Error("frontier of size " + std::to_string(fr.size()) + " exceeds the enumeration cap of "
                    + std::to_string(max_frontier));

    std::vector<std::pair<ColorState, double>> out;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << fr.size()); ++sub) {
        double p = 1.0;
        ColorState next = b;
        for (std::size_t i = 0; i < fr.size() && p > 0.0; ++i) {
            if ((sub >> i) & 1U) {
                p *= probs[i];
                next.set(fr[i]);
            } else {
                p *= 1.0 - probs[i];
            }
        }
        if (p > 0.0)
            out.emplace_back(std::move(next), p);
    }
    return out;
}

ExactTable exact_ept_table(const Graph& g, const ExactOptions& opts)
{
    check_solvable(g, opts.cap);
    std::size_t n = g.order();
    MaskGraph mg(g);

    ExactTable table;
    table.n_ = n;
    table.hash_ = g.fingerprint();
    table.base_ = opts.restrict_to.value_or(ColorState::empty(n));
    table.target_ = opts.target.value_or(ColorState::full(n));
    if (table.base_.size() != n || table.target_.size() != n)
        throw std::invalid_argument("restriction/target width does not match graph order");
    if (opts.restrict_to && table.base_.none())
        throw std::invalid_argument("restriction set must be nonempty");

    table.slot_of_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (!table.base_.test(v)) {
            table.slot_of_[v] = table.free_.size();
            table.free_.push_back(v);
        }
    table.values_.assign(std::size_t{1} << table.free_.size(), 0.0);

    auto target = static_cast<std::uint32_t>(table.target_.to_mask());
    FrontierProbs fp;
    // A strict superset of B always has a larger compressed index, so a
    // descending sweep sees every successor before B itself.
    for (std::size_t idx = table.values_.size(); idx-- > 0;) {
        std::uint32_t blue = table.expand(idx);
        if (blue == 0) {
            table.values_[idx] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        if ((blue & target) == target) {
            table.values_[idx] = 0.0;
            continue;
        }
        frontier_probabilities(mg, blue, fp);
        double stay = 1.0;
        for (std::size_t i = 0; i < fp.size; ++i)
            stay *= 1.0 - fp.prob[i];
        if (!(stay < 1.0))
            throw DisconnectedGraph("blue set cannot grow; graph is disconnected");

        double acc = 0.0;
        auto visit = [&](std::uint32_t added, double p) {
            if (added)
                acc += p * table.values_[idx + table.compress(added)];
        };
        enumerate_outcomes(fp, 0, 1.0, 0, visit);
        table.values_[idx] = (1.0 + acc) / (1.0 - stay);
    }
    return table;
}

double exact_ept(const Graph& g, const ColorState& s, std::size_t cap)
{
    if (s.size() != g.order() || s.none())
        throw std::invalid_argument("start set must be nonempty and match the graph order");
    ExactOptions opts;
    opts.cap = cap;
    opts.restrict_to = s;
    return exact_ept_table(g, opts).at(s);
}

GraphEpt exact_ept_graph(const ExactTable& table)
{
    if (!table.base().none() || !table.target().all())
        throw std::invalid_argument("exact_ept_graph needs an unrestricted table");
    GraphEpt best{std::numeric_limits<double>::infinity(), 0};
    for (Vertex v = 0; v < table.order(); ++v) {
        double e = table.at_mask(std::uint32_t{1} << v);
        if (e < best.value - exact_tolerance)
            best = {e, v};
    }
    return best;
}

GraphEpt exact_ept_graph(const Graph& g, std::size_t cap)
{
    ExactOptions opts;
    opts.cap = cap;
    return exact_ept_graph(exact_ept_table(g, opts));
}

ReachProbability exact_reach_probability(const Graph& g, const ColorState& s, const ColorState& target,
                                         std::size_t t, std::size_t cap)
{
    check_solvable(g, cap);
    if (s.size() != g.order() || target.size() != g.order() || s.none())
        throw std::invalid_argument("start must be nonempty and sets must match the graph order");
    MaskGraph mg(g);
    auto full = static_cast<std::uint32_t>(ColorState::full(g.order()).to_mask());
    auto want = static_cast<std::uint32_t>(target.to_mask());

    std::map<std::uint32_t, double> dist{{static_cast<std::uint32_t>(s.to_mask()), 1.0}};
    FrontierProbs fp;
    for (std::size_t step = 0; step < t; ++step) {
        std::map<std::uint32_t, double> next;
        for (auto [blue, p] : dist) {
            if (blue == full) {
                next[blue] += p;
                continue;
            }
            frontier_probabilities(mg, blue, fp);
            auto visit = [&](std::uint32_t added, double q) { next[blue | added] += p * q; };
            enumerate_outcomes(fp, 0, 1.0, 0, visit);
        }
        dist = std::move(next);
    }
    double value = 0.0;
    for (auto [blue, p] : dist)
        if ((blue & want) == want)
            value += p;
    return {t, value > 1.0 ? 1.0 : value};
}

std::vector<std::vector<double>> reach_probability_table(const Graph& g, const ColorState& target,
                                                         std::size_t steps, std::size_t cap)
{
    check_solvable(g, cap);
    MaskGraph mg(g);
    std::size_t states = std::size_t{1} << g.order();
    auto want = static_cast<std::uint32_t>(target.to_mask());

    std::vector<std::vector<double>> f(steps + 1, std::vector<double>(states, 0.0));
    for (std::size_t m = 0; m < states; ++m)
        f[0][m] = (m & want) == want ? 1.0 : 0.0;
    FrontierProbs fp;
    for (std::size_t l = 1; l <= steps; ++l) {
        for (std::size_t m = 1; m < states; ++m) {
            auto blue = static_cast<std::uint32_t>(m);
            if ((blue & want) == want) {
                f[l][m] = 1.0;
                continue;
            }
            frontier_probabilities(mg, blue, fp);
            double acc = 0.0;
            auto visit = [&](std::uint32_t added, double q) { acc += q * f[l - 1][blue | added]; };
            enumerate_outcomes(fp, 0, 1.0, 0, visit);
            f[l][m] = acc;
        }
        f[l][0] = want == 0 ? 1.0 : 0.0;
    }
    return f;
}

Throttling exact_throttling(const ExactTable& table)
{
    if (!table.base().none() || !table.target().all())
        throw std::invalid_argument("exact_throttling needs an unrestricted table");
    Throttling best{std::numeric_limits<double>::infinity(), ColorState::empty(table.order())};
    table.for_each([&](const ColorState& b, double e) {
        double v = static_cast<double>(b.count()) + e;
        if (v < best.value - exact_tolerance)
            best = {v, b};
    });
    return best;
}

Throttling exact_throttling(const Graph& g, std::size_t cap)
{
    ExactOptions opts;
    opts.cap = cap;
    return exact_throttling(exact_ept_table(g, opts));
}

} // namespace pzf
