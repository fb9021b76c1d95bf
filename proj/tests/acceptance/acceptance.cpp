// One line per acceptance criterion: "PASS|FAIL <id> <summary> (<seconds>s)".
// Exit status is nonzero if any criterion fails.

#include "../oracles.hpp"
#include "pzf/bounds.hpp"
#include "pzf/engine.hpp"
#include "pzf/estimator.hpp"
#include "pzf/exact.hpp"
#include "pzf/modified.hpp"
#include "pzf/random.hpp"
#include "pzf/structure.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace pzf;

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::vector<Graph> connected_up_to(int max_n)
{
    std::vector<Graph> out{make_complete(1)};
    for (int n = 2; n <= max_n; ++n)
        for (auto& g : oracle::connected_graphs(n))
            out.push_back(std::move(g));
    return out;
}

struct MeanSe
{
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs)
{
    double n = static_cast<double>(xs.size());
    double sum = 0.0, sq = 0.0;
    for (double x : xs) {
        sum += x;
        sq += x * x;
    }
    double mean = sum / n;
    double var = xs.size() > 1 ? std::max(0.0, (sq - n * mean * mean) / (n - 1.0)) : 0.0;
    return {mean, std::sqrt(var / n)};
}

Outcome path_closed_form()
{
    double worst = 0.0;
    for (std::size_t n = 3; n <= 13; ++n)
        worst = std::max(worst, std::abs(exact_ept_graph(make_path(n)).value - path_ept_closed_form(n)));
    return {worst <= 1e-9, "n=3..13 max|err|=" + fmt("%.3g", worst)};
}

Outcome small_graph_bounds()
{
    std::size_t graphs = 0, sets = 0, violations = 0;
    for (const auto& g : connected_up_to(6)) {
        std::size_t n = g.order();
        auto table = exact_ept_table(g);
        table.for_each([&](const ColorState& b, double e) {
            std::size_t k = b.count();
            ++sets;
            if (e < lower_bound_loglog(n, k) - exact_tolerance || e > static_cast<double>(n - k) + exact_tolerance)
                ++violations;
        });
        if (exact_throttling(table).value < lower_bound_loglog(n, 1) - exact_tolerance)
            ++violations;
        ++graphs;
    }
    return {violations == 0, std::to_string(graphs) + " graphs, " + std::to_string(sets) +
                                 " start sets, violations=" + std::to_string(violations)};
}

Outcome exact_coupling()
{
    std::size_t pairs = 0, violations = 0;
    for (const auto& g : connected_up_to(5)) {
        std::size_t n = g.order();
        std::uint32_t full = (1U << n) - 1;
        auto table = exact_ept_table(g);
        auto reach = reach_probability_table(g, ColorState::full(n), 5);
        for (std::uint32_t t = 1; t <= full; ++t)
            for (std::uint32_t s = (t - 1) & t; s != 0; s = (s - 1) & t) {
                ++pairs;
                bool bad = table.at_mask(s) < table.at_mask(t) - exact_tolerance;
                for (std::size_t l = 1; l <= 5; ++l)
                    bad = bad || reach[l][s] > reach[l][t] + 1e-12;
                violations += bad ? 1 : 0;
            }
    }
    return {violations == 0, std::to_string(pairs) + " nested pairs S<T, l=1..5, violations=" +
                                 std::to_string(violations)};
}

Outcome pathwise_coupling()
{
    std::size_t violations = 0, runs = 0;
    for (std::uint64_t inst = 0; inst < 20; ++inst) {
        UniformStream pick(derive_seed(0xC0, inst));
        std::size_t n = 2 + static_cast<std::size_t>(pick.uniform(0, 0) * 7.0); // 2..8
        Graph g = make_gnp(n, 0.45, derive_seed(0xC1, inst));
        ColorState s(n), t(n);
        s.set(static_cast<Vertex>(pick.bits(1, 0) % n));
        t |= s;
        for (Vertex v = 0; v < n; ++v)
            if (pick.uniform(2, v) < 0.35)
                t.set(v);
        for (std::size_t i = 0; i < 10000; ++i) {
            ++runs;
            if (!coupled_run(g, s, t, derive_seed(inst, i), default_max_steps(g)).subset_ok)
                ++violations;
        }
    }
    return {violations == 0, std::to_string(runs) + " coupled runs, violations=" + std::to_string(violations)};
}

Outcome mc_exact_agreement()
{
    struct Fixture
    {
        const char* spec;
        std::vector<Vertex> start;
    };
    const std::vector<Fixture> fixtures = {
        {"path:12", {5}},
        {"path:9", {4}},
        {"cycle:10", {0}},
        {"star:11", {0}},
        {"complete:8", {3}},
        {"spider:legs=3,length=3", {0}},
        {"star_chain:r=1,s=4", {1}},
        {"gnp:n=12,p=0.3,seed=1", {0}},
        {"gnp:n=10,p=0.5,seed=2", {2, 7}},
        {"gnp:n=12,p=0.2,seed=3", {5}},
    };
    std::size_t agree = 0, identical = 0;
    double worst_z = 0.0;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        Graph g = generate(parse_family_spec(fixtures[i].spec));
        ColorState s = ColorState::from_vertices(g.order(), fixtures[i].start);
        double exact = exact_ept(g, s);
        std::uint64_t seed = derive_seed(0xACCE, i);
        auto one = estimate_ept(g, s, 100000, seed, {.workers = 1});
        auto eight = estimate_ept(g, s, 100000, seed, {.workers = 8});
        double diff = std::abs(one.mean - exact);
        bool ok = one.std_error() > 0.0 ? diff <= 4.0 * one.std_error() : diff <= exact_tolerance;
        if (one.std_error() > 0.0)
            worst_z = std::max(worst_z, diff / one.std_error());
        agree += ok ? 1 : 0;
        identical += (one.mean == eight.mean && one.std_dev == eight.std_dev) ? 1 : 0;
    }
    bool pass = agree == fixtures.size() && identical == fixtures.size();
    return {pass, std::to_string(agree) + "/10 within 4 SE (max z=" + fmt("%.2f", worst_z) + "), " +
                      std::to_string(identical) + "/10 bit-identical across 1 and 8 workers"};
}

Outcome star_tails()
{
    std::size_t violations = 0, cases = 0;
    double worst = 1.0;
    for (std::size_t n = 3; n <= 300; ++n)
        for (std::size_t k = 0; k < n; ++k) {
            double v = star_increase_tail(n, k);
            worst = std::min(worst, v);
            violations += v < 0.2 ? 1 : 0;
            ++cases;
        }
    return {violations == 0, std::to_string(cases) + " (n,k) cases, min tail=" + fmt("%.4f", worst) +
                                 ", violations=" + std::to_string(violations)};
}

Outcome expected_increase_checks()
{
    std::size_t states = 0, low = 0, wide_states = 0, wide_bad = 0;
    for (const auto& g : connected_up_to(6)) {
        std::size_t n = g.order();
        for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) {
            ColorState b = ColorState::from_mask(n, m);
            double e = expected_increase(g, b);
            ++states;
            low += e < 1.0 - 1e-12 ? 1 : 0;

            std::vector<Vertex> active; // blue with a white neighbour
            std::vector<std::size_t> white_deg;
            for (Vertex u = 0; u < n; ++u) {
                if (!b.test(u))
                    continue;
                std::size_t w = 0;
                for (auto x : g.neighbors(u))
                    w += b.test(x) ? 0 : 1;
                if (w) {
                    active.push_back(u);
                    white_deg.push_back(w);
                }
            }
            std::size_t ell = frontier(g, b).size();
            if (active.size() < 3 || ell < 3)
                continue;
            ++wide_states;
            if (e >= 2.0 - 1e-12)
                continue;
            std::size_t not_one = 0;
            for (auto w : white_deg)
                not_one += w != 1 ? 1 : 0;
            bool common = false;
            for (Vertex x = 0; x < n && !common; ++x) {
                if (b.test(x))
                    continue;
                bool all = true;
                for (auto u : active)
                    all = all && g.has_edge(u, x);
                common = all;
            }
            wide_bad += (not_one <= 1 && common) ? 0 : 1;
        }
    }
    bool pass = low == 0 && wide_bad == 0;
    return {pass, std::to_string(states) + " states, sum p_v < 1: " + std::to_string(low) + "; " +
                      std::to_string(wide_states) + " states with k,l>=3, disjunction failures: " +
                      std::to_string(wide_bad)};
}

Outcome modified_process()
{
    const std::size_t graphs = 200, runs = 200, mc_trials = 4000;
    std::size_t stalls = 0, phase6_bad = 0, phase7_bad = 0, dominance_bad = 0, with_s = 0, with_phase6 = 0;
    double worst6 = -1e9, worst7 = -1e9, worst_dom = -1e9;
    for (std::size_t k = 0; k < graphs; ++k) {
        UniformStream pick(derive_seed(0x30D, k));
        std::size_t n = 8 + pick.bits(0, 0) % 23; // 8..30
        double base = std::log(static_cast<double>(n)) / static_cast<double>(n);
        double p = std::min(0.9, base * (1.2 + 3.0 * pick.uniform(1, 0)));
        Graph g = make_gnp(n, p, derive_seed(0x30E, k));
        auto choice = best_cornerstone(g);
        std::vector<double> p6, p7, total;
        for (std::size_t i = 0; i < runs; ++i) {
            auto r = run_modified(g, choice, derive_seed(k, i));
            stalls += r.stalled ? 1 : 0;
            p6.push_back(static_cast<double>(r.phase6_steps));
            p7.push_back(static_cast<double>(r.phase7_steps));
            total.push_back(static_cast<double>(r.total_steps));
        }
        auto m6 = mean_se(p6), m7 = mean_se(p7), mt = mean_se(total);
        with_s += choice.s_set.none() ? 0 : 1;
        with_phase6 += m6.mean > 0.0 ? 1 : 0;
        double s_size = static_cast<double>(choice.s_set.count());
        double t_size = static_cast<double>(choice.t_set.count());
        double slack6 = m6.mean - ((t_size - s_size) / 2.0 + 4.0 * m6.se);
        double slack7 = m7.mean - (s_size + 10.0);
        worst6 = std::max(worst6, slack6);
        worst7 = std::max(worst7, slack7);
        phase6_bad += slack6 > 0.0 ? 1 : 0;
        phase7_bad += slack7 > 0.0 ? 1 : 0;

        auto mc = estimate_ept(g, ColorState::singleton(n, choice.best.front()), mc_trials, derive_seed(0x30F, k));
        double dom = mc.mean - (mt.mean + 4.0 * std::hypot(mt.se, mc.std_error()));
        worst_dom = std::max(worst_dom, dom);
        dominance_bad += dom > 0.0 ? 1 : 0;
    }
    bool pass = stalls == 0 && phase6_bad == 0 && phase7_bad == 0 && dominance_bad == 0;
    return {pass, std::to_string(graphs) + " graphs x " + std::to_string(runs) + " runs (" + std::to_string(with_s) +
                      " with S nonempty, " + std::to_string(with_phase6) + " with phase 6 active); stalls=" +
                      std::to_string(stalls) + ", phase6 over=" + std::to_string(phase6_bad) + " (max slack " +
                      fmt("%.2f", worst6) + "), phase7 over=" + std::to_string(phase7_bad) + " (max slack " +
                      fmt("%.2f", worst7) + "), dominance over=" + std::to_string(dominance_bad) + " (max " +
                      fmt("%.2f", worst_dom) + ")"};
}

Outcome step7()
{
    double c = step7_constant();
    double resid = std::abs(std::exp(4.0 / 3.0 * (1.0 - 1.0 / c)) - c);
    return {std::abs(c - 1.8328) <= 5e-4 && resid <= 1e-10,
            "C=" + fmt("%.6f", c) + ", residual=" + fmt("%.2g", resid)};
}

Outcome radius_trend()
{
    const std::vector<std::size_t> rs = {2, 4, 8}, ss = {8, 16, 32, 64};
    double lo = 1e300, hi = 0.0;
    bool monotone = true;
    std::string means;
    for (std::size_t ri = 0; ri < rs.size(); ++ri) {
        double prev = -1.0;
        for (std::size_t si = 0; si < ss.size(); ++si) {
            Graph g = make_star_chain(rs[ri], ss[si]);
            double n = static_cast<double>(g.order());
            double rad = static_cast<double>(radius(g));
            auto est = estimate_ept(g, ColorState::singleton(g.order(), center_vertex(g)), 10000,
                                    derive_seed(0x10, ri * 8 + si));
            double ratio = est.mean / (rad * std::log(n / rad));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            monotone = monotone && est.mean > prev;
            prev = est.mean;
        }
    }
    bool pass = hi / lo <= 10.0 && monotone;
    return {pass, "ratio band [" + fmt("%.3f", lo) + ", " + fmt("%.3f", hi) + "], c2/c1=" + fmt("%.2f", hi / lo) +
                      ", increasing in s at fixed r: " + (monotone ? "yes" : "no")};
}

Outcome throttling()
{
    std::size_t graphs = 0, mismatches = 0;
    double worst = 0.0;
    for (const auto& g : connected_up_to(5)) {
        ++graphs;
        auto small = oracle::from_graph(g);
        auto ref = small.n == 1 ? std::vector<double>{std::nan(""), 0.0} : oracle::ept_by_linear_solve(small);
        double best = 1e300;
        for (std::uint32_t m = 1; m < (1U << small.n); ++m)
            best = std::min(best, std::popcount(m) + ref[m]);
        auto th = exact_throttling(g);
        double achieved = static_cast<double>(th.argmin.count()) + ref[th.argmin.to_mask()];
        double err = std::max(std::abs(th.value - best), std::abs(achieved - best));
        worst = std::max(worst, err);
        mismatches += err > exact_tolerance ? 1 : 0;
    }
    return {mismatches == 0, std::to_string(graphs) + " graphs, mismatches=" + std::to_string(mismatches) +
                                 ", max|diff|=" + fmt("%.2g", worst)};
}

} // namespace

int main()
{
    struct Criterion
    {
        const char* id;
        const char* name;
        double time_limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"C1", "path closed form", 60.0, path_closed_form},
        {"C2", "exhaustive small-graph bounds", 600.0, small_graph_bounds},
        {"C3", "exact monotone coupling", 0.0, exact_coupling},
        {"C4", "pathwise coupling", 0.0, pathwise_coupling},
        {"C5", "Monte Carlo vs exact", 0.0, mc_exact_agreement},
        {"C6", "star increase tails", 0.0, star_tails},
        {"C7", "expected increase", 0.0, expected_increase_checks},
        {"C8", "modified process", 0.0, modified_process},
        {"C9", "step-7 constant", 0.0, step7},
        {"C10", "radius-bound trend", 900.0, radius_trend},
        {"C11", "throttling structure", 0.0, throttling},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit > 0.0 && secs > c.time_limit) {
            o.pass = false;
            o.detail += "; over time limit " + fmt("%.0fs", c.time_limit);
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %-4s %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
