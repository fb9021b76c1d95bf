#include "pzf/cli.hpp"

#include "pzf/bounds.hpp"
#include "pzf/engine.hpp"
#include "pzf/errors.hpp"
#include "pzf/estimator.hpp"
#include "pzf/exact.hpp"
#include "pzf/modified.hpp"
#include "pzf/parallel.hpp"
#include "pzf/random.hpp"
#include "pzf/serialize.hpp"
#include "pzf/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pzf::cli {

using nlohmann::json;

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names = {"generate", "exact",   "estimate", "tail",         "throttle",
                                                   "cornerstones", "modified", "bounds", "couple-check", "sweep"};
    return names;
}

namespace {

const char* describe(const std::string& name)
{
    if (name == "generate")
        return "Build a graph from a family spec and print it";
    if (name == "exact")
        return "Exact expected propagation time (n <= cap)";
    if (name == "estimate")
        return "Monte Carlo expected propagation time";
    if (name == "tail")
        return "Monte Carlo estimate of P(T > steps)";
    if (name == "throttle")
        return "Exact throttling number and a minimising set";
    if (name == "cornerstones")
        return "Cut vertices, cut pairs and the g-minimising choice";
    if (name == "modified")
        return "Run the phased process and report per-phase step counts";
    if (name == "bounds")
        return "Check ept against the known upper and lower bounds";
    if (name == "couple-check")
        return "Shared-randomness runs from nested start sets";
    return "Monte Carlo sweep over a parameter grid, CSV rows in grid order";
}

} // namespace

Command parse_args(const std::vector<std::string>& args)
{
    Command cmd;
    CLI::App app{"Probabilistic zero forcing toolkit", "pzf"};
    app.require_subcommand(1);

    std::string graph, file, start, superset, seed_text, out, grid;
    std::size_t trials = 0, steps = 0, cap = 0, workers = 1;
    std::vector<std::pair<std::string, CLI::App*>> subs;
    struct Opts
    {
        CLI::Option *graph, *file, *start, *superset, *seed, *trials, *steps, *out, *cap, *grid;
    };
    std::vector<Opts> opts;

    for (const auto& name : subcommands()) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        Opts o{};
        o.graph = sub->add_option("--graph", graph, "Family spec: path:5, star:8, spider:legs=3,length=2, "
                                                    "star_chain:r=2,s=10, gnp:n=12,p=0.5,seed=1");
        o.file = sub->add_option("--file", file, "Edge-list file: header 'n m' then one 'u v' per line");
        o.start = sub->add_option("--start", start, "Start set: vertex index, list '0,2', or 'best'");
        o.superset = sub->add_option("--superset", superset, "couple-check: the larger start set");
        o.seed = sub->add_option("--seed", seed_text, "Master seed, decimal or 0x hex (default 0x5EED)");
        o.trials = sub->add_option("--trials", trials, "Monte Carlo trials / runs");
        o.steps = sub->add_option("--steps", steps, "Step budget, or t for tail");
        sub->add_option("--format", cmd.format, "Output format")->check(CLI::IsMember({"json", "csv", "edgelist"}));
        o.out = sub->add_option("--out", out, "Write the report to this path instead of stdout");
        o.cap = sub->add_option("--cap-override", cap, "Exact-solver vertex cap (max 22)");
        o.grid = sub->add_option("--grid", grid, "Sweep grid, e.g. 'r=2,4,8;s=8,16,32,64'");
        sub->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
        sub->add_option("--mode", cmd.mode, "bounds: exact or mc")->check(CLI::IsMember({"exact", "mc"}));
        subs.emplace_back(name, sub);
        opts.push_back(o);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        cmd.show_help = true;
        cmd.help = app.help();
        for (auto& [name, sub] : subs)
            if (sub->parsed())
                cmd.help = sub->help();
        return cmd;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        if (what.empty())
            what = e.get_name();
        throw UsageError(what);
    }

    std::size_t which = 0;
    for (; which < subs.size(); ++which)
        if (subs[which].second->parsed())
            break;
    cmd.subcommand = subs[which].first;
    const Opts& o = opts[which];

    if (o.graph->count())
        cmd.graph = graph;
    if (o.file->count())
        cmd.file = file;
    if (o.start->count())
        cmd.start = start;
    if (o.superset->count())
        cmd.superset = superset;
    if (o.trials->count())
        cmd.trials = trials;
    if (o.steps->count())
        cmd.steps = steps;
    if (o.out->count())
        cmd.out = out;
    if (o.cap->count())
        cmd.cap_override = cap;
    if (o.grid->count())
        cmd.grid = grid;
    cmd.workers = workers;
    if (o.seed->count()) {
        try {
            cmd.seed = parse_seed(seed_text);
        } catch (const std::exception&) {
            throw UsageError("--seed: not a 64-bit integer: " + seed_text);
        }
    }

    if (cmd.graph && cmd.file)
        throw UsageError("--graph and --file are mutually exclusive");
    if (!cmd.graph && !cmd.file)
        throw UsageError("one of --graph or --file is required");
    if (cmd.subcommand == "sweep") {
        if (cmd.file)
            throw UsageError("--file: sweep takes a family name via --graph");
        if (!cmd.grid)
            throw UsageError("--grid is required for sweep");
    } else if (cmd.grid) {
        throw UsageError("--grid is only valid for sweep");
    }
    if (cmd.subcommand == "tail" && !cmd.steps)
        throw UsageError("--steps is required for tail (the time t in P(T > t))");
    if (cmd.subcommand == "couple-check" && (!cmd.start || !cmd.superset))
        throw UsageError("couple-check needs --start and --superset");
    if (cmd.superset && cmd.subcommand != "couple-check")
        throw UsageError("--superset is only valid for couple-check");
    if (cmd.format == "edgelist" && cmd.subcommand != "generate")
        throw UsageError("--format edgelist is only valid for generate");
    if (cmd.trials && *cmd.trials == 0)
        throw UsageError("--trials must be positive");
    return cmd;
}

std::uint64_t parse_seed(const std::string& text)
{
    if (text.empty() || text.front() == '-')
        throw std::invalid_argument("bad seed");
    std::size_t pos = 0;
    auto v = std::stoull(text, &pos, 0);
    if (pos != text.size())
        throw std::invalid_argument("bad seed");
    return v;
}

ColorState parse_start(const std::string& spec, std::size_t n)
{
    std::string s = spec;
    if (!s.empty() && s.front() == '{' && s.back() == '}')
        s = s.substr(1, s.size() - 2);
    ColorState out(n);
    std::stringstream ss(s);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos, 10);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid start vertex '" + item + "'");
        }
        if (pos != item.size() || item.front() == '-')
            throw std::invalid_argument("invalid start vertex '" + item + "'");
        if (v >= n)
            throw std::invalid_argument("start vertex " + item + " out of range for n=" + std::to_string(n));
        out.set(static_cast<Vertex>(v));
        any = true;
    }
    if (!any)
        throw std::invalid_argument("empty start set");
    return out;
}

std::vector<std::string> expand_grid(const std::string& grid)
{
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;
    std::stringstream ss(grid);
    std::string axis;
    while (std::getline(ss, axis, ';')) {
        auto eq = axis.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == axis.size())
            throw UsageError("--grid: expected key=v1,v2,... but got '" + axis + "'");
        std::vector<std::string> values;
        std::stringstream vs(axis.substr(eq + 1));
        std::string v;
        while (std::getline(vs, v, ','))
            if (!v.empty())
                values.push_back(v);
        if (values.empty())
            throw UsageError("--grid: no values for '" + axis.substr(0, eq) + "'");
        axes.emplace_back(axis.substr(0, eq), std::move(values));
    }
    if (axes.empty())
        throw UsageError("--grid is empty");
    std::vector<std::string> cells{""};
    for (const auto& [key, values] : axes) {
        std::vector<std::string> next;
        for (const auto& prefix : cells)
            for (const auto& v : values)
                next.push_back(prefix + (prefix.empty() ? "" : ",") + key + "=" + v);
        cells = std::move(next);
    }
    return cells;
}

namespace {

struct Loaded
{
    Graph graph;
    std::string id;
};

Loaded load_graph(const Command& cmd)
{
    if (cmd.graph) {
        auto spec = parse_family_spec(*cmd.graph);
        return {generate(spec), spec.to_string()};
    }
    std::ifstream in(*cmd.file);
    if (!in)
        throw Error("cannot open graph file " + *cmd.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return {parse_graph(buf.str()), *cmd.file};
}

std::size_t exact_cap(const Command& cmd)
{
    if (!cmd.cap_override)
        return default_exact_cap;
    if (*cmd.cap_override > hard_exact_cap)
        throw CapExceeded(*cmd.cap_override, hard_exact_cap);
    return *cmd.cap_override;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_cell(const json& v)
{
    if (v.is_string())
        return csv_escape(v.get<std::string>());
    if (v.is_number_float())
        return format_double(v.get<double>());
    return csv_escape(v.dump());
}

/// Rows of flat objects sharing the first row's keys.
std::string to_csv(const json& rows)
{
    std::string out;
    if (rows.empty())
        return out;
    std::vector<std::string> keys;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it)
        keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i)
        out += (i ? "," : "") + keys[i];
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            out += (i ? "," : "") + csv_cell(row.contains(keys[i]) ? row.at(keys[i]) : json());
        out += '\n';
    }
    return out;
}

void stamp(json& j, const Command& cmd, const std::string& graph_id)
{
    j["graph"] = graph_id;
    j["seed"] = cmd.seed;
    j["version"] = version_string;
}

struct StartChoice
{
    ColorState set;
    bool chosen_by_default = false;
};

/// Explicit --start, or the single-vertex argmin: exact when n fits the
/// cap, Monte Carlo otherwise.
StartChoice resolve_start(const Command& cmd, const Graph& g, std::size_t trials)
{
    std::size_t n = g.order();
    if (cmd.start && *cmd.start != "best")
        return {parse_start(*cmd.start, n), false};
    std::size_t cap = exact_cap(cmd);
    if (n <= cap) {
        auto best = exact_ept_graph(g, cap);
        return {ColorState::singleton(n, best.vertex), true};
    }
    GraphEstimateOptions go;
    go.estimate.workers = cmd.workers;
    auto best = estimate_ept_graph(g, trials, cmd.seed, go);
    return {ColorState::singleton(n, best.vertex), true};
}

json run_generate(const Command& cmd, const Loaded& L, std::string& text)
{
    const Graph& g = L.graph;
    if (cmd.format == "edgelist") {
        text = serialize_graph(g) + "\n";
        return {};
    }
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({{"u", u}, {"v", v}});
    if (cmd.format == "csv") {
        text = to_csv(edges);
        return {};
    }
    json j = {{"n", g.order()},
              {"m", g.size()},
              {"connected", is_connected(g)},
              {"fingerprint", g.fingerprint()},
              {"edges", std::move(edges)}};
    stamp(j, cmd, L.id);
    return j;
}

json run_exact(const Command& cmd, const Loaded& L)
{
    const Graph& g = L.graph;
    std::size_t cap = exact_cap(cmd);
    json j;
    if (cmd.start && *cmd.start != "best") {
        ColorState s = parse_start(*cmd.start, g.order());
        j["start"] = s.to_set_string();
        j["ept"] = exact_ept(g, s, cap);
        j["start_chosen"] = "given";
    } else {
        auto best = exact_ept_graph(g, cap);
        j["start"] = ColorState::singleton(g.order(), best.vertex).to_set_string();
        j["ept"] = best.value;
        j["start_chosen"] = "argmin";
    }
    j["n"] = g.order();
    j["cap"] = cap;
    stamp(j, cmd, L.id);
    return j;
}

json run_estimate(const Command& cmd, const Loaded& L)
{
    const Graph& g = L.graph;
    std::size_t trials = cmd.trials.value_or(10000);
    EstimateOptions eo;
    eo.workers = cmd.workers;
    eo.max_steps = cmd.steps.value_or(0);
    json j;
    if (cmd.start && *cmd.start != "best") {
        ColorState s = parse_start(*cmd.start, g.order());
        j = to_json(estimate_ept(g, s, trials, cmd.seed, eo));
        j["start"] = s.to_set_string();
        j["start_chosen"] = "given";
    } else {
        GraphEstimateOptions go;
        go.estimate = eo;
        auto best = estimate_ept_graph(g, trials, cmd.seed, go);
        j = to_json(best.result);
        j["start"] = ColorState::singleton(g.order(), best.vertex).to_set_string();
        j["start_chosen"] = best.restricted ? "argmin_sampled" : "argmin";
    }
    j["n"] = g.order();
    stamp(j, cmd, L.id);
    return j;
}

json run_tail(const Command& cmd, const Loaded& L)
{
    const Graph& g = L.graph;
    std::size_t trials = cmd.trials.value_or(10000);
    auto start = resolve_start(cmd, g, trials);
    EstimateOptions eo;
    eo.workers = cmd.workers;
    json j = to_json(estimate_tail(g, start.set, *cmd.steps, trials, cmd.seed, eo));
    j["start"] = start.set.to_set_string();
    j["start_chosen"] = start.chosen_by_default ? "argmin" : "given";
    stamp(j, cmd, L.id);
    return j;
}

json run_throttle(const Command& cmd, const Loaded& L)
{
    auto th = exact_throttling(L.graph, exact_cap(cmd));
    json j = {{"thpzf", th.value}, {"argmin", th.argmin.to_set_string()}, {"argmin_size", th.argmin.count()}};
    stamp(j, cmd, L.id);
    return j;
}

json run_cornerstones(const Command& cmd, const Loaded& L)
{
    json j = to_json(best_cornerstone(L.graph));
    stamp(j, cmd, L.id);
    return j;
}

json run_modified_cmd(const Command& cmd, const Loaded& L, json& rows)
{
    const Graph& g = L.graph;
    std::size_t runs = cmd.trials.value_or(1);
    ModifiedOptions mo;
    mo.max_phase_steps = cmd.steps.value_or(0);
    auto choice = best_cornerstone(g);
    std::vector<ModifiedRunRecord> recs(runs);
    parallel_for_index(runs, cmd.workers, [&](std::size_t i) {
        std::uint64_t s = runs == 1 ? cmd.seed : derive_seed(cmd.seed, i);
        recs[i] = run_modified(g, choice, s, mo);
    });
    rows = json::array();
    for (const auto& r : recs) {
        json row = to_json(r);
        row.erase("s_set");
        row.erase("t_set");
        row["chosen"] = ColorState::from_vertices(g.order(), r.chosen).to_set_string();
        row.erase("diagnostic");
        rows.push_back(std::move(row));
    }
    if (runs == 1) {
        json j = to_json(recs.front());
        stamp(j, cmd, L.id);
        return j;
    }
    auto mean_se = [&](auto field) {
        double sum = 0, sq = 0;
        for (const auto& r : recs) {
            double x = static_cast<double>(field(r));
            sum += x;
            sq += x * x;
        }
        double n = static_cast<double>(runs);
        double mean = sum / n;
        double var = (sq - n * mean * mean) / (n - 1.0);
        return json{{"mean", mean}, {"std_error", std::sqrt(std::max(var, 0.0) / n)}};
    };
    std::size_t stalled = static_cast<std::size_t>(
        std::count_if(recs.begin(), recs.end(), [](const ModifiedRunRecord& r) { return r.stalled; }));
    json j = {{"runs", runs},
              {"chosen", choice.best},
              {"s_set", choice.s_set.vertices()},
              {"t_set", choice.t_set.vertices()},
              {"phase4_steps", mean_se([](const ModifiedRunRecord& r) { return r.phase4_steps; })},
              {"phase6_steps", mean_se([](const ModifiedRunRecord& r) { return r.phase6_steps; })},
              {"phase7_steps", mean_se([](const ModifiedRunRecord& r) { return r.phase7_steps; })},
              {"total_steps", mean_se([](const ModifiedRunRecord& r) { return r.total_steps; })},
              {"stalled_runs", stalled}};
    stamp(j, cmd, L.id);
    return j;
}

json run_bounds(const Command& cmd, const Loaded& L, json& rows)
{
    const Graph& g = L.graph;
    VerifyOptions vo;
    vo.graph_id = L.id;
    vo.cap = exact_cap(cmd);
    vo.trials = cmd.trials.value_or(10000);
    vo.seed = cmd.seed;
    vo.estimate.workers = cmd.workers;
    auto start = resolve_start(cmd, g, vo.trials);
    auto rep = verify_bounds(g, start.set, cmd.mode == "mc" ? BoundMode::monte_carlo : BoundMode::exact, vo);
    json j = to_json(rep);
    j["start"] = start.set.to_set_string();
    stamp(j, cmd, L.id);
    rows = j["entries"];
    return j;
}

json run_couple_check(const Command& cmd, const Loaded& L)
{
    const Graph& g = L.graph;
    std::size_t n = g.order();
    ColorState s = parse_start(*cmd.start, n);
    ColorState t = parse_start(*cmd.superset, n);
    if (!s.is_subset_of(t))
        throw std::invalid_argument("--start must be a subset of --superset");
    std::size_t trials = cmd.trials.value_or(10000);
    std::size_t steps = cmd.steps.value_or(20);
    std::vector<char> bad(trials, 0);
    parallel_for_index(trials, cmd.workers, [&](std::size_t i) {
        bad[i] = coupled_run(g, s, t, derive_seed(cmd.seed, i), steps).subset_ok ? 0 : 1;
    });
    std::size_t violations = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
    json j = {{"subset_ok", violations == 0},
              {"violations", violations},
              {"trials", trials},
              {"steps", steps},
              {"start", s.to_set_string()},
              {"superset", t.to_set_string()}};
    stamp(j, cmd, L.id);
    return j;
}

std::string run_sweep(const Command& cmd)
{
    std::string base = *cmd.graph;
    std::string family = base.substr(0, base.find(':'));
    std::string fixed = base.find(':') == std::string::npos ? "" : base.substr(base.find(':') + 1);
    auto cells = expand_grid(*cmd.grid);
    std::size_t trials = cmd.trials.value_or(10000);

    struct Row
    {
        std::string params;
        std::size_t n = 0, r = 0;
        Vertex start = 0;
        std::uint64_t seed = 0;
        EstimateResult est;
    };
    std::vector<Row> rows(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        rows[i].params = fixed.empty() ? cells[i] : fixed + "," + cells[i];
        parse_family_spec(family + ":" + rows[i].params); // fail fast on a bad cell
    }
    parallel_for_index(cells.size(), cmd.workers, [&](std::size_t i) {
        Row& row = rows[i];
        Graph g = generate(parse_family_spec(family + ":" + row.params));
        if (!is_connected(g))
            throw DisconnectedGraph("graph is disconnected");
        row.n = g.order();
        row.r = radius(g);
        row.start = center_vertex(g);
        row.seed = derive_seed(cmd.seed, i);
        EstimateOptions eo;
        eo.max_steps = cmd.steps.value_or(0);
        row.est = estimate_ept(g, ColorState::singleton(row.n, row.start), trials, row.seed, eo);
    });

    std::ostringstream out;
    out << "family,params,start,trials,seed,mean,std,ci_low,ci_high,n,radius,radius_ratio,linear_ratio,chan_ratio,"
           "loglog_bound,version\n";
    for (const auto& row : rows) {
        double n = static_cast<double>(row.n), r = static_cast<double>(row.r);
        double scale = row.r >= 1 && row.n > row.r ? r * std::log(n / r) : 0.0;
        auto ub = upper_bounds(row.n, 1);
        auto ratio = [&](double denom) { return denom > 0.0 ? format_double(row.est.mean / denom) : std::string(); };
        out << family << ',' << csv_escape(row.params) << ',' << row.start << ',' << row.est.trials << ','
            << row.seed << ',' << format_double(row.est.mean) << ',' << format_double(row.est.std_dev) << ','
            << format_double(row.est.ci_low) << ',' << format_double(row.est.ci_high) << ',' << row.n << ','
            << row.r << ',' << ratio(scale) << ',' << ratio(ub.linear) << ',' << ratio(ub.chan) << ','
            << format_double(lower_bound_loglog(row.n, 1)) << ',' << version_string << '\n';
    }
    return out.str();
}

std::string render(const Command& cmd, const Loaded& L)
{
    std::string text;
    json rows;
    json j;
    const auto& sc = cmd.subcommand;
    if (sc == "generate")
        j = run_generate(cmd, L, text);
    else if (sc == "exact")
        j = run_exact(cmd, L);
    else if (sc == "estimate")
        j = run_estimate(cmd, L);
    else if (sc == "tail")
        j = run_tail(cmd, L);
    else if (sc == "throttle")
        j = run_throttle(cmd, L);
    else if (sc == "cornerstones")
        j = run_cornerstones(cmd, L);
    else if (sc == "modified")
        j = run_modified_cmd(cmd, L, rows);
    else if (sc == "bounds")
        j = run_bounds(cmd, L, rows);
    else if (sc == "couple-check")
        j = run_couple_check(cmd, L);
    if (!text.empty())
        return text;
    if (cmd.format == "csv") {
        if (rows.is_array() && !rows.empty()) {
            for (auto& r : rows) {
                r["graph"] = L.id;
                r["version"] = version_string;
            }
            return to_csv(rows);
        }
        for (const auto& [k, v] : j.items())
            if (v.is_structured())
                throw UsageError("--format csv is not available for " + sc);
        return to_csv(json::array({j}));
    }
    return j.dump(2) + "\n";
}

} // namespace

int run_command(const Command& cmd, std::ostream& out, std::ostream& err)
{
    if (cmd.show_help) {
        out << cmd.help;
        return 0;
    }
    std::string text;
    try {
        if (cmd.subcommand == "sweep") {
            text = run_sweep(cmd);
        } else {
            Loaded L = load_graph(cmd);
            if (cmd.subcommand != "generate" && !is_connected(L.graph))
                throw DisconnectedGraph("graph is disconnected");
            text = render(cmd, L);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    if (cmd.out) {
        std::ofstream f(*cmd.out, std::ios::binary);
        if (!(f << text)) {
            err << "error: cannot write " << *cmd.out << '\n';
            return 1;
        }
    } else {
        out << text;
    }
    return 0;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Command cmd;
    try {
        cmd = parse_args(args);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }
    return run_command(cmd, out, err);
}

} // namespace pzf::cli
