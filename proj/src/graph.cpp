#include "pzf/graph.hpp"

#include "pzf/errors.hpp"
#include "pzf/random.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pzf {

Graph::Graph(std::size_t n, std::span<const Edge> edges)
{
    if (n == 0)
        throw std::invalid_argument("graph must have at least one vertex");
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("duplicate edge");
        targets_.insert(targets_.end(), a.begin(), a.end());
        offsets_.push_back(targets_.size());
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

ColorState Graph::closed_neighborhood(Vertex v) const
{
    ColorState s(order());
    s.set(v);
    for (auto w : neighbors(v))
        s.set(w);
    return s;
}

std::uint64_t Graph::fingerprint() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFFU;
            h *= 0x100000001b3ULL;
        }
    };
    feed(order());
    for (auto [u, v] : edges()) {
        feed(u);
        feed(v);
    }
    return h;
}

InducedSubgraph induced_subgraph(const Graph& g, const ColorState& keep)
{
    std::vector<Vertex> to_parent = keep.vertices();
    if (to_parent.empty())
        throw std::invalid_argument("induced subgraph on empty vertex set");
    std::vector<Vertex> to_child(g.order(), std::numeric_limits<Vertex>::max());
    for (Vertex i = 0; i < to_parent.size(); ++i)
        to_child[to_parent[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (keep.test(u) && keep.test(v))
            edges.emplace_back(to_child[u], to_child[v]);
    return {Graph(to_parent.size(), edges), std::move(to_parent)};
}

// ---------------------------------------------------------------------------
// Generators

Graph make_path(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph make_cycle(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

Graph make_star(std::size_t leaves)
{
    if (leaves == 0)
        throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph make_complete(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

Graph make_spider(std::size_t legs, std::size_t length)
{
    if (legs == 0 || length == 0)
        throw std::invalid_argument("spider needs legs >= 1 and length >= 1");
    std::vector<Edge> e;
    Vertex next = 1;
    for (std::size_t l = 0; l < legs; ++l) {
        Vertex prev = 0;
        for (std::size_t k = 0; k < length; ++k) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, e);
}

Graph make_star_chain(std::size_t r, std::size_t s)
{
    if (s == 0)
        throw std::invalid_argument("star_chain needs s >= 1");
    std::size_t stars = 2 * r + 1;
    std::vector<Edge> e;
    for (Vertex c = 0; c + 1 < stars; ++c)
        e.emplace_back(c, c + 1);
    for (Vertex c = 0; c < stars; ++c)
        for (std::size_t j = 0; j < s - 1; ++j)
            e.emplace_back(c, static_cast<Vertex>(stars + c * (s - 1) + j));
    return Graph(stars * s, e);
}

namespace {

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed)
{
    UniformStream stream(seed);
    std::vector<Edge> e;
    std::uint64_t pair = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++pair)
            if (stream.uniform(pair, 0) < p)
                e.emplace_back(i, j);
    return Graph(n, e);
}

} // namespace

Graph make_gnp(std::size_t n, double p, std::uint64_t seed)
{
    if (n == 0)
        throw std::invalid_argument("gnp needs n >= 1");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("gnp needs 0 < p <= 1");
    for (int attempt = 0; attempt < gnp_retry_budget; ++attempt) {
        Graph g = sample_gnp(n, p, derive_seed(seed, attempt));
        if (is_connected(g))
            return g;
    }
    throw Error("gnp:n=" + std::to_string(n) + " produced no connected sample in "
                + std::to_string(gnp_retry_budget) + " attempts");
}

Graph generate(const GraphFamilySpec& s)
{
    switch (s.family) {
    case Family::path:
        return make_path(s.n);
    case Family::cycle:
        return make_cycle(s.n);
    case Family::star:
        return make_star(s.leaves);
    case Family::complete:
        return make_complete(s.n);
    case Family::spider:
        return make_spider(s.legs, s.length);
    case Family::star_chain:
        return make_star_chain(s.half, s.star_size);
    case Family::gnp:
        return make_gnp(s.n, s.p, s.seed);
    }
    throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Family spec strings

namespace {

std::size_t parse_count(std::string_view key, std::string_view text)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad integer for '" + std::string(key) + "': '" + std::string(text) + "'");
    return v;
}

double parse_real(std::string_view key, std::string_view text)
{
    std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw std::invalid_argument("bad number for '" + std::string(key) + "': '" + s + "'");
    return v;
}

} // namespace

GraphFamilySpec parse_family_spec(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("graph spec '" + std::string(text) + "' missing ':'");
    std::string_view name = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);

    GraphFamilySpec spec;
    std::map<std::string, std::string, std::less<>> params;
    std::string positional;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            if (!positional.empty())
                throw std::invalid_argument("more than one positional parameter in '" + std::string(text) + "'");
            positional = std::string(item);
        } else {
            params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        }
    }

    auto take = [&](std::initializer_list<std::string_view> keys, bool allow_positional) -> std::string {
        for (auto k : keys) {
            auto it = params.find(k);
            if (it != params.end()) {
                std::string v = it->second;
                params.erase(it);
                return v;
            }
        }
        if (allow_positional && !positional.empty())
            return std::exchange(positional, {});
        throw std::invalid_argument("graph spec '" + std::string(text) + "' missing parameter '"
                                    + std::string(*keys.begin()) + "'");
    };
    auto positive = [&](std::string_view key, std::size_t v) {
        if (v == 0)
            throw std::invalid_argument("parameter '" + std::string(key) + "' must be positive");
        return v;
    };

    if (name == "path" || name == "cycle" || name == "complete") {
        spec.family = name == "path" ? Family::path : name == "cycle" ? Family::cycle : Family::complete;
        spec.n = positive("n", parse_count("n", take({"n"}, true)));
    } else if (name == "star") {
        spec.family = Family::star;
        spec.leaves = positive("leaves", parse_count("leaves", take({"leaves", "L"}, true)));
    } else if (name == "spider") {
        spec.family = Family::spider;
        spec.legs = positive("legs", parse_count("legs", take({"legs", "l"}, false)));
        spec.length = positive("length", parse_count("length", take({"length", "m"}, false)));
    } else if (name == "star_chain") {
        spec.family = Family::star_chain;
        spec.half = parse_count("r", take({"r"}, false));
        spec.star_size = positive("s", parse_count("s", take({"s"}, false)));
    } else if (name == "gnp") {
        spec.family = Family::gnp;
        spec.n = positive("n", parse_count("n", take({"n"}, false)));
        spec.p = parse_real("p", take({"p"}, false));
        if (!(spec.p > 0.0 && spec.p <= 1.0))
            throw std::invalid_argument("gnp needs 0 < p <= 1");
        spec.seed = params.count("seed") ? parse_count("seed", take({"seed"}, false)) : 0;
    } else {
        throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
    }
    if (!positional.empty())
        throw std::invalid_argument("unexpected positional parameter '" + positional + "'");
    if (!params.empty())
        throw std::invalid_argument("unknown parameter '" + params.begin()->first + "' for family '"
                                    + std::string(name) + "'");
    return spec;
}

std::string GraphFamilySpec::to_string() const
{
    std::ostringstream os;
    switch (family) {
    case Family::path:
        os << "path:" << n;
        break;
    case Family::cycle:
        os << "cycle:" << n;
        break;
    case Family::complete:
        os << "complete:" << n;
        break;
    case Family::star:
        os << "star:" << leaves;
        break;
    case Family::spider:
        os << "spider:legs=" << legs << ",length=" << length;
        break;
    case Family::star_chain:
        os << "star_chain:r=" << half << ",s=" << star_size;
        break;
    case Family::gnp:
        os << "gnp:n=" << n << ",p=" << p << ",seed=" << seed;
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Traversal

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(u))
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g)
{
    auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
}

std::size_t eccentricity(const Graph& g, Vertex v)
{
    std::size_t ecc = 0;
    for (const auto& d : bfs_distances(g, v)) {
        if (!d)
            throw DisconnectedGraph("eccentricity undefined on a disconnected graph");
        ecc = std::max(ecc, *d);
    }
    return ecc;
}

Vertex center_vertex(const Graph& g)
{
    Vertex best = 0;
    std::size_t best_ecc = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.order(); ++v) {
        auto e = eccentricity(g, v);
        if (e < best_ecc) {
            best_ecc = e;
            best = v;
        }
    }
    return best;
}

std::size_t radius(const Graph& g)
{
    return eccentricity(g, center_vertex(g));
}

// ---------------------------------------------------------------------------
// Edge-list text

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_field(std::string_view tok, std::size_t line)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(ParseErrorKind::malformed, line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!split_ws(line).empty())
            lines.emplace_back(lineno, line);
    }
    if (lines.empty())
        throw ParseError(ParseErrorKind::malformed, 1, "missing header 'n m'");

    auto header = split_ws(lines[0].second);
    if (header.size() != 2)
        throw ParseError(ParseErrorKind::malformed, lines[0].first, "header must be 'n m'");
    std::size_t n = parse_field(header[0], lines[0].first);
    std::size_t m = parse_field(header[1], lines[0].first);
    if (n == 0)
        throw ParseError(ParseErrorKind::malformed, lines[0].first, "graph must have n >= 1");
    if (lines.size() - 1 != m)
        throw ParseError(ParseErrorKind::malformed, lines.back().first,
                         "header declares " + std::to_string(m) + " edges but found " + std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [ln, line] = lines[i];
        auto tok = split_ws(line);
        if (tok.size() != 2)
            throw ParseError(ParseErrorKind::malformed, ln, "edge line must be 'u v'");
        std::size_t u = parse_field(tok[0], ln);
        std::size_t v = parse_field(tok[1], ln);
        if (u >= n || v >= n)
            throw ParseError(ParseErrorKind::out_of_range, ln,
                             "vertex id out of range for n=" + std::to_string(n));
        if (u == v)
            throw ParseError(ParseErrorKind::self_loop, ln, "self-loop at vertex " + std::to_string(u));
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert(e).second)
            throw ParseError(ParseErrorKind::duplicate_edge, ln,
                             "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
        edges.push_back(e);
    }
    return Graph(n, edges);
}

std::string serialize_graph(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
    for (auto [u, v] : g.edges())
        out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

} // namespace pzf
