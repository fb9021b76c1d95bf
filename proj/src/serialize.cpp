#include "pzf/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace pzf {

using nlohmann::json;

json to_json(const Trajectory& t)
{
    json steps = json::array();
    for (const auto& s : t.states)
        steps.push_back(s.to_hex());
    return {{"seed", t.seed}, {"steps", std::move(steps)}, {"terminated", t.terminated}};
}

Trajectory trajectory_from_json(const json& j, std::size_t n)
{
    Trajectory t;
    t.seed = j.at("seed").get<std::uint64_t>();
    t.terminated = j.at("terminated").get<bool>();
    for (const auto& s : j.at("steps"))
        t.states.push_back(ColorState::from_hex(n, s.get<std::string>()));
    return t;
}

json to_json(const ExactTable& t)
{
    json entries = json::array();
    t.for_each([&](const ColorState& b, double v) { entries.push_back({{"blue", b.to_hex()}, {"ept", v}}); });
    return {{"n", t.order()}, {"graph_hash", t.graph_hash()}, {"entries", std::move(entries)}};
}

json to_json(const EstimateResult& r)
{
    return {{"mean", r.mean},       {"std", r.std_dev},         {"std_error", r.std_error()},
            {"trials", r.trials},   {"ci_low", r.ci_low},       {"ci_high", r.ci_high},
            {"confidence", r.confidence}, {"seed", r.seed},     {"truncated", r.truncated},
            {"valid", r.valid}};
}

json to_json(const TailEstimate& r)
{
    return {{"t", r.t},           {"probability", r.probability}, {"ci_low", r.ci_low},
            {"ci_high", r.ci_high}, {"confidence", r.confidence}, {"trials", r.trials},
            {"seed", r.seed}};
}

json to_json(const CornerstoneReport& r)
{
    json ones = json::array();
    for (const auto& [v, g] : r.one_cornerstones)
        ones.push_back({{"vertex", v}, {"g", g}});
    json twos = json::array();
    for (const auto& [e, g] : r.two_cornerstones)
        twos.push_back({{"pair", {e.first, e.second}}, {"g", g}});
    return {{"one_cornerstones", std::move(ones)},
            {"two_cornerstones", std::move(twos)},
            {"best", r.best},
            {"best_value", r.best_value},
            {"s_set", r.s_set.vertices()},
            {"t_set", r.t_set.vertices()}};
}

json to_json(const ModifiedRunRecord& r)
{
    json j = {{"chosen", r.chosen},
              {"s_set", r.s_set.vertices()},
              {"t_set", r.t_set.vertices()},
              {"phase4_steps", r.phase4_steps},
              {"phase6_steps", r.phase6_steps},
              {"phase7_steps", r.phase7_steps},
              {"total_steps", r.total_steps},
              {"stalled", r.stalled},
              {"seed", r.seed}};
    if (!r.diagnostic.empty())
        j["diagnostic"] = r.diagnostic;
    return j;
}

const char* to_string(BoundMode mode)
{
    return mode == BoundMode::exact ? "exact" : "monte_carlo";
}

json to_json(const BoundReport& r)
{
    json entries = json::array();
    for (const auto& e : r.entries) {
        json je = {{"name", e.name},
                   {"direction", e.direction},
                   {"bound_value", e.bound_value},
                   {"observed_value", e.observed_value},
                   {"satisfied", e.satisfied},
                   {"mode", to_string(r.mode)}};
        if (e.direction == "info") {
            je["ratio"] = e.bound_value > 0.0 ? e.observed_value / e.bound_value : 0.0;
            je["log_base"] = "e";
        }
        entries.push_back(std::move(je));
    }
    return {{"graph", r.graph_id}, {"mode", to_string(r.mode)}, {"n", r.n},
            {"k", r.k},            {"observed", r.observed},   {"std_error", r.std_error},
            {"all_satisfied", r.all_satisfied()}, {"entries", std::move(entries)}};
}

std::string format_double(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    if (res.ec != std::errc())
        throw std::runtime_error("double formatting failed");
    return {buf, res.ptr};
}

} // namespace pzf
