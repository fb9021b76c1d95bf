#pragma once

#include "pzf/bounds.hpp"
#include "pzf/engine.hpp"
#include "pzf/estimator.hpp"
#include "pzf/exact.hpp"
#include "pzf/modified.hpp"
#include "pzf/structure.hpp"

#include <json.hpp>

namespace pzf {

inline constexpr const char* version_string = "1.0.0";

/// {"seed", "steps": ["0x..", ...], "terminated"}
nlohmann::json to_json(const Trajectory& t);
Trajectory trajectory_from_json(const nlohmann::json& j, std::size_t n);

/// {"n", "graph_hash", "entries": [{"blue": "0x..", "ept"}, ...]} in
/// increasing mask order.
nlohmann::json to_json(const ExactTable& t);

nlohmann::json to_json(const EstimateResult& r);
nlohmann::json to_json(const TailEstimate& r);
nlohmann::json to_json(const CornerstoneReport& r);
nlohmann::json to_json(const ModifiedRunRecord& r);
nlohmann::json to_json(const BoundReport& r);

const char* to_string(BoundMode mode);

/// Shortest decimal text that round-trips the double.
std::string format_double(double x);

} // namespace pzf
