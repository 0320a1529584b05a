#pragma once

#include "json.hpp"

#include "thompson/cayley.hpp"
#include "thompson/metric.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

// JSON shapes for CLI output; schemas/ in the repository root mirrors them.
nlohmann::json length_json(const LengthBreakdown& b, const SpaceLabeling& s);
nlohmann::json plmap_json(const PLMap& m);
nlohmann::json witness_report_json(const WitnessReport& r);
nlohmann::json detour_report_json(const DetourReport& r);
nlohmann::json tail_report_json(const TailReport& r);
nlohmann::json path_trace_json(const PathTrace& t);
nlohmann::json convexity_json(const ConvexityResult& c);
nlohmann::json ball_stats_json(const Ball& b);

}  // namespace thompson
