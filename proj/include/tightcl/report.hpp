#pragma once

// Command dispatch and JSON reports.
//
// A report carries everything needed to recompute it: the printed session,
// the command options and, for every witness, the (f, I) pair it certifies.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tightcl/session.hpp"

namespace tc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "tightcl.report/1";
inline constexpr const char* kEngineVersion = "tightcl 1.0.0";

struct CommandOptions {
  std::string command;
  std::string ideal;   // -i
  std::string elem;    // --elem: a poly name or polynomial text
  std::string by;      // colon --by: an ideal name, poly name or polynomial text
  std::string with;    // intersect --with: an ideal name
  std::vector<std::string> params;  // hms --params
  std::optional<int> e;             // bracket -e
  std::optional<std::int64_t> q0;   // star/special --q0, a power of p
  std::optional<int> emax;
  std::optional<std::int64_t> degree_cap;
  std::optional<int> n;             // reduce-graded -n
  /// special: "direct" or "via-tight".
  std::string strategy = "direct";
};

const std::vector<std::string>& command_names();

Json options_to_json(const CommandOptions& o);
CommandOptions options_from_json(const Json& j);

/// Throws Error on a missing object, an unknown command or an invalid level.
Json run_command(const Session& s, const CommandOptions& o);

struct ReplayOutcome {
  bool ok = true;
  std::size_t witnesses = 0;
  std::vector<std::string> failures;
};

/// Rebuilds the session from the report, recomputes the result and replays
/// every witness from its recorded data.
ReplayOutcome replay_report(const Json& report);

/// Copy with every "timing_ms" field removed, at any depth.
Json without_timing(Json j);

/// Short human-readable rendering.
std::string render_text(const Json& report);

}  // namespace tc
