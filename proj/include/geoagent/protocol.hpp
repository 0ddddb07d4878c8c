#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace geoagent::protocol {

inline constexpr const char* kZoomToolName = "image_zoom_in_tool";
inline constexpr const char* kSearchToolName = "search_web";

/// Machine-readable malformation reasons (the agent loop counts them).
namespace reason {
inline constexpr const char* kUnclosedTag = "unclosed tag";
inline constexpr const char* kIncompleteJson = "incomplete json tool-call";
inline constexpr const char* kUnknownTool = "unknown tool";
inline constexpr const char* kBadArity = "bad arity";
inline constexpr const char* kNoPayload = "no payload";
}  // namespace reason

struct BBox {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;
  bool operator==(const BBox&) const = default;
};

struct ToolInvocation {
  std::string name;  // kZoomToolName or kSearchToolName
  std::optional<BBox> bbox;
  std::optional<std::string> query;

  static ToolInvocation zoom(BBox bbox);
  static ToolInvocation search(std::string query);
  bool operator==(const ToolInvocation&) const = default;
};

struct FinalAnswer {
  std::string text;
  bool operator==(const FinalAnswer&) const = default;
};

struct Malformed {
  std::string reason;  // one of the reason:: codes
  std::string raw;     // offending assistant turn, preserved for logging
  bool operator==(const Malformed&) const = default;
};

struct ProtocolMessage {
  std::optional<std::string> think;  // inner text, verbatim
  std::variant<ToolInvocation, FinalAnswer, Malformed> payload;
  std::vector<std::string> warnings;

  bool is_tool_call() const { return std::holds_alternative<ToolInvocation>(payload); }
  bool is_answer() const { return std::holds_alternative<FinalAnswer>(payload); }
  bool is_malformed() const { return std::holds_alternative<Malformed>(payload); }
};

/// Total parse of one assistant turn: extracts the optional <think> block
/// and exactly one payload. Never throws; malformation is a value. An
/// answer wins over a tool call in the same turn; extra tool calls are
/// recorded as warnings.
ProtocolMessage parse_model_output(std::string_view raw);

/// Canonical assistant-turn text for a think + tool-call pair, in the exact
/// shape parse_model_output accepts.
std::string render_tool_call_turn(const std::string& think, const ToolInvocation& call);
std::string render_answer_turn(const std::string& think, const std::string& answer);

enum class Termination { answered, turn_cap, context_cap, protocol_error };

std::string to_string(Termination t);
Termination termination_from_string(std::string_view s);

struct Observation {
  std::string text;
  std::optional<std::string> image_path;  // content-addressed, relative
  bool operator==(const Observation&) const = default;
};

enum class ActionKind { tool_call, answer, malformed };

struct ActionRecord {
  ActionKind kind = ActionKind::malformed;
  std::optional<ToolInvocation> invocation;  // kind == tool_call
  std::string answer_text;                   // kind == answer
  std::string malformed_reason;              // kind == malformed
  bool operator==(const ActionRecord&) const = default;
};

struct Turn {
  std::string thought;
  ActionRecord action;
  std::optional<Observation> observation;  // present iff an action executed
  bool operator==(const Turn&) const = default;
};

struct ToolCallStats {
  struct Counts {
    int total = 0;
    int failed = 0;
    bool operator==(const Counts&) const = default;
  };
  Counts zoom;
  Counts search;
  Counts malformed;  // protocol-level failures; total == failed

  int total_calls() const { return zoom.total + search.total + malformed.total; }
  int failed_calls() const { return zoom.failed + search.failed + malformed.failed; }
  bool operator==(const ToolCallStats&) const = default;
};

struct Trajectory {
  std::string sample_id;
  std::vector<Turn> turns;
  std::optional<std::string> final_answer;
  Termination termination = Termination::protocol_error;
  ToolCallStats stats;
  bool operator==(const Trajectory&) const = default;
};

/// One line of structured text per trajectory; deserialize(serialize(t)) == t.
/// Image observations are stored by file reference, never inline.
std::string serialize_trajectory(const Trajectory& t);
Trajectory deserialize_trajectory(std::string_view line);

}  // namespace geoagent::protocol
