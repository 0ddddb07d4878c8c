#include "geoagent/protocol.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace geoagent::protocol {

using nlohmann::json;

ToolInvocation ToolInvocation::zoom(BBox bbox) {
  ToolInvocation inv;
  inv.name = kZoomToolName;
  inv.bbox = bbox;
  return inv;
}

ToolInvocation ToolInvocation::search(std::string query) {
  ToolInvocation inv;
  inv.name = kSearchToolName;
  inv.query = std::move(query);
  return inv;
}

namespace {

struct TagSpan {
  size_t begin = std::string_view::npos;  // position of '<'
  size_t inner_begin = 0;                 // just past the opening tag
  size_t inner_end = 0;                   // position of closing tag's '<'
  bool open_found = false;
  bool closed = false;
};

TagSpan find_tag(std::string_view text, std::string_view name, size_t from = 0) {
  TagSpan span;
  const std::string open = "<" + std::string(name) + ">";
  const std::string close = "</" + std::string(name) + ">";
  span.begin = text.find(open, from);
  if (span.begin == std::string_view::npos) return span;
  span.open_found = true;
  span.inner_begin = span.begin + open.size();
  span.inner_end = text.find(close, span.inner_begin);
  span.closed = span.inner_end != std::string_view::npos;
  return span;
}

// Validates the tool-call JSON object into a ToolInvocation, or a reason.
std::variant<ToolInvocation, std::string> validate_tool_call(const json& obj) {
  if (!obj.is_object() || !obj.contains("name") || !obj["name"].is_string()) {
    return std::string(reason::kIncompleteJson);
  }
  const std::string name = obj["name"].get<std::string>();
  if (name != kZoomToolName && name != kSearchToolName) {
    return std::string(reason::kUnknownTool);
  }
  if (!obj.contains("arguments") || !obj["arguments"].is_object()) {
    return std::string(reason::kBadArity);
  }
  const json& args = obj["arguments"];
  if (name == kZoomToolName) {
    if (!args.contains("bbox_2d") || !args["bbox_2d"].is_array() ||
        args["bbox_2d"].size() != 4) {
      return std::string(reason::kBadArity);
    }
    BBox bbox;
    int* coords[4] = {&bbox.x1, &bbox.y1, &bbox.x2, &bbox.y2};
    for (size_t i = 0; i < 4; ++i) {
      const json& v = args["bbox_2d"][i];
      if (!v.is_number_integer()) return std::string(reason::kBadArity);
      *coords[i] = v.get<int>();
    }
    return ToolInvocation::zoom(bbox);
  }
  if (!args.contains("query") || !args["query"].is_string() ||
      args["query"].get<std::string>().empty()) {
    return std::string(reason::kBadArity);
  }
  return ToolInvocation::search(args["query"].get<std::string>());
}

}  // namespace

ProtocolMessage parse_model_output(std::string_view raw) {
  ProtocolMessage msg;
  const auto malformed = [&](const char* why) {
    msg.payload = Malformed{why, std::string(raw)};
    return msg;
  };

  const TagSpan think = find_tag(raw, "think");
  if (think.open_found) {
    if (!think.closed) return malformed(reason::kUnclosedTag);
    msg.think = std::string(raw.substr(think.inner_begin, think.inner_end - think.inner_begin));
  }
  const size_t payload_from = think.closed ? think.inner_end : 0;

  const TagSpan answer = find_tag(raw, "answer", payload_from);
  const TagSpan call = find_tag(raw, "tool_call", payload_from);

  if (answer.open_found) {
    if (!answer.closed) return malformed(reason::kUnclosedTag);
    if (call.open_found) {
      msg.warnings.push_back("tool call and answer in one turn; answer taken");
    }
    msg.payload =
        FinalAnswer{std::string(raw.substr(answer.inner_begin, answer.inner_end - answer.inner_begin))};
    return msg;
  }

  if (!call.open_found) return malformed(reason::kNoPayload);
  if (!call.closed) return malformed(reason::kUnclosedTag);

  if (find_tag(raw, "tool_call", call.inner_end + 1).open_found) {
    msg.warnings.push_back("multiple tool calls in one turn; only the first is executed");
  }

  const std::string_view body =
      raw.substr(call.inner_begin, call.inner_end - call.inner_begin);
  json obj = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded()) return malformed(reason::kIncompleteJson);

  auto validated = validate_tool_call(obj);
  if (auto* why = std::get_if<std::string>(&validated)) {
    msg.payload = Malformed{*why, std::string(raw)};
    return msg;
  }
  msg.payload = std::get<ToolInvocation>(std::move(validated));
  return msg;
}

std::string render_tool_call_turn(const std::string& think, const ToolInvocation& call) {
  json obj;
  obj["name"] = call.name;
  if (call.bbox) {
    obj["arguments"] = {{"bbox_2d", {call.bbox->x1, call.bbox->y1, call.bbox->x2, call.bbox->y2}}};
  } else {
    obj["arguments"] = {{"query", call.query.value_or("")}};
  }
  return "<think>" + think + "</think>\n<tool_call>\n" + obj.dump() + "\n</tool_call>";
}

std::string render_answer_turn(const std::string& think, const std::string& answer) {
  return "<think>" + think + "</think>\n<answer>" + answer + "</answer>";
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::answered: return "answered";
    case Termination::turn_cap: return "turn_cap";
    case Termination::context_cap: return "context_cap";
    case Termination::protocol_error: return "protocol_error";
  }
  return "protocol_error";
}

Termination termination_from_string(std::string_view s) {
  if (s == "answered") return Termination::answered;
  if (s == "turn_cap") return Termination::turn_cap;
  if (s == "context_cap") return Termination::context_cap;
  if (s == "protocol_error") return Termination::protocol_error;
  throw std::invalid_argument("unknown termination: " + std::string(s));
}

namespace {

json invocation_to_json(const ToolInvocation& inv) {
  json j;
  j["name"] = inv.name;
  if (inv.bbox) j["bbox"] = {inv.bbox->x1, inv.bbox->y1, inv.bbox->x2, inv.bbox->y2};
  if (inv.query) j["query"] = *inv.query;
  return j;
}

ToolInvocation invocation_from_json(const json& j) {
  ToolInvocation inv;
  inv.name = j.at("name").get<std::string>();
  if (j.contains("bbox")) {
    const auto& b = j.at("bbox");
    inv.bbox = BBox{b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(),
                    b.at(3).get<int>()};
  }
  if (j.contains("query")) inv.query = j.at("query").get<std::string>();
  return inv;
}

json counts_to_json(const ToolCallStats::Counts& c) {
  return json{{"total", c.total}, {"failed", c.failed}};
}

ToolCallStats::Counts counts_from_json(const json& j) {
  return {j.at("total").get<int>(), j.at("failed").get<int>()};
}

}  // namespace

std::string serialize_trajectory(const Trajectory& t) {
  json j;
  j["sample_id"] = t.sample_id;
  j["termination"] = to_string(t.termination);
  if (t.final_answer) j["final_answer"] = *t.final_answer;
  j["tool_call_stats"] = {{"zoom", counts_to_json(t.stats.zoom)},
                          {"search", counts_to_json(t.stats.search)},
                          {"malformed", counts_to_json(t.stats.malformed)}};
  json turns = json::array();
  for (const Turn& turn : t.turns) {
    json jt;
    jt["thought"] = turn.thought;
    switch (turn.action.kind) {
      case ActionKind::tool_call:
        jt["action"] = {{"kind", "tool_call"},
                        {"invocation", invocation_to_json(*turn.action.invocation)}};
        break;
      case ActionKind::answer:
        jt["action"] = {{"kind", "answer"}, {"text", turn.action.answer_text}};
        break;
      case ActionKind::malformed:
        jt["action"] = {{"kind", "malformed"}, {"reason", turn.action.malformed_reason}};
        break;
    }
    if (turn.observation) {
      json jo;
      jo["text"] = turn.observation->text;
      if (turn.observation->image_path) jo["image"] = *turn.observation->image_path;
      jt["observation"] = jo;
    }
    turns.push_back(std::move(jt));
  }
  j["turns"] = std::move(turns);
  return j.dump();
}

Trajectory deserialize_trajectory(std::string_view line) {
  json j = json::parse(line);
  Trajectory t;
  t.sample_id = j.at("sample_id").get<std::string>();
  t.termination = termination_from_string(j.at("termination").get<std::string>());
  if (j.contains("final_answer")) t.final_answer = j.at("final_answer").get<std::string>();
  const json& stats = j.at("tool_call_stats");
  t.stats.zoom = counts_from_json(stats.at("zoom"));
  t.stats.search = counts_from_json(stats.at("search"));
  t.stats.malformed = counts_from_json(stats.at("malformed"));
  for (const json& jt : j.at("turns")) {
    Turn turn;
    turn.thought = jt.at("thought").get<std::string>();
    const json& action = jt.at("action");
    const std::string kind = action.at("kind").get<std::string>();
    if (kind == "tool_call") {
      turn.action.kind = ActionKind::tool_call;
      turn.action.invocation = invocation_from_json(action.at("invocation"));
    } else if (kind == "answer") {
      turn.action.kind = ActionKind::answer;
      turn.action.answer_text = action.at("text").get<std::string>();
    } else if (kind == "malformed") {
      turn.action.kind = ActionKind::malformed;
      turn.action.malformed_reason = action.at("reason").get<std::string>();
    } else {
      throw std::invalid_argument("unknown action kind: " + kind);
    }
    if (jt.contains("observation")) {
      Observation obs;
      obs.text = jt.at("observation").at("text").get<std::string>();
      if (jt.at("observation").contains("image")) {
        obs.image_path = jt.at("observation").at("image").get<std::string>();
      }
      turn.observation = std::move(obs);
    }
    t.turns.push_back(std::move(turn));
  }
  return t;
}

}  // namespace geoagent::protocol
