#include "tilepad/protocol.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace tilepad::protocol {

using Json = nlohmann::ordered_json;

namespace {

const Json& field(const Json& object, const char* name) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw DecodeError(name, std::string("missing field '") + name + "'");
  }
  return *it;
}

int int_field(const Json& object, const char* name, int lo, int hi) {
  const Json& value = field(object, name);
  if (!value.is_number_integer()) {
    throw DecodeError(name, std::string("field '") + name + "' must be an integer");
  }
  const auto n = value.get<std::int64_t>();
  if (n < lo || n > hi) {
    throw DecodeError(name, std::string("field '") + name + "' out of range [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(n);
}

std::string string_field(const Json& object, const char* name) {
  const Json& value = field(object, name);
  if (!value.is_string()) {
    throw DecodeError(name, std::string("field '") + name + "' must be a string");
  }
  return value.get<std::string>();
}

GridPos pos_fields(const Json& object) {
  constexpr int kMaxCoord = 1 << 20;
  return GridPos{int_field(object, "col", 0, kMaxCoord), int_field(object, "row", 0, kMaxCoord)};
}

Json pose_json(const maze::Pose& pose) {
  Json j;
  j["col"] = pose.pos.col;
  j["row"] = pose.pos.row;
  j["heading"] = std::string(1, maze::heading_letter(pose.heading));
  return j;
}

Json snapshot_json(const Snapshot& snapshot) {
  Json j;
  if (const auto* world = std::get_if<World>(&snapshot)) {
    j["entities"] = Json::array();
    for (const auto& e : world->entities) {
      Json entity;
      entity["id"] = e.id;
      entity["kind"] = to_string(e.kind);
      entity["col"] = e.pos.col;
      entity["row"] = e.pos.row;
      entity["stage"] = e.growth_stage;
      j["entities"].push_back(std::move(entity));
    }
    j["space"] = Json::array();
    for (const auto& e : world->space) {
      j["space"].push_back(e.id);
    }
  } else if (const auto* run = std::get_if<MazeSnapshot>(&snapshot)) {
    j["pose"] = run->pose ? pose_json(*run->pose) : Json(nullptr);
    j["trajectory"] = Json::array();
    for (const auto& pose : run->trajectory) {
      j["trajectory"].push_back(pose_json(pose));
    }
  } else {
    const auto& m = std::get<MathSnapshot>(snapshot);
    j["equation"] = m.equation ? Json(math::to_string(*m.equation)) : Json(nullptr);
    j["answer"] = m.answer ? Json(*m.answer) : Json(nullptr);
  }
  return j;
}

}  // namespace

ClientMessage decode_client(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw DecodeError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw DecodeError("", "request must be a JSON object");
  }
  const std::string type = string_field(j, "type");
  if (type == "place") {
    TileKind tile;
    try {
      tile = parse_tile_token(string_field(j, "tile"));
    } catch (const TokenError& e) {
      throw DecodeError("tile", e.what());
    }
    return msg::Place{tile, pos_fields(j)};
  }
  if (type == "remove") {
    return msg::Remove{pos_fields(j)};
  }
  if (type == "tick") {
    return msg::Tick{int_field(j, "n", 1, kMaxTick)};
  }
  if (type == "reset") {
    return msg::Reset{};
  }
  if (type == "mode") {
    const std::string text = string_field(j, "mode");
    auto mode = parse_mode(text);
    if (!mode) {
      throw DecodeError("mode", "unknown mode '" + text + "'");
    }
    return msg::SetMode{*mode};
  }
  if (type == "load_maze") {
    return msg::LoadMaze{string_field(j, "text")};
  }
  if (type == "set_equation") {
    const int a = int_field(j, "a", 0, 9);
    const std::string op = string_field(j, "op");
    if (op != "+" && op != "-") {
      throw DecodeError("op", "op must be \"+\" or \"-\"");
    }
    const int b = int_field(j, "b", 0, 9);
    const math::Equation eq{a, op == "+" ? math::Op::Plus : math::Op::Minus, b};
    if (!math::valid(eq)) {
      throw DecodeError("b", "subtraction must not go below zero");
    }
    return msg::SetEquation{eq};
  }
  if (type == "check") {
    return msg::Check{};
  }
  throw DecodeError("type", "unknown message type '" + type + "'");
}

std::string encode_snapshot(const Snapshot& snapshot) {
  return snapshot_json(snapshot).dump();
}

std::string encode(const ServerMessage& message) {
  Json j;
  if (const auto* step = std::get_if<reply::Step>(&message)) {
    const StepOutput& out = step->output;
    j["type"] = "step";
    j["seq"] = out.seq;
    j["events"] = out.events;
    j["diagnostics"] = Json::array();
    for (const auto& d : out.diagnostics) {
      j["diagnostics"].push_back(d.describe());
    }
    if (out.fact) {
      Json fact;
      fact["id"] = out.fact->id;
      fact["trigger"] = out.fact->trigger;
      fact["body"] = out.fact->body;
      j["fact"] = std::move(fact);
    } else {
      j["fact"] = nullptr;
    }
    j["snapshot"] = snapshot_json(out.snapshot);
  } else if (const auto* outcome = std::get_if<reply::Outcome>(&message)) {
    j["type"] = "outcome";
    j["result"] = outcome->result;
  } else {
    const auto& error = std::get<reply::Error>(message);
    j["type"] = "error";
    j["code"] = error.code;
    j["message"] = error.message;
  }
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

ServerMessage handle(Session& session, const ClientMessage& message) {
  auto mode_error = [&](std::string_view what) {
    return reply::Error{"mode", std::string(what) + " is not available in " +
                                    to_string(session.config().mode) + " mode"};
  };
  const SessionConfig& current = session.config();

  if (const auto* place = std::get_if<msg::Place>(&message)) {
    return reply::Step{session.place(place->tile, place->pos)};
  }
  if (const auto* remove = std::get_if<msg::Remove>(&message)) {
    return reply::Step{session.remove(remove->pos)};
  }
  if (const auto* tick = std::get_if<msg::Tick>(&message)) {
    return reply::Step{session.tick(tick->n)};
  }
  if (std::holds_alternative<msg::Reset>(message)) {
    return reply::Step{session.reset(current, "Reset(" + to_string(current.mode) + ")")};
  }
  if (const auto* set_mode = std::get_if<msg::SetMode>(&message)) {
    SessionConfig config;
    config.mode = set_mode->mode;
    config.canvas_width = current.canvas_width;
    config.canvas_height = current.canvas_height;
    return reply::Step{session.reset(config, "Mode(" + to_string(set_mode->mode) + ")")};
  }
  if (const auto* load = std::get_if<msg::LoadMaze>(&message)) {
    if (current.mode != Mode::Maze) {
      return mode_error("load_maze");
    }
    maze::Maze parsed;
    try {
      parsed = maze::parse_maze(load->text);
    } catch (const maze::MazeParseError& e) {
      return reply::Error{"maze", e.what()};
    }
    SessionConfig config = current;
    config.maze = parsed;
    const std::string what = "MazeLoaded(" + std::to_string(parsed.width) + "x" +
                             std::to_string(parsed.height) + ")";
    return reply::Step{session.reset(std::move(config), what)};
  }
  if (const auto* set_eq = std::get_if<msg::SetEquation>(&message)) {
    if (current.mode != Mode::Math) {
      return mode_error("set_equation");
    }
    SessionConfig config = current;
    config.equation = set_eq->equation;
    return reply::Step{
        session.reset(std::move(config), "Equation(" + math::to_string(set_eq->equation) + ")")};
  }
  try {
    CheckReport report = session.check();
    return reply::Outcome{report.result, report.fact ? report.fact->body : std::string()};
  } catch (const SessionError& e) {
    return reply::Error{e.code(), e.what()};
  }
}

std::string Connection::on_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  try {
    return encode(handle(session_, decode_client(line)));
  } catch (const DecodeError& e) {
    return encode(reply::Error{"decode", e.what()});
  }
}

void serve(std::istream& in, std::ostream& out, const facts::FactStore& facts,
           SessionConfig config) {
  Connection connection(std::move(config), facts);
  std::string line;
  while (std::getline(in, line)) {
    if (in.eof()) {
      // No terminating newline: the client went away mid-message.
      out << encode(reply::Error{"partial", "incomplete message at end of stream discarded"})
          << '\n'
          << std::flush;
      break;
    }
    out << connection.on_line(line) << '\n' << std::flush;
    if (!out) {
      break;
    }
  }
}

}  // namespace tilepad::protocol
