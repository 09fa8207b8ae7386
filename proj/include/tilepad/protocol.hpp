#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "tilepad/session.hpp"

namespace tilepad::protocol {

namespace msg {

struct Place {
  TileKind tile;
  GridPos pos;
};
struct Remove {
  GridPos pos;
};
struct Tick {
  int n = 1;
};
struct Reset {};
struct SetMode {
  Mode mode;
};
struct LoadMaze {
  std::string text;
};
struct SetEquation {
  math::Equation equation;
};
struct Check {};

}  // namespace msg

using ClientMessage = std::variant<msg::Place, msg::Remove, msg::Tick, msg::Reset, msg::SetMode,
                                   msg::LoadMaze, msg::SetEquation, msg::Check>;

namespace reply {

struct Step {
  StepOutput output;
};
struct Outcome {
  std::string result;
  // Not serialized; the CLI prints it.
  std::string detail;
};
struct Error {
  std::string code;
  std::string message;
};

}  // namespace reply

using ServerMessage = std::variant<reply::Step, reply::Outcome, reply::Error>;

inline constexpr int kMaxTick = 1000;

class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Parses one request line. Throws DecodeError naming the offending field.
ClientMessage decode_client(std::string_view line);

// Canonical single-line JSON, fields in schema order, no whitespace, no
// trailing newline.
std::string encode(const ServerMessage& message);
std::string encode_snapshot(const Snapshot& snapshot);

ServerMessage handle(Session& session, const ClientMessage& message);

// One protocol connection: a session plus the decode/handle/encode loop.
class Connection {
 public:
  explicit Connection(SessionConfig config = {}, facts::FactStore facts = {})
      : session_(std::move(config), std::move(facts)) {}

  // Never throws for bad input; malformed lines yield an error reply and
  // leave the session untouched.
  std::string on_line(std::string_view line);

  const Session& session() const { return session_; }

 private:
  Session session_;
};

// Serves newline-delimited requests until end of stream, one reply line per
// request. A trailing partial line is discarded with an error reply.
void serve(std::istream& in, std::ostream& out, const facts::FactStore& facts,
           SessionConfig config = {});

}  // namespace tilepad::protocol
