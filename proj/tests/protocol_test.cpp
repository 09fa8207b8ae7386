#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tilepad/protocol.hpp"

using namespace tilepad;
using namespace tilepad::protocol;

namespace {

std::string serve_text(const std::string& input, const facts::FactStore& facts = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  serve(in, out, facts);
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string decode_field(const std::string& line) {
  try {
    decode_client(line);
  } catch (const DecodeError& e) {
    return e.field();
  }
  return "<ok>";
}

}  // namespace

TEST_CASE("decode_client") {
  const auto place = decode_client(R"({"type":"place","tile":"rocket","col":2,"row":0})");
  REQUIRE(std::holds_alternative<msg::Place>(place));
  CHECK(std::get<msg::Place>(place).pos == GridPos{2, 0});
  CHECK(std::get<msg::Tick>(decode_client(R"({"type":"tick","n":3})")).n == 3);
  CHECK(std::holds_alternative<msg::Reset>(decode_client(R"({"type":"reset"})")));
  CHECK(std::get<msg::SetMode>(decode_client(R"({"type":"mode","mode":"maze"})")).mode ==
        Mode::Maze);
  CHECK(std::get<msg::LoadMaze>(decode_client(R"({"type":"load_maze","text":">.P"})")).text ==
        ">.P");
  const auto eq = decode_client(R"({"type":"set_equation","a":6,"op":"-","b":1})");
  CHECK(std::get<msg::SetEquation>(eq).equation == math::Equation{6, math::Op::Minus, 1});

  CHECK(decode_field(R"({"type":"place","tile":"loop:12","col":0,"row":0})") == "tile");
  CHECK(decode_field(R"({"type":"place","tile":"rocket","col":-1,"row":0})") == "col");
  CHECK(decode_field(R"({"type":"place","tile":"rocket","col":1})") == "row");
  CHECK(decode_field(R"({"type":"place","tile":"rocket","col":1.5,"row":0})") == "col");
  CHECK(decode_field(R"({"type":"tick","n":0})") == "n");
  CHECK(decode_field(R"({"type":"mode","mode":"space"})") == "mode");
  CHECK(decode_field(R"({"type":"set_equation","a":2,"op":"-","b":3})") == "b");
  CHECK(decode_field(R"({"type":"set_equation","a":2,"op":"*","b":3})") == "op");
  CHECK(decode_field(R"({"type":"fly"})") == "type");
  CHECK(decode_field(R"({"tile":"rocket"})") == "type");
  CHECK(decode_field("not json") == "");
  CHECK(decode_field("[1,2]") == "");
  CHECK(decode_field("") == "");
}

TEST_CASE("handle: place, check in maze, check in sandbox") {
  Session s;
  const auto first = handle(s, decode_client(R"({"type":"place","tile":"rocket","col":2,"row":0})"));
  REQUIRE(std::holds_alternative<reply::Step>(first));
  CHECK(std::get<reply::Step>(first).output.seq == 1);

  const auto sandbox_check = handle(s, msg::Check{});
  REQUIRE(std::holds_alternative<reply::Error>(sandbox_check));
  CHECK(std::get<reply::Error>(sandbox_check).code == "mode");

  Session m;
  handle(m, msg::SetMode{Mode::Maze});
  handle(m, msg::LoadMaze{">.P"});
  handle(m, decode_client(R"({"type":"place","tile":"loop:2","col":0,"row":0})"));
  handle(m, decode_client(R"({"type":"place","tile":"forward","col":1,"row":0})"));
  const auto outcome = handle(m, msg::Check{});
  REQUIRE(std::holds_alternative<reply::Outcome>(outcome));
  CHECK(encode(outcome) == R"({"type":"outcome","result":"success"})");
}

TEST_CASE("handle: configuration messages respect the mode") {
  Session s;
  CHECK(std::get<reply::Error>(handle(s, msg::LoadMaze{">.P"})).code == "mode");
  CHECK(std::get<reply::Error>(handle(s, msg::SetEquation{{1, math::Op::Plus, 1}})).code ==
        "mode");
  handle(s, msg::SetMode{Mode::Maze});
  CHECK(std::get<reply::Error>(handle(s, msg::LoadMaze{">.>"})).code == "maze");
  CHECK(std::get<reply::Error>(handle(s, msg::Check{})).code == "no_maze");
}

TEST_CASE("step encoding is canonical") {
  Session s;
  const auto reply = handle(s, msg::Place{parse_tile_token("rocket"), {2, 0}});
  CHECK(encode(reply) ==
        R"j({"type":"step","seq":1,"events":["Spawned(rocket#1 at (2,0))"],"diagnostics":[],)j"
        R"j("fact":null,"snapshot":{"entities":[{"id":1,"kind":"rocket","col":2,"row":0,"stage":0}],"space":[]}})j");
  CHECK(encode(reply::Error{"decode", "bad \"x\""}) ==
        R"({"type":"error","code":"decode","message":"bad \"x\""})");

  MathSnapshot m{math::Equation{3, math::Op::Plus, 4}, std::nullopt};
  CHECK(encode_snapshot(m) == R"({"equation":"3+4","answer":null})");
  MazeSnapshot empty;
  CHECK(encode_snapshot(empty) == R"({"pose":null,"trajectory":[]})");
}

TEST_CASE("serve: empty input, two places, invalid line in between") {
  CHECK(serve_text("").empty());
  const auto two = lines_of(serve_text(
      "{\"type\":\"place\",\"tile\":\"rocket\",\"col\":2,\"row\":0}\n"
      "{\"type\":\"place\",\"tile\":\"takeoff\",\"col\":3,\"row\":0}\n"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].starts_with(R"({"type":"step","seq":1,)"));
  CHECK(two[1].starts_with(R"({"type":"step","seq":2,)"));

  const auto mixed = lines_of(serve_text(
      "{\"type\":\"place\",\"tile\":\"rocket\",\"col\":2,\"row\":0}\n"
      "{\"type\":\"place\",\"tile\":\"loop:12\",\"col\":2,\"row\":0}\n"
      "{\"type\":\"place\",\"tile\":\"tree\",\"col\":5,\"row\":0}\n"));
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[1].starts_with(R"({"type":"error","code":"decode",)"));
  CHECK(mixed[2].starts_with(R"({"type":"step","seq":2,)"));
}

TEST_CASE("serve: a trailing partial line gets an error reply") {
  const auto lines = lines_of(serve_text("{\"type\":\"reset\"}\n{\"type\":\"res"));
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].starts_with(R"({"type":"error","code":"partial",)"));
}

TEST_CASE("one reply per request and malformed lines never touch the session") {
  oracle::SplitMix64 rng(41);
  const char* good[] = {
      R"({"type":"place","tile":"rocket","col":1,"row":3})",
      R"({"type":"place","tile":"tree","col":4,"row":6})",
      R"({"type":"place","tile":"takeoff","col":0,"row":0})",
      R"({"type":"place","tile":"rain","col":6,"row":2})",
      R"({"type":"remove","col":4,"row":6})",
      R"({"type":"tick","n":2})",
      R"({"type":"check"})",
  };
  const char* bad[] = {
      "garbage", R"({"type":"place"})", R"({"type":"tick","n":-4})", "{}",
      R"({"type":"place","tile":"num:10","col":0,"row":0})",
  };
  for (int trial = 0; trial < 100; ++trial) {
    Connection with_noise;
    Connection clean;
    const int n = rng.between(1, 40);
    for (int i = 0; i < n; ++i) {
      if (rng.chance(30)) {
        const auto before = encode_snapshot(with_noise.session().snapshot());
        const auto seq = with_noise.session().step_seq();
        const auto reply = with_noise.on_line(bad[rng.below(5)]);
        REQUIRE(reply.starts_with(R"({"type":"error","code":"decode")"));
        REQUIRE(encode_snapshot(with_noise.session().snapshot()) == before);
        REQUIRE(with_noise.session().step_seq() == seq);
      } else {
        const char* line = good[rng.below(7)];
        REQUIRE(with_noise.on_line(line) == clean.on_line(line));
      }
    }
  }
}
