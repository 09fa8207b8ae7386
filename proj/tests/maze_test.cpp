#include "doctest.h"
#include "oracles.hpp"
#include "tilepad/maze.hpp"

using namespace tilepad;
using namespace tilepad::maze;

namespace {

MazeParseError::Code parse_error(const char* text) {
  try {
    parse_maze(text);
  } catch (const MazeParseError& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return MazeParseError::Code::BadChar;
}

const char* const kCorner = ">..\n.#.\n..P\n";

}  // namespace

TEST_CASE("parse_maze") {
  const Maze m = parse_maze(">.P");
  CHECK(m.width == 3);
  CHECK(m.height == 1);
  CHECK(m.start == Pose{{0, 0}, Heading::East});
  CHECK(m.planet == GridPos{2, 0});
  CHECK(m.asteroids.empty());

  CHECK(parse_maze(">#P").asteroids == std::set<GridPos>{{1, 0}});

  const Maze c = parse_maze(kCorner);
  CHECK(c.start.pos == GridPos{0, 2});
  CHECK(c.planet == GridPos{2, 0});
  CHECK(c.asteroids.contains({1, 1}));
  CHECK(format_maze(c) == ">..\n.#.\n..P");

  CHECK(parse_error(">.>") == MazeParseError::Code::MultipleStart);
  CHECK(parse_error(">PP") == MazeParseError::Code::MultiplePlanet);
  CHECK(parse_error("..P") == MazeParseError::Code::MissingStart);
  CHECK(parse_error(">..") == MazeParseError::Code::MissingPlanet);
  CHECK(parse_error(">.x") == MazeParseError::Code::BadChar);
  CHECK(parse_error(">..\n.P") == MazeParseError::Code::RaggedRows);
  CHECK(parse_error("") == MazeParseError::Code::MissingStart);
}

TEST_CASE("execute: straight corridor with a counted loop") {
  const auto outcome = execute(parse_maze(">.P"), Program{{Loop{Move::Forward, 2}}, {}});
  CHECK(outcome.result == Result::Success);
  CHECK(outcome.trajectory.size() == 3);
  CHECK(outcome.steps_executed == 2);
}

TEST_CASE("execute: crash into an asteroid") {
  const auto outcome = execute(parse_maze(">#P"), program_of({Move::Forward, Move::Forward}));
  CHECK(outcome.result == Result::Crash);
  CHECK(outcome.steps_executed == 1);
  CHECK(outcome.trajectory.size() == 1);
}

TEST_CASE("execute: corner maze agrees with the reference tracer") {
  const Maze m = parse_maze(kCorner);
  const std::vector<Move> moves{Move::Forward, Move::Forward, Move::TurnRight, Move::Forward,
                                Move::Forward};
  const auto trace = oracle::trace_moves(m, moves);
  CHECK(trace.result == "success");
  const auto outcome = execute(m, program_of(moves));
  CHECK(outcome.result == Result::Success);
  CHECK(oracle::to_trace(outcome.trajectory) == trace.poses);
}

TEST_CASE("execute: until-blocked loop stops before an obstacle and is capped") {
  const Maze m = parse_maze(">...#\n....P");
  const auto out = execute(m, Program{{Loop{Move::Forward, std::nullopt}}, {}});
  CHECK(out.result == Result::Incomplete);
  CHECK(out.pose().pos == GridPos{3, 1});

  // A turning body never gets blocked; the iteration cap ends it.
  const Maze open = parse_maze("...\n.>.\n..P");
  const auto spin = execute(open, Program{{Loop{Move::TurnLeft, std::nullopt}}, {}});
  CHECK(spin.steps_executed == open.width * open.height);
  CHECK(spin.result == Result::Incomplete);
}

TEST_CASE("execute stops at the planet") {
  const auto out = execute(parse_maze(">P.."), program_of({Move::Forward, Move::Forward}));
  CHECK(out.result == Result::Success);
  CHECK(out.steps_executed == 1);
}

TEST_CASE("solve_oracle") {
  CHECK(solve_oracle(parse_maze(">.P")) == std::vector<Move>{Move::Forward, Move::Forward});
  CHECK_FALSE(solve_oracle(parse_maze(">#P")));

  // Golden BFS output for the corner maze; the exhaustive search confirms no
  // 4-action plan exists.
  const Maze c = parse_maze(kCorner);
  const auto plan = solve_oracle(c);
  REQUIRE(plan);
  CHECK(*plan == std::vector<Move>{Move::Forward, Move::Forward, Move::TurnRight, Move::Forward,
                                   Move::Forward});
  CHECK_FALSE(oracle::exists_plan_within(c, 4));
  CHECK(oracle::exists_plan_within(c, 5));
}

TEST_CASE("compress_moves") {
  const std::vector<Move> five(5, Move::Forward);
  CHECK(program_lines(compress_moves(five)) == std::vector<std::string>{"loop:5 forward"});
  CHECK(program_lines(compress_moves({Move::Forward})) == std::vector<std::string>{"forward"});
  const std::vector<Move> eleven(11, Move::Forward);
  CHECK(program_lines(compress_moves(eleven)) ==
        std::vector<std::string>{"loop:9 forward", "loop:2 forward"});
  const std::vector<Move> ten(10, Move::Forward);
  CHECK(program_lines(compress_moves(ten)) == std::vector<std::string>{"loop:9 forward", "forward"});
  CHECK(compress_moves({}).instructions.empty());
  CHECK(program_lines(compress_moves({Move::Forward, Move::Forward, Move::TurnLeft,
                                      Move::Forward})) ==
        std::vector<std::string>{"loop:2 forward", "left", "forward"});
}

TEST_CASE("expand_moves rejects until-blocked loops") {
  CHECK_FALSE(expand_moves(Program{{Loop{Move::Forward, std::nullopt}}, {}}));
  CHECK(expand_moves(Program{{Loop{Move::TurnRight, 3}}, {}}) ==
        std::vector<Move>(3, Move::TurnRight));
}

TEST_CASE("random programs: trajectories are well formed and match the tracer") {
  oracle::SplitMix64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Maze m = oracle::random_maze(rng, 6, 6);
    std::vector<Move> moves(rng.between(0, 30));
    for (auto& mv : moves) mv = static_cast<Move>(rng.below(3));
    const auto outcome = execute(m, program_of(moves));
    const auto trace = oracle::trace_moves(m, moves);
    REQUIRE(oracle::to_trace(outcome.trajectory) == trace.poses);
    REQUIRE(to_string(outcome.result) == trace.result);
    for (std::size_t i = 1; i < outcome.trajectory.size(); ++i) {
      const auto& a = outcome.trajectory[i - 1];
      const auto& b = outcome.trajectory[i];
      const bool turned = a.pos == b.pos && (b.heading == turned_left(a.heading) ||
                                             b.heading == turned_right(a.heading));
      const bool stepped = a.heading == b.heading && b.pos == step(a.pos, a.heading);
      REQUIRE((turned || stepped));
    }
  }
}
