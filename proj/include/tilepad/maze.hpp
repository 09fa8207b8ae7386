#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tilepad/program.hpp"
#include "tilepad/tile.hpp"

namespace tilepad::maze {

enum class Heading { North, East, South, West };

char heading_letter(Heading h);  // N E S W
char heading_glyph(Heading h);   // ^ > v <
Heading turned_left(Heading h);
Heading turned_right(Heading h);
GridPos step(GridPos pos, Heading h);

struct Pose {
  GridPos pos;
  Heading heading = Heading::East;

  friend bool operator==(const Pose&, const Pose&) = default;
  friend auto operator<=>(const Pose&, const Pose&) = default;
};

struct Maze {
  int width = 0;
  int height = 0;
  std::set<GridPos> asteroids;
  Pose start;
  GridPos planet;

  bool in_bounds(GridPos pos) const {
    return pos.col >= 0 && pos.row >= 0 && pos.col < width && pos.row < height;
  }
  bool free(GridPos pos) const { return in_bounds(pos) && !asteroids.contains(pos); }

  friend bool operator==(const Maze&, const Maze&) = default;
};

class MazeParseError : public std::runtime_error {
 public:
  enum class Code { BadChar, MissingStart, MissingPlanet, MultipleStart, MultiplePlanet, RaggedRows };

  MazeParseError(Code code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Rows top to bottom; `.` free, `#` asteroid, `P` planet, `^ > v <` start.
Maze parse_maze(std::string_view text);

// Inverse of parse_maze (no trailing newline).
std::string format_maze(const Maze& maze);

enum class Result { Success, Crash, Incomplete };

std::string to_string(Result result);

struct RunOutcome {
  Result result = Result::Incomplete;
  std::vector<Pose> trajectory;
  int steps_executed = 0;

  const Pose& pose() const { return trajectory.back(); }
};

// Executes move and loop instructions against a maze one at a time, so a
// session can feed instructions as tiles arrive. Once the run succeeds or
// crashes, further instructions are ignored.
class Runner {
 public:
  explicit Runner(Maze maze);

  // Returns false if the run had already finished.
  bool run(const Instruction& instruction);

  bool finished() const { return outcome_.result != Result::Incomplete; }
  const RunOutcome& outcome() const { return outcome_; }
  const Maze& maze() const { return maze_; }

 private:
  void apply(Move move);

  Maze maze_;
  RunOutcome outcome_;
};

RunOutcome execute(const Maze& maze, const Program& program);

// Minimum-length action list reaching the planet, or nullopt if unreachable.
// Breadth-first over (pos, heading); actions tried Forward, Left, Right.
std::optional<std::vector<Move>> solve_oracle(const Maze& maze);

// Greedy run-length rolling: runs of two or more identical moves become
// counted loops of at most 9.
Program compress_moves(const std::vector<Move>& moves);

// Unrolls counted loops. Returns nullopt if the program holds anything other
// than moves and counted loops.
std::optional<std::vector<Move>> expand_moves(const Program& program);

// Maze with the current pose glyph and visited cells marked `o`.
std::string render_run(const Maze& maze, const RunOutcome& outcome);

}  // namespace tilepad::maze
