#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tilepad/tile.hpp"
#include "tilepad/world.hpp"

namespace tilepad {

enum class Mode { Sandbox, Maze, Math };

std::string to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

enum class Move { Forward, TurnLeft, TurnRight };

std::string token_of(Move move);

// Feedback for the child: every malformed or misplaced input becomes one of
// these rather than an error.
struct Diagnostic {
  enum class Code {
    Overlap,
    OutOfCanvas,
    Occupied,
    NotFound,
    NoTarget,
    WrongMode,
    DanglingLoop,
    NestedLoop,
    NoMaze,
    RunFinished,
  };

  Code code;
  std::string detail;

  std::string describe() const;  // "NoTarget(rain)"

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct SpawnActor {
  EntityKind kind;
  GridPos pos;
  friend bool operator==(const SpawnActor&, const SpawnActor&) = default;
};

struct ApplyAction {
  Action action;
  friend bool operator==(const ApplyAction&, const ApplyAction&) = default;
};

struct MoveStep {
  Move move;
  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

// Loop body is always exactly one move; an empty count means "until blocked".
struct Loop {
  Move body;
  std::optional<int> count;
  friend bool operator==(const Loop&, const Loop&) = default;
};

struct MathToken {
  TileKind tile;  // Number, Plus, Minus or Equals
  friend bool operator==(const MathToken&, const MathToken&) = default;
};

using Instruction = std::variant<SpawnActor, ApplyAction, MoveStep, Loop, MathToken>;

std::string describe(const Instruction& instruction);

struct Program {
  std::vector<Instruction> instructions;
  std::vector<Diagnostic> diagnostics;
};

// Lowers one tile at a time. A loop tile is held pending until the next tile
// arrives: a movement tile becomes its body, anything else leaves it dangling.
class Lowerer {
 public:
  explicit Lowerer(Mode mode) : mode_(mode) {}

  Program feed(const Tile& tile);
  // Flushes a pending loop as dangling.
  Program finish();

  bool loop_pending() const { return pending_.has_value(); }

 private:
  Mode mode_;
  std::optional<Tile> pending_;
};

Program lower(const std::vector<Tile>& tiles, Mode mode);

// A program of bare moves, one per element.
Program program_of(const std::vector<Move>& moves);

// Lowers a whitespace/newline separated token list in Maze mode, e.g.
// "loop:5 forward\nright". Throws TokenError on unknown tokens.
Program parse_move_program(std::string_view text);

// One line per tile pair as physically placed: "forward", "loop:5 forward".
std::vector<std::string> program_lines(const Program& program);

}  // namespace tilepad
