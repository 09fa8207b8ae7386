#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tilepad/facts.hpp"
#include "tilepad/math_activity.hpp"
#include "tilepad/maze.hpp"
#include "tilepad/program.hpp"
#include "tilepad/tile.hpp"
#include "tilepad/world.hpp"

namespace tilepad {

// Everything a fresh session is built from. Session state is a pure function
// of this plus the event log.
struct SessionConfig {
  Mode mode = Mode::Sandbox;
  int canvas_width = CanvasLayout::kDefaultWidth;
  int canvas_height = CanvasLayout::kDefaultHeight;
  std::optional<maze::Maze> maze;
  std::optional<math::Equation> equation;
};

struct PlaceEvent {
  TileKind tile;
  GridPos pos;
  friend bool operator==(const PlaceEvent&, const PlaceEvent&) = default;
};

struct RemoveEvent {
  GridPos pos;
  friend bool operator==(const RemoveEvent&, const RemoveEvent&) = default;
};

struct TickEvent {
  int rounds = 1;
  friend bool operator==(const TickEvent&, const TickEvent&) = default;
};

// A math-mode answer check; logged because it advances fact cursors.
struct CheckEvent {
  friend bool operator==(const CheckEvent&, const CheckEvent&) = default;
};

using Event = std::variant<PlaceEvent, RemoveEvent, TickEvent>;

// Entries of the effective log. Removals never appear: removing a tile
// deletes its placement from the log.
using LogEntry = std::variant<PlaceEvent, TickEvent, CheckEvent>;

struct MazeSnapshot {
  std::optional<maze::Pose> pose;
  std::vector<maze::Pose> trajectory;
  maze::Result result = maze::Result::Incomplete;
  friend bool operator==(const MazeSnapshot&, const MazeSnapshot&) = default;
};

struct MathSnapshot {
  std::optional<math::Equation> equation;
  std::optional<int> answer;
  friend bool operator==(const MathSnapshot&, const MathSnapshot&) = default;
};

using Snapshot = std::variant<World, MazeSnapshot, MathSnapshot>;

struct StepOutput {
  std::uint64_t seq = 0;
  std::vector<std::string> events;
  std::vector<Diagnostic> diagnostics;
  std::optional<facts::Fact> fact;
  Snapshot snapshot;
};

class SessionError : public std::runtime_error {
 public:
  SessionError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct CheckReport {
  std::string result;  // success | crash | incomplete | correct | incorrect
  std::optional<facts::Fact> fact;
};

// One child at one launchpad. Every client event yields exactly one
// StepOutput; events are applied strictly in call order.
class Session {
 public:
  explicit Session(SessionConfig config = {}, facts::FactStore facts = {});

  StepOutput place(const TileKind& tile, GridPos pos);
  StepOutput remove(GridPos pos);
  StepOutput tick(int rounds);
  StepOutput apply(const Event& event);

  // Starts over from `config` (mode change, maze load, new equation, reset).
  // `what` is reported as the step's single event.
  StepOutput reset(SessionConfig config, std::string what);

  // Maze: re-reports the current run. Math: judges the answer. Throws
  // SessionError with code "mode", "no_maze", "no_equation" or "no_answer".
  CheckReport check();

  const SessionConfig& config() const { return config_; }
  const CanvasLayout& layout() const { return layout_; }
  const World& world() const { return world_; }
  const std::optional<maze::Runner>& maze_run() const { return runner_; }
  const math::MathState& math_state() const { return math_; }
  const std::vector<LogEntry>& log() const { return log_; }
  const facts::FactStore& facts() const { return facts_; }
  std::uint64_t step_seq() const { return step_seq_; }

  Snapshot snapshot() const;

 private:
  struct StepBody {
    std::vector<std::string> events;
    std::vector<Diagnostic> diagnostics;
    std::vector<std::string> triggers;
  };

  void start_fresh();
  StepBody execute_tile(const Tile& tile);
  void execute_sandbox(const Instruction& instruction, StepBody& body);
  void execute_maze(const Instruction& instruction, StepBody& body);
  void execute_math(const Instruction& instruction, StepBody& body);
  void absorb_settle(SettleResult settled, StepBody& body);
  StepOutput emit(StepBody body);
  void replay(std::vector<LogEntry> log);

  SessionConfig config_;
  facts::FactStore initial_facts_;
  facts::FactStore facts_;
  CanvasLayout layout_;
  std::vector<LogEntry> log_;
  World world_;
  Lowerer lowerer_{Mode::Sandbox};
  std::optional<maze::Runner> runner_;
  math::MathState math_;
  std::uint64_t step_seq_ = 0;
};

struct BatchResult {
  Session session;
  std::vector<StepOutput> steps;
};

// Reference semantics: folds the events over a fresh session.
BatchResult run_batch(std::span<const Event> script, const SessionConfig& config,
                      const facts::FactStore& facts = {});

// Fact triggers in priority order; a step reports at most one fact, from the
// first trigger here that fired and has facts.
std::span<const std::string_view> fact_trigger_priority();

}  // namespace tilepad
