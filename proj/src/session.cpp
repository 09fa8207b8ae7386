#include "tilepad/session.hpp"

#include <algorithm>
#include <array>

namespace tilepad {

namespace {

constexpr std::array<std::string_view, 11> kTriggerPriority{
    "rocket.takeoff", "surface.takeoff", "tree.takeoff",  "asteroid.takeoff",
    "tree.full",      "tree.grow",       "space.enter",   "gravity.fall",
    "maze.success",   "maze.crash",      "math.correct",
};

std::string pose_text(const maze::Pose& pose) {
  return to_string(pose.pos) + " " + maze::heading_letter(pose.heading);
}

template <class T>
void append(std::vector<T>& to, const std::vector<T>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

std::span<const std::string_view> fact_trigger_priority() {
  return kTriggerPriority;
}

Session::Session(SessionConfig config, facts::FactStore facts)
    : config_(std::move(config)), initial_facts_(std::move(facts)) {
  initial_facts_.rewind();
  start_fresh();
}

void Session::start_fresh() {
  facts_ = initial_facts_;
  layout_ = CanvasLayout(config_.canvas_width, config_.canvas_height);
  log_.clear();
  world_ = World(config_.canvas_width, config_.canvas_height);
  lowerer_ = Lowerer(config_.mode);
  runner_.reset();
  if (config_.mode == Mode::Maze && config_.maze) {
    runner_.emplace(*config_.maze);
  }
  math_ = math::MathState{};
  math_.equation = config_.equation;
}

Snapshot Session::snapshot() const {
  switch (config_.mode) {
    case Mode::Sandbox:
      return world_;
    case Mode::Maze: {
      MazeSnapshot snap;
      if (runner_) {
        snap.pose = runner_->outcome().pose();
        snap.trajectory = runner_->outcome().trajectory;
        snap.result = runner_->outcome().result;
      }
      return snap;
    }
    case Mode::Math:
      return MathSnapshot{math_.equation, math_.answer()};
  }
  return world_;
}

StepOutput Session::emit(StepBody body) {
  StepOutput out;
  out.seq = ++step_seq_;
  out.events = std::move(body.events);
  out.diagnostics = std::move(body.diagnostics);
  for (std::string_view trigger : kTriggerPriority) {
    if (std::find(body.triggers.begin(), body.triggers.end(), trigger) == body.triggers.end()) {
      continue;
    }
    if (auto fact = facts_.next_fact(trigger)) {
      out.fact = std::move(fact);
      break;
    }
  }
  out.snapshot = snapshot();
  return out;
}

StepOutput Session::place(const TileKind& tile, GridPos pos) {
  if (auto error = validate_placement(layout_, tile, pos)) {
    StepBody body;
    const auto code = error->code == PlacementError::Code::Overlap ? Diagnostic::Code::Overlap
                                                                    : Diagnostic::Code::OutOfCanvas;
    body.diagnostics.push_back({code, to_string(pos)});
    return emit(std::move(body));
  }
  const Tile placed = layout_.place(tile, pos);
  log_.push_back(PlaceEvent{tile, pos});
  return emit(execute_tile(placed));
}

Session::StepBody Session::execute_tile(const Tile& tile) {
  StepBody body;
  const Program part = lowerer_.feed(tile);
  append(body.diagnostics, part.diagnostics);
  if (part.instructions.empty() && lowerer_.loop_pending()) {
    body.events.push_back("LoopPending(" + token_of(tile.kind) + ")");
  }
  for (const auto& instruction : part.instructions) {
    switch (config_.mode) {
      case Mode::Sandbox:
        execute_sandbox(instruction, body);
        break;
      case Mode::Maze:
        execute_maze(instruction, body);
        break;
      case Mode::Math:
        execute_math(instruction, body);
        break;
    }
  }
  if (config_.mode == Mode::Sandbox) {
    absorb_settle(settle(world_), body);
  }
  return body;
}

void Session::execute_sandbox(const Instruction& instruction, StepBody& body) {
  if (const auto* spawn_actor = std::get_if<SpawnActor>(&instruction)) {
    try {
      world_ = spawn(world_, spawn_actor->kind, spawn_actor->pos);
    } catch (const OccupiedError& e) {
      body.diagnostics.push_back({Diagnostic::Code::Occupied, to_string(e.pos())});
      return;
    }
    const Entity& e = world_.entities.back();
    body.events.push_back(Effect{Effect::Kind::Spawned, e.id, e.kind, e.pos, e.pos}.describe());
    return;
  }
  if (const auto* action = std::get_if<ApplyAction>(&instruction)) {
    auto result = apply_action(std::move(world_), action->action);
    world_ = std::move(result.world);
    for (const auto& effect : result.effects) {
      switch (effect.kind) {
        case Effect::Kind::NoTarget:
          body.diagnostics.push_back({Diagnostic::Code::NoTarget, to_string(effect.action)});
          continue;
        case Effect::Kind::Ascending:
          body.triggers.push_back(to_string(effect.entity) + ".takeoff");
          break;
        case Effect::Kind::Grew:
          body.triggers.push_back("tree.grow");
          break;
        case Effect::Kind::FullyGrown:
          body.triggers.push_back("tree.full");
          break;
        default:
          break;
      }
      body.events.push_back(effect.describe());
    }
  }
}

void Session::absorb_settle(SettleResult settled, StepBody& body) {
  world_ = std::move(settled.world);
  for (const auto& effect : settled.effects) {
    if (effect.kind == Effect::Kind::EnteredSpace) {
      body.triggers.push_back("space.enter");
    } else if (effect.kind == Effect::Kind::Fell) {
      body.triggers.push_back("gravity.fall");
    }
    body.events.push_back(effect.describe());
  }
}

void Session::execute_maze(const Instruction& instruction, StepBody& body) {
  if (!runner_) {
    body.diagnostics.push_back({Diagnostic::Code::NoMaze, describe(instruction)});
    return;
  }
  if (runner_->finished()) {
    body.diagnostics.push_back(
        {Diagnostic::Code::RunFinished, maze::to_string(runner_->outcome().result)});
    return;
  }
  const std::size_t before = runner_->outcome().trajectory.size();
  runner_->run(instruction);
  const auto& outcome = runner_->outcome();
  for (std::size_t i = before; i < outcome.trajectory.size(); ++i) {
    body.events.push_back("Pose(" + pose_text(outcome.trajectory[i]) + ")");
  }
  if (outcome.result == maze::Result::Crash) {
    const auto& pose = outcome.pose();
    body.events.push_back("Crashed(" + to_string(maze::step(pose.pos, pose.heading)) + ")");
    body.triggers.push_back("maze.crash");
  } else if (outcome.result == maze::Result::Success) {
    body.events.push_back("ReachedPlanet(" + to_string(outcome.pose().pos) + ")");
    body.triggers.push_back("maze.success");
  }
}

void Session::execute_math(const Instruction& instruction, StepBody& body) {
  math_.checked = false;
  if (std::holds_alternative<SpawnActor>(instruction)) {
    ++math_.answer_tiles;
    body.events.push_back("AnswerAsteroids(" + std::to_string(math_.answer_tiles) + ")");
    return;
  }
  if (const auto* token = std::get_if<MathToken>(&instruction)) {
    if (token->tile.type == TileType::Number) {
      math_.number_answer = token->tile.param;
      body.events.push_back("AnswerNumber(" + std::to_string(token->tile.param) + ")");
    } else {
      body.events.push_back("Token(" + token_of(token->tile) + ")");
    }
  }
}

StepOutput Session::remove(GridPos pos) {
  auto it = std::find_if(log_.begin(), log_.end(), [&](const LogEntry& entry) {
    const auto* place = std::get_if<PlaceEvent>(&entry);
    return place != nullptr && place->pos == pos;
  });
  if (it == log_.end()) {
    StepBody body;
    body.diagnostics.push_back({Diagnostic::Code::NotFound, to_string(pos)});
    return emit(std::move(body));
  }
  const PlaceEvent removed = std::get<PlaceEvent>(*it);
  std::vector<LogEntry> remaining = log_;
  remaining.erase(remaining.begin() + (it - log_.begin()));
  replay(std::move(remaining));

  StepBody body;
  body.events.push_back("Removed(" + token_of(removed.tile) + " at " + to_string(pos) + ")");
  body.events.push_back("Replayed(" + std::to_string(log_.size()) + ")");
  return emit(std::move(body));
}

void Session::replay(std::vector<LogEntry> log) {
  Session fresh(config_, initial_facts_);
  for (const auto& entry : log) {
    if (const auto* place = std::get_if<PlaceEvent>(&entry)) {
      fresh.place(place->tile, place->pos);
    } else if (const auto* tick_event = std::get_if<TickEvent>(&entry)) {
      fresh.tick(tick_event->rounds);
    } else {
      try {
        fresh.check();
      } catch (const SessionError&) {
        // The answer this check judged may be gone; it simply drops out.
      }
    }
  }
  const std::uint64_t seq = step_seq_;
  *this = std::move(fresh);
  step_seq_ = seq;
}

StepOutput Session::tick(int rounds) {
  StepBody body;
  body.events.push_back("Tick(" + std::to_string(rounds) + ")");
  log_.push_back(TickEvent{rounds});
  if (config_.mode == Mode::Sandbox) {
    absorb_settle(settle_rounds(world_, rounds), body);
  }
  return emit(std::move(body));
}

StepOutput Session::apply(const Event& event) {
  if (const auto* place_event = std::get_if<PlaceEvent>(&event)) {
    return place(place_event->tile, place_event->pos);
  }
  if (const auto* remove_event = std::get_if<RemoveEvent>(&event)) {
    return remove(remove_event->pos);
  }
  return tick(std::get<TickEvent>(event).rounds);
}

StepOutput Session::reset(SessionConfig config, std::string what) {
  config_ = std::move(config);
  start_fresh();
  StepBody body;
  body.events.push_back(std::move(what));
  return emit(std::move(body));
}

CheckReport Session::check() {
  switch (config_.mode) {
    case Mode::Sandbox:
      throw SessionError("mode", "check is only available in maze and math mode");
    case Mode::Maze:
      if (!runner_) {
        throw SessionError("no_maze", "no maze loaded");
      }
      return CheckReport{maze::to_string(runner_->outcome().result), std::nullopt};
    case Mode::Math:
      break;
  }
  if (!math_.equation) {
    throw SessionError("no_equation", "no equation set");
  }
  math::Verdict verdict;
  try {
    verdict = math::check_answer(math_);
  } catch (const math::NoAnswerError& e) {
    throw SessionError("no_answer", e.what());
  }
  math_.checked = true;
  log_.push_back(CheckEvent{});
  CheckReport report;
  if (verdict == math::Verdict::Correct) {
    report.result = "correct";
    report.fact = facts_.next_fact("math.correct");
  } else {
    report.result = "incorrect";
  }
  return report;
}

BatchResult run_batch(std::span<const Event> script, const SessionConfig& config,
                      const facts::FactStore& facts) {
  BatchResult result{Session(config, facts), {}};
  result.steps.reserve(script.size());
  for (const auto& event : script) {
    result.steps.push_back(result.session.apply(event));
  }
  return result;
}

}  // namespace tilepad
