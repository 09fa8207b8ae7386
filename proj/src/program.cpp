#include "tilepad/program.hpp"

#include <sstream>

namespace tilepad {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Sandbox:
      return "sandbox";
    case Mode::Maze:
      return "maze";
    case Mode::Math:
      return "math";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "sandbox") return Mode::Sandbox;
  if (text == "maze") return Mode::Maze;
  if (text == "math") return Mode::Math;
  return std::nullopt;
}

std::string token_of(Move move) {
  switch (move) {
    case Move::Forward:
      return "forward";
    case Move::TurnLeft:
      return "left";
    case Move::TurnRight:
      return "right";
  }
  return "?";
}

std::string Diagnostic::describe() const {
  static constexpr const char* kNames[] = {
      "Overlap",      "OutOfCanvas", "Occupied", "NotFound",   "NoTarget",
      "WrongMode",    "DanglingLoop", "NestedLoop", "NoMaze",  "RunFinished",
  };
  return std::string(kNames[static_cast<int>(code)]) + "(" + detail + ")";
}

std::string describe(const Instruction& instruction) {
  struct Visitor {
    std::string operator()(const SpawnActor& s) const {
      return "SpawnActor(" + to_string(s.kind) + " at " + to_string(s.pos) + ")";
    }
    std::string operator()(const ApplyAction& a) const {
      return "ApplyAction(" + to_string(a.action) + ")";
    }
    std::string operator()(const MoveStep& m) const { return "Move(" + token_of(m.move) + ")"; }
    std::string operator()(const Loop& l) const {
      return "Loop(" + token_of(l.body) + ", " +
             (l.count ? std::to_string(*l.count) : std::string("until-blocked")) + ")";
    }
    std::string operator()(const MathToken& t) const { return "MathToken(" + token_of(t.tile) + ")"; }
  };
  return std::visit(Visitor{}, instruction);
}

namespace {

std::optional<Move> move_of(TileType type) {
  switch (type) {
    case TileType::Forward:
      return Move::Forward;
    case TileType::TurnLeft:
      return Move::TurnLeft;
    case TileType::TurnRight:
      return Move::TurnRight;
    default:
      return std::nullopt;
  }
}

bool valid_in(Mode mode, TileType type) {
  switch (type) {
    case TileType::Rocket:
    case TileType::Takeoff:
    case TileType::Surface:
    case TileType::Tree:
    case TileType::Rain:
      return mode == Mode::Sandbox;
    case TileType::Asteroid:
      return mode == Mode::Sandbox || mode == Mode::Math;
    case TileType::Forward:
    case TileType::TurnLeft:
    case TileType::TurnRight:
    case TileType::Repeat:
    case TileType::RepeatUntilBlocked:
      return mode == Mode::Maze;
    case TileType::Number:
    case TileType::Plus:
    case TileType::Minus:
    case TileType::Equals:
      return mode == Mode::Math;
  }
  return false;
}

Instruction instruction_for(const Tile& tile) {
  switch (tile.kind.type) {
    case TileType::Rocket:
      return SpawnActor{EntityKind::Rocket, tile.pos};
    case TileType::Surface:
      return SpawnActor{EntityKind::Surface, tile.pos};
    case TileType::Tree:
      return SpawnActor{EntityKind::Tree, tile.pos};
    case TileType::Asteroid:
      return SpawnActor{EntityKind::Asteroid, tile.pos};
    case TileType::Takeoff:
      return ApplyAction{Action::Takeoff};
    case TileType::Rain:
      return ApplyAction{Action::Rain};
    default:
      break;
  }
  if (auto move = move_of(tile.kind.type)) {
    return MoveStep{*move};
  }
  return MathToken{tile.kind};
}

}  // namespace

Program Lowerer::feed(const Tile& tile) {
  Program out;
  if (!valid_in(mode_, tile.kind.type)) {
    if (pending_) {
      out.diagnostics.push_back({Diagnostic::Code::DanglingLoop, token_of(pending_->kind)});
      pending_.reset();
    }
    out.diagnostics.push_back(
        {Diagnostic::Code::WrongMode, token_of(tile.kind) + " in " + to_string(mode_)});
    return out;
  }
  if (tile.kind.is_loop()) {
    if (pending_) {
      out.diagnostics.push_back({Diagnostic::Code::NestedLoop, token_of(pending_->kind)});
    }
    pending_ = tile;
    return out;
  }
  if (pending_) {
    const Tile loop_tile = *pending_;
    pending_.reset();
    // Only movement tiles are valid in Maze mode besides loops.
    auto body = move_of(tile.kind.type);
    const std::optional<int> count = loop_tile.kind.type == TileType::Repeat
                                         ? std::optional<int>(loop_tile.kind.param)
                                         : std::nullopt;
    out.instructions.push_back(Loop{*body, count});
    return out;
  }
  out.instructions.push_back(instruction_for(tile));
  return out;
}

Program Lowerer::finish() {
  Program out;
  if (pending_) {
    out.diagnostics.push_back({Diagnostic::Code::DanglingLoop, token_of(pending_->kind)});
    pending_.reset();
  }
  return out;
}

Program lower(const std::vector<Tile>& tiles, Mode mode) {
  Program program;
  Lowerer lowerer(mode);
  auto append = [&](Program part) {
    program.instructions.insert(program.instructions.end(), part.instructions.begin(),
                                part.instructions.end());
    program.diagnostics.insert(program.diagnostics.end(), part.diagnostics.begin(),
                               part.diagnostics.end());
  };
  for (const auto& tile : tiles) {
    append(lowerer.feed(tile));
  }
  append(lowerer.finish());
  return program;
}

Program program_of(const std::vector<Move>& moves) {
  Program program;
  for (Move m : moves) {
    program.instructions.push_back(MoveStep{m});
  }
  return program;
}

Program parse_move_program(std::string_view text) {
  std::vector<Tile> tiles;
  std::istringstream in{std::string(text)};
  std::string line;
  std::uint64_t seq = 1;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      tiles.push_back(Tile{seq, parse_tile_token(word), GridPos{}, seq});
      ++seq;
    }
  }
  return lower(tiles, Mode::Maze);
}

std::vector<std::string> program_lines(const Program& program) {
  std::vector<std::string> lines;
  for (const auto& instruction : program.instructions) {
    if (const auto* step = std::get_if<MoveStep>(&instruction)) {
      lines.push_back(token_of(step->move));
    } else if (const auto* loop = std::get_if<Loop>(&instruction)) {
      const std::string head = loop->count ? "loop:" + std::to_string(*loop->count) : "loop:*";
      lines.push_back(head + " " + token_of(loop->body));
    } else {
      lines.push_back(describe(instruction));
    }
  }
  return lines;
}

}  // namespace tilepad
