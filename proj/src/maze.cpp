#include "tilepad/maze.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace tilepad::maze {

char heading_letter(Heading h) {
  constexpr char kLetters[] = {'N', 'E', 'S', 'W'};
  return kLetters[static_cast<int>(h)];
}

char heading_glyph(Heading h) {
  constexpr char kGlyphs[] = {'^', '>', 'v', '<'};
  return kGlyphs[static_cast<int>(h)];
}

Heading turned_left(Heading h) {
  return static_cast<Heading>((static_cast<int>(h) + 3) % 4);
}

Heading turned_right(Heading h) {
  return static_cast<Heading>((static_cast<int>(h) + 1) % 4);
}

GridPos step(GridPos pos, Heading h) {
  switch (h) {
    case Heading::North:
      return {pos.col, pos.row + 1};
    case Heading::East:
      return {pos.col + 1, pos.row};
    case Heading::South:
      return {pos.col, pos.row - 1};
    case Heading::West:
      return {pos.col - 1, pos.row};
  }
  return pos;
}

Maze parse_maze(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().empty()) {
    rows.pop_back();
  }

  Maze maze;
  maze.height = static_cast<int>(rows.size());
  maze.width = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::optional<Pose> start;
  std::optional<GridPos> planet;
  for (int i = 0; i < maze.height; ++i) {
    const std::string& row_text = rows[i];
    if (static_cast<int>(row_text.size()) != maze.width) {
      throw MazeParseError(MazeParseError::Code::RaggedRows,
                           "maze row " + std::to_string(i + 1) + " has length " +
                               std::to_string(row_text.size()) + ", expected " +
                               std::to_string(maze.width));
    }
    const int row = maze.height - 1 - i;
    for (int col = 0; col < maze.width; ++col) {
      const GridPos pos{col, row};
      const char c = row_text[col];
      std::optional<Heading> heading;
      switch (c) {
        case '.':
          break;
        case '#':
          maze.asteroids.insert(pos);
          break;
        case 'P':
          if (planet) {
            throw MazeParseError(MazeParseError::Code::MultiplePlanet,
                                 "maze has more than one planet");
          }
          planet = pos;
          break;
        case '^':
          heading = Heading::North;
          break;
        case '>':
          heading = Heading::East;
          break;
        case 'v':
          heading = Heading::South;
          break;
        case '<':
          heading = Heading::West;
          break;
        default:
          throw MazeParseError(MazeParseError::Code::BadChar,
                               std::string("bad maze character '") + c + "' at row " +
                                   std::to_string(i + 1) + ", column " + std::to_string(col + 1));
      }
      if (heading) {
        if (start) {
          throw MazeParseError(MazeParseError::Code::MultipleStart, "maze has more than one start");
        }
        start = Pose{pos, *heading};
      }
    }
  }
  if (!start) {
    throw MazeParseError(MazeParseError::Code::MissingStart, "maze has no start");
  }
  if (!planet) {
    throw MazeParseError(MazeParseError::Code::MissingPlanet, "maze has no planet");
  }
  maze.start = *start;
  maze.planet = *planet;
  return maze;
}

std::string format_maze(const Maze& maze) {
  std::string out;
  for (int row = maze.height - 1; row >= 0; --row) {
    for (int col = 0; col < maze.width; ++col) {
      const GridPos pos{col, row};
      if (pos == maze.start.pos) {
        out += heading_glyph(maze.start.heading);
      } else if (pos == maze.planet) {
        out += 'P';
      } else {
        out += maze.asteroids.contains(pos) ? '#' : '.';
      }
    }
    if (row > 0) {
      out += '\n';
    }
  }
  return out;
}

std::string to_string(Result result) {
  switch (result) {
    case Result::Success:
      return "success";
    case Result::Crash:
      return "crash";
    case Result::Incomplete:
      return "incomplete";
  }
  return "?";
}

Runner::Runner(Maze maze) : maze_(std::move(maze)) {
  outcome_.trajectory.push_back(maze_.start);
}

void Runner::apply(Move move) {
  Pose pose = outcome_.pose();
  ++outcome_.steps_executed;
  switch (move) {
    case Move::TurnLeft:
      pose.heading = turned_left(pose.heading);
      break;
    case Move::TurnRight:
      pose.heading = turned_right(pose.heading);
      break;
    case Move::Forward: {
      const GridPos target = step(pose.pos, pose.heading);
      if (!maze_.free(target)) {
        outcome_.result = Result::Crash;
        return;
      }
      pose.pos = target;
      break;
    }
  }
  outcome_.trajectory.push_back(pose);
  if (pose.pos == maze_.planet) {
    outcome_.result = Result::Success;
  }
}

bool Runner::run(const Instruction& instruction) {
  if (finished()) {
    return false;
  }
  if (const auto* single = std::get_if<MoveStep>(&instruction)) {
    apply(single->move);
  } else if (const auto* loop = std::get_if<Loop>(&instruction)) {
    if (loop->count) {
      for (int i = 0; i < *loop->count && !finished(); ++i) {
        apply(loop->body);
      }
    } else {
      const int cap = maze_.width * maze_.height;
      for (int i = 0; i < cap && !finished(); ++i) {
        const Pose& pose = outcome_.pose();
        if (!maze_.free(step(pose.pos, pose.heading))) {
          break;
        }
        apply(loop->body);
      }
    }
  }
  return true;
}

RunOutcome execute(const Maze& maze, const Program& program) {
  Runner runner(maze);
  for (const auto& instruction : program.instructions) {
    if (!runner.run(instruction)) {
      break;
    }
  }
  return runner.outcome();
}

std::optional<std::vector<Move>> solve_oracle(const Maze& maze) {
  struct Parent {
    Pose from;
    Move move;
  };
  std::map<Pose, std::optional<Parent>> seen;
  std::deque<Pose> frontier;
  seen.emplace(maze.start, std::nullopt);
  frontier.push_back(maze.start);

  auto path_to = [&](Pose pose) {
    std::vector<Move> moves;
    while (const auto& parent = seen.at(pose)) {
      moves.push_back(parent->move);
      pose = parent->from;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  };

  constexpr Move kOrder[] = {Move::Forward, Move::TurnLeft, Move::TurnRight};
  while (!frontier.empty()) {
    const Pose pose = frontier.front();
    frontier.pop_front();
    for (Move move : kOrder) {
      Pose next = pose;
      if (move == Move::Forward) {
        next.pos = step(pose.pos, pose.heading);
        if (!maze.free(next.pos)) {
          continue;
        }
      } else {
        next.heading = move == Move::TurnLeft ? turned_left(pose.heading) : turned_right(pose.heading);
      }
      if (!seen.emplace(next, Parent{pose, move}).second) {
        continue;
      }
      if (next.pos == maze.planet) {
        return path_to(next);
      }
      frontier.push_back(next);
    }
  }
  return std::nullopt;
}

Program compress_moves(const std::vector<Move>& moves) {
  Program program;
  for (std::size_t i = 0; i < moves.size();) {
    std::size_t run = 1;
    while (i + run < moves.size() && moves[i + run] == moves[i]) {
      ++run;
    }
    std::size_t left = run;
    while (left >= 2) {
      const int count = static_cast<int>(std::min<std::size_t>(left, 9));
      program.instructions.push_back(Loop{moves[i], count});
      left -= count;
    }
    if (left == 1) {
      program.instructions.push_back(MoveStep{moves[i]});
    }
    i += run;
  }
  return program;
}

std::optional<std::vector<Move>> expand_moves(const Program& program) {
  std::vector<Move> moves;
  for (const auto& instruction : program.instructions) {
    if (const auto* single = std::get_if<MoveStep>(&instruction)) {
      moves.push_back(single->move);
    } else if (const auto* loop = std::get_if<Loop>(&instruction); loop && loop->count) {
      moves.insert(moves.end(), *loop->count, loop->body);
    } else {
      return std::nullopt;
    }
  }
  return moves;
}

std::string render_run(const Maze& maze, const RunOutcome& outcome) {
  std::set<GridPos> visited;
  for (const auto& pose : outcome.trajectory) {
    visited.insert(pose.pos);
  }
  const Pose& here = outcome.trajectory.empty() ? maze.start : outcome.pose();
  std::string out;
  for (int row = maze.height - 1; row >= 0; --row) {
    for (int col = 0; col < maze.width; ++col) {
      const GridPos pos{col, row};
      if (pos == here.pos) {
        out += heading_glyph(here.heading);
      } else if (pos == maze.planet) {
        out += 'P';
      } else if (maze.asteroids.contains(pos)) {
        out += '#';
      } else {
        out += visited.contains(pos) ? 'o' : '.';
      }
    }
    out += '\n';
  }
  out += "outcome: " + to_string(outcome.result);
  return out;
}

}  // namespace tilepad::maze
