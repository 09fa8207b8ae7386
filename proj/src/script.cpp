#include "tilepad/script.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tilepad::script {

namespace {

std::vector<std::string> words_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) {
    words.push_back(w);
  }
  return words;
}

std::optional<int> to_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    return std::nullopt;
  }
  return value;
}

GridPos parse_pos(std::size_t line, std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw ScriptError(line, "expected <col>,<row> but got '" + std::string(text) + "'");
  }
  auto col = to_int(text.substr(0, comma));
  auto row = to_int(text.substr(comma + 1));
  if (!col || !row || *col < 0 || *row < 0) {
    throw ScriptError(line, "bad position '" + std::string(text) + "'");
  }
  return GridPos{*col, *row};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

std::vector<ScriptLine> parse_script(std::string_view text, const std::filesystem::path& base_dir) {
  std::vector<ScriptLine> script;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const auto words = words_of(raw);
    if (words.empty()) {
      continue;
    }
    const std::string& verb = words[0];
    auto expect_words = [&](std::size_t n, const char* usage) {
      if (words.size() != n) {
        throw ScriptError(number, std::string("usage: ") + usage);
      }
    };
    protocol::ClientMessage message;
    if (verb == "MODE") {
      expect_words(2, "MODE sandbox|maze|math");
      auto mode = parse_mode(words[1]);
      if (!mode) {
        throw ScriptError(number, "unknown mode '" + words[1] + "'");
      }
      message = protocol::msg::SetMode{*mode};
    } else if (verb == "PLACE") {
      expect_words(4, "PLACE <token> AT <col>,<row>");
      if (words[2] != "AT") {
        throw ScriptError(number, "usage: PLACE <token> AT <col>,<row>");
      }
      try {
        message = protocol::msg::Place{parse_tile_token(words[1]), parse_pos(number, words[3])};
      } catch (const TokenError& e) {
        throw ScriptError(number, e.what());
      }
    } else if (verb == "REMOVE") {
      expect_words(3, "REMOVE AT <col>,<row>");
      if (words[1] != "AT") {
        throw ScriptError(number, "usage: REMOVE AT <col>,<row>");
      }
      message = protocol::msg::Remove{parse_pos(number, words[2])};
    } else if (verb == "TICK") {
      expect_words(2, "TICK <n>");
      auto n = to_int(words[1]);
      if (!n || *n < 1 || *n > protocol::kMaxTick) {
        throw ScriptError(number, "TICK count must be in 1.." + std::to_string(protocol::kMaxTick));
      }
      message = protocol::msg::Tick{*n};
    } else if (verb == "CHECK") {
      expect_words(1, "CHECK");
      message = protocol::msg::Check{};
    } else if (verb == "MAZE") {
      expect_words(2, "MAZE <path>");
      std::filesystem::path path = words[1];
      if (path.is_relative()) {
        path = base_dir / path;
      }
      try {
        message = protocol::msg::LoadMaze{read_file(path)};
      } catch (const std::runtime_error& e) {
        throw ScriptError(number, e.what());
      }
    } else if (verb == "EQ") {
      expect_words(4, "EQ <a> <+|-> <b>");
      auto a = to_int(words[1]);
      auto b = to_int(words[3]);
      if (!a || !b || (words[2] != "+" && words[2] != "-")) {
        throw ScriptError(number, "usage: EQ <a> <+|-> <b>");
      }
      try {
        message = protocol::msg::SetEquation{
            math::make_equation(*a, words[2] == "+" ? math::Op::Plus : math::Op::Minus, *b)};
      } catch (const std::invalid_argument& e) {
        throw ScriptError(number, e.what());
      }
    } else {
      throw ScriptError(number, "unknown command '" + verb + "'");
    }
    script.push_back(ScriptLine{number, std::move(message)});
  }
  return script;
}

std::vector<ScriptLine> load_script_file(const std::filesystem::path& path) {
  return parse_script(read_file(path), path.parent_path());
}

std::string render_step(const StepOutput& step, const Session& session) {
  std::string out = "step " + std::to_string(step.seq) + "\n";
  for (const auto& event : step.events) {
    out += "  event: " + event + "\n";
  }
  for (const auto& diagnostic : step.diagnostics) {
    out += "  diagnostic: " + diagnostic.describe() + "\n";
  }
  if (step.fact) {
    out += "  fact: " + step.fact->body + " [" + step.fact->id + "]\n";
  }
  switch (session.config().mode) {
    case Mode::Sandbox:
      out += render_ascii(session.world());
      break;
    case Mode::Maze:
      if (session.maze_run()) {
        out += maze::render_run(session.maze_run()->maze(), session.maze_run()->outcome());
      } else {
        out += "(no maze loaded)";
      }
      break;
    case Mode::Math: {
      const auto& state = session.math_state();
      out += "equation: " + (state.equation ? math::to_string(*state.equation) + "=?" : "none");
      const auto answer = state.answer();
      out += "\nanswer: " + (answer ? std::to_string(*answer) : "none");
      break;
    }
  }
  return out + "\n";
}

RunSummary run_script(const std::vector<ScriptLine>& script, const facts::FactStore& facts,
                      std::ostream& out) {
  RunSummary summary;
  Session session(SessionConfig{}, facts);
  for (const auto& line : script) {
    const auto reply = protocol::handle(session, line.message);
    if (const auto* step = std::get_if<protocol::reply::Step>(&reply)) {
      ++summary.steps;
      out << render_step(step->output, session) << '\n';
    } else if (const auto* outcome = std::get_if<protocol::reply::Outcome>(&reply)) {
      summary.last_check = outcome->result;
      out << "check: " << outcome->result << '\n';
      if (!outcome->detail.empty()) {
        out << "  fact: " << outcome->detail << '\n';
      }
      out << '\n';
    } else {
      const auto& error = std::get<protocol::reply::Error>(reply);
      ++summary.errors;
      out << "error[" << error.code << "] line " << line.line << ": " << error.message << "\n\n";
    }
  }
  return summary;
}

}  // namespace tilepad::script
