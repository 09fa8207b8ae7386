#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tilepad/facts.hpp"
#include "tilepad/math_activity.hpp"
#include "tilepad/maze.hpp"
#include "tilepad/protocol.hpp"
#include "tilepad/script.hpp"
#include "tilepad/tcp_server.hpp"

#ifndef TILEPAD_DEFAULT_FACTS
#define TILEPAD_DEFAULT_FACTS "facts.tsv"
#endif

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

tilepad::facts::FactStore load_facts(const std::string& path) {
  if (path.empty()) {
    if (!std::filesystem::exists(TILEPAD_DEFAULT_FACTS)) {
      return {};
    }
    return tilepad::facts::load_facts_file(TILEPAD_DEFAULT_FACTS);
  }
  return tilepad::facts::load_facts(read_file(path));
}

int run_command(const std::string& script_path, const std::string& facts_path) {
  const auto facts = load_facts(facts_path);
  if (!std::filesystem::exists(script_path)) {
    throw UsageError("cannot open '" + script_path + "'");
  }
  const auto script = tilepad::script::load_script_file(script_path);
  const auto summary = tilepad::script::run_script(script, facts, std::cout);
  if (summary.last_check && *summary.last_check != "success" && *summary.last_check != "correct") {
    return kFailed;
  }
  return kOk;
}

int maze_command(const std::string& maze_path, const std::string& program_path, bool solve,
                 bool solve_compressed) {
  if (static_cast<int>(!program_path.empty()) + solve + solve_compressed != 1) {
    throw UsageError("give exactly one of a program file, --solve or --solve-compressed");
  }
  const auto maze = tilepad::maze::parse_maze(read_file(maze_path));
  if (solve || solve_compressed) {
    const auto plan = tilepad::maze::solve_oracle(maze);
    if (!plan) {
      std::cerr << "no path reaches the planet\n";
      return kFailed;
    }
    const auto program =
        solve_compressed ? tilepad::maze::compress_moves(*plan) : tilepad::program_of(*plan);
    for (const auto& line : tilepad::program_lines(program)) {
      std::cout << line << '\n';
    }
    return kOk;
  }
  const auto program = tilepad::parse_move_program(read_file(program_path));
  for (const auto& diagnostic : program.diagnostics) {
    std::cout << "diagnostic: " << diagnostic.describe() << '\n';
  }
  const auto outcome = tilepad::maze::execute(maze, program);
  std::cout << tilepad::maze::render_run(maze, outcome) << '\n'
            << "steps: " << outcome.steps_executed << '\n';
  return outcome.result == tilepad::maze::Result::Success ? kOk : kFailed;
}

int math_command(std::uint64_t seed, int difficulty, bool reveal, const std::string& answer_arg) {
  namespace math = tilepad::math;
  const auto eq = math::generate_equation(seed, difficulty);
  std::cout << math::to_string(eq) << "=?\n";

  std::string answer_text = answer_arg;
  if (answer_text.empty()) {
    std::ostringstream all;
    all << std::cin.rdbuf();
    answer_text = all.str();
  }
  for (char& c : answer_text) {
    if (c == ',') {
      c = ' ';
    }
  }
  math::MathState state;
  state.equation = eq;
  std::istringstream tokens(answer_text);
  for (std::string token; tokens >> token;) {
    tilepad::TileKind tile;
    try {
      tile = tilepad::parse_tile_token(token);
    } catch (const tilepad::TokenError& e) {
      throw UsageError(e.what());
    }
    if (tile.type == tilepad::TileType::Asteroid) {
      ++state.answer_tiles;
    } else if (tile.type == tilepad::TileType::Number) {
      state.number_answer = tile.param;
    } else {
      std::cerr << "ignored tile '" << token << "'\n";
    }
  }
  int code = kFailed;
  try {
    if (math::check_answer(state) == math::Verdict::Correct) {
      std::cout << "correct\n";
      code = kOk;
    } else {
      std::cout << "incorrect\n";
    }
  } catch (const math::NoAnswerError&) {
    std::cout << "no answer\n";
  }
  if (reveal) {
    std::cout << "expected: " << math::eval_equation(eq) << '\n';
  }
  return code;
}

tilepad::protocol::TcpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) {
    g_server->stop();
  }
}

int serve_command(bool stdio, const std::string& bind, const std::string& facts_path) {
  const auto facts = load_facts(facts_path);
  if (stdio) {
    tilepad::protocol::serve(std::cin, std::cout, facts);
    return kOk;
  }
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) {
    throw UsageError("--bind expects <host>:<port>");
  }
  int port = 0;
  try {
    port = std::stoi(bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad port in '" + bind + "'");
  }
  if (port < 0 || port > 65535) {
    throw UsageError("bad port in '" + bind + "'");
  }
  tilepad::protocol::TcpServer server(bind.substr(0, colon), static_cast<std::uint16_t>(port),
                                      facts);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "tilepad: serving on " << bind.substr(0, colon) << ":" << server.port() << '\n';
  server.run();
  g_server = nullptr;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tilepad: a tile-by-tile interpreter for a tangible launchpad"};
  app.require_subcommand(1);

  std::string facts_path;
  auto* run = app.add_subcommand("run", "Run a session script, printing every step");
  std::string script_path;
  run->add_option("script", script_path, "Session script")->required();
  run->add_option("--facts", facts_path, "Facts TSV file");

  auto* maze_cmd = app.add_subcommand("maze", "Execute or solve a maze");
  std::string maze_path;
  std::string program_path;
  bool solve = false;
  bool solve_compressed = false;
  maze_cmd->add_option("maze", maze_path, "Maze file")->required();
  maze_cmd->add_option("program", program_path, "Program file of tile tokens");
  maze_cmd->add_flag("--solve", solve, "Print a shortest plan");
  maze_cmd->add_flag("--solve-compressed", solve_compressed, "Print a shortest plan with loops");

  auto* math_cmd = app.add_subcommand("math", "Judge an asteroid math answer");
  std::uint64_t seed = 0;
  int difficulty = 1;
  bool reveal = false;
  std::string answer;
  math_cmd->add_option("--seed", seed, "Equation seed")->required();
  math_cmd->add_option("--difficulty", difficulty, "1 or 2")->check(CLI::IsMember({1, 2}));
  math_cmd->add_flag("--reveal", reveal, "Print the expected answer");
  math_cmd->add_option("--answer", answer,
                       "Answer tiles, e.g. asteroid,asteroid or num:4 (default: stdin)");

  auto* serve = app.add_subcommand("serve", "Serve the line protocol");
  bool stdio = false;
  std::string bind;
  auto* stdio_flag = serve->add_flag("--stdio", stdio, "Use standard input/output");
  auto* bind_opt = serve->add_option("--bind", bind, "Listen on <host>:<port>");
  stdio_flag->excludes(bind_opt);
  serve->add_option("--facts", facts_path, "Facts TSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) {
      return run_command(script_path, facts_path);
    }
    if (*maze_cmd) {
      return maze_command(maze_path, program_path, solve, solve_compressed);
    }
    if (*math_cmd) {
      return math_command(seed, difficulty, reveal, answer);
    }
    if (!stdio && bind.empty()) {
      throw UsageError("serve needs --stdio or --bind <host>:<port>");
    }
    return serve_command(stdio, bind, facts_path);
  } catch (const std::exception& e) {
    std::cerr << "tilepad: " << e.what() << '\n';
    return kUsage;
  }
}
