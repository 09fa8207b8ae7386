#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tilepad/protocol.hpp"

namespace tilepad::script {

class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ScriptLine {
  std::size_t line = 0;
  protocol::ClientMessage message;
};

// Parses a session script:
//   MODE sandbox|maze|math
//   PLACE <token> AT <col>,<row>
//   REMOVE AT <col>,<row>
//   TICK <n>
//   CHECK
//   MAZE <path>          (read now, relative to `base_dir`)
//   EQ <a> <+|-> <b>
// `#` starts a comment. Throws ScriptError.
std::vector<ScriptLine> parse_script(std::string_view text,
                                     const std::filesystem::path& base_dir = {});

std::vector<ScriptLine> load_script_file(const std::filesystem::path& path);

// The step as a text block: seq, events, diagnostics, fact, then the scene.
std::string render_step(const StepOutput& step, const Session& session);

struct RunSummary {
  std::size_t steps = 0;
  std::size_t errors = 0;
  // Result of the last CHECK, if any.
  std::optional<std::string> last_check;
};

RunSummary run_script(const std::vector<ScriptLine>& script, const facts::FactStore& facts,
                      std::ostream& out);

}  // namespace tilepad::script
