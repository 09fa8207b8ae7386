#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tilepad::facts {

inline constexpr std::size_t kMaxBodyLength = 280;

struct Fact {
  std::string id;
  std::string trigger;
  std::string body;

  friend bool operator==(const Fact&, const Fact&) = default;
};

class FactsParseError : public std::runtime_error {
 public:
  enum class Code { BadLine, DuplicateId };

  FactsParseError(Code code, std::size_t line, std::string message)
      : std::runtime_error(std::move(message)), code_(code), line_(line) {}

  Code code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

// Facts grouped by trigger, each group in file order, with a round-robin
// cursor per group.
class FactStore {
 public:
  std::optional<Fact> next_fact(std::string_view trigger);

  const std::vector<Fact>* group(std::string_view trigger) const;
  std::vector<std::string> triggers() const;
  std::size_t size() const;
  void rewind();

  friend FactStore load_facts(std::string_view text);
  friend bool operator==(const FactStore&, const FactStore&) = default;

 private:
  std::map<std::string, std::vector<Fact>, std::less<>> groups_;
  std::map<std::string, std::size_t, std::less<>> cursors_;
};

// `<trigger>\t<id>\t<body>` per line; `#` lines and blank lines are skipped.
FactStore load_facts(std::string_view text);

FactStore load_facts_file(const std::string& path);

}  // namespace tilepad::facts
