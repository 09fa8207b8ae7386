#include "tilepad/facts.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace tilepad::facts {

namespace {

// Code points, not bytes.
std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text) {
    n += (c & 0xC0) != 0x80;
  }
  return n;
}

}  // namespace

std::optional<Fact> FactStore::next_fact(std::string_view trigger) {
  auto it = groups_.find(trigger);
  if (it == groups_.end() || it->second.empty()) {
    return std::nullopt;
  }
  auto cursor = cursors_.find(trigger);
  const Fact fact = it->second[cursor->second];
  cursor->second = (cursor->second + 1) % it->second.size();
  return fact;
}

const std::vector<Fact>* FactStore::group(std::string_view trigger) const {
  auto it = groups_.find(trigger);
  return it == groups_.end() ? nullptr : &it->second;
}

std::vector<std::string> FactStore::triggers() const {
  std::vector<std::string> out;
  for (const auto& [trigger, group] : groups_) {
    out.push_back(trigger);
  }
  return out;
}

std::size_t FactStore::size() const {
  std::size_t n = 0;
  for (const auto& [trigger, group] : groups_) {
    n += group.size();
  }
  return n;
}

void FactStore::rewind() {
  for (auto& [trigger, cursor] : cursors_) {
    cursor = 0;
  }
}

FactStore load_facts(std::string_view text) {
  FactStore store;
  std::set<std::pair<std::string, std::string>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    std::vector<std::string> fields;
    std::size_t begin = 0;
    for (std::size_t tab; (tab = line.find('\t', begin)) != std::string::npos; begin = tab + 1) {
      fields.push_back(line.substr(begin, tab - begin));
    }
    fields.push_back(line.substr(begin));
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty() ||
        utf8_length(fields[2]) > kMaxBodyLength) {
      throw FactsParseError(FactsParseError::Code::BadLine, number,
                            "facts line " + std::to_string(number) +
                                ": expected <trigger>\\t<id>\\t<body>");
    }
    if (!seen.emplace(fields[0], fields[1]).second) {
      throw FactsParseError(FactsParseError::Code::DuplicateId, number,
                            "facts line " + std::to_string(number) + ": duplicate id '" +
                                fields[1] + "' for trigger '" + fields[0] + "'");
    }
    Fact fact{fields[1], fields[0], fields[2]};
    store.cursors_.try_emplace(fact.trigger, 0);
    store.groups_[fact.trigger].push_back(std::move(fact));
  }
  return store;
}

FactStore load_facts_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open facts file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return load_facts(text.str());
}

}  // namespace tilepad::facts
