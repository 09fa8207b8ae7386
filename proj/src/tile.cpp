#include "tilepad/tile.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <tuple>
#include <utility>

namespace tilepad {

namespace {

struct PlainToken {
  std::string_view text;
  TileType type;
};

constexpr std::array<PlainToken, 13> kPlainTokens{{
    {"rocket", TileType::Rocket},
    {"takeoff", TileType::Takeoff},
    {"surface", TileType::Surface},
    {"tree", TileType::Tree},
    {"rain", TileType::Rain},
    {"asteroid", TileType::Asteroid},
    {"forward", TileType::Forward},
    {"left", TileType::TurnLeft},
    {"right", TileType::TurnRight},
    {"loop:*", TileType::RepeatUntilBlocked},
    {"plus", TileType::Plus},
    {"minus", TileType::Minus},
    {"equals", TileType::Equals},
}};

// Exactly one decimal digit, nothing else.
std::optional<int> single_digit(std::string_view text) {
  if (text.size() != 1 || text[0] < '0' || text[0] > '9') {
    return std::nullopt;
  }
  return text[0] - '0';
}

std::string message_for(TokenError::Code code, const std::string& token) {
  switch (code) {
    case TokenError::Code::UnknownToken:
      return "unknown tile token '" + token + "'";
    case TokenError::Code::BadParameter:
      return "bad tile parameter in '" + token + "'";
  }
  return token;
}

}  // namespace

TokenError::TokenError(Code code, std::string token)
    : std::runtime_error(message_for(code, token)), code_(code), token_(std::move(token)) {}

TileKind TileKind::repeat(int count) {
  if (count < 1 || count > 9) {
    throw TokenError(TokenError::Code::BadParameter, "loop:" + std::to_string(count));
  }
  return TileKind{TileType::Repeat, count};
}

TileKind TileKind::number(int digit) {
  if (digit < 0 || digit > 9) {
    throw TokenError(TokenError::Code::BadParameter, "num:" + std::to_string(digit));
  }
  return TileKind{TileType::Number, digit};
}

TileKind parse_tile_token(std::string_view token) {
  for (const auto& plain : kPlainTokens) {
    if (plain.text == token) {
      return TileKind::make(plain.type);
    }
  }
  auto parameterized = [&](std::string_view prefix, int lo, int hi) -> std::optional<int> {
    if (!token.starts_with(prefix)) {
      return std::nullopt;
    }
    auto value = single_digit(token.substr(prefix.size()));
    if (!value || *value < lo || *value > hi) {
      throw TokenError(TokenError::Code::BadParameter, std::string(token));
    }
    return value;
  };
  if (auto count = parameterized("loop:", 1, 9)) {
    return TileKind{TileType::Repeat, *count};
  }
  if (auto digit = parameterized("num:", 0, 9)) {
    return TileKind{TileType::Number, *digit};
  }
  throw TokenError(TokenError::Code::UnknownToken, std::string(token));
}

std::string token_of(const TileKind& kind) {
  switch (kind.type) {
    case TileType::Repeat:
      return "loop:" + std::to_string(kind.param);
    case TileType::Number:
      return "num:" + std::to_string(kind.param);
    default:
      break;
  }
  for (const auto& plain : kPlainTokens) {
    if (plain.type == kind.type) {
      return std::string(plain.text);
    }
  }
  return "?";
}

std::vector<std::string> all_tile_tokens() {
  std::vector<std::string> tokens;
  for (const auto& plain : kPlainTokens) {
    if (plain.type == TileType::RepeatUntilBlocked) {
      for (int n = 1; n <= 9; ++n) {
        tokens.push_back("loop:" + std::to_string(n));
      }
    }
    if (plain.type == TileType::Plus) {
      for (int d = 0; d <= 9; ++d) {
        tokens.push_back("num:" + std::to_string(d));
      }
    }
    tokens.emplace_back(plain.text);
  }
  return tokens;
}

std::string to_string(GridPos pos) {
  return "(" + std::to_string(pos.col) + "," + std::to_string(pos.row) + ")";
}

std::string PlacementError::describe() const {
  switch (code) {
    case Code::Overlap:
      return "Overlap" + to_string(pos);
    case Code::OutOfCanvas:
      return "OutOfCanvas" + to_string(pos);
  }
  return "PlacementError";
}

CanvasLayout::CanvasLayout(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("canvas dimensions must be positive");
  }
}

bool CanvasLayout::on_canvas(GridPos pos) const {
  return pos.col >= 0 && pos.row >= 0 && pos.col < width_ && pos.row < height_;
}

const Tile* CanvasLayout::tile_at(GridPos pos) const {
  auto it = std::find_if(tiles_.begin(), tiles_.end(), [&](const Tile& t) { return t.pos == pos; });
  return it == tiles_.end() ? nullptr : &*it;
}

const Tile& CanvasLayout::place(const TileKind& kind, GridPos pos) {
  return insert(kind, pos, next_seq_++);
}

const Tile& CanvasLayout::add_unordered(const TileKind& kind, GridPos pos) {
  return insert(kind, pos, std::nullopt);
}

Tile& CanvasLayout::insert(const TileKind& kind, GridPos pos, std::optional<std::uint64_t> seq) {
  if (auto error = validate_placement(*this, kind, pos)) {
    throw std::invalid_argument(error->describe());
  }
  tiles_.push_back(Tile{next_id_++, kind, pos, seq});
  return tiles_.back();
}

std::optional<Tile> CanvasLayout::remove(GridPos pos) {
  auto it = std::find_if(tiles_.begin(), tiles_.end(), [&](const Tile& t) { return t.pos == pos; });
  if (it == tiles_.end()) {
    return std::nullopt;
  }
  Tile removed = *it;
  tiles_.erase(it);
  return removed;
}

std::optional<PlacementError> validate_placement(const CanvasLayout& layout,
                                                 [[maybe_unused]] const TileKind& kind,
                                                 GridPos pos) {
  if (!layout.on_canvas(pos)) {
    return PlacementError{PlacementError::Code::OutOfCanvas, pos};
  }
  if (layout.tile_at(pos) != nullptr) {
    return PlacementError{PlacementError::Code::Overlap, pos};
  }
  return std::nullopt;
}

std::vector<Tile> sequence_of(const CanvasLayout& layout) {
  std::vector<Tile> tiles = layout.tiles();
  auto key = [](const Tile& t) {
    return std::make_tuple(!t.placed_seq.has_value(), t.placed_seq.value_or(0), -t.pos.row,
                           t.pos.col);
  };
  std::stable_sort(tiles.begin(), tiles.end(),
                   [&](const Tile& a, const Tile& b) { return key(a) < key(b); });
  return tiles;
}

}  // namespace tilepad
