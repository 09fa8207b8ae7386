#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tilepad {

enum class TileType {
  Rocket,
  Takeoff,
  Surface,
  Tree,
  Rain,
  Asteroid,
  Forward,
  TurnLeft,
  TurnRight,
  Repeat,
  RepeatUntilBlocked,
  Number,
  Plus,
  Minus,
  Equals,
};

// A tile from the kit. `param` is the loop count for Repeat (1..9) and the
// digit for Number (0..9); it is zero for every other type.
struct TileKind {
  TileType type = TileType::Rocket;
  int param = 0;

  static TileKind make(TileType type) { return TileKind{type, 0}; }
  static TileKind repeat(int count);
  static TileKind number(int digit);

  bool is_movement() const {
    return type == TileType::Forward || type == TileType::TurnLeft || type == TileType::TurnRight;
  }
  bool is_loop() const { return type == TileType::Repeat || type == TileType::RepeatUntilBlocked; }

  friend bool operator==(const TileKind&, const TileKind&) = default;
};

class TokenError : public std::runtime_error {
 public:
  enum class Code { UnknownToken, BadParameter };
  TokenError(Code code, std::string token);

  Code code() const { return code_; }
  const std::string& token() const { return token_; }

 private:
  Code code_;
  std::string token_;
};

// Parses one canonical tile token (`rocket`, `loop:5`, `loop:*`, `num:3`, ...).
TileKind parse_tile_token(std::string_view token);

// Inverse of parse_tile_token.
std::string token_of(const TileKind& kind);

// Every valid token, in vocabulary order.
std::vector<std::string> all_tile_tokens();

// Row 0 is the bottom of the canvas.
struct GridPos {
  int col = 0;
  int row = 0;

  friend bool operator==(const GridPos&, const GridPos&) = default;
  friend auto operator<=>(const GridPos&, const GridPos&) = default;
};

std::string to_string(GridPos pos);

struct Tile {
  std::uint64_t id = 0;
  TileKind kind;
  GridPos pos;
  // Empty for tiles that come from a static snapshot with no event history.
  std::optional<std::uint64_t> placed_seq;
};

struct PlacementError {
  enum class Code { Overlap, OutOfCanvas };
  Code code;
  GridPos pos;

  std::string describe() const;
};

class CanvasLayout {
 public:
  static constexpr int kDefaultWidth = 10;
  static constexpr int kDefaultHeight = 8;

  CanvasLayout() = default;
  CanvasLayout(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<Tile>& tiles() const { return tiles_; }

  bool on_canvas(GridPos pos) const;
  const Tile* tile_at(GridPos pos) const;

  // Validates, then records the placement with the next id and seq. Throws
  // std::invalid_argument if the placement is invalid.
  const Tile& place(const TileKind& kind, GridPos pos);

  // Adds a tile with no placement order (static snapshot).
  const Tile& add_unordered(const TileKind& kind, GridPos pos);

  std::optional<Tile> remove(GridPos pos);

 private:
  Tile& insert(const TileKind& kind, GridPos pos, std::optional<std::uint64_t> seq);

  int width_ = kDefaultWidth;
  int height_ = kDefaultHeight;
  std::vector<Tile> tiles_;
  std::uint64_t next_id_ = 1;
  std::uint64_t next_seq_ = 1;
};

std::optional<PlacementError> validate_placement(const CanvasLayout& layout, const TileKind& kind,
                                                 GridPos pos);

// Program order: placement order; tiles without a placement seq follow in
// row-major order, top row first.
std::vector<Tile> sequence_of(const CanvasLayout& layout);

}  // namespace tilepad
