#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilepad/tile.hpp"

namespace tilepad {

using EntityId = std::uint64_t;

enum class EntityKind { Rocket, Tree, Surface, Asteroid };
enum class Action { Takeoff, Rain };
enum class Motion { Resting, Ascending };

std::string to_string(EntityKind kind);
std::string to_string(Action action);

inline constexpr int kMaxGrowthStage = 3;

struct Entity {
  EntityId id = 0;
  EntityKind kind = EntityKind::Rocket;
  GridPos pos;
  int growth_stage = 0;  // trees only
  Motion motion = Motion::Resting;

  std::string label() const;  // "rocket#1"

  friend bool operator==(const Entity&, const Entity&) = default;
};

// Something observable that happened to the scene.
struct Effect {
  enum class Kind {
    Spawned,
    Ascending,
    EnteredSpace,
    Grew,
    FullyGrown,
    AlreadyFull,
    NoTarget,
    Fell,
    Carried,
  };

  Kind kind = Kind::Spawned;
  EntityId id = 0;
  EntityKind entity = EntityKind::Rocket;
  GridPos from;
  GridPos to;
  int stage = 0;
  Action action = Action::Takeoff;  // NoTarget only

  std::string describe() const;
};

class OccupiedError : public std::runtime_error {
 public:
  explicit OccupiedError(GridPos pos);
  GridPos pos() const { return pos_; }

 private:
  GridPos pos_;
};

// The sandbox scene. `entities` holds the on-canvas entities in id order;
// `space` holds entities that ascended off the top, in arrival order.
struct World {
  int width = CanvasLayout::kDefaultWidth;
  int height = CanvasLayout::kDefaultHeight;
  std::vector<Entity> entities;
  std::vector<Entity> space;
  EntityId next_id = 1;

  World() = default;
  World(int w, int h) : width(w), height(h) {}

  bool on_canvas(GridPos pos) const;
  const Entity* at(GridPos pos) const;
  const Entity* find(EntityId id) const;
  // Resting support rule: bottom row, or any entity directly below.
  bool supported(const Entity& e) const;

  friend bool operator==(const World&, const World&) = default;
};

// Adds a Resting entity. Throws OccupiedError or std::out_of_range.
World spawn(World world, EntityKind kind, GridPos pos);

struct ActionResult {
  World world;
  std::vector<Effect> effects;
};

// Takeoff launches `last_placed_actor` when given, else the most recently
// spawned entity still on the canvas. Rain grows every live tree.
ActionResult apply_action(World world, Action action,
                          std::optional<EntityId> last_placed_actor = std::nullopt);

struct SettleResult {
  World world;
  std::vector<Effect> effects;
  int rounds = 0;  // rounds that changed something
};

// Runs ascent-then-gravity rounds until nothing moves.
SettleResult settle(World world);

// Runs at most `max_rounds` rounds; stops early on quiescence.
SettleResult settle_rounds(World world, int max_rounds);

// Upper bound on settle rounds for this world.
int settle_round_bound(const World& world);

// `height` lines of `width` glyphs, top row first, then "space: ..." (no
// trailing newline).
std::string render_ascii(const World& world);

}  // namespace tilepad
