#include "tilepad/world.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tilepad {

std::string to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Rocket:
      return "rocket";
    case EntityKind::Tree:
      return "tree";
    case EntityKind::Surface:
      return "surface";
    case EntityKind::Asteroid:
      return "asteroid";
  }
  return "?";
}

std::string to_string(Action action) {
  return action == Action::Takeoff ? "takeoff" : "rain";
}

std::string Entity::label() const {
  return to_string(kind) + "#" + std::to_string(id);
}

std::string Effect::describe() const {
  const std::string who = to_string(entity) + "#" + std::to_string(id);
  switch (kind) {
    case Kind::Spawned:
      return "Spawned(" + who + " at " + to_string(to) + ")";
    case Kind::Ascending:
      return "Ascending(" + who + ")";
    case Kind::EnteredSpace:
      return "EnteredSpace(" + who + ")";
    case Kind::Grew:
      return "Grew(" + who + " stage " + std::to_string(stage) + ")";
    case Kind::FullyGrown:
      return "FullyGrown(" + who + ")";
    case Kind::AlreadyFull:
      return "AlreadyFull(" + who + ")";
    case Kind::NoTarget:
      return "NoTarget(" + to_string(action) + ")";
    case Kind::Fell:
      return "Fell(" + who + " " + to_string(from) + "->" + to_string(to) + ")";
    case Kind::Carried:
      return "Carried(" + who + ")";
  }
  return "?";
}

OccupiedError::OccupiedError(GridPos pos)
    : std::runtime_error("Occupied" + to_string(pos)), pos_(pos) {}

bool World::on_canvas(GridPos pos) const {
  return pos.col >= 0 && pos.row >= 0 && pos.col < width && pos.row < height;
}

const Entity* World::at(GridPos pos) const {
  auto it = std::find_if(entities.begin(), entities.end(),
                         [&](const Entity& e) { return e.pos == pos; });
  return it == entities.end() ? nullptr : &*it;
}

const Entity* World::find(EntityId id) const {
  auto it = std::find_if(entities.begin(), entities.end(),
                         [&](const Entity& e) { return e.id == id; });
  return it == entities.end() ? nullptr : &*it;
}

bool World::supported(const Entity& e) const {
  return e.pos.row == 0 || at(GridPos{e.pos.col, e.pos.row - 1}) != nullptr;
}

World spawn(World world, EntityKind kind, GridPos pos) {
  if (!world.on_canvas(pos)) {
    throw std::out_of_range("spawn position " + to_string(pos) + " is off the canvas");
  }
  if (world.at(pos) != nullptr) {
    throw OccupiedError(pos);
  }
  const EntityId id = world.next_id++;
  world.entities.push_back(Entity{id, kind, pos, 0, Motion::Resting});
  return world;
}

ActionResult apply_action(World world, Action action, std::optional<EntityId> last_placed_actor) {
  std::vector<Effect> effects;
  auto no_target = [&] {
    Effect e;
    e.kind = Effect::Kind::NoTarget;
    e.action = action;
    return ActionResult{std::move(world), {e}};
  };

  if (action == Action::Takeoff) {
    // Entities are kept in id (spawn) order, so the latest live one is last.
    std::optional<EntityId> target_id = last_placed_actor;
    if (!target_id && !world.entities.empty()) {
      target_id = world.entities.back().id;
    }
    if (!target_id) {
      return no_target();
    }
    auto it = std::find_if(world.entities.begin(), world.entities.end(),
                           [&](const Entity& e) { return e.id == *target_id; });
    if (it == world.entities.end() || it->motion == Motion::Ascending) {
      return no_target();
    }
    it->motion = Motion::Ascending;
    effects.push_back(Effect{Effect::Kind::Ascending, it->id, it->kind, it->pos, it->pos});
    return ActionResult{std::move(world), std::move(effects)};
  }

  bool any_tree = false;
  for (auto& e : world.entities) {
    if (e.kind != EntityKind::Tree) {
      continue;
    }
    any_tree = true;
    if (e.growth_stage >= kMaxGrowthStage) {
      effects.push_back(Effect{Effect::Kind::AlreadyFull, e.id, e.kind, e.pos, e.pos});
      continue;
    }
    ++e.growth_stage;
    effects.push_back(Effect{Effect::Kind::Grew, e.id, e.kind, e.pos, e.pos, e.growth_stage});
    if (e.growth_stage == kMaxGrowthStage) {
      effects.push_back(Effect{Effect::Kind::FullyGrown, e.id, e.kind, e.pos, e.pos, e.growth_stage});
    }
  }
  if (!any_tree) {
    return no_target();
  }
  return ActionResult{std::move(world), std::move(effects)};
}

int settle_round_bound(const World& world) {
  return (world.height + 1) * static_cast<int>(world.entities.size());
}

namespace {

// One ascent-then-gravity round. Returns true if anything moved.
bool run_round(World& world, std::vector<Effect>& effects, std::set<EntityId>& carried) {
  bool changed = false;

  // (a) Ascent. Every ascender lifts itself and the contiguous column stack
  // directly above it; all lifted entities move up by exactly one row.
  std::set<EntityId> lifted;
  for (const auto& e : world.entities) {
    if (e.motion != Motion::Ascending) {
      continue;
    }
    lifted.insert(e.id);
    for (int row = e.pos.row + 1; row < world.height; ++row) {
      const Entity* above = world.at(GridPos{e.pos.col, row});
      if (above == nullptr) {
        break;
      }
      lifted.insert(above->id);
    }
  }
  std::vector<Entity> staying;
  staying.reserve(world.entities.size());
  for (auto& e : world.entities) {
    if (!lifted.contains(e.id)) {
      staying.push_back(e);
      continue;
    }
    changed = true;
    if (e.motion == Motion::Resting && carried.insert(e.id).second) {
      effects.push_back(Effect{Effect::Kind::Carried, e.id, e.kind, e.pos, e.pos});
    }
    ++e.pos.row;
    if (e.pos.row >= world.height) {
      effects.push_back(Effect{Effect::Kind::EnteredSpace, e.id, e.kind, e.pos, e.pos});
      world.space.push_back(e);
    } else {
      staying.push_back(e);
    }
  }
  world.entities = std::move(staying);

  // (b) Gravity, bottom row first so a stack falls together.
  std::vector<std::size_t> order(world.entities.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return world.entities[a].pos.row < world.entities[b].pos.row;
  });
  for (std::size_t i : order) {
    Entity& e = world.entities[i];
    if (e.motion == Motion::Resting && !world.supported(e)) {
      --e.pos.row;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

SettleResult settle_rounds(World world, int max_rounds) {
  SettleResult result;
  std::map<EntityId, GridPos> start;
  for (const auto& e : world.entities) {
    start.emplace(e.id, e.pos);
  }
  std::set<EntityId> carried;
  while (result.rounds < max_rounds && run_round(world, result.effects, carried)) {
    ++result.rounds;
  }
  for (const auto& e : world.entities) {
    auto it = start.find(e.id);
    if (it != start.end() && e.pos.row < it->second.row) {
      result.effects.push_back(Effect{Effect::Kind::Fell, e.id, e.kind, it->second, e.pos});
    }
  }
  result.world = std::move(world);
  return result;
}

SettleResult settle(World world) {
  // The bound is never reached on a well-formed world; the extra round lets
  // the last no-op round detect quiescence.
  const int bound = settle_round_bound(world) + 1;
  return settle_rounds(std::move(world), bound);
}

std::string render_ascii(const World& world) {
  std::string out;
  for (int row = world.height - 1; row >= 0; --row) {
    for (int col = 0; col < world.width; ++col) {
      const Entity* e = world.at(GridPos{col, row});
      char glyph = '.';
      if (e != nullptr) {
        switch (e->kind) {
          case EntityKind::Rocket:
            glyph = 'R';
            break;
          case EntityKind::Tree:
            glyph = e->growth_stage >= kMaxGrowthStage ? 'T' : 't';
            break;
          case EntityKind::Surface:
            glyph = '=';
            break;
          case EntityKind::Asteroid:
            glyph = '*';
            break;
        }
      }
      out += glyph;
    }
    out += '\n';
  }
  out += "space:";
  for (const auto& e : world.space) {
    out += ' ';
    out += e.label();
  }
  return out;
}

}  // namespace tilepad
