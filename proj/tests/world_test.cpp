#include "doctest.h"
#include "oracles.hpp"
#include "tilepad/world.hpp"

using namespace tilepad;

namespace {

const Entity& only(const World& w, EntityKind kind) {
  for (const auto& e : w.entities) {
    if (e.kind == kind) return e;
  }
  throw std::logic_error("missing entity");
}

}  // namespace

TEST_CASE("spawn") {
  World w(10, 8);
  w = spawn(w, EntityKind::Surface, {4, 0});
  CHECK(w.entities.size() == 1);
  w = spawn(w, EntityKind::Tree, {4, 1});
  CHECK(w.supported(only(w, EntityKind::Tree)));
  CHECK_THROWS_AS(spawn(w, EntityKind::Tree, {4, 0}), OccupiedError);
  CHECK_THROWS_AS(spawn(w, EntityKind::Tree, {10, 0}), std::out_of_range);
  CHECK(w.entities[0].id == 1);
  CHECK(w.entities[1].id == 2);
}

TEST_CASE("takeoff targets the latest live entity of any kind") {
  World w(10, 8);
  w = spawn(w, EntityKind::Rocket, {2, 0});
  auto r = apply_action(w, Action::Takeoff);
  CHECK(r.world.entities[0].motion == Motion::Ascending);
  REQUIRE(r.effects.size() == 1);
  CHECK(r.effects[0].describe() == "Ascending(rocket#1)");

  World s(10, 8);
  s = spawn(s, EntityKind::Surface, {3, 0});
  auto fly = apply_action(s, Action::Takeoff);
  CHECK(fly.world.entities[0].motion == Motion::Ascending);

  auto none = apply_action(World(10, 8), Action::Takeoff);
  REQUIRE(none.effects.size() == 1);
  CHECK(none.effects[0].kind == Effect::Kind::NoTarget);
}

TEST_CASE("rain grows every tree up to the cap") {
  World w(10, 8);
  w = spawn(w, EntityKind::Surface, {0, 0});
  w = spawn(w, EntityKind::Tree, {0, 1});
  w = spawn(w, EntityKind::Tree, {5, 0});
  for (int i = 1; i <= 3; ++i) {
    auto r = apply_action(w, Action::Rain);
    w = r.world;
    for (const auto& e : w.entities) {
      if (e.kind == EntityKind::Tree) CHECK(e.growth_stage == i);
    }
    if (i == 3) {
      CHECK(r.effects.size() == 4);  // two Grew + two FullyGrown
      CHECK(r.effects[1].kind == Effect::Kind::FullyGrown);
    }
  }
  auto full = apply_action(w, Action::Rain);
  CHECK(full.world == w);
  REQUIRE(full.effects.size() == 2);
  CHECK(full.effects[0].describe() == "AlreadyFull(tree#2)");

  auto none = apply_action(World(3, 3), Action::Rain);
  CHECK(none.effects[0].describe() == "NoTarget(rain)");
}

TEST_CASE("settle drops an unsupported tree to the ground") {
  World w(10, 8);
  w = spawn(w, EntityKind::Tree, {3, 5});
  auto s = settle(w);
  CHECK(s.world.entities[0].pos == GridPos{3, 0});
  REQUIRE(s.effects.size() == 1);
  CHECK(s.effects[0].describe() == "Fell(tree#1 (3,5)->(3,0))");
}

TEST_CASE("settle lands a tree on a surface (column compaction oracle)") {
  World w(10, 8);
  w = spawn(w, EntityKind::Surface, {3, 0});
  w = spawn(w, EntityKind::Tree, {3, 4});
  const auto expected = oracle::compacted_columns(w);
  auto s = settle(w);
  CHECK(expected.at(2) == GridPos{3, 1});
  CHECK(s.world.find(2)->pos == expected.at(2));
  CHECK(s.rounds == 3);
}

TEST_CASE("an ascending rocket reaches space within height rounds") {
  World w(10, 8);
  w = spawn(w, EntityKind::Rocket, {2, 0});
  w = apply_action(w, Action::Takeoff).world;
  auto s = settle(w);
  CHECK(s.world.entities.empty());
  REQUIRE(s.world.space.size() == 1);
  CHECK(s.rounds <= 8);
  CHECK(s.effects.back().describe() == "EnteredSpace(rocket#1)");
}

TEST_CASE("an ascending surface carries what stands on it") {
  World w(4, 4);
  w = spawn(w, EntityKind::Surface, {1, 0});
  w = spawn(w, EntityKind::Tree, {1, 1});
  w = apply_action(w, Action::Takeoff, 1).world;
  auto s = settle(w);
  CHECK(s.world.entities.empty());
  REQUIRE(s.world.space.size() == 2);
  CHECK(s.world.space[0].id == 2);
  CHECK(s.world.space[1].id == 1);
  CHECK(s.effects.front().describe() == "Carried(tree#2)");
}

TEST_CASE("settle is gravity-only column compaction on random resting worlds") {
  oracle::SplitMix64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    World w(rng.between(1, 6), rng.between(1, 6));
    const int n = rng.between(0, w.width * w.height);
    for (int i = 0; i < n; ++i) {
      const GridPos pos{rng.below(w.width), rng.below(w.height)};
      if (!w.at(pos)) w = spawn(w, static_cast<EntityKind>(rng.below(4)), pos);
    }
    const auto expected = oracle::compacted_columns(w);
    const int bound = settle_round_bound(w);
    auto s = settle(w);
    REQUIRE(s.rounds <= bound);
    REQUIRE(oracle::world_violation(s.world).empty());
    for (const auto& e : s.world.entities) REQUIRE(e.pos == expected.at(e.id));
  }
}

TEST_CASE("settle terminates within its bound with ascenders in the mix") {
  oracle::SplitMix64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    World w(rng.between(1, 6), rng.between(1, 6));
    const int n = rng.between(1, w.width * w.height);
    for (int i = 0; i < n; ++i) {
      const GridPos pos{rng.below(w.width), rng.below(w.height)};
      if (!w.at(pos)) w = spawn(w, static_cast<EntityKind>(rng.below(4)), pos);
    }
    for (auto& e : w.entities) {
      if (rng.chance(25)) e.motion = Motion::Ascending;
    }
    const std::size_t total = w.entities.size();
    const int bound = settle_round_bound(w);
    auto s = settle(w);
    REQUIRE(s.rounds <= bound);
    REQUIRE(oracle::world_violation(s.world).empty());
    REQUIRE(s.world.entities.size() + s.world.space.size() == total);
  }
}

TEST_CASE("render_ascii") {
  CHECK(render_ascii(World(3, 2)) == "...\n...\nspace:");
  World w(3, 2);
  w = spawn(w, EntityKind::Surface, {1, 0});
  CHECK(render_ascii(w) == "...\n.=.\nspace:");
  w = spawn(w, EntityKind::Tree, {1, 1});
  w = spawn(w, EntityKind::Asteroid, {0, 0});
  w = spawn(w, EntityKind::Rocket, {2, 0});
  CHECK(render_ascii(w) == ".t.\n*=R\nspace:");
  for (int i = 0; i < 3; ++i) w = apply_action(w, Action::Rain).world;
  CHECK(render_ascii(w) == ".T.\n*=R\nspace:");

  World r(3, 2);
  r = spawn(r, EntityKind::Rocket, {0, 0});
  r = settle(apply_action(r, Action::Takeoff).world).world;
  CHECK(render_ascii(r) == "...\n...\nspace: rocket#1");
}
