#ifndef PCGBT_DUNGEON_HPP
#define PCGBT_DUNGEON_HPP

#include <cstdint>

#include "pcgbt/engine.hpp"
#include "pcgbt/level_data.hpp"
#include "pcgbt/segment.hpp"

namespace pcgbt {

// Blackboard keys used by the dungeon executors.
inline constexpr const char* kLayoutKey = "layout";
inline constexpr const char* kStartDoneKey = "start_done";
inline constexpr const char* kRoomCountKey = "room_count";

/// Registers the dungeon actions:
///   "start-room"  places the all-closed starting room at (0,0)
///   "grow-step"   (:loop-prob) opens one new room or loop edge per tick
void registerDungeonExecutors(ExecutorRegistry& registry);

/// The tree the growth algorithm runs on: a selector whose first branch
/// places the start room exactly once (guarded by the start_done flag) and
/// whose second branch grows by one room per tick.
TreeSpec canonicalDungeonTree(double loopProb);

/// Grows a layout to exactly `roomCount` rooms by looping ticks of the
/// canonical tree (budget 64 ticks per room). The result is connected; with
/// loopProb = 0 it is a tree.
DungeonLayout generateLayout(int roomCount, uint64_t seed, double loopProb = 0.0);

/// Renders a layout by sampling, for each room, a segment of `game` whose
/// openings match the room's doors: exact match first, then exact after the
/// game's remap, then superset. Throws NoMatch when the library lacks a door
/// configuration entirely.
TileGrid instantiateLayout(const DungeonLayout& layout, const SegmentLibrary& lib,
                           std::string_view game, RandomStream& rng);

}  // namespace pcgbt

#endif
