#ifndef PCGBT_PLACEMENT_HPP
#define PCGBT_PLACEMENT_HPP

#include "pcgbt/engine.hpp"
#include "pcgbt/level_data.hpp"
#include "pcgbt/segment.hpp"

namespace pcgbt {

// Blackboard keys used by the placement executors.
inline constexpr const char* kLevelKey = "level";
inline constexpr const char* kCursorKey = "cursor";
inline constexpr const char* kPrevKey = "prev";

/// True when a path can cross from `a` into `b`, where `b` sits in direction
/// `dir` from `a`. Tag mode checks the direction tags of both segments;
/// Aligned mode additionally requires the open boundary cells to overlap
/// positionally.
bool edgeCompatible(const Segment& a, Dir dir, const Segment& b,
                    EdgeCompatMode mode);

/// Renders the occupied bounding box of `levelMap` into one tile grid. Every
/// referenced segment must have identical dimensions (MixedDimensions
/// otherwise); cells without a segment are filled with the library's fill
/// character.
TileGrid assembleLevel(const LevelMap& levelMap, const SegmentLibrary& lib);

/// Registers the level-design actions:
///   "place-pattern"     :patterns (:game :count)
///   "place-directional" :open :advance (:game :match :mode)
///   "place-verbatim"    :sequence
void registerPlacementExecutors(ExecutorRegistry& registry);

}  // namespace pcgbt

#endif
