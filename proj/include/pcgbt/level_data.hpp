#ifndef PCGBT_LEVEL_DATA_HPP
#define PCGBT_LEVEL_DATA_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pcgbt/errors.hpp"
#include "pcgbt/geometry.hpp"

namespace pcgbt {

/// The most recently placed segment and the direction the cursor moved away
/// from it. Absent from the blackboard until the first placement.
struct PrevRef {
    std::string segmentId;
    Dir moved = Dir::Right;

    bool operator==(const PrevRef&) const = default;
};

struct LevelCell {
    std::string segmentId;
    std::string game;
    int order = 0;  // placement sequence number within the run

    bool operator==(const LevelCell&) const = default;
};

/// Sparse map from cell coordinates to placed segments. A cell can be placed
/// only once; placing onto an occupied cell indicates a self-crossing path in
/// the authored tree and is an error rather than a Failure.
class LevelMap {
public:
    bool occupied(Coord c) const { return cells_.count(c) != 0; }

    const LevelCell* cell(Coord c) const {
        auto it = cells_.find(c);
        return it == cells_.end() ? nullptr : &it->second;
    }

    void place(Coord c, std::string segmentId, std::string game) {
        if (occupied(c)) {
            throw EngineError(Errc::CellOccupied,
                              "cell (" + std::to_string(c.x) + "," +
                                  std::to_string(c.y) + ") already holds segment " +
                                  cells_.at(c).segmentId);
        }
        cells_.emplace(c, LevelCell{std::move(segmentId), std::move(game),
                                    nextOrder_++});
    }

    const std::map<Coord, LevelCell, CoordYxLess>& cells() const { return cells_; }

    /// Cells in placement order; consecutive entries are consecutive placements.
    std::vector<std::pair<Coord, LevelCell>> byOrder() const;

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool operator==(const LevelMap&) const = default;

private:
    std::map<Coord, LevelCell, CoordYxLess> cells_;
    int nextOrder_ = 0;
};

/// Unordered pair of adjacent room coordinates, stored normalized.
struct Edge {
    Coord a;
    Coord b;

    static Edge between(Coord p, Coord q) {
        CoordYxLess less;
        return less(p, q) ? Edge{p, q} : Edge{q, p};
    }

    auto operator<=>(const Edge&) const = default;
};

struct EdgeLess {
    bool operator()(const Edge& x, const Edge& y) const {
        CoordYxLess less;
        if (x.a != y.a) return less(x.a, y.a);
        return less(x.b, y.b);
    }
};

/// Rooms on an unbounded integer grid plus the set of opened edges between
/// adjacent rooms. Growth keeps the graph connected by construction.
class DungeonLayout {
public:
    bool hasRoom(Coord c) const { return rooms_.count(c) != 0; }

    void addRoom(Coord c) { rooms_.insert(c); }

    bool edgeOpen(Coord p, Coord q) const {
        return edges_.count(Edge::between(p, q)) != 0;
    }

    /// Both endpoints must already be rooms (no doors to nowhere).
    void openEdge(Coord p, Coord q);

    int roomCount() const { return static_cast<int>(rooms_.size()); }

    const std::set<Coord, CoordYxLess>& rooms() const { return rooms_; }
    const std::set<Edge, EdgeLess>& openEdges() const { return edges_; }

    /// Directions of this room's open edges (its required door set).
    DirSet doorsAt(Coord room) const;

    /// {"rooms": [[x,y], ...], "edges": [[[x,y],[x,y]], ...]}, rooms in
    /// (y,x) order.
    std::string toJson() const;

    bool operator==(const DungeonLayout&) const = default;

private:
    std::set<Coord, CoordYxLess> rooms_;
    std::set<Edge, EdgeLess> edges_;
};

/// Rectangular character grid; the rendered form of a level.
struct TileGrid {
    std::vector<std::string> rows;

    std::size_t rowCount() const { return rows.size(); }
    std::size_t colCount() const { return rows.empty() ? 0 : rows.front().size(); }

    /// One row per line, trailing newline after each row.
    std::string toText() const;

    /// {"rows": R, "cols": C, "cells": ["...", ...]}
    std::string toJson() const;

    bool operator==(const TileGrid&) const = default;
};

}  // namespace pcgbt

#endif
