#ifndef PCGBT_SEGMENT_HPP
#define PCGBT_SEGMENT_HPP

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcgbt/geometry.hpp"
#include "pcgbt/random.hpp"

namespace pcgbt {

/// A fixed-size tile grid extracted from a game level, tagged with design
/// patterns and the sides through which it can be entered or left.
struct Segment {
    std::string id;
    std::string game;
    std::vector<std::string> grid;  // rows after padding, equal lengths
    std::vector<std::string> patternTags;  // sorted, unique
    DirSet openings;
    std::array<std::vector<int>, 4> openCells;  // per Dir: passable boundary indices

    std::size_t rows() const { return grid.size(); }
    std::size_t cols() const { return grid.empty() ? 0 : grid.front().size(); }

    bool hasTag(std::string_view tag) const;
    bool hasAnyTag(std::span<const std::string> tags) const;

    const std::vector<int>& openCellsOn(Dir side) const {
        return openCells[static_cast<int>(side)];
    }
};

struct OpeningScan {
    DirSet openings;
    std::array<std::vector<int>, 4> openCells;
};

/// Scans the grid boundary for passable tiles. U uses row 0 (column
/// indices), D the last row, L column 0 (row indices), R the last column.
/// A side is open iff it has at least one passable boundary cell.
OpeningScan detectOpenings(const std::vector<std::string>& grid,
                           std::string_view passable);

/// Per-game loading and sampling metadata from the manifest.
struct GameMeta {
    std::string game;
    int rows = 0;  // segment file rows, before padding
    int cols = 0;
    int padTop = 0;
    std::string passable;  // set of passable tile characters
    char fill = ' ';
    std::vector<std::pair<DirSet, DirSet>> remap;  // applied before matching

    int paddedRows() const { return rows + padTop; }
};

enum class MatchMode { Exact, Superset };

/// Immutable, indexed collection of segments for one or more games.
/// Candidate sets are always ordered by segment id before sampling so a
/// given seed picks the same segment on every platform.
class SegmentLibrary {
public:
    SegmentLibrary() = default;
    SegmentLibrary(const SegmentLibrary&) = delete;
    SegmentLibrary& operator=(const SegmentLibrary&) = delete;
    SegmentLibrary(SegmentLibrary&&) = default;
    SegmentLibrary& operator=(SegmentLibrary&&) = default;

    /// Loads one manifest (JSON) and the segment files it references.
    /// Throws EngineError (ManifestError, DimensionMismatch, DuplicateId,
    /// MissingFile) on any defect.
    static SegmentLibrary load(const std::string& manifestPath);

    /// Loads and merges several manifests. Segment ids must be unique across
    /// all of them.
    static SegmentLibrary loadAll(std::span<const std::string> manifestPaths);

    const Segment* find(std::string_view id) const;
    const GameMeta* gameMeta(std::string_view game) const;

    /// Game names in manifest load order.
    std::vector<std::string> games() const;

    /// The library's only game, or empty when it holds several.
    std::string soleGame() const;

    /// Fill character of the first loaded game.
    char fillChar() const;

    const std::vector<std::string>& warnings() const { return warnings_; }

    /// Segments of `game` whose tags intersect `patterns`, ordered by id.
    std::vector<const Segment*> candidatesByPattern(
        std::string_view game, std::span<const std::string> patterns) const;

    /// Segments of `game` whose openings equal (Exact) or contain (Superset)
    /// `want`, ordered by id. When `applyRemap` is set, `want` is first
    /// replaced through the game's remap table.
    std::vector<const Segment*> candidatesByOpenings(std::string_view game,
                                                     DirSet want, MatchMode match,
                                                     bool applyRemap = true) const;

    /// `want` after the game's remap table (unchanged if no entry matches).
    DirSet remapped(std::string_view game, DirSet want) const;

    /// Uniform sample over candidatesByPattern; exactly one RNG draw.
    /// Returns nullptr when no segment matches.
    const Segment* sampleByPattern(std::string_view game,
                                   std::span<const std::string> patterns,
                                   RandomStream& rng) const;

    /// Uniform sample over candidatesByOpenings (remap applied); exactly one
    /// RNG draw. Returns nullptr when no segment matches.
    const Segment* sampleByOpenings(std::string_view game, DirSet want,
                                    MatchMode match, RandomStream& rng) const;

    /// All segments in id order.
    std::vector<const Segment*> allSegments() const;

    std::size_t size() const { return segments_.size(); }

private:
    void ingestManifest(const std::string& manifestPath);
    void buildIndices();

    std::map<std::string, Segment> segments_;  // id order
    std::vector<GameMeta> gameMetas_;          // load order
    std::map<std::string, std::map<std::string, std::vector<const Segment*>>>
        byPattern_;  // game -> tag -> id-ordered segments
    std::map<std::string, std::map<DirSet, std::vector<const Segment*>>>
        byOpenings_;  // game -> exact openings -> id-ordered segments
    std::vector<std::string> warnings_;
};

}  // namespace pcgbt

#endif
