#include "pcgbt/placement.hpp"

#include <algorithm>

#include "pcgbt/errors.hpp"

namespace pcgbt {

namespace {

const SegmentLibrary& requireLibrary(const ExecContext& ctx, const char* executor) {
    if (!ctx.library)
        throw EngineError(Errc::InvalidArgument,
                          std::string("action '") + executor +
                              "' needs a segment library");
    return *ctx.library;
}

std::string resolveGame(const NodeSpec& node, const SegmentLibrary& lib,
                        const char* executor) {
    if (auto game = node.attrString("game")) {
        if (!lib.gameMeta(*game))
            throw EngineError(Errc::InvalidArgument,
                              "game '" + *game + "' is not in the loaded library");
        return *game;
    }
    std::string sole = lib.soleGame();
    if (sole.empty())
        throw EngineError(Errc::InvalidArgument,
                          std::string("action '") + executor +
                              "' needs :game with a multi-game library");
    return sole;
}

struct LevelState {
    LevelMap& level;
    Coord& cursor;
};

LevelState levelState(Blackboard& bb) {
    LevelMap& level = bb.ensure<LevelMap>(kLevelKey);
    Coord& cursor = bb.ensure<Coord>(kCursorKey, Coord{0, 0});
    return {level, cursor};
}

void placeAt(ExecContext& ctx, LevelState& state, const Segment& seg, Dir advance) {
    state.level.place(state.cursor, seg.id, seg.game);
    ctx.bb.put(kPrevKey, PrevRef{seg.id, advance});
    state.cursor = step(state.cursor, advance);
}

Status placePattern(const NodeSpec& node, ExecContext& ctx) {
    const SegmentLibrary& lib = requireLibrary(ctx, "place-pattern");
    const auto* patterns = node.attrList("patterns");
    if (!patterns || patterns->empty())
        throw EngineError(Errc::InvalidArgument,
                          "'place-pattern' requires a nonempty :patterns list");
    const std::string game = resolveGame(node, lib, "place-pattern");
    const double countRaw = node.attrNumber("count").value_or(1.0);
    if (countRaw < 1 || std::floor(countRaw) != countRaw)
        throw EngineError(Errc::InvalidArgument,
                          "'place-pattern' :count must be an integer >= 1");

    LevelState state = levelState(ctx.bb);
    for (int i = 0; i < static_cast<int>(countRaw); ++i) {
        const Segment* seg = lib.sampleByPattern(game, *patterns, ctx.rng);
        if (!seg) return Status::Failure;
        placeAt(ctx, state, *seg, Dir::Right);
    }
    return Status::Success;
}

Status placeDirectional(const NodeSpec& node, ExecContext& ctx) {
    const SegmentLibrary& lib = requireLibrary(ctx, "place-directional");
    auto openText = node.attrString("open");
    auto openSet = openText ? DirSet::parse(*openText) : std::nullopt;
    if (!openSet || openSet->empty())
        throw EngineError(Errc::InvalidArgument,
                          "'place-directional' requires a nonempty :open "
                          "direction set");
    auto advanceText = node.attrString("advance");
    auto advance = advanceText && advanceText->size() == 1
                       ? dirFromChar((*advanceText)[0])
                       : std::nullopt;
    if (!advance)
        throw EngineError(Errc::InvalidArgument,
                          "'place-directional' requires :advance, one of U/D/L/R");
    MatchMode match = MatchMode::Exact;
    if (auto text = node.attrString("match")) {
        if (*text == "superset")
            match = MatchMode::Superset;
        else if (*text != "exact")
            throw EngineError(Errc::InvalidArgument,
                              "'place-directional' :match must be \"exact\" or "
                              "\"superset\"");
    }
    EdgeCompatMode mode = ctx.compatMode;
    if (auto text = node.attrString("mode")) {
        if (*text == "tag")
            mode = EdgeCompatMode::Tag;
        else if (*text == "aligned")
            mode = EdgeCompatMode::Aligned;
        else
            throw EngineError(Errc::InvalidArgument,
                              "'place-directional' :mode must be \"tag\" or "
                              "\"aligned\"");
    }
    const std::string game = resolveGame(node, lib, "place-directional");

    auto candidates = lib.candidatesByOpenings(game, *openSet, match);

    // With a previous segment on the board, keep only candidates reachable
    // from it across the adjoining edge. No previous segment, no constraint.
    if (const PrevRef* prev = ctx.bb.getIf<PrevRef>(kPrevKey)) {
        const Segment* prevSeg = lib.find(prev->segmentId);
        if (!prevSeg)
            throw EngineError(Errc::UnknownSegmentId,
                              "previous segment '" + prev->segmentId +
                                  "' is not in the loaded library");
        std::erase_if(candidates, [&](const Segment* cand) {
            return !edgeCompatible(*prevSeg, prev->moved, *cand, mode);
        });
    }
    if (candidates.empty()) return Status::Failure;

    const Segment* seg = candidates[ctx.rng.nextBelow(candidates.size())];
    LevelState state = levelState(ctx.bb);
    placeAt(ctx, state, *seg, *advance);
    return Status::Success;
}

Status placeVerbatim(const NodeSpec& node, ExecContext& ctx) {
    const SegmentLibrary& lib = requireLibrary(ctx, "place-verbatim");
    const auto* sequence = node.attrList("sequence");
    if (!sequence || sequence->empty())
        throw EngineError(Errc::InvalidArgument,
                          "'place-verbatim' requires a nonempty :sequence list");
    std::vector<const Segment*> segs;
    segs.reserve(sequence->size());
    for (const std::string& id : *sequence) {
        const Segment* seg = lib.find(id);
        if (!seg)
            throw EngineError(Errc::UnknownSegmentId,
                              "segment id '" + id + "' is not in the library");
        segs.push_back(seg);
    }
    LevelState state = levelState(ctx.bb);
    for (const Segment* seg : segs) placeAt(ctx, state, *seg, Dir::Right);
    return Status::Success;
}

bool sortedIntersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace

bool edgeCompatible(const Segment& a, Dir dir, const Segment& b,
                    EdgeCompatMode mode) {
    if (mode == EdgeCompatMode::Tag)
        return a.openings.has(dir) && b.openings.has(opposite(dir));
    return sortedIntersect(a.openCellsOn(dir), b.openCellsOn(opposite(dir)));
}

TileGrid assembleLevel(const LevelMap& levelMap, const SegmentLibrary& lib) {
    TileGrid grid;
    if (levelMap.empty()) return grid;

    std::size_t segRows = 0, segCols = 0;
    Coord min = levelMap.cells().begin()->first;
    Coord max = min;
    for (const auto& [coord, cell] : levelMap.cells()) {
        const Segment* seg = lib.find(cell.segmentId);
        if (!seg)
            throw EngineError(Errc::UnknownSegmentId,
                              "segment id '" + cell.segmentId +
                                  "' is not in the library");
        if (segRows == 0) {
            segRows = seg->rows();
            segCols = seg->cols();
        } else if (seg->rows() != segRows || seg->cols() != segCols) {
            throw EngineError(Errc::MixedDimensions,
                              "segment '" + seg->id + "' is " +
                                  std::to_string(seg->rows()) + "x" +
                                  std::to_string(seg->cols()) + ", expected " +
                                  std::to_string(segRows) + "x" +
                                  std::to_string(segCols));
        }
        min.x = std::min(min.x, coord.x);
        min.y = std::min(min.y, coord.y);
        max.x = std::max(max.x, coord.x);
        max.y = std::max(max.y, coord.y);
    }

    const std::size_t cellsWide = static_cast<std::size_t>(max.x - min.x + 1);
    const std::size_t cellsTall = static_cast<std::size_t>(max.y - min.y + 1);
    grid.rows.assign(cellsTall * segRows,
                     std::string(cellsWide * segCols, lib.fillChar()));

    for (const auto& [coord, cell] : levelMap.cells()) {
        const Segment* seg = lib.find(cell.segmentId);
        const std::size_t rowBase =
            static_cast<std::size_t>(coord.y - min.y) * segRows;
        const std::size_t colBase =
            static_cast<std::size_t>(coord.x - min.x) * segCols;
        for (std::size_t r = 0; r < segRows; ++r)
            grid.rows[rowBase + r].replace(colBase, segCols, seg->grid[r]);
    }
    return grid;
}

void registerPlacementExecutors(ExecutorRegistry& registry) {
    registry.registerAction(
        "place-pattern",
        {placePattern,
         {{.key = "patterns", .type = AttrType::StringList, .required = true},
          {.key = "game", .type = AttrType::String},
          {.key = "count", .type = AttrType::Number, .integer = true,
           .minNumber = 1.0}}});
    registry.registerAction(
        "place-directional",
        {placeDirectional,
         {{.key = "open", .type = AttrType::DirSetText, .required = true},
          {.key = "advance", .type = AttrType::DirText, .required = true},
          {.key = "game", .type = AttrType::String},
          {.key = "match", .type = AttrType::String, .oneOf = {"exact", "superset"}},
          {.key = "mode", .type = AttrType::String, .oneOf = {"tag", "aligned"}}}});
    registry.registerAction(
        "place-verbatim",
        {placeVerbatim,
         {{.key = "sequence", .type = AttrType::StringList, .required = true}}});
}

}  // namespace pcgbt
