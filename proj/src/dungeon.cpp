#include "pcgbt/dungeon.hpp"

#include <cmath>

#include "pcgbt/errors.hpp"
#include "pcgbt/placement.hpp"

namespace pcgbt {

namespace {

Status execStartRoom(const NodeSpec&, ExecContext& ctx) {
    const bool* started = ctx.bb.getIf<bool>(kStartDoneKey);
    if (started && *started)
        throw EngineError(Errc::StartRoomExists,
                          "start room already placed; guard 'start-room' with "
                          "a flag condition");
    DungeonLayout layout;
    layout.addRoom({0, 0});
    ctx.bb.put(kLayoutKey, std::move(layout));
    ctx.bb.put(kStartDoneKey, true);
    ctx.bb.put(kRoomCountKey, int64_t{1});
    return Status::Success;
}

Status execGrowStep(const NodeSpec& node, ExecContext& ctx) {
    const double loopProb = node.attrNumber("loop-prob").value_or(0.0);
    if (!(loopProb >= 0.0 && loopProb <= 1.0))
        throw EngineError(Errc::InvalidArgument,
                          "'grow-step' :loop-prob must be in [0, 1]");
    DungeonLayout* layout = ctx.bb.getIf<DungeonLayout>(kLayoutKey);
    if (!layout)
        throw EngineError(Errc::NoLayout,
                          "'grow-step' ticked with no layout on the blackboard");

    // Closed (room, side) pairs in canonical order: rooms by (y,x), sides
    // U, D, L, R. The draw is uniform over this list.
    std::vector<std::pair<Coord, Dir>> candidates;
    for (const Coord& room : layout->rooms())
        for (Dir side : kAllDirs)
            if (!layout->edgeOpen(room, step(room, side)))
                candidates.emplace_back(room, side);

    while (!candidates.empty()) {
        const std::size_t pick = ctx.rng.nextBelow(candidates.size());
        const auto [room, side] = candidates[pick];
        const Coord neighbor = step(room, side);
        if (!layout->hasRoom(neighbor)) {
            layout->addRoom(neighbor);
            layout->openEdge(room, neighbor);
            ctx.bb.put(kRoomCountKey, int64_t{layout->roomCount()});
            return Status::Success;
        }
        // The chosen side faces an existing room: open it as a loop with
        // probability loop-prob, otherwise redraw without replacement.
        if (ctx.rng.nextDouble() < loopProb) {
            layout->openEdge(room, neighbor);
            return Status::Success;
        }
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Status::Failure;
}

}  // namespace

void registerDungeonExecutors(ExecutorRegistry& registry) {
    registry.registerAction("start-room", {execStartRoom, {}});
    registry.registerAction(
        "grow-step",
        {execGrowStep,
         {{.key = "loop-prob", .type = AttrType::Number, .minNumber = 0.0,
           .maxNumber = 1.0}}});
}

TreeSpec canonicalDungeonTree(double loopProb) {
    NodeSpec guard = makeCondition(
        "flag", {{"key", std::string(kStartDoneKey)}, {"expected", std::string("false")}});
    NodeSpec startBranch =
        makeComposite(NodeKind::Sequence, {std::move(guard), makeAction("start-room")});
    startBranch.name = "start once";
    NodeSpec grow = makeAction("grow-step", {{"loop-prob", loopProb}});
    NodeSpec root =
        makeComposite(NodeKind::Selector, {std::move(startBranch), std::move(grow)});
    root.name = "dungeon growth";
    return TreeSpec{std::move(root)};
}

DungeonLayout generateLayout(int roomCount, uint64_t seed, double loopProb) {
    if (roomCount < 1)
        throw EngineError(Errc::InvalidArgument, "roomCount must be >= 1");

    TreeSpec tree = canonicalDungeonTree(loopProb);
    ExecutorRegistry registry;
    registerCoreExecutors(registry);
    registerDungeonExecutors(registry);

    Blackboard bb;
    bb.put(kStartDoneKey, false);
    RandomStream rng(seed);

    RunOptions options;
    options.mode = RunMode::Loop;
    options.maxTicks = 64 * roomCount;
    options.stop = [roomCount](const Blackboard& board) {
        const int64_t* count = board.getIf<int64_t>(kRoomCountKey);
        return count && *count >= roomCount;
    };
    runGeneration(tree, bb, rng, registry, options);

    return *bb.getIf<DungeonLayout>(kLayoutKey);
}

TileGrid instantiateLayout(const DungeonLayout& layout, const SegmentLibrary& lib,
                           std::string_view game, RandomStream& rng) {
    if (!lib.gameMeta(game))
        throw EngineError(Errc::InvalidArgument,
                          "game '" + std::string(game) + "' is not in the library");

    LevelMap level;
    for (const Coord& room : layout.rooms()) {
        const DirSet doors = layout.doorsAt(room);
        auto candidates =
            lib.candidatesByOpenings(game, doors, MatchMode::Exact, false);
        DirSet effective = doors;
        if (candidates.empty()) {
            effective = lib.remapped(game, doors);
            if (effective != doors)
                candidates =
                    lib.candidatesByOpenings(game, effective, MatchMode::Exact, false);
        }
        if (candidates.empty())
            candidates =
                lib.candidatesByOpenings(game, effective, MatchMode::Superset, false);
        if (candidates.empty())
            throw EngineError(Errc::NoMatch,
                              "no '" + std::string(game) + "' segment with doors " +
                                  (doors.empty() ? "(none)" : doors.str()));
        const Segment* seg = candidates[rng.nextBelow(candidates.size())];
        level.place(room, seg->id, seg->game);
    }
    return assembleLevel(level, lib);
}

}  // namespace pcgbt
