#include "pcgbt/segment.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "pcgbt/errors.hpp"

namespace pcgbt {

namespace fs = std::filesystem;
using nlohmann::json;

bool Segment::hasTag(std::string_view tag) const {
    return std::binary_search(patternTags.begin(), patternTags.end(), tag);
}

bool Segment::hasAnyTag(std::span<const std::string> tags) const {
    for (const std::string& tag : tags)
        if (hasTag(tag)) return true;
    return false;
}

OpeningScan detectOpenings(const std::vector<std::string>& grid,
                           std::string_view passable) {
    OpeningScan scan;
    if (grid.empty() || grid.front().empty()) return scan;
    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid.front().size());
    auto open = [&](char c) { return passable.find(c) != std::string_view::npos; };

    auto& cellsOf = [&](Dir d) -> std::vector<int>& {
        return scan.openCells[static_cast<int>(d)];
    };
    for (int j = 0; j < cols; ++j) {
        if (open(grid[0][j])) cellsOf(Dir::Up).push_back(j);
        if (open(grid[rows - 1][j])) cellsOf(Dir::Down).push_back(j);
    }
    for (int i = 0; i < rows; ++i) {
        if (open(grid[i][0])) cellsOf(Dir::Left).push_back(i);
        if (open(grid[i][cols - 1])) cellsOf(Dir::Right).push_back(i);
    }
    for (Dir d : kAllDirs)
        if (!scan.openCells[static_cast<int>(d)].empty()) scan.openings.add(d);
    return scan;
}

namespace {

[[noreturn]] void manifestError(const std::string& path, const std::string& what) {
    throw EngineError(Errc::ManifestError, path + ": " + what);
}

std::vector<std::string> readGridFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw EngineError(Errc::MissingFile, "cannot open segment file " + path);
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(line);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return rows;
}

DirSet parseDirSet(const std::string& text, const std::string& context) {
    auto set = DirSet::parse(text);
    if (!set)
        throw EngineError(Errc::ManifestError,
                          context + ": bad direction set '" + text + "'");
    return *set;
}

}  // namespace

SegmentLibrary SegmentLibrary::load(const std::string& manifestPath) {
    SegmentLibrary lib;
    lib.ingestManifest(manifestPath);
    lib.buildIndices();
    return lib;
}

SegmentLibrary SegmentLibrary::loadAll(std::span<const std::string> manifestPaths) {
    SegmentLibrary lib;
    for (const std::string& path : manifestPaths) lib.ingestManifest(path);
    lib.buildIndices();
    return lib;
}

void SegmentLibrary::ingestManifest(const std::string& manifestPath) {
    std::ifstream in(manifestPath);
    if (!in)
        throw EngineError(Errc::MissingFile,
                          "cannot open manifest " + manifestPath);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        manifestError(manifestPath, e.what());
    }

    GameMeta meta;
    try {
        meta.game = doc.at("game").get<std::string>();
        meta.rows = doc.at("rows").get<int>();
        meta.cols = doc.at("cols").get<int>();
        meta.padTop = doc.value("pad_top", 0);
        for (const auto& entry : doc.at("passable")) {
            std::string c = entry.get<std::string>();
            if (c.size() != 1)
                manifestError(manifestPath,
                              "passable entries must be single characters");
            meta.passable.push_back(c[0]);
        }
        std::string fill = doc.at("fill").get<std::string>();
        if (fill.size() != 1)
            manifestError(manifestPath, "fill must be a single character");
        meta.fill = fill[0];
        for (const auto& entry : doc.value("remap", json::array())) {
            DirSet from = parseDirSet(entry.at("from").get<std::string>(),
                                      manifestPath + " remap");
            DirSet to = parseDirSet(entry.at("to").get<std::string>(),
                                    manifestPath + " remap");
            if (from == to)
                manifestError(manifestPath, "remap entry maps a set to itself");
            meta.remap.emplace_back(from, to);
        }
    } catch (const json::exception& e) {
        manifestError(manifestPath, e.what());
    }
    if (meta.rows < 1 || meta.cols < 1 || meta.padTop < 0)
        manifestError(manifestPath, "rows/cols must be positive, pad_top >= 0");

    const GameMeta* existing = gameMeta(meta.game);
    if (existing) {
        if (existing->rows != meta.rows || existing->cols != meta.cols ||
            existing->padTop != meta.padTop ||
            existing->passable != meta.passable || existing->fill != meta.fill)
            manifestError(manifestPath,
                          "game '" + meta.game +
                              "' already loaded with different metadata");
    } else {
        gameMetas_.push_back(meta);
    }

    const fs::path baseDir = fs::path(manifestPath).parent_path();
    json segmentsNode;
    try {
        segmentsNode = doc.at("segments");
    } catch (const json::exception& e) {
        manifestError(manifestPath, e.what());
    }
    for (const auto& entry : segmentsNode) {
        Segment seg;
        std::string file;
        std::optional<std::string> openingsOverride;
        try {
            seg.id = entry.at("id").get<std::string>();
            file = entry.at("file").get<std::string>();
            for (const auto& tag : entry.value("patterns", json::array()))
                seg.patternTags.push_back(tag.get<std::string>());
            if (entry.contains("openings"))
                openingsOverride = entry.at("openings").get<std::string>();
        } catch (const json::exception& e) {
            manifestError(manifestPath, e.what());
        }
        if (segments_.count(seg.id))
            throw EngineError(Errc::DuplicateId,
                              "segment id '" + seg.id + "' defined twice");
        seg.game = meta.game;
        std::sort(seg.patternTags.begin(), seg.patternTags.end());
        seg.patternTags.erase(
            std::unique(seg.patternTags.begin(), seg.patternTags.end()),
            seg.patternTags.end());

        const fs::path segPath = baseDir / file;
        seg.grid = readGridFile(segPath.string());
        const int foundRows = static_cast<int>(seg.grid.size());
        for (const std::string& row : seg.grid) {
            if (static_cast<int>(row.size()) != meta.cols)
                throw EngineError(
                    Errc::DimensionMismatch,
                    "segment '" + seg.id + "': expected " +
                        std::to_string(meta.rows) + "x" + std::to_string(meta.cols) +
                        ", found a row of width " + std::to_string(row.size()));
        }
        if (foundRows != meta.rows)
            throw EngineError(Errc::DimensionMismatch,
                              "segment '" + seg.id + "': expected " +
                                  std::to_string(meta.rows) + "x" +
                                  std::to_string(meta.cols) + ", found " +
                                  std::to_string(foundRows) + "x" +
                                  std::to_string(meta.cols));
        seg.grid.insert(seg.grid.begin(), static_cast<std::size_t>(meta.padTop),
                        std::string(static_cast<std::size_t>(meta.cols), meta.fill));

        OpeningScan scan = detectOpenings(seg.grid, meta.passable);
        seg.openCells = std::move(scan.openCells);
        if (openingsOverride) {
            seg.openings =
                parseDirSet(*openingsOverride, "segment '" + seg.id + "'");
            if (seg.openings != scan.openings)
                warnings_.push_back("segment '" + seg.id + "': openings override " +
                                    (seg.openings.empty() ? "(none)"
                                                          : seg.openings.str()) +
                                    " disagrees with detected " +
                                    (scan.openings.empty() ? "(none)"
                                                           : scan.openings.str()));
        } else {
            seg.openings = scan.openings;
        }

        segments_.emplace(seg.id, std::move(seg));
    }
}

void SegmentLibrary::buildIndices() {
    byPattern_.clear();
    byOpenings_.clear();
    // std::map iteration gives id order, so index vectors stay id-ordered.
    for (const auto& [id, seg] : segments_) {
        for (const std::string& tag : seg.patternTags)
            byPattern_[seg.game][tag].push_back(&seg);
        byOpenings_[seg.game][seg.openings].push_back(&seg);
    }
}

const Segment* SegmentLibrary::find(std::string_view id) const {
    auto it = segments_.find(std::string(id));
    return it == segments_.end() ? nullptr : &it->second;
}

const GameMeta* SegmentLibrary::gameMeta(std::string_view game) const {
    for (const GameMeta& meta : gameMetas_)
        if (meta.game == game) return &meta;
    return nullptr;
}

std::vector<std::string> SegmentLibrary::games() const {
    std::vector<std::string> out;
    out.reserve(gameMetas_.size());
    for (const GameMeta& meta : gameMetas_) out.push_back(meta.game);
    return out;
}

std::string SegmentLibrary::soleGame() const {
    return gameMetas_.size() == 1 ? gameMetas_.front().game : std::string();
}

char SegmentLibrary::fillChar() const {
    return gameMetas_.empty() ? ' ' : gameMetas_.front().fill;
}

std::vector<const Segment*> SegmentLibrary::candidatesByPattern(
    std::string_view game, std::span<const std::string> patterns) const {
    std::vector<const Segment*> out;
    auto gameIt = byPattern_.find(std::string(game));
    if (gameIt == byPattern_.end()) return out;
    for (const std::string& tag : patterns) {
        auto tagIt = gameIt->second.find(tag);
        if (tagIt == gameIt->second.end()) continue;
        out.insert(out.end(), tagIt->second.begin(), tagIt->second.end());
    }
    std::sort(out.begin(), out.end(),
              [](const Segment* a, const Segment* b) { return a->id < b->id; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DirSet SegmentLibrary::remapped(std::string_view game, DirSet want) const {
    const GameMeta* meta = gameMeta(game);
    if (!meta) return want;
    for (const auto& [from, to] : meta->remap)
        if (from == want) return to;
    return want;
}

std::vector<const Segment*> SegmentLibrary::candidatesByOpenings(
    std::string_view game, DirSet want, MatchMode match, bool applyRemap) const {
    if (applyRemap) want = remapped(game, want);
    std::vector<const Segment*> out;
    auto gameIt = byOpenings_.find(std::string(game));
    if (gameIt == byOpenings_.end()) return out;
    if (match == MatchMode::Exact) {
        auto it = gameIt->second.find(want);
        if (it != gameIt->second.end()) out = it->second;
        return out;
    }
    for (const auto& [openings, segs] : gameIt->second)
        if (openings.containsAll(want))
            out.insert(out.end(), segs.begin(), segs.end());
    std::sort(out.begin(), out.end(),
              [](const Segment* a, const Segment* b) { return a->id < b->id; });
    return out;
}

const Segment* SegmentLibrary::sampleByPattern(
    std::string_view game, std::span<const std::string> patterns,
    RandomStream& rng) const {
    auto candidates = candidatesByPattern(game, patterns);
    if (candidates.empty()) return nullptr;
    return candidates[rng.nextBelow(candidates.size())];
}

const Segment* SegmentLibrary::sampleByOpenings(std::string_view game, DirSet want,
                                                MatchMode match,
                                                RandomStream& rng) const {
    auto candidates = candidatesByOpenings(game, want, match);
    if (candidates.empty()) return nullptr;
    return candidates[rng.nextBelow(candidates.size())];
}

std::vector<const Segment*> SegmentLibrary::allSegments() const {
    std::vector<const Segment*> out;
    out.reserve(segments_.size());
    for (const auto& [id, seg] : segments_) out.push_back(&seg);
    return out;
}

}  // namespace pcgbt
