#include "pcgbt/level_data.hpp"

#include <algorithm>

#include "json.hpp"

namespace pcgbt {

std::vector<std::pair<Coord, LevelCell>> LevelMap::byOrder() const {
    std::vector<std::pair<Coord, LevelCell>> out(cells_.begin(), cells_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second.order < b.second.order;
    });
    return out;
}

void DungeonLayout::openEdge(Coord p, Coord q) {
    if (!hasRoom(p) || !hasRoom(q))
        throw EngineError(Errc::InvalidArgument,
                          "edge endpoint is not an occupied room");
    edges_.insert(Edge::between(p, q));
}

DirSet DungeonLayout::doorsAt(Coord room) const {
    DirSet doors;
    for (Dir d : kAllDirs) {
        Coord neighbor = step(room, d);
        if (hasRoom(neighbor) && edgeOpen(room, neighbor)) doors.add(d);
    }
    return doors;
}

std::string DungeonLayout::toJson() const {
    nlohmann::json doc;
    doc["rooms"] = nlohmann::json::array();
    for (const Coord& room : rooms_) doc["rooms"].push_back({room.x, room.y});
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : edges_)
        doc["edges"].push_back({{e.a.x, e.a.y}, {e.b.x, e.b.y}});
    return doc.dump();
}

std::string TileGrid::toText() const {
    std::string out;
    for (const std::string& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

std::string TileGrid::toJson() const {
    nlohmann::json doc;
    doc["rows"] = rowCount();
    doc["cols"] = colCount();
    doc["cells"] = rows;
    return doc.dump();
}

}  // namespace pcgbt
