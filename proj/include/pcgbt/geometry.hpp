#ifndef PCGBT_GEOMETRY_HPP
#define PCGBT_GEOMETRY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pcgbt {

/// Integer cell coordinate. y grows downward (screen convention), so moving
/// "up" in a level decrements y.
struct Coord {
    int x = 0;
    int y = 0;

    auto operator<=>(const Coord&) const = default;
};

/// Scanline order (y first, then x); the canonical ordering for rooms and cells.
struct CoordYxLess {
    bool operator()(const Coord& a, const Coord& b) const {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
};

enum class Dir : uint8_t { Up = 0, Down = 1, Left = 2, Right = 3 };

inline constexpr std::array<Dir, 4> kAllDirs = {Dir::Up, Dir::Down, Dir::Left,
                                                Dir::Right};

constexpr Dir opposite(Dir d) {
    switch (d) {
        case Dir::Up: return Dir::Down;
        case Dir::Down: return Dir::Up;
        case Dir::Left: return Dir::Right;
        case Dir::Right: return Dir::Left;
    }
    return Dir::Up;
}

constexpr Coord step(Coord c, Dir d) {
    switch (d) {
        case Dir::Up: return {c.x, c.y - 1};
        case Dir::Down: return {c.x, c.y + 1};
        case Dir::Left: return {c.x - 1, c.y};
        case Dir::Right: return {c.x + 1, c.y};
    }
    return c;
}

constexpr char dirChar(Dir d) {
    switch (d) {
        case Dir::Up: return 'U';
        case Dir::Down: return 'D';
        case Dir::Left: return 'L';
        case Dir::Right: return 'R';
    }
    return '?';
}

constexpr std::optional<Dir> dirFromChar(char c) {
    switch (c) {
        case 'U': return Dir::Up;
        case 'D': return Dir::Down;
        case 'L': return Dir::Left;
        case 'R': return Dir::Right;
        default: return std::nullopt;
    }
}

/// A set of sides of a segment or room. Canonical text form is a subset of
/// "UDLR" in that order ("" for the empty set).
class DirSet {
public:
    constexpr DirSet() = default;

    constexpr DirSet(std::initializer_list<Dir> dirs) {
        for (Dir d : dirs) add(d);
    }

    /// Accepts the letters U, D, L, R in any order (duplicates allowed).
    /// Returns nullopt on any other character.
    static constexpr std::optional<DirSet> parse(std::string_view text) {
        DirSet set;
        for (char c : text) {
            auto d = dirFromChar(c);
            if (!d) return std::nullopt;
            set.add(*d);
        }
        return set;
    }

    constexpr bool has(Dir d) const { return (bits_ >> static_cast<int>(d)) & 1u; }
    constexpr DirSet& add(Dir d) {
        bits_ = static_cast<uint8_t>(bits_ | (1u << static_cast<int>(d)));
        return *this;
    }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const {
        int n = 0;
        for (Dir d : kAllDirs) n += has(d) ? 1 : 0;
        return n;
    }
    constexpr bool containsAll(DirSet other) const {
        return (bits_ & other.bits_) == other.bits_;
    }
    constexpr uint8_t bits() const { return bits_; }

    std::string str() const {
        std::string out;
        for (Dir d : kAllDirs)
            if (has(d)) out.push_back(dirChar(d));
        return out;
    }

    auto operator<=>(const DirSet&) const = default;

private:
    uint8_t bits_ = 0;
};

}  // namespace pcgbt

#endif
