#ifndef PCGBT_BLACKBOARD_HPP
#define PCGBT_BLACKBOARD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pcgbt/geometry.hpp"
#include "pcgbt/level_data.hpp"

namespace pcgbt {

using BBValue = std::variant<int64_t, double, bool, std::string, Coord, PrevRef,
                             LevelMap, DungeonLayout>;

/// Key-value store globally visible to every node of a run. An absent key is
/// distinguishable from any stored value. The engine itself never writes to
/// the blackboard; all mutation happens inside leaf executors.
class Blackboard {
public:
    void put(const std::string& key, BBValue value) {
        entries_.insert_or_assign(key, std::move(value));
    }

    /// nullptr when the key is absent.
    const BBValue* get(std::string_view key) const {
        auto it = entries_.find(std::string(key));
        return it == entries_.end() ? nullptr : &it->second;
    }

    BBValue* get(std::string_view key) {
        auto it = entries_.find(std::string(key));
        return it == entries_.end() ? nullptr : &it->second;
    }

    /// Pointer to the stored T, or nullptr if absent or holding another type.
    template <class T>
    const T* getIf(std::string_view key) const {
        const BBValue* v = get(key);
        return v ? std::get_if<T>(v) : nullptr;
    }

    template <class T>
    T* getIf(std::string_view key) {
        BBValue* v = get(key);
        return v ? std::get_if<T>(v) : nullptr;
    }

    /// Reference to the stored T, inserting `init` if the key is absent.
    /// Throws InvalidArgument if the key holds a different type.
    template <class T>
    T& ensure(const std::string& key, T init = T{}) {
        auto it = entries_.find(key);
        if (it == entries_.end())
            it = entries_.emplace(key, BBValue(std::move(init))).first;
        T* stored = std::get_if<T>(&it->second);
        if (!stored)
            throw EngineError(Errc::InvalidArgument,
                              "blackboard key '" + key + "' holds a different type");
        return *stored;
    }

    bool contains(std::string_view key) const { return get(key) != nullptr; }

    std::size_t size() const { return entries_.size(); }

    const std::map<std::string, BBValue>& entries() const { return entries_; }

    bool operator==(const Blackboard&) const = default;

private:
    std::map<std::string, BBValue> entries_;
};

}  // namespace pcgbt

#endif
