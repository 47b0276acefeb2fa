#ifndef PCGBT_ENGINE_HPP
#define PCGBT_ENGINE_HPP

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pcgbt/blackboard.hpp"
#include "pcgbt/random.hpp"
#include "pcgbt/status.hpp"
#include "pcgbt/tree.hpp"

namespace pcgbt {

class SegmentLibrary;

enum class RunMode { SingleTick, Loop };

/// How adjoining segment edges are checked: by direction tags, or by
/// positional intersection of the open boundary cells.
enum class EdgeCompatMode { Tag, Aligned };

struct TraceEvent {
    int index = 0;  // depth-first (preorder) execution index within the run
    NodeKind kind = NodeKind::Action;
    std::string name;
    Status status = Status::Failure;

    bool operator==(const TraceEvent&) const = default;
};

/// Collects one record per node execution. Events are appended as nodes
/// complete; `index` is assigned in preorder.
class TraceLog {
public:
    int allocIndex() { return nextIndex_++; }

    void record(TraceEvent event) { events_.push_back(std::move(event)); }

    const std::vector<TraceEvent>& events() const { return events_; }

    /// Line-delimited JSON, one event per line.
    std::string toJsonl() const;

    void clear() {
        events_.clear();
        nextIndex_ = 0;
    }

private:
    std::vector<TraceEvent> events_;
    int nextIndex_ = 0;
};

/// Everything a leaf executor may touch. The library pointer is null for
/// runs that place no segments.
struct ExecContext {
    Blackboard& bb;
    RandomStream& rng;
    const SegmentLibrary* library = nullptr;
    EdgeCompatMode compatMode = EdgeCompatMode::Tag;
};

using ExecutorFn = std::function<Status(const NodeSpec&, ExecContext&)>;

enum class AttrType {
    String,
    Number,
    StringList,
    Scalar,      // string or number
    Flag,        // "true"/"false" or a number (0 = false)
    DirSetText,  // letters over UDLR, e.g. "LR"
    DirText,     // exactly one of U, D, L, R
};

struct AttrSpec {
    std::string key;
    AttrType type = AttrType::String;
    bool required = false;
    bool integer = false;  // Number only
    double minNumber = -std::numeric_limits<double>::infinity();
    double maxNumber = std::numeric_limits<double>::infinity();
    std::vector<std::string> oneOf;  // String only; empty = unrestricted
};

struct ExecutorDef {
    ExecutorFn fn;
    std::vector<AttrSpec> attrs;
};

/// Named leaf executors. Actions (:do) and conditions (:check) live in
/// separate namespaces. Immutable once a run starts; shareable across runs.
class ExecutorRegistry {
public:
    void registerAction(const std::string& name, ExecutorDef def) {
        actions_.insert_or_assign(name, std::move(def));
    }

    void registerCondition(const std::string& name, ExecutorDef def) {
        conditions_.insert_or_assign(name, std::move(def));
    }

    const ExecutorDef* action(std::string_view name) const {
        auto it = actions_.find(std::string(name));
        return it == actions_.end() ? nullptr : &it->second;
    }

    const ExecutorDef* condition(std::string_view name) const {
        auto it = conditions_.find(std::string(name));
        return it == conditions_.end() ? nullptr : &it->second;
    }

private:
    std::map<std::string, ExecutorDef> actions_;
    std::map<std::string, ExecutorDef> conditions_;
};

/// Propagates one tick through `node`, dispatching leaves through `registry`.
/// Throws MalformedNode on structural violations and UnknownExecutor for
/// unregistered leaf names.
Status tick(const NodeSpec& node, ExecContext& ctx,
            const ExecutorRegistry& registry, TraceLog* trace = nullptr);

struct RunOptions {
    RunMode mode = RunMode::SingleTick;
    std::function<bool(const Blackboard&)> stop;  // required in Loop mode
    int maxTicks = 1024;
};

struct RunResult {
    Status status = Status::Failure;
    int ticks = 0;
};

/// Runs a tree to completion: a single root tick, or a loop of ticks until
/// the stop predicate holds. Throws TickBudgetExhausted when the loop budget
/// runs out and RunningAtCompletion when a single tick ends Running.
RunResult runGeneration(const TreeSpec& tree, Blackboard& bb, RandomStream& rng,
                        const ExecutorRegistry& registry, const RunOptions& options,
                        const SegmentLibrary* library = nullptr,
                        EdgeCompatMode compatMode = EdgeCompatMode::Tag,
                        TraceLog* trace = nullptr);

/// Registers the game-independent leaves:
///   conditions: "random" (:p), "flag" (:key :expected)
///   actions:    "noop", "set" (:key :value)
void registerCoreExecutors(ExecutorRegistry& registry);

}  // namespace pcgbt

#endif
