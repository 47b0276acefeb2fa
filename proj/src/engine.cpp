#include "pcgbt/engine.hpp"

#include <cmath>

#include "json.hpp"
#include "pcgbt/errors.hpp"

namespace pcgbt {

namespace {

bool isIntegral(double v) { return std::isfinite(v) && std::floor(v) == v; }

[[noreturn]] void malformed(const NodeSpec& node, const std::string& what) {
    throw EngineError(Errc::MalformedNode,
                      std::string(toString(node.kind)) +
                          (node.name.empty() ? "" : " '" + node.name + "'") + ": " +
                          what);
}

int parallelThreshold(const NodeSpec& node) {
    const int childCount = static_cast<int>(node.children.size());
    const AttrValue* raw = node.attr("threshold");
    if (!raw) return childCount;
    const double* num = std::get_if<double>(raw);
    if (!num || !isIntegral(*num))
        malformed(node, "threshold must be an integer");
    const int m = static_cast<int>(*num);
    if (m < 1 || m > childCount)
        malformed(node, "threshold " + std::to_string(m) + " out of range [1, " +
                            std::to_string(childCount) + "]");
    return m;
}

Status tickDecorator(const NodeSpec& node, ExecContext& ctx,
                     const ExecutorRegistry& registry, TraceLog* trace) {
    if (node.children.size() != 1)
        malformed(node, "decorator requires exactly 1 child");
    auto op = node.attrString("op");
    if (!op) malformed(node, "decorator requires string attribute :op");

    if (*op == "invert") {
        Status s = tick(node.children[0], ctx, registry, trace);
        if (s == Status::Success) return Status::Failure;
        if (s == Status::Failure) return Status::Success;
        return s;
    }
    if (*op == "force-success") {
        Status s = tick(node.children[0], ctx, registry, trace);
        return s == Status::Failure ? Status::Success : s;
    }
    if (*op == "repeat") {
        auto times = node.attrNumber("times");
        if (!times || !isIntegral(*times) || *times < 1)
            malformed(node, "repeat requires integer attribute :times >= 1");
        Status s = Status::Success;
        for (int i = 0; i < static_cast<int>(*times); ++i) {
            s = tick(node.children[0], ctx, registry, trace);
            if (s == Status::Failure) break;
        }
        return s;
    }
    malformed(node, "unknown decorator op '" + *op + "'");
}

Status tickLeaf(const NodeSpec& node, ExecContext& ctx,
                const ExecutorRegistry& registry) {
    if (!node.children.empty()) malformed(node, "leaf nodes take no children");
    const bool isAction = node.kind == NodeKind::Action;
    auto name = node.attrString(isAction ? "do" : "check");
    if (!name)
        malformed(node, isAction ? "action requires string attribute :do"
                                 : "condition requires string attribute :check");
    const ExecutorDef* def =
        isAction ? registry.action(*name) : registry.condition(*name);
    if (!def)
        throw EngineError(Errc::UnknownExecutor,
                          std::string(isAction ? "unknown action executor: "
                                               : "unknown condition executor: ") +
                              *name);
    return def->fn(node, ctx);
}

}  // namespace

Status tick(const NodeSpec& node, ExecContext& ctx,
            const ExecutorRegistry& registry, TraceLog* trace) {
    const int traceIndex = trace ? trace->allocIndex() : 0;
    Status status = Status::Failure;

    switch (node.kind) {
        case NodeKind::Sequence: {
            if (node.children.empty())
                malformed(node, "sequence requires at least 1 child");
            status = Status::Success;
            for (const NodeSpec& child : node.children) {
                Status s = tick(child, ctx, registry, trace);
                if (s != Status::Success) {
                    status = s;
                    break;
                }
            }
            break;
        }
        case NodeKind::Selector: {
            if (node.children.empty())
                malformed(node, "selector requires at least 1 child");
            status = Status::Failure;
            for (const NodeSpec& child : node.children) {
                Status s = tick(child, ctx, registry, trace);
                if (s != Status::Failure) {
                    status = s;
                    break;
                }
            }
            break;
        }
        case NodeKind::Parallel: {
            if (node.children.empty())
                malformed(node, "parallel requires at least 1 child");
            const int threshold = parallelThreshold(node);
            int successes = 0;
            bool running = false;
            for (const NodeSpec& child : node.children) {
                Status s = tick(child, ctx, registry, trace);
                if (s == Status::Success) ++successes;
                if (s == Status::Running) running = true;
            }
            status = running ? Status::Running
                             : (successes >= threshold ? Status::Success
                                                       : Status::Failure);
            break;
        }
        case NodeKind::Decorator:
            status = tickDecorator(node, ctx, registry, trace);
            break;
        case NodeKind::Action:
        case NodeKind::Condition:
            status = tickLeaf(node, ctx, registry);
            break;
    }

    if (trace) trace->record({traceIndex, node.kind, node.name, status});
    return status;
}

RunResult runGeneration(const TreeSpec& tree, Blackboard& bb, RandomStream& rng,
                        const ExecutorRegistry& registry, const RunOptions& options,
                        const SegmentLibrary* library, EdgeCompatMode compatMode,
                        TraceLog* trace) {
    if (options.maxTicks < 1)
        throw EngineError(Errc::InvalidArgument, "maxTicks must be >= 1");

    ExecContext ctx{bb, rng, library, compatMode};

    if (options.mode == RunMode::SingleTick) {
        Status status = tick(tree.root, ctx, registry, trace);
        if (status == Status::Running)
            throw EngineError(Errc::RunningAtCompletion,
                              "root returned RUNNING from a single-tick run");
        return {status, 1};
    }

    if (!options.stop)
        throw EngineError(Errc::InvalidArgument,
                          "loop mode requires a stop predicate");
    for (int i = 1; i <= options.maxTicks; ++i) {
        Status status = tick(tree.root, ctx, registry, trace);
        if (options.stop(bb)) return {status, i};
    }
    throw EngineError(Errc::TickBudgetExhausted,
                      "stop predicate still false after " +
                          std::to_string(options.maxTicks) + " ticks");
}

std::string TraceLog::toJsonl() const {
    std::string out;
    for (const TraceEvent& e : events_) {
        nlohmann::json line;
        line["i"] = e.index;
        line["kind"] = toString(e.kind);
        if (!e.name.empty()) line["name"] = e.name;
        line["status"] = toString(e.status);
        out += line.dump();
        out += '\n';
    }
    return out;
}

namespace {

bool flagAttr(const NodeSpec& node, const char* key, bool& out) {
    const AttrValue* raw = node.attr(key);
    if (!raw) return false;
    if (const auto* s = std::get_if<std::string>(raw)) {
        if (*s == "true") {
            out = true;
            return true;
        }
        if (*s == "false") {
            out = false;
            return true;
        }
        throw EngineError(Errc::InvalidArgument,
                          std::string(":") + key + " must be \"true\", \"false\" or a number");
    }
    if (const auto* n = std::get_if<double>(raw)) {
        out = *n != 0.0;
        return true;
    }
    throw EngineError(Errc::InvalidArgument,
                      std::string(":") + key + " must be \"true\", \"false\" or a number");
}

Status condRandom(const NodeSpec& node, ExecContext& ctx) {
    double p = node.attrNumber("p").value_or(0.5);
    if (!(p >= 0.0 && p <= 1.0))
        throw EngineError(Errc::InvalidArgument,
                          "probability :p must be in [0, 1]");
    return ctx.rng.nextDouble() < p ? Status::Success : Status::Failure;
}

Status condFlag(const NodeSpec& node, ExecContext& ctx) {
    auto key = node.attrString("key");
    if (!key)
        throw EngineError(Errc::InvalidArgument,
                          "condition 'flag' requires string attribute :key");
    bool expected = false;
    if (!flagAttr(node, "expected", expected))
        throw EngineError(Errc::InvalidArgument,
                          "condition 'flag' requires attribute :expected");
    const bool* stored = ctx.bb.getIf<bool>(*key);
    if (!stored) return Status::Failure;  // absent key is a plain mismatch
    return *stored == expected ? Status::Success : Status::Failure;
}

Status actionNoop(const NodeSpec&, ExecContext&) { return Status::Success; }

Status actionSet(const NodeSpec& node, ExecContext& ctx) {
    auto key = node.attrString("key");
    if (!key)
        throw EngineError(Errc::InvalidArgument,
                          "action 'set' requires string attribute :key");
    const AttrValue* value = node.attr("value");
    if (!value)
        throw EngineError(Errc::InvalidArgument,
                          "action 'set' requires attribute :value");
    if (const auto* s = std::get_if<std::string>(value)) {
        ctx.bb.put(*key, *s);
    } else if (const auto* n = std::get_if<double>(value)) {
        if (isIntegral(*n))
            ctx.bb.put(*key, static_cast<int64_t>(*n));
        else
            ctx.bb.put(*key, *n);
    } else {
        throw EngineError(Errc::InvalidArgument,
                          "action 'set' takes a string or number :value");
    }
    return Status::Success;
}

}  // namespace

void registerCoreExecutors(ExecutorRegistry& registry) {
    registry.registerCondition(
        "random",
        {condRandom,
         {{.key = "p", .type = AttrType::Number, .minNumber = 0.0, .maxNumber = 1.0}}});
    registry.registerCondition(
        "flag", {condFlag,
                 {{.key = "key", .type = AttrType::String, .required = true},
                  {.key = "expected", .type = AttrType::Flag, .required = true}}});
    registry.registerAction("noop", {actionNoop, {}});
    registry.registerAction(
        "set", {actionSet,
                {{.key = "key", .type = AttrType::String, .required = true},
                 {.key = "value", .type = AttrType::Scalar, .required = true}}});
}

}  // namespace pcgbt
