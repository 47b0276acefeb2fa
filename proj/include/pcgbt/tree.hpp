#ifndef PCGBT_TREE_HPP
#define PCGBT_TREE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pcgbt {

enum class NodeKind : uint8_t {
    Sequence,
    Selector,
    Parallel,
    Decorator,
    Action,
    Condition,
};

/// Lowercase names as written in the tree DSL.
constexpr const char* toString(NodeKind k) {
    switch (k) {
        case NodeKind::Sequence: return "sequence";
        case NodeKind::Selector: return "selector";
        case NodeKind::Parallel: return "parallel";
        case NodeKind::Decorator: return "decorator";
        case NodeKind::Action: return "action";
        case NodeKind::Condition: return "condition";
    }
    return "unknown";
}

std::optional<NodeKind> nodeKindFromName(std::string_view name);

/// Attribute values: a string, a number, or a list of strings.
using AttrValue = std::variant<std::string, double, std::vector<std::string>>;

/// One node of an authored tree. Plain data; execution semantics live in the
/// engine. `name` is optional documentation (the DSL's :name attribute) and
/// never carries meaning.
struct NodeSpec {
    NodeKind kind = NodeKind::Action;
    std::string name;
    std::map<std::string, AttrValue> attributes;
    std::vector<NodeSpec> children;

    bool operator==(const NodeSpec&) const = default;

    const AttrValue* attr(std::string_view key) const;
    std::optional<std::string> attrString(std::string_view key) const;
    std::optional<double> attrNumber(std::string_view key) const;
    const std::vector<std::string>* attrList(std::string_view key) const;
};

struct TreeSpec {
    NodeSpec root;

    bool operator==(const TreeSpec&) const = default;
};

// Convenience builders used by tests and the canonical dungeon tree.
NodeSpec makeAction(std::string executor,
                    std::map<std::string, AttrValue> attrs = {});
NodeSpec makeCondition(std::string executor,
                       std::map<std::string, AttrValue> attrs = {});
NodeSpec makeComposite(NodeKind kind, std::vector<NodeSpec> children);

}  // namespace pcgbt

#endif
