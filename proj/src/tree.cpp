#include "pcgbt/tree.hpp"

namespace pcgbt {

std::optional<NodeKind> nodeKindFromName(std::string_view name) {
    if (name == "sequence") return NodeKind::Sequence;
    if (name == "selector") return NodeKind::Selector;
    if (name == "parallel") return NodeKind::Parallel;
    if (name == "decorator") return NodeKind::Decorator;
    if (name == "action") return NodeKind::Action;
    if (name == "condition") return NodeKind::Condition;
    return std::nullopt;
}

const AttrValue* NodeSpec::attr(std::string_view key) const {
    auto it = attributes.find(std::string(key));
    return it == attributes.end() ? nullptr : &it->second;
}

std::optional<std::string> NodeSpec::attrString(std::string_view key) const {
    const AttrValue* v = attr(key);
    if (!v) return std::nullopt;
    if (const auto* s = std::get_if<std::string>(v)) return *s;
    return std::nullopt;
}

std::optional<double> NodeSpec::attrNumber(std::string_view key) const {
    const AttrValue* v = attr(key);
    if (!v) return std::nullopt;
    if (const auto* n = std::get_if<double>(v)) return *n;
    return std::nullopt;
}

const std::vector<std::string>* NodeSpec::attrList(std::string_view key) const {
    const AttrValue* v = attr(key);
    if (!v) return nullptr;
    return std::get_if<std::vector<std::string>>(v);
}

NodeSpec makeAction(std::string executor, std::map<std::string, AttrValue> attrs) {
    NodeSpec node;
    node.kind = NodeKind::Action;
    node.attributes = std::move(attrs);
    node.attributes.insert_or_assign("do", std::move(executor));
    return node;
}

NodeSpec makeCondition(std::string executor,
                       std::map<std::string, AttrValue> attrs) {
    NodeSpec node;
    node.kind = NodeKind::Condition;
    node.attributes = std::move(attrs);
    node.attributes.insert_or_assign("check", std::move(executor));
    return node;
}

NodeSpec makeComposite(NodeKind kind, std::vector<NodeSpec> children) {
    NodeSpec node;
    node.kind = kind;
    node.children = std::move(children);
    return node;
}

}  // namespace pcgbt
