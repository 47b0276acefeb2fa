#ifndef PCGBT_DSL_HPP
#define PCGBT_DSL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcgbt/engine.hpp"
#include "pcgbt/tree.hpp"

namespace pcgbt {

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

std::string toString(const Diagnostic& d);

struct ParseResult {
    std::optional<TreeSpec> tree;
    std::vector<Diagnostic> diagnostics;

    /// True when a tree was produced and no diagnostic is an error.
    bool ok() const;
};

/// Parses the s-expression tree language:
///
///   node     := '(' KIND attr* node* ')'
///   KIND     := sequence | selector | parallel | decorator | action | condition
///   attr     := ':' key value
///   value    := '"' chars '"' | number | '(' value* ')'
///
/// ';' starts a line comment; whitespace is insignificant between tokens.
/// Any malformed input yields at least one error diagnostic; a tree is
/// produced only when it satisfies every structural invariant.
ParseResult parseTree(std::string_view source);

/// Canonical text form: one node per line, two-space indent per depth,
/// attributes in alphabetical order. Output reparses to an equal TreeSpec.
std::string serializeTree(const TreeSpec& tree);

/// Checks that every leaf names a registered executor and that each
/// executor's declared attributes are present and well-typed, plus all
/// structural invariants. Empty result means the tree is runnable.
std::vector<Diagnostic> validateTree(const TreeSpec& tree,
                                     const ExecutorRegistry& registry);

}  // namespace pcgbt

#endif
