#include "pcgbt/dsl.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace pcgbt {

std::string toString(const Diagnostic& d) {
    std::string out = d.severity == Severity::Error ? "error" : "warning";
    out += " at ";
    out += std::to_string(d.line);
    out += ":";
    out += std::to_string(d.column);
    out += ": ";
    out += d.message;
    return out;
}

bool ParseResult::ok() const {
    if (!tree) return false;
    for (const Diagnostic& d : diagnostics)
        if (d.severity == Severity::Error) return false;
    return true;
}

namespace {

enum class TokType { LParen, RParen, Keyword, Symbol, String, Number, End };

struct Token {
    TokType type = TokType::End;
    std::string text;   // symbol/keyword name or string contents
    double number = 0;  // Number only
    int line = 1;
    int column = 1;
};

bool isSymbolChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
           c == '?' || c == '!' || c == '.';
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skipBlanks();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= src_.size()) return tok;  // End

        char c = src_[pos_];
        if (c == '(') {
            advance();
            tok.type = TokType::LParen;
            return tok;
        }
        if (c == ')') {
            advance();
            tok.type = TokType::RParen;
            return tok;
        }
        if (c == '"') return lexString(tok);
        if (c == ':') {
            advance();
            tok.type = TokType::Keyword;
            while (pos_ < src_.size() && isSymbolChar(src_[pos_])) {
                tok.text.push_back(src_[pos_]);
                advance();
            }
            if (tok.text.empty()) {
                error_ = true;
                errorTok_ = tok;
                errorMsg_ = "':' must be followed by an attribute name";
            }
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            ((c == '-' || c == '+') && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            return lexNumber(tok);
        }
        if (isSymbolChar(c)) {
            tok.type = TokType::Symbol;
            while (pos_ < src_.size() && isSymbolChar(src_[pos_])) {
                tok.text.push_back(src_[pos_]);
                advance();
            }
            return tok;
        }
        // Unknown byte: report once and skip it.
        error_ = true;
        errorTok_ = tok;
        errorMsg_ = std::string("unexpected character '") + c + "'";
        advance();
        return next();
    }

    bool takeError(Token& tok, std::string& msg) {
        if (!error_) return false;
        tok = errorTok_;
        msg = errorMsg_;
        error_ = false;
        return true;
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    void advance() {
        if (pos_ < src_.size() && src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skipBlanks() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ';') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    Token lexString(Token tok) {
        advance();  // opening quote
        tok.type = TokType::String;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '"') {
                advance();
                return tok;
            }
            if (c == '\\') {
                advance();
                if (pos_ >= src_.size()) break;
                char esc = src_[pos_];
                switch (esc) {
                    case 'n': tok.text.push_back('\n'); break;
                    case 't': tok.text.push_back('\t'); break;
                    case 'r': tok.text.push_back('\r'); break;
                    case '"': tok.text.push_back('"'); break;
                    case '\\': tok.text.push_back('\\'); break;
                    default:
                        error_ = true;
                        errorTok_ = tok;
                        errorMsg_ = std::string("unknown escape '\\") + esc + "'";
                        break;
                }
                advance();
            } else {
                tok.text.push_back(c);
                advance();
            }
        }
        error_ = true;
        errorTok_ = tok;
        errorMsg_ = "unterminated string literal";
        return tok;
    }

    Token lexNumber(Token tok) {
        tok.type = TokType::Number;
        std::string text;
        auto eat = [&](auto pred) {
            while (pos_ < src_.size() && pred(src_[pos_])) {
                text.push_back(src_[pos_]);
                advance();
            }
        };
        auto isDigit = [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        };
        if (src_[pos_] == '-' || src_[pos_] == '+') {
            text.push_back(src_[pos_]);
            advance();
        }
        eat(isDigit);
        if (pos_ < src_.size() && src_[pos_] == '.') {
            text.push_back('.');
            advance();
            eat(isDigit);
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            text.push_back(src_[pos_]);
            advance();
            if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
                text.push_back(src_[pos_]);
                advance();
            }
            eat(isDigit);
        }
        const char* begin = text.data();
        const char* end = begin + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, tok.number);
        if (ec != std::errc() || ptr != end) {
            error_ = true;
            errorTok_ = tok;
            errorMsg_ = "malformed number '" + text + "'";
            tok.number = 0;
        }
        return tok;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    bool error_ = false;
    Token errorTok_;
    std::string errorMsg_;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { shift(); }

    ParseResult run() {
        ParseResult result;
        if (cur_.type == TokType::End) {
            error(cur_, "expected a node");
            result.diagnostics = std::move(diags_);
            return result;
        }
        NodeSpec root;
        parseNode(root);
        if (cur_.type != TokType::End)
            error(cur_, "unexpected content after the root node");
        bool hasError = false;
        for (const Diagnostic& d : diags_)
            if (d.severity == Severity::Error) hasError = true;
        if (!hasError) result.tree = TreeSpec{std::move(root)};
        result.diagnostics = std::move(diags_);
        return result;
    }

private:
    void shift() {
        cur_ = lexer_.next();
        Token errTok;
        std::string msg;
        while (lexer_.takeError(errTok, msg)) error(errTok, msg);
    }

    void error(const Token& at, std::string msg) {
        diags_.push_back({Severity::Error, at.line, at.column, std::move(msg)});
    }

    // Consumes tokens up to and including the ')' matching an already-consumed '('.
    void skipToClose() {
        int depth = 1;
        while (cur_.type != TokType::End) {
            if (cur_.type == TokType::LParen) ++depth;
            if (cur_.type == TokType::RParen && --depth == 0) {
                shift();
                return;
            }
            shift();
        }
    }

    bool parseNode(NodeSpec& node) {
        assert(cur_.type == TokType::LParen);
        const Token open = cur_;
        shift();

        if (cur_.type != TokType::Symbol) {
            error(cur_, "expected a node kind after '('");
            skipToClose();
            return false;
        }
        auto kind = nodeKindFromName(cur_.text);
        if (!kind) {
            error(cur_, "unknown node kind '" + cur_.text + "'");
            skipToClose();
            return false;
        }
        node.kind = *kind;
        shift();

        bool sawChild = false;
        bool closed = false;
        while (!closed) {
            switch (cur_.type) {
                case TokType::RParen:
                    shift();
                    closed = true;
                    break;
                case TokType::End:
                    error(open, "unbalanced parentheses: missing ')'");
                    closed = true;
                    break;
                case TokType::Keyword: {
                    if (sawChild)
                        error(cur_, "attributes must precede child nodes");
                    parseAttr(node);
                    break;
                }
                case TokType::LParen: {
                    sawChild = true;
                    NodeSpec child;
                    if (parseNode(child)) node.children.push_back(std::move(child));
                    break;
                }
                default:
                    error(cur_, "unexpected token inside node");
                    shift();
                    break;
            }
        }

        checkStructure(node, open);
        return true;
    }

    void parseAttr(NodeSpec& node) {
        const Token keyTok = cur_;
        const std::string key = cur_.text;
        shift();

        AttrValue value;
        if (!parseValue(value)) return;

        if (key == "name") {
            const auto* s = std::get_if<std::string>(&value);
            if (!s) {
                error(keyTok, ":name must be a string");
                return;
            }
            if (!node.name.empty()) {
                error(keyTok, "duplicate attribute :name");
                return;
            }
            node.name = *s;
            return;
        }
        if (node.attributes.count(key)) {
            error(keyTok, "duplicate attribute :" + key);
            return;
        }
        node.attributes.emplace(key, std::move(value));
    }

    bool parseValue(AttrValue& out) {
        switch (cur_.type) {
            case TokType::String:
                out = cur_.text;
                shift();
                return true;
            case TokType::Number:
                out = cur_.number;
                shift();
                return true;
            case TokType::LParen: {
                shift();
                std::vector<std::string> items;
                while (cur_.type != TokType::RParen) {
                    if (cur_.type == TokType::End) {
                        error(cur_, "unbalanced parentheses: missing ')' in list");
                        return false;
                    }
                    if (cur_.type == TokType::String) {
                        items.push_back(cur_.text);
                        shift();
                    } else {
                        error(cur_, "list attribute values must be strings");
                        shift();
                    }
                }
                shift();
                out = std::move(items);
                return true;
            }
            default:
                error(cur_, "unknown attribute value type (expected a string, "
                            "number or list)");
                return false;
        }
    }

    void checkStructure(const NodeSpec& node, const Token& at) {
        const auto childCount = node.children.size();
        switch (node.kind) {
            case NodeKind::Sequence:
            case NodeKind::Selector:
                if (childCount < 1)
                    error(at, std::string(toString(node.kind)) +
                                  " requires at least 1 child");
                break;
            case NodeKind::Parallel: {
                if (childCount < 1)
                    error(at, "parallel requires at least 1 child");
                const AttrValue* raw = node.attr("threshold");
                if (raw) {
                    const double* num = std::get_if<double>(raw);
                    if (!num || std::floor(*num) != *num) {
                        error(at, "parallel threshold must be an integer");
                    } else if (*num < 1 ||
                               *num > static_cast<double>(childCount)) {
                        error(at, "parallel threshold out of range [1, " +
                                      std::to_string(childCount) + "]");
                    }
                }
                break;
            }
            case NodeKind::Decorator: {
                if (childCount != 1)
                    error(at, "decorator requires exactly 1 child");
                auto op = node.attrString("op");
                if (!op) {
                    error(at, "decorator requires string attribute :op");
                } else if (*op != "invert" && *op != "force-success" &&
                           *op != "repeat") {
                    error(at, "unknown decorator op '" + *op + "'");
                } else if (*op == "repeat") {
                    auto times = node.attrNumber("times");
                    if (!times || std::floor(*times) != *times || *times < 1)
                        error(at,
                              "decorator op \"repeat\" requires integer "
                              "attribute :times >= 1");
                }
                break;
            }
            case NodeKind::Action:
            case NodeKind::Condition: {
                if (childCount != 0)
                    error(at, std::string(toString(node.kind)) +
                                  " nodes take no children");
                const char* key = node.kind == NodeKind::Action ? "do" : "check";
                if (!node.attrString(key))
                    error(at, std::string(toString(node.kind)) +
                                  " requires string attribute :" + key);
                break;
            }
        }
    }

    Lexer lexer_;
    Token cur_;
    std::vector<Diagnostic> diags_;
};

std::string quoteString(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string formatNumber(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    assert(ec == std::errc());
    return std::string(buf, ptr);
}

std::string formatValue(const AttrValue& value) {
    if (const auto* s = std::get_if<std::string>(&value)) return quoteString(*s);
    if (const auto* n = std::get_if<double>(&value)) return formatNumber(*n);
    const auto& list = std::get<std::vector<std::string>>(value);
    std::string out = "(";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out.push_back(' ');
        out += quoteString(list[i]);
    }
    out.push_back(')');
    return out;
}

void writeNode(const NodeSpec& node, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out.push_back('(');
    out += toString(node.kind);

    // :name participates in the alphabetical attribute order.
    std::map<std::string, AttrValue> attrs = node.attributes;
    if (!node.name.empty()) attrs.emplace("name", node.name);
    for (const auto& [key, value] : attrs) {
        out += " :";
        out += key;
        out.push_back(' ');
        out += formatValue(value);
    }

    for (const NodeSpec& child : node.children) {
        out.push_back('\n');
        writeNode(child, depth + 1, out);
    }
    out.push_back(')');
}

}  // namespace

ParseResult parseTree(std::string_view source) {
    return Parser(source).run();
}

std::string serializeTree(const TreeSpec& tree) {
    std::string out;
    writeNode(tree.root, 0, out);
    out.push_back('\n');
    return out;
}

namespace {

class Validator {
public:
    explicit Validator(const ExecutorRegistry& registry) : registry_(registry) {}

    std::vector<Diagnostic> run(const TreeSpec& tree) {
        walk(tree.root, "root");
        return std::move(diags_);
    }

private:
    void emit(Severity severity, const std::string& path, std::string msg) {
        diags_.push_back({severity, 1, 1, "at " + path + ": " + std::move(msg)});
    }

    void walk(const NodeSpec& node, const std::string& path) {
        checkStructure(node, path);
        if (node.kind == NodeKind::Action || node.kind == NodeKind::Condition)
            checkLeaf(node, path);
        for (std::size_t i = 0; i < node.children.size(); ++i)
            walk(node.children[i], path + "/" + std::to_string(i));
    }

    void checkStructure(const NodeSpec& node, const std::string& path) {
        const auto childCount = node.children.size();
        switch (node.kind) {
            case NodeKind::Sequence:
            case NodeKind::Selector:
                if (childCount < 1)
                    emit(Severity::Error, path,
                         std::string(toString(node.kind)) +
                             " requires at least 1 child");
                break;
            case NodeKind::Parallel: {
                if (childCount < 1)
                    emit(Severity::Error, path, "parallel requires at least 1 child");
                const AttrValue* raw = node.attr("threshold");
                if (raw) {
                    const double* num = std::get_if<double>(raw);
                    if (!num || std::floor(*num) != *num)
                        emit(Severity::Error, path,
                             "parallel threshold must be an integer");
                    else if (*num < 1 || *num > static_cast<double>(childCount))
                        emit(Severity::Error, path,
                             "parallel threshold out of range [1, " +
                                 std::to_string(childCount) + "]");
                }
                break;
            }
            case NodeKind::Decorator: {
                if (childCount != 1)
                    emit(Severity::Error, path, "decorator requires exactly 1 child");
                auto op = node.attrString("op");
                if (!op)
                    emit(Severity::Error, path,
                         "decorator requires string attribute :op");
                else if (*op != "invert" && *op != "force-success" && *op != "repeat")
                    emit(Severity::Error, path, "unknown decorator op '" + *op + "'");
                else if (*op == "repeat") {
                    auto times = node.attrNumber("times");
                    if (!times || std::floor(*times) != *times || *times < 1)
                        emit(Severity::Error, path,
                             "decorator op \"repeat\" requires integer attribute "
                             ":times >= 1");
                }
                break;
            }
            case NodeKind::Action:
            case NodeKind::Condition:
                if (childCount != 0)
                    emit(Severity::Error, path,
                         std::string(toString(node.kind)) + " nodes take no children");
                break;
        }
    }

    void checkLeaf(const NodeSpec& node, const std::string& path) {
        const bool isAction = node.kind == NodeKind::Action;
        const char* key = isAction ? "do" : "check";
        auto name = node.attrString(key);
        if (!name) {
            emit(Severity::Error, path,
                 std::string(toString(node.kind)) + " requires string attribute :" +
                     key);
            return;
        }
        const ExecutorDef* def =
            isAction ? registry_.action(*name) : registry_.condition(*name);
        if (!def) {
            emit(Severity::Error, path,
                 std::string(isAction ? "unknown action executor: "
                                      : "unknown condition executor: ") +
                     *name);
            return;
        }
        for (const AttrSpec& spec : def->attrs) checkAttr(node, *name, spec, path);

        for (const auto& [attrKey, value] : node.attributes) {
            if (attrKey == key) continue;
            bool known = false;
            for (const AttrSpec& spec : def->attrs)
                if (spec.key == attrKey) known = true;
            if (!known)
                emit(Severity::Warning, path,
                     "attribute :" + attrKey + " is not used by '" + *name + "'");
        }
    }

    void checkAttr(const NodeSpec& node, const std::string& executor,
                   const AttrSpec& spec, const std::string& path) {
        const AttrValue* raw = node.attr(spec.key);
        if (!raw) {
            if (spec.required)
                emit(Severity::Error, path,
                     "'" + executor + "' missing required attribute :" + spec.key);
            return;
        }
        auto typeError = [&](const char* expected) {
            emit(Severity::Error, path,
                 "attribute :" + spec.key + " of '" + executor + "' must be " +
                     expected);
        };
        switch (spec.type) {
            case AttrType::String: {
                const auto* s = std::get_if<std::string>(raw);
                if (!s) {
                    typeError("a string");
                    return;
                }
                if (!spec.oneOf.empty()) {
                    bool match = false;
                    for (const std::string& option : spec.oneOf)
                        if (*s == option) match = true;
                    if (!match) {
                        std::string options;
                        for (const std::string& option : spec.oneOf) {
                            if (!options.empty()) options += ", ";
                            options += "\"" + option + "\"";
                        }
                        emit(Severity::Error, path,
                             "attribute :" + spec.key + " of '" + executor +
                                 "' must be one of " + options);
                    }
                }
                break;
            }
            case AttrType::Number: {
                const auto* n = std::get_if<double>(raw);
                if (!n) {
                    typeError("a number");
                    return;
                }
                if (spec.integer && std::floor(*n) != *n) {
                    typeError("an integer");
                    return;
                }
                if (*n < spec.minNumber || *n > spec.maxNumber)
                    emit(Severity::Error, path,
                         "attribute :" + spec.key + " of '" + executor +
                             "' is out of range");
                break;
            }
            case AttrType::StringList:
                if (!std::get_if<std::vector<std::string>>(raw))
                    typeError("a list of strings");
                break;
            case AttrType::Scalar:
                if (!std::get_if<std::string>(raw) && !std::get_if<double>(raw))
                    typeError("a string or number");
                break;
            case AttrType::Flag: {
                if (const auto* s = std::get_if<std::string>(raw)) {
                    if (*s != "true" && *s != "false")
                        typeError("\"true\", \"false\" or a number");
                } else if (!std::get_if<double>(raw)) {
                    typeError("\"true\", \"false\" or a number");
                }
                break;
            }
            case AttrType::DirSetText: {
                const auto* s = std::get_if<std::string>(raw);
                if (!s || !DirSet::parse(*s))
                    typeError("a direction set over the letters U, D, L, R");
                break;
            }
            case AttrType::DirText: {
                const auto* s = std::get_if<std::string>(raw);
                if (!s || s->size() != 1 || !dirFromChar((*s)[0]))
                    typeError("a single direction letter (U, D, L or R)");
                break;
            }
        }
    }

    const ExecutorRegistry& registry_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> validateTree(const TreeSpec& tree,
                                     const ExecutorRegistry& registry) {
    return Validator(registry).run(tree);
}

}  // namespace pcgbt
