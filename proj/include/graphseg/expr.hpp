#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graphseg/error.hpp"

namespace graphseg {

/// Per-vertex coefficient columns referenced by name from expressions.
using AttrTable = std::map<std::string, std::vector<double>>;

namespace expr {

enum class Kind {
    number,
    var_s,
    attribute,
    negate,
    abs_call,
    tanh_call,
    add,
    subtract,
    multiply,
    divide,
    min_call,
    max_call,
    pow_call,  // rhs is a number node holding the constant exponent >= 1
};

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    Kind kind{};
    double number = 0.0;
    std::string name;  // attribute name
    NodePtr lhs;
    NodePtr rhs;
};

NodePtr clone(const Node* node);
bool structurally_equal(const Node* a, const Node* b);

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

} // namespace expr

/// A parsed one-variable expression over `s`, constants, vertex attributes
/// and {+, -, *, /, min, max, abs, tanh, pow}. Immutable after parsing;
/// evaluation is pure.
class FunctionSpec {
public:
    FunctionSpec() = default;
    FunctionSpec(const FunctionSpec& other);
    FunctionSpec& operator=(const FunctionSpec& other);
    FunctionSpec(FunctionSpec&&) noexcept = default;
    FunctionSpec& operator=(FunctionSpec&&) noexcept = default;

    static FunctionSpec parse(std::string_view text);

    /// Direct evaluation at s. `attrs`/`vertex` are consulted only when the
    /// expression references vertex attributes.
    double eval(double s, const AttrTable* attrs = nullptr, int vertex = -1) const;

    /// Odd extension: s >= 0 evaluates directly, s < 0 returns -eval(-s).
    double eval_extended(double s, const AttrTable* attrs = nullptr, int vertex = -1) const;

    /// Attribute names the expression requires, sorted and unique.
    const std::vector<std::string>& required_attributes() const { return attributes_; }

    /// Canonical fully-parenthesized form; parse(pretty_print()) reproduces
    /// the tree exactly.
    std::string pretty_print() const;

    bool structurally_equal(const FunctionSpec& other) const;

    const std::string& source() const { return source_; }
    bool empty() const { return root_ == nullptr; }

private:
    expr::NodePtr root_;
    std::string source_;
    std::vector<std::string> attributes_;
};

FunctionSpec parse_function_expr(std::string_view text);

} // namespace graphseg
