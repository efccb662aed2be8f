#include "graphseg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>

#include "graphseg/io.hpp"

namespace graphseg {

namespace expr {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

NodePtr clone(const Node* node) {
    if (!node) return nullptr;
    auto out = std::make_unique<Node>();
    out->kind = node->kind;
    out->number = node->number;
    out->name = node->name;
    out->lhs = clone(node->lhs.get());
    out->rhs = clone(node->rhs.get());
    return out;
}

bool structurally_equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->number != b->number || a->name != b->name) return false;
    return structurally_equal(a->lhs.get(), b->lhs.get()) &&
           structurally_equal(a->rhs.get(), b->rhs.get());
}

namespace {

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

// Recursive-descent parser for
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | primary
//   primary := number | 's' | ident | ident '(' args ')' | '(' expr ')'
// Unknown identifiers not followed by '(' become vertex attributes.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run(std::set<std::string>& attrs) {
        attrs_ = &attrs;
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::set<std::string>* attrs_ = nullptr;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr left = parse_term();
        for (;;) {
            if (consume('+'))
                left = make(Kind::add, std::move(left), parse_term());
            else if (consume('-'))
                left = make(Kind::subtract, std::move(left), parse_term());
            else
                return left;
        }
    }

    NodePtr parse_term() {
        NodePtr left = parse_factor();
        for (;;) {
            if (consume('*'))
                left = make(Kind::multiply, std::move(left), parse_factor());
            else if (consume('/'))
                left = make(Kind::divide, std::move(left), parse_factor());
            else
                return left;
        }
    }

    NodePtr parse_factor() {
        if (consume('-')) return make(Kind::negate, parse_factor());
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))
            return parse_number();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::string chunk(text_.substr(pos_));
        const char* begin = chunk.c_str();
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin) throw ParseError("bad number", pos_);
        pos_ += static_cast<std::size_t>(end - begin);
        auto n = make(Kind::number);
        n->number = value;
        return n;
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        const bool call = peek() == '(';
        if (name == "s" && !call) return make(Kind::var_s);

        if (call) {
            Kind kind;
            int arity;
            if (name == "abs") {
                kind = Kind::abs_call;
                arity = 1;
            } else if (name == "tanh") {
                kind = Kind::tanh_call;
                arity = 1;
            } else if (name == "min") {
                kind = Kind::min_call;
                arity = 2;
            } else if (name == "max") {
                kind = Kind::max_call;
                arity = 2;
            } else if (name == "pow") {
                kind = Kind::pow_call;
                arity = 2;
            } else {
                throw ParseError("unknown function '" + name + "'", start);
            }
            consume('(');
            NodePtr first = parse_expr();
            NodePtr second;
            if (arity == 2) {
                if (!consume(',')) throw ParseError("expected ',' in call to " + name, pos_);
                const std::size_t second_pos = pos_;
                second = parse_expr();
                if (kind == Kind::pow_call &&
                    (second->kind != Kind::number || second->number < 1.0))
                    throw ParseError("pow exponent must be a numeric constant >= 1",
                                     second_pos);
            }
            if (!consume(')')) throw ParseError("expected ')' closing call to " + name, pos_);
            return make(kind, std::move(first), std::move(second));
        }

        if (name == "abs" || name == "tanh" || name == "min" || name == "max" || name == "pow")
            throw ParseError("expected '(' after function name '" + name + "'", pos_);
        attrs_->insert(name);
        auto n = make(Kind::attribute);
        n->name = name;
        return n;
    }
};

double eval_node(const Node& node, double s, const AttrTable* attrs, int vertex) {
    switch (node.kind) {
        case Kind::number: return node.number;
        case Kind::var_s: return s;
        case Kind::attribute: {
            if (!attrs) throw Error("attribute '" + node.name + "' used without bindings");
            auto it = attrs->find(node.name);
            if (it == attrs->end())
                throw Error("attribute '" + node.name + "' is not bound");
            if (vertex < 0 || vertex >= static_cast<int>(it->second.size()))
                throw Error("attribute '" + node.name + "' evaluated without a vertex");
            return it->second[vertex];
        }
        case Kind::negate: return -eval_node(*node.lhs, s, attrs, vertex);
        case Kind::abs_call: return std::abs(eval_node(*node.lhs, s, attrs, vertex));
        case Kind::tanh_call: return std::tanh(eval_node(*node.lhs, s, attrs, vertex));
        case Kind::add:
            return eval_node(*node.lhs, s, attrs, vertex) +
                   eval_node(*node.rhs, s, attrs, vertex);
        case Kind::subtract:
            return eval_node(*node.lhs, s, attrs, vertex) -
                   eval_node(*node.rhs, s, attrs, vertex);
        case Kind::multiply:
            return eval_node(*node.lhs, s, attrs, vertex) *
                   eval_node(*node.rhs, s, attrs, vertex);
        case Kind::divide:
            return eval_node(*node.lhs, s, attrs, vertex) /
                   eval_node(*node.rhs, s, attrs, vertex);
        case Kind::min_call:
            return std::min(eval_node(*node.lhs, s, attrs, vertex),
                            eval_node(*node.rhs, s, attrs, vertex));
        case Kind::max_call:
            return std::max(eval_node(*node.lhs, s, attrs, vertex),
                            eval_node(*node.rhs, s, attrs, vertex));
        case Kind::pow_call:
            return std::pow(eval_node(*node.lhs, s, attrs, vertex), node.rhs->number);
    }
    throw Error("corrupt expression tree");
}

void print_node(const Node& node, std::string& out) {
    switch (node.kind) {
        case Kind::number: out += format_double(node.number); return;
        case Kind::var_s: out += 's'; return;
        case Kind::attribute: out += node.name; return;
        case Kind::negate:
            out += "(-";
            print_node(*node.lhs, out);
            out += ')';
            return;
        case Kind::abs_call:
        case Kind::tanh_call:
            out += node.kind == Kind::abs_call ? "abs(" : "tanh(";
            print_node(*node.lhs, out);
            out += ')';
            return;
        case Kind::add:
        case Kind::subtract:
        case Kind::multiply:
        case Kind::divide: {
            const char* op = node.kind == Kind::add        ? " + "
                             : node.kind == Kind::subtract ? " - "
                             : node.kind == Kind::multiply ? " * "
                                                           : " / ";
            out += '(';
            print_node(*node.lhs, out);
            out += op;
            print_node(*node.rhs, out);
            out += ')';
            return;
        }
        case Kind::min_call:
        case Kind::max_call:
        case Kind::pow_call: {
            out += node.kind == Kind::min_call   ? "min("
                   : node.kind == Kind::max_call ? "max("
                                                 : "pow(";
            print_node(*node.lhs, out);
            out += ", ";
            print_node(*node.rhs, out);
            out += ')';
            return;
        }
    }
}

} // namespace

} // namespace expr

FunctionSpec::FunctionSpec(const FunctionSpec& other)
    : root_(expr::clone(other.root_.get())),
      source_(other.source_),
      attributes_(other.attributes_) {}

FunctionSpec& FunctionSpec::operator=(const FunctionSpec& other) {
    if (this != &other) {
        root_ = expr::clone(other.root_.get());
        source_ = other.source_;
        attributes_ = other.attributes_;
    }
    return *this;
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
    FunctionSpec spec;
    std::set<std::string> attrs;
    expr::Parser parser(text);
    spec.root_ = parser.run(attrs);
    spec.source_.assign(text);
    spec.attributes_.assign(attrs.begin(), attrs.end());
    return spec;
}

double FunctionSpec::eval(double s, const AttrTable* attrs, int vertex) const {
    if (!root_) throw Error("evaluating an empty function");
    return expr::eval_node(*root_, s, attrs, vertex);
}

double FunctionSpec::eval_extended(double s, const AttrTable* attrs, int vertex) const {
    if (s < 0.0) return -eval(-s, attrs, vertex);
    return eval(s, attrs, vertex);
}

std::string FunctionSpec::pretty_print() const {
    if (!root_) return "";
    std::string out;
    expr::print_node(*root_, out);
    return out;
}

bool FunctionSpec::structurally_equal(const FunctionSpec& other) const {
    return expr::structurally_equal(root_.get(), other.root_.get());
}

FunctionSpec parse_function_expr(std::string_view text) { return FunctionSpec::parse(text); }

} // namespace graphseg
