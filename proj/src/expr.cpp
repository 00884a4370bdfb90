#include "whirl/expr.hpp"

#include <cctype>

namespace whirl {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    static ExprPtr make_const(Rational v) {
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::constant;
        n->value = v;
        return n;
    }
    static ExprPtr make_binary(char op, ExprPtr l, ExprPtr r) {
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::binary;
        n->op = op;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    ExprPtr parse_or() {
        auto l = parse_and();
        while (eat("||")) l = make_binary('o', l, parse_and());
        return l;
    }
    ExprPtr parse_and() {
        auto l = parse_cmp();
        while (eat("&&")) l = make_binary('a', l, parse_cmp());
        return l;
    }
    ExprPtr parse_cmp() {
        auto l = parse_sum();
        if (eat("==")) return make_binary('=', l, parse_sum());
        if (eat("!=")) return make_binary('n', l, parse_sum());
        if (eat("<=")) return make_binary('L', l, parse_sum());
        if (eat(">=")) return make_binary('G', l, parse_sum());
        if (peek() == '<') { ++pos; return make_binary('l', l, parse_sum()); }
        if (peek() == '>') { ++pos; return make_binary('g', l, parse_sum()); }
        return l;
    }
    ExprPtr parse_sum() {
        auto l = parse_term();
        for (;;) {
            if (eat("+")) l = make_binary('+', l, parse_term());
            else if (peek() == '-') { ++pos; l = make_binary('-', l, parse_term()); }
            else return l;
        }
    }
    ExprPtr parse_term() {
        auto l = parse_unary();
        for (;;) {
            if (eat("*")) l = make_binary('*', l, parse_unary());
            else if (eat("/")) l = make_binary('/', l, parse_unary());
            else return l;
        }
    }
    ExprPtr parse_unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos;
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::unary;
            n->op = '-';
            n->lhs = parse_unary();
            return n;
        }
        if (peek() == '!' && pos + 1 < text.size() && text[pos + 1] != '=') {
            ++pos;
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::unary;
            n->op = '!';
            n->lhs = parse_unary();
            return n;
        }
        return parse_primary();
    }
    ExprPtr parse_primary() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            return make_const(Rational(v));
        }
        if (c == '(') {
            ++pos;
            auto e = parse_or();
            if (!eat(")")) throw ParseError("expected ')'", pos);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                name += text[pos++];
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::atom;
            n->atom.name = name;
            if (eat("(")) {
                if (peek() != ')') {
                    for (;;) {
                        std::string arg;
                        skip_ws();
                        while (pos < text.size() && text[pos] != ',' && text[pos] != ')')
                            arg += text[pos++];
                        while (!arg.empty() && std::isspace(static_cast<unsigned char>(arg.back())))
                            arg.pop_back();
                        n->atom.args.push_back(arg);
                        if (eat(",")) continue;
                        break;
                    }
                }
                if (!eat(")")) throw ParseError("expected ')' after arguments", pos);
            }
            return n;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

bool truthy(const Rational& r) { return r.num() != 0; }

void collect(const ExprPtr& e, std::vector<Atom>& out) {
    if (!e) return;
    if (e->kind == ExprNode::Kind::atom) out.push_back(e->atom);
    collect(e->lhs, out);
    collect(e->rhs, out);
}

}  // namespace

ExprPtr parse_expression(const std::string& text) {
    Parser p(text);
    auto e = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return e;
}

Rational evaluate(const ExprPtr& e, const std::function<Rational(const Atom&)>& resolve) {
    switch (e->kind) {
        case ExprNode::Kind::constant: return e->value;
        case ExprNode::Kind::atom: return resolve(e->atom);
        case ExprNode::Kind::unary: {
            Rational v = evaluate(e->lhs, resolve);
            return e->op == '-' ? -v : Rational(truthy(v) ? 0 : 1);
        }
        case ExprNode::Kind::binary: {
            Rational a = evaluate(e->lhs, resolve);
            if (e->op == 'a') return Rational(truthy(a) && truthy(evaluate(e->rhs, resolve)) ? 1 : 0);
            if (e->op == 'o') return Rational(truthy(a) || truthy(evaluate(e->rhs, resolve)) ? 1 : 0);
            Rational b = evaluate(e->rhs, resolve);
            switch (e->op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '=': return Rational(a == b ? 1 : 0);
                case 'n': return Rational(a != b ? 1 : 0);
                case 'l': return Rational(a < b ? 1 : 0);
                case 'g': return Rational(b < a ? 1 : 0);
                case 'L': return Rational(!(b < a) ? 1 : 0);
                case 'G': return Rational(!(a < b) ? 1 : 0);
            }
            throw std::logic_error("unknown operator");
        }
    }
    throw std::logic_error("unknown node kind");
}

std::vector<Atom> collect_atoms(const ExprPtr& e) {
    std::vector<Atom> out;
    collect(e, out);
    return out;
}

}  // namespace whirl
