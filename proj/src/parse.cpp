#include "whirl/parse.hpp"

#include <cctype>
#include <sstream>

#include "whirl/expr.hpp"

namespace whirl {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in poset expression", pos);
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number in poset expression", start);
        return std::stoi(text.substr(start, pos - start));
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
};

Poset parse_builder(Cursor& cur) {
    std::size_t at = cur.pos;
    std::string head = cur.word();
    Poset P = [&]() {
        if (head == "V") return make_claw(2);
        if (head == "chain" || head == "claw") {
            cur.expect('(');
            int n = cur.number();
            cur.expect(')');
            return head == "chain" ? make_chain(n) : make_claw(n);
        }
        throw ParseError("unknown poset builder '" + head + "'", at);
    }();
    for (;;) {
        cur.skip_ws();
        std::size_t mark = cur.pos;
        std::string op = cur.word();
        if (op.empty()) break;
        if (op != "x") throw ParseError("expected 'x [K]' in poset expression", mark);
        cur.expect('[');
        int k = cur.number();
        cur.expect(']');
        P = product_with_chain(P, k);
    }
    return P;
}

Poset parse_block(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int size = -1;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> cover_tokens;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string tok;
        if (!(row >> tok)) continue;
        if (tok == "elements:") {
            if (!(row >> size) || size < 1)
                throw ParseError("bad element count on line " + std::to_string(line_no), 0);
        } else if (tok == "names:") {
            std::string name;
            while (row >> name) names.push_back(name);
        } else {
            std::string lt, rhs;
            if (!(row >> lt >> rhs) || lt != "<")
                throw ParseError("expected 'i < j' on line " + std::to_string(line_no), 0);
            cover_tokens.emplace_back(tok, rhs);
        }
    }
    if (size < 0) throw ParseError("missing 'elements:' line", 0);
    if (!names.empty() && static_cast<int>(names.size()) != size)
        throw ParseError("names count does not match element count", 0);

    auto resolve = [&](const std::string& tok) -> int {
        for (int i = 0; i < static_cast<int>(names.size()); ++i)
            if (names[i] == tok) return i;
        try {
            return std::stoi(tok);
        } catch (...) {
            throw ParseError("unknown element '" + tok + "'", 0);
        }
    };
    std::vector<std::pair<int, int>> covers;
    for (const auto& [a, b] : cover_tokens) covers.emplace_back(resolve(a), resolve(b));
    return Poset::from_covers(size, std::move(covers), std::move(names));
}

}  // namespace

Poset parse_poset(const std::string& text) {
    if (text.find("elements:") != std::string::npos) return parse_block(text);
    Cursor cur{text};
    Poset P = parse_builder(cur);
    if (!cur.done()) throw ParseError("trailing input after poset expression", cur.pos);
    return P;
}

std::string serialize_poset(const Poset& P) {
    if (P.product()) {
        const auto& info = *P.product();
        return serialize_poset(*info.base) + " x [" + std::to_string(info.k) + "]";
    }
    if (P.claw()) {
        int n = P.claw()->n;
        return n == 2 ? "V" : "claw(" + std::to_string(n) + ")";
    }
    // an unnamed chain: 0 < 1 < ... < p-1 with default names
    bool chain = true;
    for (int i = 0; chain && i + 1 < P.size(); ++i)
        chain = P.covers_above(i) == std::vector<int>{i + 1} && P.name(i) == std::to_string(i);
    if (chain && (P.size() < 2 || P.name(P.size() - 1) == std::to_string(P.size() - 1)))
        return "chain(" + std::to_string(P.size()) + ")";

    std::ostringstream out;
    out << "elements: " << P.size() << "\n";
    out << "names:";
    for (const auto& n : P.names()) out << " " << n;
    out << "\n";
    for (auto [a, b] : P.covers()) out << a << " < " << b << "\n";
    return out.str();
}

nlohmann::json poset_to_json(const Poset& P) {
    nlohmann::json j;
    j["size"] = P.size();
    j["names"] = P.names();
    auto covers = nlohmann::json::array();
    for (auto [a, b] : P.covers()) covers.push_back({a, b});
    j["covers"] = covers;
    return j;
}

Poset poset_from_json(const nlohmann::json& j) {
    int size = j.at("size").get<int>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers"))
        covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return Poset::from_covers(size, std::move(covers), std::move(names));
}

PPartition parse_ppartition(const Poset& P, const std::string& text, int k) {
    std::vector<int> values;
    Cursor cur{text};
    bool parens = cur.eat('(');
    for (;;) {
        values.push_back(cur.number());
        if (!cur.eat(',')) break;
    }
    if (parens) cur.expect(')');
    if (!cur.done()) throw ParseError("trailing input after tuple", cur.pos);
    if (static_cast<int>(values.size()) != P.size())
        throw ParseError("tuple has " + std::to_string(values.size()) + " labels, poset has " +
                             std::to_string(P.size()) + " elements", 0);
    PPartition f;
    f.bound = k;
    f.labels.assign(P.size(), 0);
    const auto& order = P.display_order();
    for (int i = 0; i < P.size(); ++i) f.labels[order[i]] = values[i];
    if (!is_ppartition(P, f))
        throw ParseError("tuple is not order-reversing into [0," + std::to_string(k) + "]", 0);
    return f;
}

}  // namespace whirl
