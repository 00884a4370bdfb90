#include "whirl/statistic.hpp"

#include <stdexcept>

namespace whirl {

namespace {

int parse_int_arg(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer argument '" + s + "'");
    return v;
}

// Resolves chi/F/B against fiber heights: heights[x] = |I intersect fiber(x)|
// for ideals, = f(x) for partitions.
Rational resolve_heights(const Atom& atom, const Poset& base, const std::vector<int>& heights,
                         int bound) {
    if (atom.name == "chi") {
        if (atom.args.size() == 1) {
            int e = base.index_of(atom.args[0]);
            if (e < 0) throw std::invalid_argument("unknown element '" + atom.args[0] + "'");
            return Rational(heights[e] >= 1 ? 1 : 0);
        }
        if (atom.args.size() == 2) {
            int e = base.index_of(atom.args[0]);
            if (e < 0) throw std::invalid_argument("unknown element '" + atom.args[0] + "'");
            int level = parse_int_arg(atom.args[1]);
            if (level < 1 || level > bound)
                throw std::invalid_argument("fiber level out of range in chi");
            return Rational(heights[e] >= level ? 1 : 0);
        }
        throw std::invalid_argument("chi takes one or two arguments");
    }
    if (atom.name == "F" || atom.name == "B") {
        if (!base.claw())
            throw std::invalid_argument(atom.name + "(i) is defined on claw families only");
        if (atom.name == "F" && base.claw()->n != 2)
            throw std::invalid_argument("F(i) is defined on the V family only");
        if (atom.args.size() != 1) throw std::invalid_argument(atom.name + " takes one argument");
        int i = parse_int_arg(atom.args[0]);
        if (i < 2 || i > bound)
            throw std::invalid_argument(atom.name + "(i) needs 2 <= i <= k");
        std::int64_t total = 0;
        for (int x : base.claw()->outer) total += heights[x] >= i ? 1 : 0;
        total += heights[base.claw()->bottom] >= i - 1 ? 1 : 0;
        return Rational(total);
    }
    if (atom.name == "eta")
        throw std::invalid_argument("eta applies to one-line function states only");
    throw std::invalid_argument("unknown atom '" + atom.name + "'");
}

}  // namespace

Statistic Statistic::parse(const std::string& text) {
    Statistic s;
    s.text_ = text;
    s.expr_ = parse_expression(text);
    for (const Atom& a : collect_atoms(s.expr_)) {
        if (a.name != "chi" && a.name != "eta" && a.name != "F" && a.name != "B" &&
            a.name != "f")
            throw std::invalid_argument("unknown atom '" + a.name + "'");
        std::size_t want_max = a.name == "chi" ? 2 : 1;
        if (a.args.empty() || a.args.size() > want_max)
            throw std::invalid_argument("atom '" + a.name + "' takes " +
                                        (a.name == "chi" ? "1 or 2 arguments"
                                                         : std::string("1 argument")));
    }
    return s;
}

Statistic parse_statistic(const std::string& text) { return Statistic::parse(text); }

Rational Statistic::eval_ideal(const Poset& P, OrderIdeal I) const {
    if (P.product()) {
        PPartition f = phi_inv(P, I);
        return eval_partition(*P.product()->base, f);
    }
    return evaluate(expr_, [&](const Atom& atom) -> Rational {
        if (atom.name == "chi" && atom.args.size() == 1) {
            int e = P.index_of(atom.args[0]);
            if (e < 0) throw std::invalid_argument("unknown element '" + atom.args[0] + "'");
            return Rational((I >> e) & 1 ? 1 : 0);
        }
        throw std::invalid_argument("only chi(e) applies to plain order-ideal states");
    });
}

Rational Statistic::eval_partition(const Poset& P, const PPartition& f) const {
    return evaluate(expr_, [&](const Atom& atom) {
        return resolve_heights(atom, P, f.labels, f.bound);
    });
}

Rational Statistic::eval_function(const OneLineFunction& f) const {
    return evaluate(expr_, [&](const Atom& atom) -> Rational {
        if (atom.name == "eta" && atom.args.size() == 1)
            return Rational(eta(f, parse_int_arg(atom.args[0])));
        if (atom.name == "f" && atom.args.size() == 1) {
            int i = parse_int_arg(atom.args[0]);
            if (i < 1 || i > static_cast<int>(f.values.size()))
                throw std::out_of_range("f(i) index out of range");
            return Rational(f.values[i - 1]);
        }
        throw std::invalid_argument("atom '" + atom.name + "' does not apply to functions");
    });
}

}  // namespace whirl
