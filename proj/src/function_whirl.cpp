#include "whirl/function_whirl.hpp"

#include <algorithm>
#include <stdexcept>

namespace whirl {

std::string one_line(const OneLineFunction& f, int k) {
    std::string s;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (k > 9 && i > 0) s += ",";
        s += std::to_string(f.values[i]);
    }
    return s;
}

FunctionFamily::FunctionFamily(int n, int k, std::string description,
                               std::function<bool(const OneLineFunction&)> predicate)
    : n_(n), k_(k), description_(std::move(description)), predicate_(std::move(predicate)) {
    if (n < 1 || k < 1) throw std::invalid_argument("function family needs n, k >= 1");
}

FunctionFamily FunctionFamily::injective(int n, int k, int m) {
    std::string desc = "Inj_" + std::to_string(m) + "(" + std::to_string(n) + "," +
                       std::to_string(k) + ")";
    return FunctionFamily(n, k, desc, [k, m](const OneLineFunction& f) {
        std::vector<int> count(k + 1, 0);
        for (int v : f.values)
            if (++count[v] > m) return false;
        return true;
    });
}

FunctionFamily FunctionFamily::surjective(int n, int k, int m) {
    std::string desc = "Sur_" + std::to_string(m) + "(" + std::to_string(n) + "," +
                       std::to_string(k) + ")";
    return FunctionFamily(n, k, desc, [k, m](const OneLineFunction& f) {
        std::vector<int> count(k + 1, 0);
        for (int v : f.values) ++count[v];
        for (int t = 1; t <= k; ++t)
            if (count[t] < m) return false;
        return true;
    });
}

FunctionFamily FunctionFamily::custom(int n, int k, const std::string& constraint) {
    ExprPtr expr = parse_expression(constraint);
    for (const Atom& a : collect_atoms(expr)) {
        if (a.name != "f" || a.args.size() != 1)
            throw ParseError("constraint atoms must look like f(i)", 0);
        int i = std::stoi(a.args[0]);
        if (i < 1 || i > n) throw std::invalid_argument("f(" + a.args[0] + ") out of domain");
    }
    return FunctionFamily(n, k, "{f : " + constraint + "}", [expr](const OneLineFunction& f) {
        Rational r = evaluate(expr, [&f](const Atom& a) {
            return Rational(f.values[std::stoi(a.args[0]) - 1]);
        });
        return r.num() != 0;
    });
}

bool FunctionFamily::contains(const OneLineFunction& f) const {
    if (static_cast<int>(f.values.size()) != n_) return false;
    for (int v : f.values)
        if (v < 1 || v > k_) return false;
    return predicate_(f);
}

std::vector<OneLineFunction> FunctionFamily::enumerate(std::size_t cap) const {
    std::vector<OneLineFunction> out;
    OneLineFunction f;
    f.values.assign(n_, 1);
    for (;;) {
        if (contains(f)) {
            if (out.size() >= cap) throw ResourceError("function family cap exceeded");
            out.push_back(f);
        }
        int i = n_ - 1;
        while (i >= 0 && f.values[i] == k_) f.values[i--] = 1;
        if (i < 0) break;
        ++f.values[i];
    }
    return out;
}

OneLineFunction whirl_function_at(const FunctionFamily& F, OneLineFunction f, int i) {
    if (i < 1 || i > F.n()) throw std::out_of_range("whirl index out of range");
    if (!F.contains(f)) throw std::invalid_argument("function is not in the family");
    int& v = f.values[i - 1];
    do {
        v = v % F.k() + 1;
    } while (!F.contains(f));
    return f;
}

OneLineFunction whirl_function(const FunctionFamily& F, OneLineFunction f) {
    for (int i = 1; i <= F.n(); ++i) f = whirl_function_at(F, std::move(f), i);
    return f;
}

int eta(const OneLineFunction& f, int j) {
    return static_cast<int>(std::count(f.values.begin(), f.values.end(), j));
}

}  // namespace whirl
