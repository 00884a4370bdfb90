#pragma once

#include <functional>
#include <string>
#include <vector>

#include "whirl/expr.hpp"
#include "whirl/poset.hpp"

namespace whirl {

// f : [n] -> [k] in one-line notation; values are residues 1..k mod k.
struct OneLineFunction {
    std::vector<int> values;

    bool operator==(const OneLineFunction& o) const = default;
    auto operator<=>(const OneLineFunction& o) const = default;
};

// "21344" when k <= 9, else "2,1,3,4,4".
std::string one_line(const OneLineFunction& f, int k);

// A family of functions [n] -> [k] with a decidable membership predicate:
// m-injective (every preimage <= m), m-surjective (every preimage >= m), or
// a custom constraint expression over atoms f(1), ..., f(n).
class FunctionFamily {
public:
    static FunctionFamily injective(int n, int k, int m);
    static FunctionFamily surjective(int n, int k, int m);
    static FunctionFamily custom(int n, int k, const std::string& constraint);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::string& description() const { return description_; }

    bool contains(const OneLineFunction& f) const;
    // All members, lexicographic.
    std::vector<OneLineFunction> enumerate(std::size_t cap = kDefaultCap) const;

private:
    FunctionFamily(int n, int k, std::string description,
                   std::function<bool(const OneLineFunction&)> predicate);

    int n_;
    int k_;
    std::string description_;
    std::function<bool(const OneLineFunction&)> predicate_;
};

// Whirl at index i (1-based): add 1 mod k (values cycling 1..k) until the
// function is back in the family. f must already belong to the family.
OneLineFunction whirl_function_at(const FunctionFamily& F, OneLineFunction f, int i);

// Whirl once at every index, 1 through n in increasing order.
OneLineFunction whirl_function(const FunctionFamily& F, OneLineFunction f);

// eta_j(f) = #f^{-1}(j).
int eta(const OneLineFunction& f, int j);

}  // namespace whirl
