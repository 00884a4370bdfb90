#pragma once

#include <set>
#include <string>
#include <vector>

#include "whirl/ideal.hpp"
#include "whirl/poset.hpp"

namespace whirl {

// A k-bounded P-partition: weakly order-reversing labeling P -> [0,k].
struct PPartition {
    std::vector<int> labels;
    int bound = 0;

    bool operator==(const PPartition& o) const = default;
    auto operator<=>(const PPartition& o) const = default;
};

bool is_ppartition(const Poset& P, const PPartition& f);

// Whirl at x: add 1 mod (k+1) to f(x) until the labeling is order-reversing
// again. Terminates because the original value recurs.
PPartition whirl_at(const Poset& P, PPartition f, int x);

// Whirl once at every element, maximal elements first (decreasing
// linear-extension order); independent of the extension chosen since whirls
// at incomparable elements commute.
PPartition whirl(const Poset& P, const PPartition& f);
PPartition whirl_iterate(const Poset& P, PPartition f, int times);

// The equivariant bijection with J(P x [k]): f(x) counts the elements of the
// ideal in the fiber over x.
OrderIdeal phi(const Poset& product, const PPartition& f);
PPartition phi_inv(const Poset& product, OrderIdeal I);

// All of F_k(P), sorted; transported from enumerate_ideals through phi_inv.
std::vector<PPartition> enumerate_ppartitions(const Poset& P, int k,
                                              std::size_t cap = kDefaultCap);

// Distinct labels attained on the non-bottom elements of a claw partition.
std::set<int> value_set_A(const Poset& claw, const PPartition& f);
int alpha(const Poset& claw, const PPartition& f);

// Cyclic shift of each outer label within A(f); the bottom label is fixed.
// Equals whirl^(k+2) on claw posets.
PPartition whirl_bar_A(const Poset& claw, const PPartition& f);

// "(1,3,3)" in the poset's display order.
std::string ppartition_tuple(const Poset& P, const PPartition& f);

}  // namespace whirl
