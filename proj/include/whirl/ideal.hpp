#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whirl/poset.hpp"

namespace whirl {

// An order ideal as a membership bitmask over a poset's elements.
using OrderIdeal = std::uint64_t;

bool is_order_ideal(const Poset& P, OrderIdeal S);

// Toggle at x: add or remove x when the result stays an ideal, else no-op.
OrderIdeal toggle(const Poset& P, OrderIdeal I, int x);

// The ideal generated by the minimal elements of the complement of I:
// complement, take minimal elements, saturate down.
OrderIdeal rowmotion_direct(const Poset& P, OrderIdeal I);

// Rowmotion as the toggle product along a linear extension, toggling at the
// top of the poset first (ext[p-1] first, ext[0] last).
OrderIdeal rowmotion_toggles(const Poset& P, OrderIdeal I, const std::vector<int>& ext);

// All order ideals, sorted as bitmasks. Recursive include/exclude over a
// linear extension with downward-closure pruning.
std::vector<OrderIdeal> enumerate_ideals(const Poset& P, std::size_t cap = kDefaultCap);

// Closed form for |J(P)| on claw products: sum_{i=1}^{k+1} i^n.
std::uint64_t claw_ideal_count(int n, int k);

std::string ideal_bitstring(const Poset& P, OrderIdeal I);
std::vector<std::string> ideal_names(const Poset& P, OrderIdeal I);

}  // namespace whirl
