#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "whirl/poset.hpp"
#include "whirl/ppartition.hpp"
#include "whirl/rational.hpp"

namespace whirl {

// One cycle of a bijective step map. states[0] is the lexicographically
// least state, and step(states[i]) = states[(i+1) % length].
template <typename State>
struct Orbit {
    std::vector<State> states;
    std::size_t length() const { return states.size(); }
    const State& representative() const { return states.front(); }
};

template <typename State, typename Step>
Orbit<State> orbit_of(Step step, const State& x0, std::size_t cap = kDefaultCap) {
    Orbit<State> orbit;
    State x = x0;
    do {
        if (orbit.states.size() >= cap) throw ResourceError("orbit walk cap exceeded");
        orbit.states.push_back(x);
        x = step(x);
    } while (!(x == x0));
    auto least = std::min_element(orbit.states.begin(), orbit.states.end());
    std::rotate(orbit.states.begin(), least, orbit.states.end());
    return orbit;
}

// Disjoint orbits covering the space, sorted by canonical representative.
template <typename State, typename Step>
std::vector<Orbit<State>> all_orbits(Step step, const std::vector<State>& space,
                                     std::size_t cap = kDefaultCap) {
    std::vector<Orbit<State>> orbits;
    std::set<State> seen;
    for (const State& seed : space) {
        if (seen.count(seed)) continue;
        auto orbit = orbit_of(step, seed, cap);
        for (const State& s : orbit.states) seen.insert(s);
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.representative() < b.representative(); });
    return orbits;
}

// LCM of all orbit lengths: the order of the step map on the space.
template <typename State, typename Step>
std::uint64_t map_order(Step step, const std::vector<State>& space,
                        std::size_t cap = kDefaultCap) {
    std::uint64_t order = 1;
    for (const auto& orbit : all_orbits(step, space, cap))
        order = std::lcm(order, static_cast<std::uint64_t>(orbit.length()));
    return order;
}

// Exact mean of a statistic over one orbit.
template <typename State, typename Eval>
Rational orbit_average(Eval eval, const Orbit<State>& orbit) {
    Rational sum;
    for (const State& s : orbit.states) sum += eval(s);
    return sum / Rational(static_cast<std::int64_t>(orbit.length()));
}

// A whirling orbit of P-partitions viewed as a cyclic matrix: one row per
// state, one column per poset element.
struct OrbitBoard {
    PosetPtr poset;                // the base poset (claw family for metrics)
    std::vector<PPartition> rows;  // consecutive whirl images, cyclic
    std::size_t length() const { return rows.size(); }
    int bound() const { return rows.empty() ? 0 : rows.front().bound; }
};

OrbitBoard make_orbit_board(const Poset& P, const PPartition& start,
                            std::size_t cap = kDefaultCap);

// The orbit repeated `multiple` times (Super orbit board).
OrbitBoard repeat_board(const OrbitBoard& board, int multiple);

}  // namespace whirl
