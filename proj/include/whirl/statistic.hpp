#pragma once

#include <string>
#include <vector>

#include "whirl/expr.hpp"
#include "whirl/function_whirl.hpp"
#include "whirl/ideal.hpp"
#include "whirl/orbit.hpp"
#include "whirl/ppartition.hpp"
#include "whirl/rational.hpp"

namespace whirl {

// An exact-rational statistic built from indicator atoms:
//   chi(e)    - element e (by name) lies in the ideal
//   chi(x,a)  - the ideal of P x [k] contains (x,a); on a P-partition this
//               is f(x) >= a
//   eta(j)    - preimage count #f^{-1}(j) on one-line functions
//   F(i)      - chi(l,i) + chi(r,i) + chi(c,i-1) on the V family
//   B(i)      - sum_j chi(b_j,i) + chi(0,i-1) on claw families
// combined with rational-coefficient arithmetic.
class Statistic {
public:
    static Statistic parse(const std::string& text);

    const std::string& text() const { return text_; }

    // The poset argument is the state's own poset: a product-with-chain
    // poset for ideals, the base (claw/V) poset for partitions.
    Rational eval_ideal(const Poset& P, OrderIdeal I) const;
    Rational eval_partition(const Poset& P, const PPartition& f) const;
    Rational eval_function(const OneLineFunction& f) const;

private:
    std::string text_;
    ExprPtr expr_;
};

Statistic parse_statistic(const std::string& text);

// One row of a homomesy report.
struct OrbitSummary {
    std::string representative;
    std::size_t length = 0;
    Rational average;
};

// Per-orbit averages plus the verdict. On failure, witness_a/witness_b index
// two orbits whose averages differ.
struct HomomesyReport {
    std::string statistic;
    std::vector<OrbitSummary> orbits;
    bool homomesic = false;
    Rational value;
    std::size_t witness_a = 0;
    std::size_t witness_b = 0;
};

template <typename State, typename Eval, typename Repr>
HomomesyReport homomesy_check(const std::string& name, const std::vector<Orbit<State>>& orbits,
                              Eval eval, Repr repr) {
    HomomesyReport report;
    report.statistic = name;
    for (const auto& orbit : orbits)
        report.orbits.push_back({repr(orbit.representative()), orbit.length(),
                                 orbit_average(eval, orbit)});
    report.homomesic = true;
    if (!report.orbits.empty()) report.value = report.orbits.front().average;
    for (std::size_t i = 1; i < report.orbits.size(); ++i) {
        if (report.orbits[i].average != report.value) {
            report.homomesic = false;
            report.witness_a = 0;
            report.witness_b = i;
            break;
        }
    }
    return report;
}

}  // namespace whirl
