#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "whirl/ideal.hpp"
#include "whirl/ppartition.hpp"
#include "whirl/statistic.hpp"

using namespace whirl;

TEST_CASE("chi on plain posets counts ideal membership") {
    Poset V = make_claw(2);
    Statistic s = Statistic::parse("chi(l) + chi(r) - chi(c)");
    CHECK(s.eval_ideal(V, 0b111) == Rational(1));
    CHECK(s.eval_ideal(V, 0b100) == Rational(-1));
    CHECK(s.eval_ideal(V, 0b000) == Rational(0));
}

TEST_CASE("chi(x,a) on partitions is a height indicator") {
    Poset V = make_claw(2);
    PPartition f{{1, 3, 3}, 4};  // l=1, r=3, c=3
    CHECK(Statistic::parse("chi(l,1)").eval_partition(V, f) == Rational(1));
    CHECK(Statistic::parse("chi(l,2)").eval_partition(V, f) == Rational(0));
    CHECK(Statistic::parse("chi(r,3)").eval_partition(V, f) == Rational(1));
    CHECK(Statistic::parse("chi(c,4)").eval_partition(V, f) == Rational(0));
    CHECK(Statistic::parse("chi(l,1)+chi(r,1)-chi(c,4)").eval_partition(V, f) == Rational(2));
}

TEST_CASE("ideal evaluation routes through the correspondence on products") {
    Poset V = make_claw(2);
    Poset P = product_with_chain(V, 4);
    Statistic s = Statistic::parse("chi(l,1) + chi(r,1) - chi(c,4)");
    for (OrderIdeal I : enumerate_ideals(P))
        CHECK(s.eval_ideal(P, I) == s.eval_partition(V, phi_inv(P, I)));
}

TEST_CASE("flux capacitor on the V family") {
    Poset V = make_claw(2);
    PPartition f{{1, 3, 3}, 4};
    // F_i = chi(l,i) + chi(r,i) + chi(c,i-1)
    CHECK(Statistic::parse("F(2)").eval_partition(V, f) ==
          Statistic::parse("chi(l,2)+chi(r,2)+chi(c,1)").eval_partition(V, f));
    CHECK(Statistic::parse("F(2) - F(3)").eval_partition(V, f) == Rational(0));
    CHECK_THROWS(Statistic::parse("F(1)").eval_partition(V, f));   // needs 2 <= i <= k
    CHECK_THROWS(Statistic::parse("F(5)").eval_partition(V, f));
    CHECK_THROWS(Statistic::parse("F(2)").eval_partition(make_chain(2), PPartition{{0, 0}, 4}));
}

TEST_CASE("B statistic on claw families") {
    Poset C = make_claw(4);
    PPartition f{{1, 3, 5, 5, 5}, 6};
    // B_i = sum_j chi(b_j, i) + chi(0, i-1)
    CHECK(Statistic::parse("B(3)").eval_partition(C, f) == Rational(3 + 1));
    CHECK(Statistic::parse("B(5)").eval_partition(C, f) == Rational(2 + 1));
    CHECK_THROWS(Statistic::parse("B(1)").eval_partition(C, f));
}

TEST_CASE("eta applies to function states only") {
    Statistic s = Statistic::parse("eta(2)");
    CHECK(s.eval_function({{2, 1, 2}}) == Rational(2));
    Poset V = make_claw(2);
    CHECK_THROWS(s.eval_partition(V, PPartition{{0, 0, 0}, 1}));
}

TEST_CASE("statistic parse errors") {
    CHECK_THROWS(Statistic::parse("bogus(1)"));
    CHECK_THROWS(Statistic::parse("chi()"));
    CHECK_THROWS(Statistic::parse("chi(l,1) +"));
}

TEST_CASE("homomesy_check compares exact orbit averages") {
    Poset V = make_claw(2);
    int k = 4;
    auto orbits = all_orbits([&V](const PPartition& f) { return whirl::whirl(V, f); },
                             enumerate_ppartitions(V, k));
    Statistic s = Statistic::parse("chi(l,1)+chi(r,1)-chi(c,4)");
    auto report = homomesy_check(
        s.text(), orbits, [&](const PPartition& f) { return s.eval_partition(V, f); },
        [&](const PPartition& f) { return ppartition_tuple(V, f); });
    CHECK(report.homomesic);
    CHECK(report.value == Rational(1));  // 2(k-1)/(k+2) at k=4

    Statistic bad = Statistic::parse("chi(l,1)");
    auto fail = homomesy_check(
        bad.text(), orbits, [&](const PPartition& f) { return bad.eval_partition(V, f); },
        [&](const PPartition& f) { return ppartition_tuple(V, f); });
    CHECK(!fail.homomesic);
    CHECK(fail.orbits[fail.witness_a].average != fail.orbits[fail.witness_b].average);
}
