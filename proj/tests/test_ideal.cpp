#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "whirl/ideal.hpp"
#include "whirl/poset.hpp"

using namespace whirl;

namespace {

std::vector<Poset> test_posets() {
    std::vector<Poset> ps;
    for (int n = 1; n <= 4; ++n) ps.push_back(make_chain(n));
    ps.push_back(make_claw(2));
    ps.push_back(make_claw(3));
    ps.push_back(make_claw(4));
    ps.push_back(make_claw(6));  // 7 elements
    ps.push_back(product_with_chain(make_claw(2), 1));
    ps.push_back(product_with_chain(make_chain(2), 2));
    ps.push_back(Poset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}}));
    return ps;
}

}  // namespace

TEST_CASE("ideal membership") {
    Poset V = make_claw(2);
    CHECK(is_order_ideal(V, 0b000));
    CHECK(is_order_ideal(V, 0b100));   // {c}
    CHECK(is_order_ideal(V, 0b101));   // {c, l}
    CHECK(is_order_ideal(V, 0b111));
    CHECK(!is_order_ideal(V, 0b001));  // {l} misses c below it
    CHECK(!is_order_ideal(V, 0b011));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_ideals(make_claw(2)).size() == 5);
    CHECK(enumerate_ideals(make_chain(4)).size() == 5);
    CHECK(enumerate_ideals(make_claw(3)).size() == 9);  // 2^3 + 1

    // |J(C_n x [k])| = sum_{i=1}^{k+1} i^n
    CHECK(claw_ideal_count(2, 3) == 30);
    CHECK(claw_ideal_count(5, 3) == 1300);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            Poset P = product_with_chain(make_claw(n), k);
            CHECK(enumerate_ideals(P).size() == claw_ideal_count(n, k));
        }
    // C_1 is a 2-chain: ideals of [2] x [k] number (k+1)(k+2)/2
    for (int k = 1; k <= 6; ++k)
        CHECK(claw_ideal_count(1, k) ==
              static_cast<std::uint64_t>(k + 1) * (k + 2) / 2);
}

TEST_CASE("enumeration is sorted, distinct, and all ideals") {
    for (const Poset& P : test_posets()) {
        auto ideals = enumerate_ideals(P);
        CHECK(std::is_sorted(ideals.begin(), ideals.end()));
        CHECK(std::adjacent_find(ideals.begin(), ideals.end()) == ideals.end());
        std::size_t brute = 0;
        for (OrderIdeal S = 0; S < (OrderIdeal{1} << P.size()); ++S)
            if (is_order_ideal(P, S)) ++brute;
        CHECK(ideals.size() == brute);
        for (OrderIdeal I : ideals) CHECK(is_order_ideal(P, I));
    }
}

TEST_CASE("toggles are involutions that fix idealness") {
    for (const Poset& P : test_posets())
        for (OrderIdeal I : enumerate_ideals(P))
            for (int x = 0; x < P.size(); ++x) {
                OrderIdeal J = toggle(P, I, x);
                CHECK(is_order_ideal(P, J));
                CHECK(toggle(P, J, x) == I);
            }
}

TEST_CASE("rowmotion permutes the ideals") {
    for (const Poset& P : test_posets()) {
        auto ideals = enumerate_ideals(P);
        std::set<OrderIdeal> images;
        for (OrderIdeal I : ideals) {
            OrderIdeal J = rowmotion_direct(P, I);
            CHECK(is_order_ideal(P, J));
            images.insert(J);
        }
        CHECK(images.size() == ideals.size());
    }
}

TEST_CASE("rowmotion examples") {
    Poset V = make_claw(2);
    // full ideal -> empty complement has no minimal elements -> empty ideal
    CHECK(rowmotion_direct(V, 0b111) == 0);
    // empty ideal -> minimal elements of everything = {c} -> {c}
    CHECK(rowmotion_direct(V, 0) == 0b100);
    // {c} -> minimal of {l, r} -> {l, r} saturated down = everything
    CHECK(rowmotion_direct(V, 0b100) == 0b111);
}

TEST_CASE("toggle product along every linear extension equals direct rowmotion") {
    for (const Poset& P : test_posets())
        for (const auto& ext : all_linear_extensions(P))
            for (OrderIdeal I : enumerate_ideals(P))
                CHECK(rowmotion_toggles(P, I, ext) == rowmotion_direct(P, I));
}

TEST_CASE("rowmotion_toggles rejects non-extensions") {
    Poset V = make_claw(2);
    CHECK_THROWS(rowmotion_toggles(V, 0, {0, 1, 2}));  // c must come first
    CHECK_THROWS(rowmotion_toggles(V, 0, {2, 0}));
}

TEST_CASE("formatting") {
    Poset V = make_claw(2);
    CHECK(ideal_bitstring(V, 0b101) == "101");
    CHECK(ideal_names(V, 0b101) == std::vector<std::string>{"l", "c"});
}
