#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "random_poset.hpp"
#include "whirl/ideal.hpp"
#include "whirl/ppartition.hpp"

using namespace whirl;

namespace {

// labels given in display order, as the figures print them
PPartition vp(int l, int c, int r, int k) { return PPartition{{l, r, c}, k}; }

}  // namespace

TEST_CASE("order-reversing validation") {
    Poset V = make_claw(2);
    CHECK(is_ppartition(V, vp(1, 3, 3, 4)));
    CHECK(is_ppartition(V, vp(0, 0, 0, 4)));
    CHECK(!is_ppartition(V, vp(3, 1, 0, 4)));  // f(c) < f(l)
    CHECK(!is_ppartition(V, vp(0, 5, 0, 4)));  // out of range
    CHECK(!is_ppartition(V, PPartition{{0, 0}, 4}));
}

TEST_CASE("whirl worked examples") {
    Poset V = make_claw(2);
    SUBCASE("k=2") {
        CHECK(whirl::whirl(V, vp(0, 2, 2, 2)) == vp(1, 1, 0, 2));
    }
    SUBCASE("k=4 full orbit of (1,3,3)") {
        PPartition f = vp(1, 3, 3, 4);
        f = whirl::whirl(V, f);
        CHECK(f == vp(2, 4, 0, 4));
        f = whirl::whirl(V, f);
        CHECK(f == vp(3, 3, 1, 4));
        f = whirl::whirl(V, f);
        CHECK(f == vp(0, 4, 2, 4));
        CHECK(whirl::whirl(V, f) == vp(1, 3, 3, 4));
    }
    SUBCASE("on a chain") {
        Poset C = make_chain(3);
        CHECK(whirl::whirl(C, PPartition{{4, 1, 0}, 4}) == PPartition{{2, 2, 1}, 4});
    }
}

TEST_CASE("whirl is independent of the linear extension chosen") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Poset P = testing::random_poset(rng, 4);
        for (int k = 1; k <= 2; ++k)
            for (const auto& f : enumerate_ppartitions(P, k)) {
                PPartition expect = whirl::whirl(P, f);
                for (const auto& ext : all_linear_extensions(P)) {
                    PPartition g = f;
                    for (auto it = ext.rbegin(); it != ext.rend(); ++it)
                        g = whirl_at(P, g, *it);
                    CHECK(g == expect);
                }
            }
    }
}

TEST_CASE("whirl permutes the partitions") {
    Poset C = make_claw(3);
    auto space = enumerate_ppartitions(C, 3);
    auto images = space;
    for (auto& f : images) f = whirl::whirl(C, f);
    std::sort(images.begin(), images.end());
    CHECK(images == space);
}

TEST_CASE("phi is a bijection transporting whirl to rowmotion") {
    std::mt19937 rng(11);
    std::vector<Poset> bases = {make_claw(2), make_claw(3), make_chain(3)};
    for (int trial = 0; trial < 20; ++trial) bases.push_back(testing::random_poset(rng, 5));
    for (const Poset& base : bases)
        for (int k = 1; k <= 3; ++k) {
            Poset P = product_with_chain(base, k);
            auto ideals = enumerate_ideals(P);
            std::set<PPartition> seen;
            for (OrderIdeal I : ideals) {
                PPartition f = phi_inv(P, I);
                CHECK(is_ppartition(base, f));
                CHECK(phi(P, f) == I);
                seen.insert(f);
                CHECK(phi(P, whirl::whirl(base, f)) == rowmotion_direct(P, I));
            }
            CHECK(seen.size() == ideals.size());
        }
}

TEST_CASE("phi on a concrete ideal") {
    // Example: on chain(3) x [4], f = (4,1,0) corresponds to the ideal with
    // 4 elements in the first fiber, 1 in the second, 0 in the third.
    Poset C = make_chain(3);
    Poset P = product_with_chain(C, 4);
    PPartition f{{4, 1, 0}, 4};
    OrderIdeal I = phi(P, f);
    CHECK(is_order_ideal(P, I));
    for (int x = 0; x < 3; ++x)
        for (int a = 1; a <= 4; ++a)
            CHECK((((I >> P.product_index(x, a)) & 1) == 1) == (f.labels[x] >= a));
    CHECK(phi_inv(P, I) == f);
}

TEST_CASE("enumerate_ppartitions counts match ideals") {
    for (int k = 1; k <= 4; ++k) {
        Poset V = make_claw(2);
        CHECK(enumerate_ppartitions(V, k).size() == claw_ideal_count(2, k));
    }
    auto space = enumerate_ppartitions(make_claw(2), 2);
    CHECK(std::is_sorted(space.begin(), space.end()));
}

TEST_CASE("value set and alpha on claws") {
    Poset C = make_claw(4);
    PPartition f{{1, 3, 5, 5, 5}, 6};  // b1..b4 then the bottom
    CHECK(value_set_A(C, f) == std::set<int>{1, 3, 5});
    CHECK(alpha(C, f) == 3);
    PPartition g{{2, 2, 2, 2, 0}, 6};
    CHECK(alpha(C, g) == 1);
}

TEST_CASE("whirl_bar_A rotates outer labels within A and fixes the bottom") {
    Poset C = make_claw(4);
    PPartition f{{1, 3, 5, 5, 5}, 6};
    PPartition g = whirl_bar_A(C, f);
    CHECK(g == PPartition{{3, 5, 1, 1, 5}, 6});
}

TEST_CASE("whirl^(k+2) equals the A-rotation, spot instance at n=6, k=9") {
    Poset C = make_claw(6);
    // display order is (b1..b6, bottom), identity on internal indices
    PPartition f{{1, 3, 3, 0, 4, 1, 6}, 9};
    PPartition g = whirl_iterate(C, f, 11);
    CHECK(g == PPartition{{3, 4, 4, 1, 0, 3, 6}, 9});
    CHECK(g == whirl_bar_A(C, f));
}

TEST_CASE("tuples print in display order") {
    Poset V = make_claw(2);
    CHECK(ppartition_tuple(V, vp(1, 3, 3, 4)) == "(1,3,3)");
    Poset C = make_claw(3);
    CHECK(ppartition_tuple(C, PPartition{{0, 1, 2, 0}, 3}) == "(0,1,2,0)");
}
