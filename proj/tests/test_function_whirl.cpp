#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "whirl/function_whirl.hpp"
#include "whirl/orbit.hpp"
#include "whirl/rational.hpp"

using namespace whirl;

TEST_CASE("family membership") {
    auto inj = FunctionFamily::injective(3, 6, 1);
    CHECK(inj.contains({{4, 1, 5}}));
    CHECK(!inj.contains({{4, 4, 5}}));
    auto sur = FunctionFamily::surjective(3, 3, 1);
    CHECK(sur.contains({{2, 1, 3}}));
    CHECK(!sur.contains({{2, 2, 3}}));
    auto inj2 = FunctionFamily::injective(3, 4, 2);
    CHECK(inj2.contains({{1, 1, 2}}));
    CHECK(!inj2.contains({{1, 1, 1}}));
}

TEST_CASE("enumeration sizes") {
    CHECK(FunctionFamily::injective(3, 6, 1).enumerate().size() == 120);  // 6*5*4
    CHECK(FunctionFamily::surjective(3, 3, 1).enumerate().size() == 6);
    CHECK(FunctionFamily::surjective(4, 2, 1).enumerate().size() == 14);  // 2^4 - 2
    CHECK(FunctionFamily::injective(2, 2, 1).enumerate().size() == 2);
}

TEST_CASE("the orbit of 415 in Inj_1(3,6)") {
    auto F = FunctionFamily::injective(3, 6, 1);
    OneLineFunction f{{4, 1, 5}};
    std::vector<std::string> expect = {"415", "621", "342", "563", "124",
                                       "356", "412", "534", "651", "263"};
    for (const auto& want : expect) {
        CHECK(one_line(f, 6) == want);
        f = whirl_function(F, f);
    }
    CHECK(one_line(f, 6) == "415");  // closed after 10 steps

    // each value appears exactly 5 times across the orbit
    auto orbit = orbit_of([&F](const OneLineFunction& g) { return whirl_function(F, g); },
                          OneLineFunction{{4, 1, 5}});
    REQUIRE(orbit.length() == 10);
    for (int j = 1; j <= 6; ++j) {
        int total = 0;
        for (const auto& g : orbit.states) total += eta(g, j);
        CHECK(total == 5);
        CHECK(orbit_average([j](const OneLineFunction& g) { return Rational(eta(g, j)); },
                            orbit) == Rational(1, 2));
    }
}

TEST_CASE("eta averages n/k on every orbit") {
    struct Grid { int n, k, m; bool surjective; };
    for (Grid g : {Grid{3, 6, 1, false}, Grid{3, 4, 2, false}, Grid{3, 3, 1, true},
                   Grid{4, 2, 1, true}, Grid{2, 2, 1, false}}) {
        auto F = g.surjective ? FunctionFamily::surjective(g.n, g.k, g.m)
                              : FunctionFamily::injective(g.n, g.k, g.m);
        auto orbits = all_orbits(
            [&F](const OneLineFunction& f) { return whirl_function(F, f); }, F.enumerate());
        for (int j = 1; j <= g.k; ++j)
            for (const auto& o : orbits)
                CHECK(orbit_average(
                          [j](const OneLineFunction& f) { return Rational(eta(f, j)); }, o) ==
                      Rational(g.n, g.k));
    }
}

TEST_CASE("custom families") {
    // functions with f(1) even, over [2] -> [4]
    auto F = FunctionFamily::custom(2, 4, "f(1) == 2 || f(1) == 4");
    auto space = F.enumerate();
    CHECK(space.size() == 8);
    for (const auto& f : space) {
        CHECK(f.values[0] % 2 == 0);
        OneLineFunction g = whirl_function(F, f);
        CHECK(F.contains(g));
    }
    CHECK_THROWS(whirl_function_at(F, OneLineFunction{{1, 1}}, 1));  // not in the family
}

TEST_CASE("one-line rendering") {
    CHECK(one_line({{4, 1, 5}}, 6) == "415");
    CHECK(one_line({{10, 2}}, 12) == "10,2");
    CHECK(eta({{2, 1, 2}}, 2) == 2);
    CHECK(eta({{2, 1, 2}}, 3) == 0);
}
