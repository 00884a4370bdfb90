#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "whirl/ppartition.hpp"
#include "whirl/render.hpp"
#include "whirl/whorm.hpp"

using namespace whirl;

namespace {

OrbitBoard super_board(const Poset& P, const PPartition& seed) {
    OrbitBoard orbit = make_orbit_board(P, seed);
    return repeat_board(orbit, default_super_multiple(orbit));
}

void check_partition(const OrbitBoard& board, const std::vector<Whorm>& whorms) {
    std::set<std::pair<int, int>> seen;
    std::size_t cells = 0;
    for (const auto& w : whorms)
        for (const auto& c : w.cells) {
            CHECK(board.rows[c.row].labels[c.element] == c.value);
            seen.insert({c.row, c.element});
            ++cells;
        }
    CHECK(cells == board.length() * board.poset->size());  // disjoint...
    CHECK(seen.size() == cells);                           // ...and covering
}

// within one whorm: each tail column runs 0..t-1, the head runs t-1..k, so
// the value t-1 repeats at every tail-to-head jump
void check_run(const Whorm& w, const WhormMetrics& m, int k) {
    std::map<int, int> counts;
    for (const auto& c : w.cells) ++counts[c.value];
    for (int v = 0; v <= k; ++v) {
        int expected = v < m.tail_length - 1 ? m.tail_count
                       : v == m.tail_length - 1 ? m.tail_count + 1
                                                : 1;
        CHECK(counts[v] == expected);
    }
    CHECK(w.cells.size() ==
          static_cast<std::size_t>(m.tail_count) * m.tail_length + m.head_length);
}

}  // namespace

TEST_CASE("two whorms on the two-tailed k=9 board of (6,6,6)") {
    Poset V = make_claw(2);
    OrbitBoard board = make_orbit_board(V, PPartition{{6, 6, 6}, 9});
    REQUIRE(board.length() == 11);
    CHECK(default_super_multiple(board) == 1);  // alpha = 1: already full length
    auto whorms = decompose_whorms(board);
    REQUIRE(whorms.size() == 2);
    check_partition(board, whorms);
    std::multiset<int> ts;
    for (const auto& w : whorms) {
        WhormMetrics m = whorm_metrics(w, board);
        CHECK(m.tail_length + m.head_length == 11);
        CHECK(m.side == WhormSide::two_tailed);
        CHECK(w.tail_columns == std::vector<int>{0, 1});
        ts.insert(m.tail_length);
        check_run(w, m, 9);
    }
    CHECK(ts == std::multiset<int>{4, 7});  // pairs of tails sum to k+2
    CHECK(board_has_merged_columns(board));
}

TEST_CASE("one-tailed boards alternate left and right whorms") {
    Poset V = make_claw(2);
    OrbitBoard board = super_board(V, PPartition{{1, 3, 3}, 4});  // alpha = 2
    CHECK(board.length() == 12);  // orbit length 4 repeated 3 times
    auto whorms = decompose_whorms(board);
    check_partition(board, whorms);
    CHECK(whorms.size() <= 6);
    int left = 0, right = 0;
    for (const auto& w : whorms) {
        WhormMetrics m = whorm_metrics(w, board);
        CHECK(m.tail_count == 1);
        CHECK(m.tail_length + m.head_length == 6);
        (m.side == WhormSide::left ? left : right) += 1;
        check_run(w, m, 4);
    }
    CHECK(left == right);
    CHECK(!board_has_merged_columns(board));
}

TEST_CASE("whorm bounds on V super-boards") {
    Poset V = make_claw(2);
    for (int k = 1; k <= 6; ++k)
        for (const auto& f : enumerate_ppartitions(V, k)) {
            OrbitBoard board = super_board(V, f);
            auto whorms = decompose_whorms(board);
            check_partition(board, whorms);
            bool two_tailed = board_has_merged_columns(board);
            CHECK(whorms.size() <= (two_tailed ? 2u : 6u));
            for (const auto& w : whorms) {
                WhormMetrics m = whorm_metrics(w, board);
                CHECK(m.tail_length + m.head_length == k + 2);
                CHECK((m.tail_count == 2) == two_tailed);
            }
        }
}

TEST_CASE("tail-sum identities across claw families") {
    for (auto [n, kmax] : {std::pair{2, 6}, {3, 4}, {4, 3}}) {
        Poset C = make_claw(n);
        for (int k = 1; k <= kmax; ++k) {
            std::set<PPartition> done;
            for (const auto& f : enumerate_ppartitions(C, k)) {
                if (done.count(f)) continue;
                OrbitBoard orbit = make_orbit_board(C, f);
                done.insert(orbit.rows.begin(), orbit.rows.end());
                TailSumRecord rec = check_tail_sums(orbit);
                CHECK(rec.ok);
                if (!rec.ok) MESSAGE(rec.failure);
                CHECK(rec.board_length == static_cast<std::size_t>(rec.alpha * (k + 2)));
                CHECK(rec.tails.size() % (rec.alpha + 1) == 0);
            }
        }
    }
}

TEST_CASE("whorm cycle walks head runs in row order") {
    Poset V = make_claw(2);
    OrbitBoard board = super_board(V, PPartition{{1, 3, 3}, 4});
    auto whorms = decompose_whorms(board);
    auto cycle = whorm_cycle(board, whorms);
    CHECK(cycle.size() == whorms.size());  // each whorm heads exactly one run
    std::set<int> ids(cycle.begin(), cycle.end());
    CHECK(ids.size() == cycle.size());
}

TEST_CASE("general decomposition needs the experimental flag") {
    Poset C = make_chain(3);
    OrbitBoard board = make_orbit_board(C, PPartition{{4, 1, 0}, 4});
    CHECK_THROWS(decompose_whorms(board));
    auto whorms = decompose_whorms(board, true);
    check_partition(board, whorms);
    CHECK_THROWS(check_tail_sums(board));
}

TEST_CASE("rendering glyphs follow the decomposition") {
    Poset V = make_claw(2);
    OrbitBoard board = make_orbit_board(V, PPartition{{1, 3, 3}, 4});
    CHECK(render_board(board) == "1 3 3\n2 4 0\n3 3 1\n0 4 2\n");
    OrbitBoard tiny = make_orbit_board(V, PPartition{{0, 0, 0}, 1});
    CHECK(render_board(tiny) == "0 0 0\n0 1 0\n1 1 1\n");
    auto whorms = decompose_whorms(board);
    std::string with = render_board(board, &whorms);
    CHECK(with.find('a') != std::string::npos);
    CHECK(with.size() > render_board(board).size());
}
