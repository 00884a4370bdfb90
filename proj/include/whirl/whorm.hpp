#pragma once

#include <string>
#include <vector>

#include "whirl/orbit.hpp"

namespace whirl {

// One board cell: (row, element) with its label.
struct WhirlCell {
    int row;
    int element;
    int value;

    bool operator==(const WhirlCell&) const = default;
    auto operator<=>(const WhirlCell&) const = default;
};

// A maximal whorm-connected set of board cells. Cells are connected by
// moving down one row within a column with the value rising by exactly 1,
// or by jumping along a cover relation within a row at equal value.
struct Whorm {
    int id = 0;
    std::vector<WhirlCell> cells;
    std::vector<int> tail_columns;  // outer elements touched (claw boards)
    int head_column = -1;           // the bottom element
};

enum class WhormSide { left, right, two_tailed, multi };

struct WhormMetrics {
    int tail_length = 0;  // t = 1 + min label in the head column
    int head_length = 0;  // h = k + 2 - t
    int tail_count = 0;   // distinct outer columns
    WhormSide side = WhormSide::multi;  // left/right/two_tailed on V boards
};

// Partition the board's cells into whorms. Boards are cylinders: row
// arithmetic is mod board length, so whorms may wrap. Requires a claw-family
// poset unless allow_general is set (general decomposition is experimental
// and carries no metric support).
std::vector<Whorm> decompose_whorms(const OrbitBoard& board, bool allow_general = false);

WhormMetrics whorm_metrics(const Whorm& w, const OrbitBoard& board);

// Whorm ids in the cyclic "in front of" order, scanning the head column
// downward from row 0; entry i+1 is in front of entry i.
std::vector<int> whorm_cycle(const OrbitBoard& board, const std::vector<Whorm>& whorms);

// True iff some (equivalently, every) row has two equal outer labels merged
// into one whorm; on V this is the two-tailed case f(l) = f(r).
bool board_has_merged_columns(const OrbitBoard& board);

// The super-orbit multiple alpha(k+2) / orbit length (an integer since
// whirl^(alpha(k+2)) is the identity on claw families).
int default_super_multiple(const OrbitBoard& board);

// Exhaustive verification of the tail-sum identities on a (super) orbit
// board: every window of alpha+1 consecutive tails sums to alpha(k+2);
// tails repeat with period alpha+1; every column meets exactly alpha+1
// whorms; t + h = k + 2 throughout.
struct TailSumRecord {
    int alpha = 0;
    int k = 0;
    std::size_t board_length = 0;
    int multiple = 1;
    std::vector<int> tails;  // in whorm-cycle order
    bool ok = false;
    std::string failure;  // pinpoints the first failing window, empty when ok
};

TailSumRecord check_tail_sums(const OrbitBoard& orbit_board);

}  // namespace whirl
