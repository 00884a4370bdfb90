#include "whirl/whorm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace whirl {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Whorm> decompose_whorms(const OrbitBoard& board, bool allow_general) {
    const Poset& P = *board.poset;
    if (!P.claw() && !allow_general)
        throw std::invalid_argument("whorm decomposition needs a claw-family poset");
    const int L = static_cast<int>(board.length());
    const int p = P.size();
    if (L == 0) return {};

    auto cell = [p](int row, int element) { return row * p + element; };
    UnionFind uf(static_cast<std::size_t>(L) * p);
    for (int r = 0; r < L; ++r) {
        int next = (r + 1) % L;
        const auto& f = board.rows[r].labels;
        const auto& g = board.rows[next].labels;
        for (int x = 0; x < p; ++x) {
            // down one row in a column, label rising by exactly 1
            if (g[x] == f[x] + 1) uf.unite(cell(r, x), cell(next, x));
            // along a cover x > y within the row, at equal label
            for (int y : P.covers_below(x))
                if (f[x] == f[y]) uf.unite(cell(r, x), cell(r, y));
        }
    }

    std::map<int, Whorm> components;
    for (int r = 0; r < L; ++r)
        for (int x = 0; x < p; ++x)
            components[uf.find(cell(r, x))].cells.push_back({r, x, board.rows[r].labels[x]});

    int bottom = P.claw() ? P.claw()->bottom : -1;
    std::vector<Whorm> whorms;
    for (auto& [root, w] : components) {
        w.id = static_cast<int>(whorms.size());
        w.head_column = bottom;
        std::set<int> outer;
        for (const auto& c : w.cells)
            if (c.element != bottom) outer.insert(c.element);
        w.tail_columns.assign(outer.begin(), outer.end());
        std::sort(w.cells.begin(), w.cells.end());
        whorms.push_back(std::move(w));
    }
    return whorms;
}

WhormMetrics whorm_metrics(const Whorm& w, const OrbitBoard& board) {
    const Poset& P = *board.poset;
    if (!P.claw()) throw std::invalid_argument("whorm metrics need a claw-family poset");
    int k = board.bound();
    int min_head = -1;
    for (const auto& c : w.cells)
        if (c.element == w.head_column && (min_head < 0 || c.value < min_head))
            min_head = c.value;
    if (min_head < 0) throw std::logic_error("whorm never reaches the head column");

    WhormMetrics m;
    m.tail_length = 1 + min_head;
    m.head_length = k + 2 - m.tail_length;
    m.tail_count = static_cast<int>(w.tail_columns.size());
    if (P.claw()->n == 2) {
        if (m.tail_count == 2) m.side = WhormSide::two_tailed;
        else if (m.tail_count == 1)
            m.side = w.tail_columns.front() == P.claw()->outer.front() ? WhormSide::left
                                                                       : WhormSide::right;
    }
    return m;
}

std::vector<int> whorm_cycle(const OrbitBoard& board, const std::vector<Whorm>& whorms) {
    const Poset& P = *board.poset;
    if (!P.claw()) throw std::invalid_argument("the in-front-of order needs a claw-family poset");
    int bottom = P.claw()->bottom;
    const int L = static_cast<int>(board.length());

    std::vector<int> owner(L, -1);
    for (const Whorm& w : whorms)
        for (const auto& c : w.cells)
            if (c.element == bottom) owner[c.row] = w.id;

    // A whorm's head run ends where the label hits k; the next row starts the
    // whorm in front of it. Collect run starts scanning down from row 0.
    std::vector<int> cycle;
    for (int r = 0; r < L; ++r) {
        int prev = (r + L - 1) % L;
        bool run_start = board.rows[prev].labels[bottom] == board.bound() ||
                         owner[r] != owner[prev];
        if (run_start || L == 1) cycle.push_back(owner[r]);
    }
    if (cycle.empty()) cycle.push_back(owner[0]);
    return cycle;
}

bool board_has_merged_columns(const OrbitBoard& board) {
    const Poset& P = *board.poset;
    if (!P.claw()) throw std::invalid_argument("column merging is a claw-family notion");
    const auto& outer = P.claw()->outer;
    const auto& f = board.rows.front().labels;
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (std::size_t j = i + 1; j < outer.size(); ++j)
            if (f[outer[i]] == f[outer[j]]) return true;
    return false;
}

int default_super_multiple(const OrbitBoard& board) {
    const Poset& P = *board.poset;
    if (!P.claw()) throw std::invalid_argument("super multiple is defined for claw boards");
    int a = alpha(P, board.rows.front());
    std::size_t target = static_cast<std::size_t>(a) * (board.bound() + 2);
    if (target % board.length() != 0)
        throw std::logic_error("orbit length does not divide alpha(k+2)");
    return static_cast<int>(target / board.length());
}

TailSumRecord check_tail_sums(const OrbitBoard& orbit_board) {
    TailSumRecord rec;
    const Poset& P = *orbit_board.poset;
    rec.k = orbit_board.bound();
    rec.alpha = alpha(P, orbit_board.rows.front());
    rec.multiple = default_super_multiple(orbit_board);
    OrbitBoard board = repeat_board(orbit_board, rec.multiple);
    rec.board_length = board.length();

    auto whorms = decompose_whorms(board);
    auto cycle = whorm_cycle(board, whorms);
    std::vector<WhormMetrics> metrics;
    for (const Whorm& w : whorms) metrics.push_back(whorm_metrics(w, board));
    for (int id : cycle) rec.tails.push_back(metrics[id].tail_length);

    rec.ok = true;
    auto fail = [&rec](std::string why) {
        rec.ok = false;
        if (rec.failure.empty()) rec.failure = std::move(why);
    };

    const int n = static_cast<int>(rec.tails.size());
    const int window = rec.alpha + 1;
    const int expected = rec.alpha * (rec.k + 2);
    for (const auto& m : metrics)
        if (m.tail_length + m.head_length != rec.k + 2)
            fail("t + h != k + 2 for a whorm with t = " + std::to_string(m.tail_length));
    if (n % window != 0)
        fail("whorm cycle length " + std::to_string(n) + " is not a multiple of alpha+1");
    for (int i = 0; i < n; ++i) {
        int sum = 0;
        for (int j = 0; j < window; ++j) sum += rec.tails[(i + j) % n];
        if (sum != expected)
            fail("tail window at position " + std::to_string(i) + " sums to " +
                 std::to_string(sum) + ", expected " + std::to_string(expected));
        if (rec.tails[(i + window) % n] != rec.tails[i])
            fail("tails at positions " + std::to_string(i) + " and " +
                 std::to_string(i + window) + " differ");
    }

    // Every outer column of the super board meets exactly alpha + 1 whorms;
    // the head column meets all alpha(alpha + 1) of them.
    if (static_cast<int>(whorms.size()) != rec.alpha * window)
        fail("super board has " + std::to_string(whorms.size()) + " whorms, expected " +
             std::to_string(rec.alpha * window));
    for (int x : P.claw()->outer) {
        std::set<int> seen;
        for (const Whorm& w : whorms)
            for (const auto& c : w.cells)
                if (c.element == x) seen.insert(w.id);
        if (static_cast<int>(seen.size()) != window)
            fail("column " + P.name(x) + " meets " + std::to_string(seen.size()) +
                 " whorms, expected " + std::to_string(window));
    }
    return rec;
}

}  // namespace whirl
