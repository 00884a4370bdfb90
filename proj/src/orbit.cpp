#include "whirl/orbit.hpp"

namespace whirl {

OrbitBoard make_orbit_board(const Poset& P, const PPartition& start, std::size_t cap) {
    if (!is_ppartition(P, start))
        throw std::invalid_argument("board seed is not a valid P-partition");
    OrbitBoard board;
    board.poset = std::make_shared<Poset>(P);
    // rows begin at the seed, not the canonical representative
    PPartition f = start;
    do {
        if (board.rows.size() >= cap) throw ResourceError("orbit walk cap exceeded");
        board.rows.push_back(f);
        f = whirl(P, f);
    } while (!(f == start));
    return board;
}

OrbitBoard repeat_board(const OrbitBoard& board, int multiple) {
    if (multiple < 1) throw std::invalid_argument("repetition multiple must be positive");
    OrbitBoard big;
    big.poset = board.poset;
    big.rows.reserve(board.rows.size() * multiple);
    for (int i = 0; i < multiple; ++i)
        big.rows.insert(big.rows.end(), board.rows.begin(), board.rows.end());
    return big;
}

}  // namespace whirl
