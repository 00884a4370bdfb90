#include "whirl/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace whirl {

std::string render_board(const OrbitBoard& board, const std::vector<Whorm>* whorms, bool color) {
    const Poset& P = *board.poset;
    const auto& order = P.display_order();
    const int rows = static_cast<int>(board.length());
    const int cols = P.size();

    std::map<std::pair<int, int>, int> owner;  // (row, element) -> whorm id
    if (whorms)
        for (const Whorm& w : *whorms)
            for (const auto& c : w.cells) owner[{c.row, c.element}] = w.id;

    std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(cols));
    std::vector<std::size_t> width(cols, 0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::string text = std::to_string(board.rows[r].labels[order[c]]);
            if (whorms) text += static_cast<char>('a' + owner.at({r, order[c]}) % 26);
            width[c] = std::max(width[c], text.size());
            cells[r][c] = std::move(text);
        }

    static const char* palette[] = {"\033[31m", "\033[32m", "\033[33m", "\033[34m",
                                    "\033[35m", "\033[36m", "\033[91m", "\033[92m"};
    std::ostringstream out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c) out << ' ';
            std::string pad(width[c] - cells[r][c].size(), ' ');
            if (whorms && color) {
                int id = owner.at({r, order[c]});
                out << pad << palette[id % 8] << cells[r][c] << "\033[0m";
            } else {
                out << pad << cells[r][c];
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace whirl
