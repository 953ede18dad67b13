#include "hodge/render.hpp"

#include <sstream>

namespace hodge {

std::vector<std::string> render_diamond_lines(const HodgeDiamond& d) {
    const int n = d.dim();
    std::vector<std::string> rows;
    rows.reserve(static_cast<std::size_t>(2 * n) + 1);
    std::size_t widest = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        std::ostringstream os;
        const int p_hi = std::min(k, n);
        const int p_lo = std::max(0, k - n);
        for (int p = p_hi; p >= p_lo; --p) {
            if (p != p_hi) os << ' ';
            os << d.at(p, k - p);
        }
        rows.push_back(os.str());
        widest = std::max(widest, rows.back().size());
    }
    for (auto& row : rows) {
        const std::size_t pad = widest - row.size();
        const std::size_t left = pad / 2;
        row = std::string(left, ' ') + row + std::string(pad - left, ' ');
    }
    return rows;
}

std::string render_diamond(const HodgeDiamond& d) {
    std::string out;
    for (const auto& line : render_diamond_lines(d)) {
        out += line;
        out += '\n';
    }
    return out;
}

HodgeDiamond parse_rendered_diamond(const std::vector<std::string>& lines) {
    if (lines.empty() || lines.size() % 2 == 0)
        throw ValidationError("rendered diamond must have an odd, positive number of rows");
    const int n = static_cast<int>(lines.size() / 2);
    std::vector<std::vector<int>> entries(static_cast<std::size_t>(n) + 1,
                                          std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int k = 0; k <= 2 * n; ++k) {
        std::istringstream is(lines[static_cast<std::size_t>(k)]);
        const int p_hi = std::min(k, n);
        const int p_lo = std::max(0, k - n);
        for (int p = p_hi; p >= p_lo; --p) {
            int value = 0;
            if (!(is >> value))
                throw ValidationError("rendered diamond row " + std::to_string(k) + " is short");
            entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(k - p)] = value;
        }
        int extra = 0;
        if (is >> extra) throw ValidationError("rendered diamond row " + std::to_string(k) + " has extra entries");
    }
    return HodgeDiamond(n, std::move(entries));
}

HodgeDiamond parse_rendered_diamond(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return parse_rendered_diamond(lines);
}

}  // namespace hodge
