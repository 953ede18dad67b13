#pragma once

#include <string>
#include <vector>

#include "hodge/diamond.hpp"

namespace hodge {

// Text diamond, one line per total degree k = 0..2n. Row k lists h[p][q] with
// p + q = k, p decreasing left to right, space-separated, every line
// center-padded to the widest row. parse_rendered_diamond inverts it exactly.
std::vector<std::string> render_diamond_lines(const HodgeDiamond& d);

// The lines joined with '\n', with a trailing newline.
std::string render_diamond(const HodgeDiamond& d);

HodgeDiamond parse_rendered_diamond(const std::vector<std::string>& lines);
HodgeDiamond parse_rendered_diamond(const std::string& text);

}  // namespace hodge
