#pragma once

#include <string>
#include <vector>

#include "satdom/covers.hpp"
#include "satdom/grid.hpp"
#include "satdom/tilings.hpp"

namespace satdom {

// ASCII renderings use one letter per fragment, assigned row-major
// (A..Z then a..z, cycling); '.' marks holes inside the bounding box.
std::string render_tiling_ascii(const FragmentTiling& t);

// A saturated covering renders through its star components.
std::string render_covering_ascii(const DominoCovering& c);

// Board cells '#', on-board centers 'O', off-board centers 'o'.
std::string render_cover_ascii(const MaxFragmentCover& c);
std::string render_marked_ascii(const Board& b, const std::vector<Cell>& marked);

// SVG: fragments cycle through a fixed 12-color palette in fragment index
// order, centers get a dot, parts of cover tiles poking off the board are
// hatched.
std::string render_tiling_svg(const FragmentTiling& t);
std::string render_covering_svg(const DominoCovering& c);
std::string render_cover_svg(const MaxFragmentCover& c);
std::string render_marked_svg(const Board& b, const std::vector<Cell>& marked);

}  // namespace satdom
