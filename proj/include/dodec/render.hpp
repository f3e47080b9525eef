#pragma once

#include <array>
#include <string>

#include "dodec/engine.hpp"

// SVG pictures of a configuration.  The disc projection draws the window
// around the central tile as right-angled pentagons in the Poincaré disc:
// each pentagon is filled with its upper-sheet cell's color, a smaller
// pentagon inside it shows the lower-sheet cell when that is not blank,
// and stacked cells appear as discs anchored on the face their address
// names.  The side view lines the populated columns up left to right and
// stacks each column's cells vertically: lower sheet below, upper sheet
// above, taller stacks further up.  Every drawn cell carries data-cell
// and data-state attributes, so the state content of a picture can be
// read back and compared exactly.

namespace dodec {

struct RenderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pentagon geometry for one tile, precomputed from the pentagrid
// combinatorics (see tools/gen_layout.cpp, which writes
// src/layout_data.cpp).  Vertices are in draw order; edge j runs from
// vertex j to vertex j+1.  edge_of[s] is the polygon edge lying on side
// slot s of the tile, corner_of[k] the polygon vertex at corner slot k.
struct TileLayout {
  int sector;
  int index;
  double vx[5];
  double vy[5];
  int edge_of[5];
  int corner_of[5];
};

const TileLayout* find_tile_layout(int sector, int index);
int tile_layout_count();

struct RenderSpec {
  char projection = 'h';     // 'h' disc window, 'v' stacked side view
  std::string center = "0";  // address of the window's central tile
  int radius = 4;            // window radius in tiles, at most 4
  std::array<std::string, 4> color = {"#ffffff", "#2b6cb8", "#d43a3a",
                                      "#2f9e44"};  // W B R G
  bool face_marks = true;    // draw stacked cells as face marks
};

std::string render_svg(const Chart& chart, const Configuration& cfg,
                       const RenderSpec& spec);

// The (cell, state) pairs embedded in a rendered picture, in document
// order; the exact inverse of what render_svg wrote.
std::vector<std::pair<std::string, std::string>> svg_cell_states(
    const std::string& svg);

}  // namespace dodec
