#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dodec {

// ---------------------------------------------------------------------------
// Cell states.
// ---------------------------------------------------------------------------

enum class St : std::uint8_t { W = 0, B = 1, R = 2, G = 3 };

int weight(St s);
char state_char(St s);
std::optional<St> state_from_char(char c);

// ---------------------------------------------------------------------------
// Face structure of the right-angled dodecahedron.
//
// Every cell carries the same face numbering: 0 is the face on the
// supporting plane of its sheet (for a cell on the upper sheet, the face
// looking down at H), 1..5 the crown of faces around it, 11 the opposite
// face, and 6..10 the remaining band, with 6 touching 5 and 1, 7 touching
// 1 and 2, and so on. Two faces are adjacent exactly when they share an
// edge; adjacent faces of a right-angled cell meet at 90 degrees.
// ---------------------------------------------------------------------------

bool faces_adjacent(int a, int b);

// The five faces adjacent to `f`, in no particular order.
const std::array<int, 5>& face_ring(int f);

// ---------------------------------------------------------------------------
// Reduced words over the twelve face reflections.
//
// Reflections in the face planes of one fixed root cell generate a group
// in which the reflections are involutions and two of them commute exactly
// when the faces are adjacent (perpendicular planes). Copies of the root
// cell tile the space, one per group element, and crossing face f of the
// cell at element g lands at g*r_f, with f read in the frame transported
// to g. Cells are therefore identified with canonical words: shortest
// representatives, lexicographically least among the commutation class.
// ---------------------------------------------------------------------------

using Word = std::vector<std::uint8_t>;

// Appends one generator to a canonical word, returning a canonical word.
Word mul(Word w, int gen);

// Canonicalizes an arbitrary word.
Word canon(const Word& w);

std::string word_str(const Word& w);

// The twelve neighbors of a cell, indexed by the crossed face.
std::array<Word, 12> cell_neighbors(const Word& w);

bool cells_adjacent(const Word& a, const Word& b);

// Breadth-first distance between two cells, or cutoff+1 if farther.
int cell_distance(const Word& a, const Word& b, int cutoff);

// All cells within distance r of c (including c), sorted.
std::vector<Word> cell_ball(const Word& c, int r);

// ---------------------------------------------------------------------------
// The pentagrid: the tiling of H by right-angled pentagons.
// ---------------------------------------------------------------------------

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Pentagrid {
 public:
  // Builds all tiles of level <= max_level together with a full corona
  // margin, so every tile at or below max_level has all five neighbors.
  explicit Pentagrid(int max_level);

  struct Tile {
    int id = -1;
    bool is_v = false;       // vertex-child tile (caps a lone vertex)
    int corona = 0;          // construction shell
    int level = -1;          // tile distance from the central tile
    int sector = 0;          // 0 for the center, else 1..5
    int index = 0;           // number within the sector; center has 0
    int owner = -1;          // tile this one was built against
    std::array<int, 5> side{{-1, -1, -1, -1, -1}};      // neighbor tile ids
    std::array<int, 5> side_back{{-1, -1, -1, -1, -1}}; // their index of us
    std::array<int, 5> corner{{-1, -1, -1, -1, -1}};    // corner[k] joins side k and k+1
    std::vector<int> key;    // angular sort key within the sector
    // Conventional face labels. rs_side[j] (j in 1..5) is the side slot
    // carrying crown label j; rs_corner[u-6] (u in 6..10) the corner slot
    // under upper face u. rho maps a conventional label to the reflection
    // generator of the cell over this tile.
    std::array<int, 6> rs_side{};
    std::array<int, 5> rs_corner{};
    std::array<int, 12> rho{};
    // Transported frame: the reflection generator attached to each side and
    // corner slot of this tile (crown generators 1..5, corner ones 6..10).
    std::array<int, 5> intr_side{};
    std::array<int, 5> intr_corner{};
    Word word;               // canonical word of the upper-sheet cell
  };

  struct Corner {
    std::array<int, 4> tiles{{-1, -1, -1, -1}};
    int count = 0;
  };

  int tile_count() const { return static_cast<int>(tiles_.size()); }
  const Tile& tile(int id) const { return tiles_.at(id); }
  const Corner& corner(int id) const { return corners_.at(id); }
  int max_level() const { return max_level_; }

  // Lookup by sector/index naming; -1 when absent.
  int find(int sector, int index) const;
  int center() const { return 0; }
  int head(int sector) const;

  // The side index of `a` facing tile b; throws if not adjacent.
  int side_to(int a, int b) const;

  // The two corner ids at the ends of side s of tile t.
  std::pair<int, int> side_corners(int t, int s) const;

  // The corner shared by all tiles of `ids` (up to 4), or -1.
  int common_corner(const std::vector<int>& ids) const;

  // Upper-face label (6..10) of tile t whose corner slot holds corner id c.
  int upper_face_at_corner(int t, int c) const;

  // Tiles along the line containing side s of tile t, on the t side of the
  // line. The result walks `steps` tiles in each direction from t, with t
  // in the middle; entries are -1 where the grid ends.
  std::vector<int> row(int t, int s, int steps) const;

 private:
  int new_corner();
  void link_lateral(int p, int q);
  void transport_frame(int t);
  void assign_key(int t, std::vector<int> key, int level);

  int max_level_;
  std::vector<Tile> tiles_;
  std::vector<Corner> corners_;
  std::map<int, int> cap_at_corner_;           // lone corner id -> V tile
  std::map<std::pair<int, int>, int> by_name_; // (sector,index) -> id
};

// ---------------------------------------------------------------------------
// Chart: pentagrid plus cell addressing.
//
// Text addresses name a base tile ("0" or "(s)-n"), the sheet ("b:" prefix
// selects the lower sheet), and a stacking suffix of conventional face
// labels ("_7_11" and so on), each read in the frame transported along the
// suffix so far. Cells reached by engine evolution outside any named
// neighborhood print in a raw form "@g1.g2...." listing reflection
// generators from the root cell.
// ---------------------------------------------------------------------------

class Chart {
 public:
  explicit Chart(int max_level = 7);

  const Pentagrid& grid() const { return grid_; }

  // Cell words.
  Word cell(int tile, bool lower = false) const;
  Word stack(int tile, bool lower, const std::vector<int>& faces) const;

  // The generator appended when crossing conventional face `label` from a
  // cell based on `tile` (any stacking depth, per the transport rule).
  int rho(int tile, int label) const;

  // Address text.
  Word parse(const std::string& address) const;
  std::string name(const Word& w) const;
  void register_name(const Word& w, const std::string& s) const;
  std::string tile_name(int tile) const;
  std::string address_text(int tile, bool lower, const std::vector<int>& faces) const;

 private:
  Pentagrid grid_;
  mutable std::map<Word, std::string> names_;
};

}  // namespace dodec
