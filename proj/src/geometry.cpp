#include "dodec/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace dodec {

// ---------------------------------------------------------------------------
// States.
// ---------------------------------------------------------------------------

int weight(St s) { return static_cast<int>(s); }

char state_char(St s) {
  switch (s) {
    case St::W: return 'W';
    case St::B: return 'B';
    case St::R: return 'R';
    case St::G: return 'G';
  }
  return '?';
}

std::optional<St> state_from_char(char c) {
  switch (c) {
    case 'W': return St::W;
    case 'B': return St::B;
    case 'R': return St::R;
    case 'G': return St::G;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Face adjacency.
// ---------------------------------------------------------------------------

namespace {

struct AdjTable {
  bool adj[12][12] = {};
  std::array<std::array<int, 5>, 12> ring{};
  AdjTable() {
    static const int pairs[][2] = {
        {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},   // bottom against the crown
        {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10}, // top against the band
        {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},   // crown cycle
        {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6},  // band cycle
        {6, 5},  {6, 1},  {7, 1},  {7, 2},  {8, 2},   // band against crown
        {8, 3},  {9, 3},  {9, 4},  {10, 4}, {10, 5},
    };
    for (auto& p : pairs) {
      adj[p[0]][p[1]] = true;
      adj[p[1]][p[0]] = true;
    }
    for (int f = 0; f < 12; ++f) {
      int k = 0;
      for (int g = 0; g < 12; ++g)
        if (adj[f][g]) ring[f][k++] = g;
      assert(k == 5);
    }
  }
};

const AdjTable& adj_table() {
  static const AdjTable t;
  return t;
}

}  // namespace

bool faces_adjacent(int a, int b) { return adj_table().adj[a][b]; }

const std::array<int, 5>& face_ring(int f) { return adj_table().ring[f]; }

// ---------------------------------------------------------------------------
// Canonical words.
//
// A word is kept shortest (no generator can cancel against an equal one with
// only commuting letters between) and lexicographically least within its
// commutation class. Appending preserves the form: the new letter either
// cancels, or is inserted as far left as commuting larger letters allow.
// ---------------------------------------------------------------------------

namespace {

void append_reduced(Word& w, int g) {
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (w[i] == g) {
      w.erase(w.begin() + i);
      return;
    }
    if (!faces_adjacent(w[i], g)) break;
  }
  int pos = static_cast<int>(w.size());
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (!faces_adjacent(w[i], g)) break;
    if (w[i] > g) pos = i;
  }
  w.insert(w.begin() + pos, static_cast<std::uint8_t>(g));
}

}  // namespace

Word mul(Word w, int gen) {
  append_reduced(w, gen);
  return w;
}

Word canon(const Word& w) {
  Word out;
  for (int g : w) append_reduced(out, g);
  return out;
}

std::string word_str(const Word& w) {
  std::string s = "@";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(static_cast<int>(w[i]));
  }
  return s;
}

std::array<Word, 12> cell_neighbors(const Word& w) {
  std::array<Word, 12> out;
  for (int g = 0; g < 12; ++g) out[g] = mul(w, g);
  return out;
}

bool cells_adjacent(const Word& a, const Word& b) {
  for (int g = 0; g < 12; ++g)
    if (mul(a, g) == b) return true;
  return false;
}

int cell_distance(const Word& a, const Word& b, int cutoff) {
  if (a == b) return 0;
  std::set<Word> seen{a};
  std::deque<std::pair<Word, int>> q{{a, 0}};
  while (!q.empty()) {
    auto [w, d] = q.front();
    q.pop_front();
    if (d == cutoff) continue;
    for (int g = 0; g < 12; ++g) {
      Word n = mul(w, g);
      if (n == b) return d + 1;
      if (seen.insert(n).second) q.emplace_back(std::move(n), d + 1);
    }
  }
  return cutoff + 1;
}

std::vector<Word> cell_ball(const Word& c, int r) {
  std::set<Word> seen{c};
  std::deque<std::pair<Word, int>> q{{c, 0}};
  while (!q.empty()) {
    auto [w, d] = q.front();
    q.pop_front();
    if (d == r) continue;
    for (int g = 0; g < 12; ++g) {
      Word n = mul(w, g);
      if (seen.insert(n).second) q.emplace_back(std::move(n), d + 1);
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Pentagrid construction.
//
// The disc is grown shell by shell. Each free boundary edge receives an
// edge-child tile; each boundary corner lying between two free edges of the
// same tile (a lone corner) receives a vertex-child tile capping it.
// Consecutive new tiles along the walk share a lateral side. All side lists
// are stored counterclockwise, with side[k] running from corner[k-1] to
// corner[k].
//
// Edge children use sides [inner, lateral-cw, child-a, child-b, lateral-ccw]
// at slots 0..4; vertex children use [lateral-cw, c1, c2, c3, lateral-ccw].
//
// Conventional crown labels: edge children are labeled counterclockwise
// starting from the side facing the owner; vertex children clockwise
// starting from the counterclockwise lateral. The central tile's labels
// follow its fixed fan. Upper-face labels 6..10 sit over the corners between
// crown labels (5,1), (1,2), (2,3), (3,4), (4,5) respectively.
// ---------------------------------------------------------------------------

int Pentagrid::new_corner() {
  corners_.push_back(Corner{});
  return static_cast<int>(corners_.size()) - 1;
}

namespace {

void corner_add(Pentagrid::Corner& c, int tile) {
  assert(c.count < 4);
  c.tiles[c.count++] = tile;
}

}  // namespace

void Pentagrid::link_lateral(int p, int q) {
  Tile& P = tiles_[p];
  Tile& Q = tiles_[q];
  int qs = Q.is_v ? 0 : 1;
  P.side[4] = q;
  P.side_back[4] = qs;
  Q.side[qs] = p;
  Q.side_back[qs] = 4;
  assert(P.corner[4] == (Q.is_v ? Q.corner[4] : Q.corner[0]));
  int x = new_corner();
  P.corner[3] = x;
  Q.corner[Q.is_v ? 0 : 1] = x;
  corner_add(corners_[x], p);
  corner_add(corners_[x], q);
}

void Pentagrid::transport_frame(int t) {
  Tile& N = tiles_[t];
  const Tile& S = tiles_[N.side[0]];
  int i = N.side_back[0];
  // Crossing a side mirrors the source tile onto the new one; the mirror
  // fixes the shared side and reverses the cyclic order, so transported
  // labels run backwards from the shared side.
  for (int d = 0; d < 5; ++d) {
    N.intr_side[(10 - d) % 5] = S.intr_side[(i + d) % 5];
    N.intr_corner[(9 - d) % 5] = S.intr_corner[(i + d) % 5];
  }
  N.word = mul(S.word, S.intr_side[i]);
}

Pentagrid::Pentagrid(int max_level) : max_level_(max_level) {
  if (max_level < 2) throw GridError("grid radius too small");
  int max_corona = max_level + 1;

  // Central tile.
  {
    Tile c;
    c.id = 0;
    c.level = 0;
    for (int k = 0; k < 5; ++k) {
      c.corner[k] = new_corner();
      corner_add(corners_[k], 0);
    }
    // Side slot k faces head k+1; the fan puts crown label 1 on the side
    // toward head 3 and counts clockwise from there.
    c.intr_side = {3, 2, 1, 5, 4};
    c.intr_corner = {8, 7, 6, 10, 9};
    c.rs_side = {0, 2, 1, 0, 4, 3};
    c.rs_corner = {2, 1, 0, 4, 3};
    tiles_.push_back(std::move(c));
  }

  struct BEdge {
    int t, s;
  };
  std::vector<BEdge> boundary = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}};

  for (int corona = 1; corona <= max_corona; ++corona) {
    std::vector<int> walk;
    const std::size_t m = boundary.size();
    for (std::size_t k = 0; k < m; ++k) {
      auto [t, s] = boundary[k];
      // Edge child over side s of t.
      {
        Tile e;
        e.id = static_cast<int>(tiles_.size());
        e.is_v = false;
        e.corona = corona;
        e.owner = t;
        e.side[0] = t;
        e.side_back[0] = s;
        tiles_.push_back(std::move(e));
        Tile& E = tiles_.back();
        Tile& T = tiles_[t];
        T.side[s] = E.id;
        T.side_back[s] = 0;
        E.corner[4] = T.corner[s];
        E.corner[0] = T.corner[(s + 4) % 5];
        corner_add(corners_[E.corner[4]], E.id);
        corner_add(corners_[E.corner[0]], E.id);
        E.corner[2] = new_corner();
        corner_add(corners_[E.corner[2]], E.id);
        walk.push_back(E.id);
      }
      auto [t2, s2] = boundary[(k + 1) % m];
      if (t2 == t && s2 == (s + 1) % 5) {
        // Lone corner between two free sides of t: cap it.
        int c = tiles_[t].corner[s];
        Tile v;
        v.id = static_cast<int>(tiles_.size());
        v.is_v = true;
        v.corona = corona;
        v.owner = t;
        v.corner[4] = c;
        tiles_.push_back(std::move(v));
        Tile& V = tiles_.back();
        corner_add(corners_[c], V.id);
        V.corner[1] = new_corner();
        V.corner[2] = new_corner();
        corner_add(corners_[V.corner[1]], V.id);
        corner_add(corners_[V.corner[2]], V.id);
        cap_at_corner_[c] = V.id;
        walk.push_back(V.id);
      }
    }
    for (std::size_t i = 0; i < walk.size(); ++i)
      link_lateral(walk[i], walk[(i + 1) % walk.size()]);
    for (int id : walk) {
      Tile& T = tiles_[id];
      if (T.is_v) {
        T.rs_side = {0, 4, 3, 2, 1, 0};
        T.rs_corner = {4, 3, 2, 1, 0};
      } else {
        T.rs_side = {0, 0, 1, 2, 3, 4};
        T.rs_corner = {4, 0, 1, 2, 3};
      }
      transport_frame(id);
    }
    boundary.clear();
    for (int id : walk) {
      if (tiles_[id].is_v)
        boundary.insert(boundary.end(), {{id, 1}, {id, 2}, {id, 3}});
      else
        boundary.insert(boundary.end(), {{id, 2}, {id, 3}});
    }
  }

  // rho: conventional label -> reflection generator, per tile.
  for (Tile& t : tiles_) {
    t.rho[0] = 0;
    t.rho[11] = 11;
    for (int j = 1; j <= 5; ++j) t.rho[j] = t.intr_side[t.rs_side[j]];
    for (int u = 0; u < 5; ++u) t.rho[6 + u] = t.intr_corner[t.rs_corner[u]];
  }

  // Levels by breadth-first search, then sector trees for the numbering.
  {
    std::deque<int> q{0};
    for (Tile& t : tiles_) t.level = -1;
    tiles_[0].level = 0;
    while (!q.empty()) {
      int id = q.front();
      q.pop_front();
      for (int n : tiles_[id].side)
        if (n >= 0 && tiles_[n].level < 0) {
          tiles_[n].level = tiles_[id].level + 1;
          q.push_back(n);
        }
    }
  }
  for (int s = 1; s <= 5; ++s) {
    int diag_corner = tiles_[0].corner[(s + 3) % 5];
    auto it = cap_at_corner_.find(diag_corner);
    assert(it != cap_at_corner_.end());
    tiles_[it->second].sector = s;
    assign_key(it->second, {0}, 2);
    tiles_[tiles_[0].side[s - 1]].sector = s;
    assign_key(tiles_[0].side[s - 1], {1}, 1);
  }
  for (int s = 1; s <= 5; ++s) {
    std::vector<int> ids;
    for (const Tile& t : tiles_)
      if (t.sector == s) ids.push_back(t.id);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      const Tile& ta = tiles_[a];
      const Tile& tb = tiles_[b];
      if (ta.level != tb.level) return ta.level < tb.level;
      return ta.key < tb.key;
    });
    for (std::size_t i = 0; i < ids.size(); ++i) {
      tiles_[ids[i]].index = static_cast<int>(i) + 1;
      by_name_[{s, static_cast<int>(i) + 1}] = ids[i];
    }
  }
}

void Pentagrid::assign_key(int t, std::vector<int> key, int level) {
  Tile& T = tiles_[t];
  assert(T.level == level);
  T.key = key;
  // Propagate the sector later via the caller loop; here fill descendants.
  auto child = [&](int id, int rank, int lv) {
    if (id < 0) return;
    std::vector<int> k = key;
    k.push_back(rank);
    tiles_[id].sector = T.sector;
    assign_key(id, std::move(k), lv);
  };
  auto cap = [&](int corner_id) -> int {
    auto it = cap_at_corner_.find(corner_id);
    return it == cap_at_corner_.end() ? -1 : it->second;
  };
  // Sectors are set before recursion by the constructor for roots; children
  // inherit inside child().
  if (T.is_v) {
    child(T.side[1], 0, level + 1);
    child(cap(T.corner[1]), 1, level + 2);
    child(T.side[2], 2, level + 1);
    child(cap(T.corner[2]), 3, level + 2);
    child(T.side[3], 4, level + 1);
  } else {
    child(T.side[2], 0, level + 1);
    child(cap(T.corner[2]), 1, level + 2);
    child(T.side[3], 2, level + 1);
  }
}

int Pentagrid::find(int sector, int index) const {
  if (sector == 0 && index == 0) return 0;
  auto it = by_name_.find({sector, index});
  return it == by_name_.end() ? -1 : it->second;
}

int Pentagrid::head(int sector) const { return tiles_[0].side[sector - 1]; }

int Pentagrid::side_to(int a, int b) const {
  const Tile& t = tiles_.at(a);
  for (int s = 0; s < 5; ++s)
    if (t.side[s] == b) return s;
  throw GridError("tiles are not adjacent");
}

std::pair<int, int> Pentagrid::side_corners(int t, int s) const {
  const Tile& T = tiles_.at(t);
  return {T.corner[(s + 4) % 5], T.corner[s]};
}

int Pentagrid::common_corner(const std::vector<int>& ids) const {
  if (ids.empty()) return -1;
  for (int c = 0; c < 5; ++c) {
    int cand = tiles_.at(ids[0]).corner[c];
    bool all = true;
    for (int id : ids) {
      bool has = false;
      for (int k = 0; k < 5; ++k)
        if (tiles_.at(id).corner[k] == cand) has = true;
      if (!has) {
        all = false;
        break;
      }
    }
    if (all) return cand;
  }
  return -1;
}

int Pentagrid::upper_face_at_corner(int t, int c) const {
  const Tile& T = tiles_.at(t);
  for (int u = 0; u < 5; ++u)
    if (T.corner[T.rs_corner[u]] == c) return 6 + u;
  throw GridError("corner does not belong to the tile");
}

std::vector<int> Pentagrid::row(int t, int s, int steps) const {
  // A row position: the current tile, the index of its side on the line,
  // and the corner through which it was entered (-1 to start).
  auto advance = [&](int T, int S, int entry) -> std::array<int, 3> {
    auto [ca, cb] = side_corners(T, S);
    int c = (entry == ca) ? cb : ca;
    int sp = (c == tiles_[T].corner[S]) ? (S + 1) % 5 : (S + 4) % 5;
    int N = tiles_[T].side[sp];
    if (N < 0) return {-1, -1, -1};
    int m = tiles_[T].side_back[sp];
    int s2 = (tiles_[N].corner[m] == c) ? (m + 1) % 5 : (m + 4) % 5;
    return {N, s2, c};
  };
  std::vector<int> fwd, bwd;
  auto [ca, cb] = side_corners(t, s);
  for (int dir = 0; dir < 2; ++dir) {
    int T = t, S = s, entry = dir == 0 ? ca : cb;
    auto& out = dir == 0 ? fwd : bwd;
    for (int k = 0; k < steps; ++k) {
      auto r = advance(T, S, entry);
      out.push_back(r[0]);
      if (r[0] < 0) {
        out.resize(steps, -1);
        break;
      }
      T = r[0];
      S = r[1];
      entry = r[2];
    }
  }
  std::vector<int> out(bwd.rbegin(), bwd.rend());
  out.push_back(t);
  out.insert(out.end(), fwd.begin(), fwd.end());
  return out;
}

// ---------------------------------------------------------------------------
// Chart.
// ---------------------------------------------------------------------------

Chart::Chart(int max_level) : grid_(max_level) {}

Word Chart::cell(int tile, bool lower) const {
  Word w = grid_.tile(tile).word;
  if (lower) w = mul(w, 0);
  return w;
}

int Chart::rho(int tile, int label) const {
  if (label < 0 || label > 11) throw GridError("face label out of range");
  return grid_.tile(tile).rho[label];
}

Word Chart::stack(int tile, bool lower, const std::vector<int>& faces) const {
  Word w = cell(tile, lower);
  for (int f : faces) w = mul(w, rho(tile, f));
  return w;
}

std::string Chart::tile_name(int tile) const {
  const auto& t = grid_.tile(tile);
  if (t.id == 0) return "0";
  std::ostringstream os;
  os << "(" << t.sector << ")-" << t.index;
  return os.str();
}

std::string Chart::address_text(int tile, bool lower,
                                const std::vector<int>& faces) const {
  std::string s;
  if (lower) s += "b:";
  s += tile_name(tile);
  for (int f : faces) s += "_" + std::to_string(f);
  return s;
}

Word Chart::parse(const std::string& address) const {
  const std::string& a = address;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> GridError {
    return GridError("bad address '" + address + "': " + why);
  };
  if (!a.empty() && a[0] == '@') {
    Word w;
    i = 1;
    while (i < a.size()) {
      std::size_t j = i;
      while (j < a.size() && std::isdigit(static_cast<unsigned char>(a[j]))) ++j;
      if (j == i) throw fail("expected generator digits");
      int g = std::stoi(a.substr(i, j - i));
      if (g > 11) throw fail("generator out of range");
      w = mul(w, g);
      i = j;
      if (i < a.size()) {
        if (a[i] != '.') throw fail("expected '.'");
        ++i;
      }
    }
    return w;
  }
  bool lower = false;
  if (a.rfind("b:", 0) == 0) {
    lower = true;
    i = 2;
  }
  int tile;
  if (i < a.size() && a[i] == '0' && (i + 1 == a.size() || a[i + 1] == '_')) {
    tile = 0;
    ++i;
  } else if (i < a.size() && a[i] == '(') {
    std::size_t close = a.find(')', i);
    if (close == std::string::npos) throw fail("unclosed sector");
    int sector = std::stoi(a.substr(i + 1, close - i - 1));
    if (sector < 1 || sector > 5) throw fail("sector out of range");
    if (close + 1 >= a.size() || a[close + 1] != '-') throw fail("expected '-'");
    std::size_t j = close + 2;
    std::size_t j2 = j;
    while (j2 < a.size() && std::isdigit(static_cast<unsigned char>(a[j2]))) ++j2;
    if (j2 == j) throw fail("expected tile index");
    int index = std::stoi(a.substr(j, j2 - j));
    tile = grid_.find(sector, index);
    if (tile < 0)
      throw fail("tile outside the constructed region");
    i = j2;
  } else {
    throw fail("expected tile");
  }
  std::vector<int> faces;
  while (i < a.size()) {
    if (a[i] != '_') throw fail("expected '_'");
    ++i;
    std::size_t j = i;
    while (j < a.size() && std::isdigit(static_cast<unsigned char>(a[j]))) ++j;
    if (j == i) throw fail("expected face label");
    int f = std::stoi(a.substr(i, j - i));
    if (f > 11) throw fail("face label out of range");
    faces.push_back(f);
    i = j;
  }
  Word w = stack(tile, lower, faces);
  register_name(w, address_text(tile, lower, faces));
  return w;
}

std::string Chart::name(const Word& w) const {
  auto it = names_.find(w);
  if (it != names_.end()) return it->second;
  return word_str(w);
}

void Chart::register_name(const Word& w, const std::string& s) const {
  names_.emplace(w, s);
}

}  // namespace dodec
