// Computes Poincare-disc pentagon geometry for every tile of the pentagrid
// up to a fixed level and writes it out as src/layout_data.cpp, so the
// renderer ships with plain coordinate tables instead of a numeric
// geometry stack.
//
// Method: the right-angled pentagon of the {5,4} tiling is placed on the
// hyperboloid model, its five edge reflections are 3x3 matrices preserving
// the Minkowski form, and a breadth-first walk over the combinatorial tile
// graph assigns each tile the isometry that carries the base pentagon onto
// it. The walk never guesses which polygon edge a combinatorial side slot
// sits on: each new tile's slot-to-vertex assignment is the unique cyclic
// matching consistent with the world positions of corners already placed,
// and every shared corner is cross-checked against all tiles around it.

#include <array>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "dodec/geometry.hpp"

namespace {

constexpr int kEmitLevel = 5;
constexpr double kTol = 1e-7;

struct V3 {
  double x = 0, y = 0, z = 0;
};

using M3 = std::array<double, 9>;  // row-major

V3 xf(const M3& m, const V3& v) {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
          m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

M3 mulm(const M3& a, const M3& b) {
  M3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[3 * i + j] += a[3 * i + k] * b[3 * k + j];
  return r;
}

double mdot(const V3& a, const V3& b) {
  return a.x * b.x + a.y * b.y - a.z * b.z;
}

// Reflection in the geodesic plane through a and b: x -> x - 2<x,n>n with
// n the Minkowski-unit normal of span(a, b).
M3 reflection(const V3& a, const V3& b) {
  V3 e{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  V3 n{e.x, e.y, -e.z};
  double s = std::sqrt(mdot(n, n));
  n = {n.x / s, n.y / s, n.z / s};
  V3 jn{n.x, n.y, -n.z};
  M3 r{1, 0, 0, 0, 1, 0, 0, 0, 1};
  const double nv[3] = {n.x, n.y, n.z};
  const double jv[3] = {jn.x, jn.y, jn.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[3 * i + j] -= 2 * nv[i] * jv[j];
  return r;
}

struct P2 {
  double x = 0, y = 0;
};

P2 disc(const V3& v) { return {v.x / (1 + v.z), v.y / (1 + v.z)}; }

double dist2(const P2& a, const P2& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

struct Placed {
  M3 m{};
  std::array<int, 5> cvert{};  // corner slot -> base vertex index
  bool done = false;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path = argc > 1 ? argv[1] : "src/layout_data.cpp";

  // Regular right-angled pentagon, one vertex pointing up. Circumradius
  // of the {p,q} cell: cosh R = cot(pi/p) cot(pi/q).
  const double pi = std::acos(-1.0);
  const double ch = 1.0 / (std::tan(pi / 5) * std::tan(pi / 4));
  const double r = std::acosh(ch);
  std::array<V3, 5> base;
  for (int k = 0; k < 5; ++k) {
    double th = pi / 2 + 2 * pi * k / 5;
    base[k] = {std::sinh(r) * std::cos(th), std::sinh(r) * std::sin(th),
               std::cosh(r)};
  }
  std::array<M3, 5> refl;
  for (int j = 0; j < 5; ++j) {
    refl[j] = reflection(base[j], base[(j + 1) % 5]);
    M3 sq = mulm(refl[j], refl[j]);
    for (int i = 0; i < 9; ++i)
      assert(std::abs(sq[i] - (i % 4 == 0 ? 1.0 : 0.0)) < 1e-12);
  }

  dodec::Pentagrid grid(kEmitLevel + 1);
  std::vector<Placed> placed(grid.tile_count());
  std::map<int, V3> cpos;  // corner id -> world position

  placed[0].m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  for (int k = 0; k < 5; ++k) {
    placed[0].cvert[k] = k;
    cpos[grid.tile(0).corner[k]] = base[k];
  }
  placed[0].done = true;

  auto edge_between = [](int a, int b) {
    if ((a + 1) % 5 == b) return a;
    assert((b + 1) % 5 == a);
    return b;
  };

  std::vector<int> queue{0};
  std::size_t head = 0;
  int laid = 1;
  while (head < queue.size()) {
    int t = queue[head++];
    const auto& T = grid.tile(t);
    for (int s = 0; s < 5; ++s) {
      int u = T.side[s];
      if (u < 0 || placed[u].done) continue;
      int j = edge_between(placed[t].cvert[(s + 4) % 5], placed[t].cvert[s]);
      M3 mu = mulm(placed[t].m, refl[j]);
      std::array<P2, 5> world;
      for (int m = 0; m < 5; ++m) world[m] = disc(xf(mu, base[m]));

      const auto& U = grid.tile(u);
      int hits = 0;
      std::array<int, 5> best{};
      for (int off = 0; off < 5; ++off)
        for (int dir : {1, -1}) {
          bool ok = true;
          std::array<int, 5> cand{};
          for (int k = 0; k < 5 && ok; ++k) {
            cand[k] = ((off + dir * k) % 5 + 5) % 5;
            int cid = U.corner[k];
            auto it = cid >= 0 ? cpos.find(cid) : cpos.end();
            if (it != cpos.end() &&
                dist2(world[cand[k]], disc(it->second)) > kTol * kTol)
              ok = false;
          }
          if (ok) {
            ++hits;
            best = cand;
          }
        }
      if (hits != 1) {
        std::fprintf(stderr, "tile %d via %d.%d: %d consistent matchings\n", u,
                     t, s, hits);
        std::fprintf(stderr, "  t corners:");
        for (int k = 0; k < 5; ++k)
          std::fprintf(stderr, " %d", grid.tile(t).corner[k]);
        std::fprintf(stderr, "  t cvert:");
        for (int k = 0; k < 5; ++k)
          std::fprintf(stderr, " %d", placed[t].cvert[k]);
        std::fprintf(stderr, "\n  u corners:");
        for (int k = 0; k < 5; ++k) std::fprintf(stderr, " %d", U.corner[k]);
        std::fprintf(stderr, "  side_back=%d\n", T.side_back[s]);
        for (int k = 0; k < 5; ++k) {
          int cid = U.corner[k];
          auto it = cid >= 0 ? cpos.find(cid) : cpos.end();
          if (it != cpos.end()) {
            P2 p = disc(it->second);
            std::fprintf(stderr, "  known corner slot %d id %d at %.6f %.6f\n",
                         k, cid, p.x, p.y);
          }
        }
        for (int m = 0; m < 5; ++m)
          std::fprintf(stderr, "  world vertex %d at %.6f %.6f\n", m,
                       world[m].x, world[m].y);
        return 1;
      }
      placed[u].m = mu;
      placed[u].cvert = best;
      placed[u].done = true;
      ++laid;
      for (int k = 0; k < 5; ++k) {
        int cid = U.corner[k];
        if (cid < 0) continue;
        V3 w = xf(mu, base[best[k]]);
        auto it = cpos.find(cid);
        if (it == cpos.end())
          cpos[cid] = w;
        else
          assert(dist2(disc(w), disc(it->second)) < kTol * kTol);
      }
      queue.push_back(u);
    }
  }

  std::map<std::pair<int, int>, int> emit;  // (sector, index) -> tile id
  for (int t = 0; t < grid.tile_count(); ++t) {
    const auto& T = grid.tile(t);
    if (T.level < 0 || T.level > kEmitLevel) continue;
    if (!placed[t].done) {
      std::fprintf(stderr, "tile %d at level %d never placed\n", t, T.level);
      return 1;
    }
    bool ins = emit.emplace(std::make_pair(T.sector, T.index), t).second;
    assert(ins);
  }

  std::FILE* out = std::fopen(out_path.c_str(), "w");
  if (!out) {
    std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
    return 1;
  }
  std::fprintf(out,
               "// Pentagon geometry tables written by tools/gen_layout.cpp;"
               " do not edit.\n"
               "\n"
               "#include \"dodec/render.hpp\"\n"
               "\n"
               "#include <algorithm>\n"
               "\n"
               "namespace dodec {\n"
               "namespace {\n"
               "\n"
               "const TileLayout kTiles[] = {\n");
  for (const auto& [key, t] : emit) {
    const auto& T = grid.tile(t);
    const Placed& p = placed[t];
    std::fprintf(out, "    {%d, %d, {", key.first, key.second);
    std::array<P2, 5> w;
    for (int m = 0; m < 5; ++m) w[m] = disc(xf(p.m, base[m]));
    for (int m = 0; m < 5; ++m)
      std::fprintf(out, "%.9f%s", w[m].x, m < 4 ? ", " : "}, {");
    for (int m = 0; m < 5; ++m)
      std::fprintf(out, "%.9f%s", w[m].y, m < 4 ? ", " : "}, {");
    for (int s = 0; s < 5; ++s)
      std::fprintf(out, "%d%s",
                   edge_between(p.cvert[(s + 4) % 5], p.cvert[s]),
                   s < 4 ? ", " : "}, {");
    for (int k = 0; k < 5; ++k)
      std::fprintf(out, "%d%s", p.cvert[k], k < 4 ? ", " : "}},\n");
    (void)T;
  }
  std::fprintf(out,
               "};\n"
               "\n"
               "}  // namespace\n"
               "\n"
               "const TileLayout* find_tile_layout(int sector, int index) {\n"
               "  const TileLayout* b = std::begin(kTiles);\n"
               "  const TileLayout* e = std::end(kTiles);\n"
               "  const TileLayout* it = std::lower_bound(\n"
               "      b, e, std::make_pair(sector, index),\n"
               "      [](const TileLayout& t, const std::pair<int, int>& k) {\n"
               "        return std::make_pair(t.sector, t.index) < k;\n"
               "      });\n"
               "  if (it != e && it->sector == sector && it->index == index)"
               " return it;\n"
               "  return nullptr;\n"
               "}\n"
               "\n"
               "int tile_layout_count() {"
               " return static_cast<int>(std::size(kTiles)); }\n"
               "\n"
               "}  // namespace dodec\n");
  std::fclose(out);
  std::fprintf(stderr, "placed %d tiles, emitted %zu layouts\n", laid,
               emit.size());
  return 0;
}
