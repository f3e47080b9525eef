#include "dodec/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

namespace dodec {

namespace {

struct AddrParts {
  int sector = 0;
  int index = 0;
  bool lower = false;
  std::vector<int> faces;
};

std::optional<AddrParts> split_address(const std::string& a) {
  AddrParts p;
  std::size_t i = 0;
  if (a.rfind("b:", 0) == 0) {
    p.lower = true;
    i = 2;
  }
  auto digits = [&](int& out) {
    std::size_t j = i;
    while (j < a.size() && std::isdigit(static_cast<unsigned char>(a[j]))) ++j;
    if (j == i) return false;
    out = std::stoi(a.substr(i, j - i));
    i = j;
    return true;
  };
  if (i < a.size() && a[i] == '0' &&
      (i + 1 == a.size() || a[i + 1] == '_')) {
    ++i;
  } else if (i < a.size() && a[i] == '(') {
    ++i;
    if (!digits(p.sector)) return std::nullopt;
    if (i + 1 >= a.size() || a[i] != ')' || a[i + 1] != '-') return std::nullopt;
    i += 2;
    if (!digits(p.index)) return std::nullopt;
  } else {
    return std::nullopt;
  }
  while (i < a.size()) {
    if (a[i] != '_') return std::nullopt;
    ++i;
    int f = 0;
    if (!digits(f) || f > 11) return std::nullopt;
    p.faces.push_back(f);
  }
  return p;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v + 0.0);  // normalize -0
  return buf;
}

const std::string& color_of(const RenderSpec& spec, St s) {
  return spec.color[static_cast<int>(s)];
}

struct P2 {
  double x = 0, y = 0;
};

// One stacked cell to draw as a face mark.
struct StackMark {
  std::string addr;
  St st = St::W;
  std::vector<int> faces;
  bool lower = false;
};

void emit_data(std::ostringstream& out, const std::string& addr, St s) {
  out << " data-cell=\"" << addr << "\" data-state=\"" << state_char(s)
      << "\"";
}

std::string render_disc(const Chart& chart, const Configuration& cfg,
                        const RenderSpec& spec) {
  const Pentagrid& g = chart.grid();
  auto cp = split_address(spec.center);
  if (!cp) throw RenderError("cannot parse window center '" + spec.center + "'");
  int ct = g.find(cp->sector, cp->index);
  if (ct < 0) throw RenderError("window center is outside the chart");

  std::map<int, int> dist{{ct, 0}};
  std::vector<int> order{ct};
  for (std::size_t h = 0; h < order.size(); ++h) {
    int t = order[h];
    if (dist[t] == spec.radius) continue;
    for (int s = 0; s < 5; ++s) {
      int u = g.tile(t).side[s];
      if (u >= 0 && !dist.count(u)) {
        dist[u] = dist[t] + 1;
        order.push_back(u);
      }
    }
  }

  std::map<int, St> upper, lower;
  std::map<int, std::vector<StackMark>> stacks;
  std::vector<std::pair<std::string, St>> beyond;
  for (const auto& [w, s] : cfg.cells()) {
    std::string addr = chart.name(w);
    auto ap = split_address(addr);
    int t = ap ? g.find(ap->sector, ap->index) : -1;
    if (!ap || t < 0 || !dist.count(t) ||
        !find_tile_layout(ap->sector, ap->index)) {
      beyond.emplace_back(addr, s);
      continue;
    }
    if (ap->faces.empty())
      (ap->lower ? lower : upper)[t] = s;
    else if (spec.face_marks)
      stacks[t].push_back({addr, s, ap->faces, ap->lower});
    else
      beyond.emplace_back(addr, s);
  }
  std::sort(beyond.begin(), beyond.end());

  std::map<std::pair<int, int>, int> window;  // (sector, index) -> tile
  for (int t : order) window[{g.tile(t).sector, g.tile(t).index}] = t;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" "
         "height=\"900\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  out << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbbbbb\" "
         "stroke-width=\"0.004\"/>\n";
  for (const auto& [key, t] : window) {
    const TileLayout* L = find_tile_layout(key.first, key.second);
    if (!L) continue;
    P2 v[5];
    P2 c{0, 0};
    for (int m = 0; m < 5; ++m) {
      v[m] = {L->vx[m], -L->vy[m]};
      c.x += v[m].x / 5;
      c.y += v[m].y / 5;
    }
    auto pulled = [&](P2 p, double f) {
      return P2{p.x + (c.x - p.x) * f, p.y + (c.y - p.y) * f};
    };
    auto poly = [&](double shrink) {
      std::string pts;
      for (int m = 0; m < 5; ++m) {
        P2 p = pulled(v[m], shrink);
        pts += num(p.x) + "," + num(p.y);
        if (m < 4) pts += " ";
      }
      return pts;
    };
    auto iu = upper.find(t);
    out << "<polygon points=\"" << poly(0) << "\" fill=\""
        << (iu != upper.end() ? color_of(spec, iu->second) : spec.color[0])
        << "\" stroke=\"#777777\" stroke-width=\"0.004\"";
    if (iu != upper.end())
      emit_data(out, chart.tile_name(t), iu->second);
    out << "/>\n";
    auto il = lower.find(t);
    if (il != lower.end()) {
      out << "<polygon points=\"" << poly(0.55) << "\" fill=\""
          << color_of(spec, il->second)
          << "\" stroke=\"#333333\" stroke-width=\"0.003\"";
      emit_data(out, "b:" + chart.tile_name(t), il->second);
      out << "/>\n";
    }
    auto is = stacks.find(t);
    if (is == stacks.end()) continue;
    std::sort(is->second.begin(), is->second.end(),
              [](const StackMark& a, const StackMark& b) {
                return a.addr < b.addr;
              });
    double scale = 0;
    for (int m = 0; m < 5; ++m)
      scale += std::hypot(v[m].x - c.x, v[m].y - c.y) / 5;
    std::map<int, int> used;  // anchor face -> marks already there
    const auto& T = g.tile(t);
    for (const StackMark& mk : is->second) {
      int f1 = mk.faces.front();
      P2 a = c;
      if (f1 >= 1 && f1 <= 5) {
        int e = L->edge_of[T.rs_side[f1]];
        P2 mid{(v[e].x + v[(e + 1) % 5].x) / 2,
               (v[e].y + v[(e + 1) % 5].y) / 2};
        a = pulled(mid, 0.30);
      } else if (f1 >= 6 && f1 <= 10) {
        a = pulled(v[L->corner_of[T.rs_corner[f1 - 6]]], 0.35);
      }
      int k = used[f1]++;
      a = pulled(a, 0.12 * k);
      double r = scale * (mk.lower ? 0.16 : 0.24) *
                 std::pow(0.72, static_cast<int>(mk.faces.size()) - 1);
      out << "<circle cx=\"" << num(a.x) << "\" cy=\"" << num(a.y)
          << "\" r=\"" << num(r) << "\" fill=\"" << color_of(spec, mk.st)
          << "\" stroke=\"#222222\" stroke-width=\"0.002\"";
      emit_data(out, mk.addr, mk.st);
      out << "/>\n";
    }
  }
  if (!beyond.empty()) {
    out << "<g font-size=\"0.03\" font-family=\"monospace\">\n";
    int i = 0;
    for (const auto& [addr, s] : beyond) {
      out << "<text x=\"-1.04\" y=\"" << num(-1.0 + 0.035 * i++)
          << "\" fill=\"" << color_of(spec, s) << "\"";
      emit_data(out, addr, s);
      out << ">" << addr << "=" << state_char(s) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_side(const Chart& chart, const Configuration& cfg,
                        const RenderSpec& spec) {
  // Populated columns left to right by base tile; within a column the
  // lower-sheet cell sits below the upper one and stacked cells climb
  // away from their sheet.
  struct Box {
    int row = 0;
    std::string addr;
    St st = St::W;
  };
  using ColKey = std::tuple<int, int, int, std::string>;
  std::map<ColKey, std::vector<Box>> cols;
  for (const auto& [w, s] : cfg.cells()) {
    std::string addr = chart.name(w);
    auto ap = split_address(addr);
    ColKey key{1, 0, 0, addr};
    int row = 0;
    if (ap) {
      std::string label =
          ap->sector == 0 ? "0"
                          : "(" + std::to_string(ap->sector) + ")-" +
                                std::to_string(ap->index);
      key = {0, ap->sector, ap->index, label};
      int d = static_cast<int>(ap->faces.size());
      row = ap->lower ? -1 - d : d;
    }
    cols[key].push_back({row, addr, s});
  }
  int lo = -1, hi = 1;
  for (auto& [key, boxes] : cols) {
    std::sort(boxes.begin(), boxes.end(),
              [](const Box& a, const Box& b) {
                return std::tie(a.row, a.addr) < std::tie(b.row, b.addr);
              });
    for (const Box& b : boxes) {
      lo = std::min(lo, b.row);
      hi = std::max(hi, b.row);
    }
  }
  int ncol = std::max<int>(1, static_cast<int>(cols.size()));
  double wpx = ncol + 1.0, hpx = hi - lo + 2.5;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << 60 * static_cast<int>(wpx) << "\" height=\""
      << 60 * static_cast<int>(hpx) << "\" viewBox=\"0 0 " << num(wpx) << " "
      << num(hpx) << "\">\n";
  // Sheet line between the two rows of base cells.
  double sheet_y = hi + 1.0;
  out << "<line x1=\"0.2\" y1=\"" << num(sheet_y) << "\" x2=\""
      << num(wpx - 0.2) << "\" y2=\"" << num(sheet_y)
      << "\" stroke=\"#aaaaaa\" stroke-width=\"0.03\"/>\n";
  int ci = 0;
  for (const auto& [key, boxes] : cols) {
    double x = 0.6 + ci;
    for (const Box& b : boxes) {
      double y = hi - b.row + (b.row < 0 ? 0.8 : 0.6);
      out << "<rect x=\"" << num(x - 0.36) << "\" y=\"" << num(y - 0.36)
          << "\" width=\"0.72\" height=\"0.72\" fill=\""
          << color_of(spec, b.st)
          << "\" stroke=\"#444444\" stroke-width=\"0.02\"";
      emit_data(out, b.addr, b.st);
      out << "/>\n";
    }
    out << "<text x=\"" << num(x) << "\" y=\"" << num(hpx - 0.3)
        << "\" font-size=\"0.28\" text-anchor=\"middle\" "
           "font-family=\"monospace\" fill=\"#333333\">"
        << std::get<3>(key) << "</text>\n";
    ++ci;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const Chart& chart, const Configuration& cfg,
                       const RenderSpec& spec) {
  if (spec.radius < 0 || spec.radius > 4)
    throw RenderError("window radius too large");
  if (spec.projection == 'h' || spec.projection == 'H')
    return render_disc(chart, cfg, spec);
  if (spec.projection == 'v' || spec.projection == 'V')
    return render_side(chart, cfg, spec);
  throw RenderError(std::string("unknown projection '") + spec.projection +
                    "'");
}

std::vector<std::pair<std::string, std::string>> svg_cell_states(
    const std::string& svg) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  const std::string ck = "data-cell=\"", sk = "data-state=\"";
  while (true) {
    std::size_t c = svg.find(ck, pos);
    if (c == std::string::npos) break;
    c += ck.size();
    std::size_t ce = svg.find('"', c);
    std::size_t s = svg.find(sk, ce);
    if (ce == std::string::npos || s == std::string::npos) break;
    s += sk.size();
    std::size_t se = svg.find('"', s);
    if (se == std::string::npos) break;
    out.emplace_back(svg.substr(c, ce - c), svg.substr(s, se - s));
    pos = se;
  }
  return out;
}

}  // namespace dodec
