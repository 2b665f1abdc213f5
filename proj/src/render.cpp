#include "satdom/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "satdom/error.hpp"

namespace satdom {

namespace {

char fragment_letter(int i) {
  static const char* alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  return alphabet[i % 52];
}

struct Bounds {
  std::int32_t amin = 0, amax = 0, bmin = 0, bmax = 0;
};

Bounds bounds_of(const std::vector<Cell>& cells) {
  Bounds bb{cells.front().a, cells.front().a, cells.front().b, cells.front().b};
  for (const Cell& c : cells) {
    bb.amin = std::min(bb.amin, c.a);
    bb.amax = std::max(bb.amax, c.a);
    bb.bmin = std::min(bb.bmin, c.b);
    bb.bmax = std::max(bb.bmax, c.b);
  }
  return bb;
}

std::string ascii_grid(GridKind kind, const std::vector<Cell>& extent,
                       const std::map<Cell, char>& glyph) {
  const Bounds bb = bounds_of(extent);
  std::ostringstream out;
  for (std::int32_t a = bb.amin; a <= bb.amax; ++a) {
    std::string line;
    // shear triangular and hexagonal rows so columns roughly line up
    if (kind != GridKind::square)
      line.assign(static_cast<std::size_t>(bb.amax - a), ' ');
    for (std::int32_t b = bb.bmin; b <= bb.bmax; ++b) {
      auto it = glyph.find({a, b});
      line += (it == glyph.end()) ? '.' : it->second;
    }
    while (!line.empty() && (line.back() == '.' || line.back() == ' ')) line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

// --- SVG geometry ---------------------------------------------------------

constexpr double kSide = 40.0;

struct Pt {
  double x, y;
};

std::vector<Pt> cell_polygon(GridKind kind, Cell c) {
  switch (kind) {
    case GridKind::square: {
      const double x = c.b * kSide, y = c.a * kSide;
      return {{x, y}, {x + kSide, y}, {x + kSide, y + kSide}, {x, y + kSide}};
    }
    case GridKind::triangular: {
      const double h = kSide / 2, v = kSide * 0.8660254;
      const double x0 = (c.b - c.a) * h, y0 = c.a * v;
      if (((c.b % 2) + 2) % 2 == 0)  // upward
        return {{x0 + h, y0}, {x0 + 2 * h, y0 + v}, {x0, y0 + v}};
      return {{x0, y0}, {x0 + 2 * h, y0}, {x0 + h, y0 + v}};
    }
    case GridKind::hexagonal: {
      const double s = kSide / 2;
      const double cx = 1.7320508 * s * (c.a + c.b / 2.0), cy = 1.5 * s * c.b;
      std::vector<Pt> pts;
      for (int k = 0; k < 6; ++k) {
        const double ang = (60.0 * k + 30.0) * 3.14159265 / 180.0;
        pts.push_back({cx + s * std::cos(ang), cy + s * std::sin(ang)});
      }
      return pts;
    }
  }
  return {};
}

Pt cell_centroid(GridKind kind, Cell c) {
  const auto poly = cell_polygon(kind, c);
  Pt p{0, 0};
  for (const Pt& q : poly) {
    p.x += q.x;
    p.y += q.y;
  }
  p.x /= poly.size();
  p.y /= poly.size();
  return p;
}

const char* kPalette[12] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                            "#59a14f", "#edc949", "#b07aa1", "#ff9da7",
                            "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};

struct SvgBuilder {
  std::ostringstream body;
  double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;

  void touch(const std::vector<Pt>& pts) {
    for (const Pt& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }

  void polygon(const std::vector<Pt>& pts, const std::string& fill, const std::string& extra = "") {
    touch(pts);
    body << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      body << (i ? " " : "") << pts[i].x << "," << pts[i].y;
    body << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"1\"" << extra << "/>\n";
  }

  void dot(Pt p, double r = 4.0) {
    body << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << r
         << "\" fill=\"#222\"/>\n";
  }

  void line(Pt a, Pt b, double w) {
    body << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
         << "\" stroke=\"#222\" stroke-width=\"" << w << "\" stroke-linecap=\"round\"/>\n";
  }

  std::string finish() const {
    const double m = 8;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (xmin - m) << " "
        << (ymin - m) << " " << (xmax - xmin + 2 * m) << " " << (ymax - ymin + 2 * m) << "\">\n"
        << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" "
           "patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">"
           "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#888\" stroke-width=\"2\"/>"
           "</pattern></defs>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

}  // namespace

std::string render_tiling_ascii(const FragmentTiling& t) {
  std::map<Cell, char> glyph;
  for (std::size_t i = 0; i < t.fragments.size(); ++i)
    for (const Cell& c : t.fragments[i].cells())
      glyph[c] = fragment_letter(static_cast<int>(i));
  return ascii_grid(t.board.kind(), t.board.cells(), glyph);
}

std::string render_covering_ascii(const DominoCovering& c) {
  return render_tiling_ascii(saturated_to_tiling(c));
}

std::string render_cover_ascii(const MaxFragmentCover& c) {
  std::map<Cell, char> glyph;
  std::vector<Cell> extent = c.board.cells();
  for (const Cell& x : c.board.cells()) glyph[x] = '#';
  for (const Cell& ctr : c.centers) {
    glyph[ctr] = c.board.contains(ctr) ? 'O' : 'o';
    extent.push_back(ctr);
  }
  return ascii_grid(c.board.kind(), extent, glyph);
}

std::string render_marked_ascii(const Board& b, const std::vector<Cell>& marked) {
  std::map<Cell, char> glyph;
  for (const Cell& x : b.cells()) glyph[x] = '#';
  for (const Cell& x : marked) glyph[x] = 'O';
  return ascii_grid(b.kind(), b.cells(), glyph);
}

std::string render_tiling_svg(const FragmentTiling& t) {
  SvgBuilder svg;
  for (std::size_t i = 0; i < t.fragments.size(); ++i) {
    const Fragment& f = t.fragments[i];
    for (const Cell& c : f.cells())
      svg.polygon(cell_polygon(t.board.kind(), c), kPalette[i % 12]);
    svg.dot(cell_centroid(t.board.kind(), f.center));
  }
  return svg.finish();
}

std::string render_covering_svg(const DominoCovering& c) {
  FragmentTiling t = saturated_to_tiling(c);
  SvgBuilder svg;
  for (std::size_t i = 0; i < t.fragments.size(); ++i)
    for (const Cell& x : t.fragments[i].cells())
      svg.polygon(cell_polygon(t.board.kind(), x), kPalette[i % 12]);
  for (const Domino& d : c.dominoes)
    svg.line(cell_centroid(c.board.kind(), d.a), cell_centroid(c.board.kind(), d.b), 5.0);
  return svg.finish();
}

std::string render_cover_svg(const MaxFragmentCover& c) {
  SvgBuilder svg;
  for (const Cell& x : c.board.cells())
    svg.polygon(cell_polygon(c.board.kind(), x), "#eeeeee");
  for (std::size_t i = 0; i < c.centers.size(); ++i) {
    const Cell ctr = c.centers[i];
    std::vector<Cell> tile = neighbors(c.board.kind(), ctr);
    tile.push_back(ctr);
    for (const Cell& x : tile) {
      if (c.board.contains(x)) {
        std::string fill = kPalette[i % 12];
        svg.polygon(cell_polygon(c.board.kind(), x), fill, " fill-opacity=\"0.45\"");
      } else {
        svg.polygon(cell_polygon(c.board.kind(), x), "url(#hatch)");
      }
    }
    svg.dot(cell_centroid(c.board.kind(), ctr));
  }
  return svg.finish();
}

std::string render_marked_svg(const Board& b, const std::vector<Cell>& marked) {
  SvgBuilder svg;
  for (const Cell& x : b.cells()) svg.polygon(cell_polygon(b.kind(), x), "#eeeeee");
  for (const Cell& x : marked) {
    svg.polygon(cell_polygon(b.kind(), x), "#4e79a7");
    svg.dot(cell_centroid(b.kind(), x));
  }
  return svg.finish();
}

}  // namespace satdom
