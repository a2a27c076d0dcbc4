#include "cyltrans/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cylt {

namespace {

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return std::string(buf);
}

// Keep the side dot(p, n) <= c.
std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& poly, Vec2 n, double c) {
  std::vector<Vec2> out;
  const size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % m];
    const double da = dot(a, n) - c;
    const double db = dot(b, n) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

void append_polygon(std::string* out, const std::vector<Vec2>& pts, const char* style) {
  if (pts.size() < 2) return;
  *out += "<polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) *out += " ";
    *out += fmt(pts[i].x) + "," + fmt(-pts[i].y);
  }
  *out += "\" ";
  *out += style;
  *out += "/>\n";
}

}  // namespace

std::string render_piercing_svg(const ConvexPolygon& poly, const PiercingSet& pierce,
                                const std::vector<Slab2>& failures) {
  double min_x = poly.verts[0].x, max_x = min_x;
  double min_y = poly.verts[0].y, max_y = min_y;
  for (const Vec2& v : poly.verts) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const double pad = 2.0 * std::max(pierce.width, 0.25 * std::max(max_x - min_x, max_y - min_y)) + 1e-3;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  const double dim = std::max(max_x - min_x, max_y - min_y);
  const double stroke = 0.006 * dim;
  const double dot_r = 0.012 * dim;

  const std::vector<Vec2> viewport = {
      {min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}};

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(min_x) + " " + fmt(-max_y) +
       " " + fmt(max_x - min_x) + " " + fmt(max_y - min_y) + "\">\n";
  s += "<rect x=\"" + fmt(min_x) + "\" y=\"" + fmt(-max_y) + "\" width=\"" + fmt(max_x - min_x) +
       "\" height=\"" + fmt(max_y - min_y) + "\" fill=\"#ffffff\"/>\n";

  // Unpierced slabs from the oracle, clipped to the viewport.
  for (const Slab2& slab : failures) {
    const Vec2 n = normalized(slab.normal);
    std::vector<Vec2> band = clip_half_plane(viewport, n, slab.hi);
    band = clip_half_plane(band, -n, -slab.lo);
    append_polygon(&s, band, "fill=\"#e67e22\" fill-opacity=\"0.35\" stroke=\"#e67e22\" stroke-width=\"0\"");
  }

  append_polygon(&s, poly.verts,
                 ("fill=\"#d0d7e5\" stroke=\"#2b4a7a\" stroke-width=\"" + fmt(stroke) + "\"").c_str());

  // Midline of the minimal slab.
  if (pierce.width > 0.0) {
    const MinWidthResult mw = min_width_slab(poly);
    const Vec2 n = normalized(mw.slab.normal);
    const Vec2 m = perp(n);
    const double mid = 0.5 * (mw.slab.lo + mw.slab.hi);
    const Vec2 center = mid * n;
    const double reach = 2.0 * dim;
    const Vec2 p0 = center - reach * m;
    const Vec2 p1 = center + reach * m;
    s += "<line x1=\"" + fmt(p0.x) + "\" y1=\"" + fmt(-p0.y) + "\" x2=\"" + fmt(p1.x) + "\" y2=\"" +
         fmt(-p1.y) + "\" stroke=\"#999999\" stroke-width=\"" + fmt(stroke) +
         "\" stroke-dasharray=\"" + fmt(4.0 * stroke) + " " + fmt(3.0 * stroke) + "\"/>\n";
  }

  for (const PiercingSet::Rectangle& rect : pierce.rectangles) {
    for (const Vec2 p : {rect.out_p, rect.out_q}) {
      s += "<rect x=\"" + fmt(p.x - dot_r) + "\" y=\"" + fmt(-p.y - dot_r) + "\" width=\"" +
           fmt(2.0 * dot_r) + "\" height=\"" + fmt(2.0 * dot_r) + "\" fill=\"#2980b9\"/>\n";
    }
  }
  for (const Vec2 p : {pierce.a, pierce.b, pierce.c, pierce.d}) {
    s += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(-p.y) + "\" r=\"" + fmt(dot_r) +
         "\" fill=\"#c0392b\"/>\n";
  }

  s += "</svg>\n";
  return s;
}

}  // namespace cylt
