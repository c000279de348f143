#include "trilink/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "trilink/error.hpp"

namespace trilink {

namespace {

struct ProjSegment {
  std::size_t id = 0;  // global, 1-based
  std::size_t component = 0;
  Vertex from = 0, to = 0;
  Vec2 p, q;
  Rational depth_p, depth_q;
};

struct Projection {
  std::array<Vec3, 2> frame;
  std::vector<std::vector<Vec2>> strands;
  std::vector<ProjSegment> segments;
};

Projection project_segments(const Realization3& r, const EdgeLink& l, const Vec3& d) {
  Projection pr;
  pr.frame = projection_frame(d);
  std::size_t id = 0;
  for (std::size_t c = 0; c < l.components.size(); ++c) {
    const auto& cyc = l.components[c];
    std::vector<Vec2> strand;
    for (Vertex v : cyc) {
      auto it = r.coords.find(v);
      if (it == r.coords.end()) throw Error("no 3D coordinates for link vertex " + std::to_string(v));
      strand.push_back({dot(it->second, pr.frame[0]), dot(it->second, pr.frame[1])});
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::size_t j = (i + 1) % cyc.size();
      ProjSegment s;
      s.id = ++id;
      s.component = c;
      s.from = cyc[i];
      s.to = cyc[j];
      s.p = strand[i];
      s.q = strand[j];
      s.depth_p = dot(r.coords.at(cyc[i]), d);
      s.depth_q = dot(r.coords.at(cyc[j]), d);
      pr.segments.push_back(std::move(s));
    }
    pr.strands.push_back(std::move(strand));
  }
  return pr;
}

int orient(const Vec2& a, const Vec2& b, const Vec2& c) { return sign(cross(b - a, c - a)); }

// c collinear with ab: is it within the closed segment?
bool on_closed_segment(const Vec2& a, const Vec2& b, const Vec2& c) {
  return dot(c - a, c - b) <= 0;
}

struct Hit {
  Rational s, t;  // parameters along the first and second segment
  Vec2 point;
};

enum class Contact { none, proper, degenerate };

Contact classify(const ProjSegment& x, const ProjSegment& y, Hit& hit) {
  const int o1 = orient(x.p, x.q, y.p), o2 = orient(x.p, x.q, y.q);
  const int o3 = orient(y.p, y.q, x.p), o4 = orient(y.p, y.q, x.q);
  if (o1 && o2 && o3 && o4) {
    if (o1 * o2 < 0 && o3 * o4 < 0) {
      Vec2 dx = x.q - x.p, dy = y.q - y.p;
      Rational den = cross(dx, dy);
      hit.s = cross(y.p - x.p, dy) / den;
      hit.t = cross(y.p - x.p, dx) / den;
      hit.point = x.p + hit.s * dx;
      return Contact::proper;
    }
    return Contact::none;
  }
  if ((o1 == 0 && on_closed_segment(x.p, x.q, y.p)) || (o2 == 0 && on_closed_segment(x.p, x.q, y.q)) ||
      (o3 == 0 && on_closed_segment(y.p, y.q, x.p)) || (o4 == 0 && on_closed_segment(y.p, y.q, x.q)))
    return Contact::degenerate;
  return Contact::none;
}

bool adjacent(const ProjSegment& x, const ProjSegment& y, Vertex& shared) {
  for (Vertex a : {x.from, x.to})
    for (Vertex b : {y.from, y.to})
      if (a == b) {
        shared = a;
        return true;
      }
  return false;
}

std::string seg_name(const ProjSegment& s) {
  return "segment " + std::to_string(s.id) + " " + format_simplex(std::vector<Vertex>{s.from, s.to});
}

struct Found {
  const ProjSegment* a;
  const ProjSegment* b;
  Hit hit;
};

// Shared by genericity_failure and project: returns the reason or fills hits.
std::string scan(const Projection& pr, std::vector<Found>& hits) {
  const auto& segs = pr.segments;
  for (const auto& s : segs)
    if (s.p == s.q) return seg_name(s) + " is parallel to the projection direction";
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& x = segs[i];
      const auto& y = segs[j];
      Vertex v = 0;
      if (adjacent(x, y, v)) {
        const Vec2& q = x.from == v ? x.p : x.q;
        const Vec2& a = x.from == v ? x.q : x.p;
        const Vec2& b = y.from == v ? y.q : y.p;
        if (sign(cross(a - q, b - q)) == 0 && dot(a - q, b - q) > 0)
          return seg_name(x) + " and " + seg_name(y) + " overlap in projection";
        continue;
      }
      Hit h;
      switch (classify(x, y, h)) {
        case Contact::none: break;
        case Contact::degenerate:
          return seg_name(x) + " and " + seg_name(y) + " touch non-transversally in projection";
        case Contact::proper: {
          Rational dx = x.depth_p + h.s * (x.depth_q - x.depth_p);
          Rational dy = y.depth_p + h.t * (y.depth_q - y.depth_p);
          if (dx == dy) return seg_name(x) + " and " + seg_name(y) + " cross at equal depth";
          hits.push_back({&x, &y, h});
        }
      }
    }
  std::set<Vec2> points;
  for (const auto& f : hits)
    if (!points.insert(f.hit.point).second) return "triple point at a crossing of " + seg_name(*f.a);
  return {};
}

}  // namespace

std::size_t Diagram::segment_count() const {
  std::size_t k = 0;
  for (const auto& c : components) k += c.size();
  return k;
}

Vec3 direction_candidate(long t) {
  Rational q = t;
  return {1, q, q * q};
}

std::array<Vec3, 2> projection_frame(const Vec3& d) {
  Vec3 u{Rational(-d[1]), d[0], 0};
  if (u[0] == 0 && u[1] == 0) u = {1, 0, 0};
  return {u, cross(d, u)};
}

std::string genericity_failure(const Realization3& r, const EdgeLink& l, const Vec3& d) {
  if (d[0] == 0 && d[1] == 0 && d[2] == 0) return "zero direction";
  std::vector<Found> hits;
  return scan(project_segments(r, l, d), hits);
}

std::vector<Vec3> generic_directions(const Realization3& r, const EdgeLink& l, std::size_t count,
                                     long max_candidates) {
  std::vector<Vec3> out;
  std::string last;
  for (long t = 1; t <= max_candidates && out.size() < count; ++t) {
    Vec3 d = direction_candidate(t);
    last = genericity_failure(r, l, d);
    if (last.empty()) out.push_back(d);
  }
  if (out.size() < count)
    throw Error("only " + std::to_string(out.size()) + " generic directions among " + std::to_string(max_candidates) +
                " candidates; last rejection: " + last);
  return out;
}

Vec3 generic_direction(const Realization3& r, const EdgeLink& l, long max_candidates) {
  return generic_directions(r, l, 1, max_candidates).front();
}

Diagram project(const Realization3& r, const EdgeLink& l, const Vec3& d) {
  if (d[0] == 0 && d[1] == 0 && d[2] == 0) throw Error("zero projection direction");
  Projection pr = project_segments(r, l, d);
  std::vector<Found> hits;
  if (auto why = scan(pr, hits); !why.empty()) throw Error("direction is not generic: " + why);

  Diagram dg;
  dg.direction = d;
  dg.frame = pr.frame;
  dg.components = l.components;
  dg.strands = pr.strands;

  struct Passage {
    Rational param;
    std::size_t crossing;
    bool over;
  };
  std::vector<std::vector<Passage>> on_segment(pr.segments.size() + 1);
  for (const auto& f : hits) {
    const ProjSegment& x = *f.a;
    const ProjSegment& y = *f.b;
    Rational dx = x.depth_p + f.hit.s * (x.depth_q - x.depth_p);
    Rational dy = y.depth_p + f.hit.t * (y.depth_q - y.depth_p);
    const bool x_over = dx > dy;
    const ProjSegment& over = x_over ? x : y;
    const ProjSegment& under = x_over ? y : x;
    Crossing c;
    c.id = dg.crossings.size() + 1;
    c.over_segment = over.id;
    c.under_segment = under.id;
    c.over_component = over.component;
    c.under_component = under.component;
    c.point = f.hit.point;
    c.over_param = x_over ? f.hit.s : f.hit.t;
    c.under_param = x_over ? f.hit.t : f.hit.s;
    c.sign = sign(cross(over.q - over.p, under.q - under.p));
    on_segment[over.id].push_back({c.over_param, c.id, true});
    on_segment[under.id].push_back({c.under_param, c.id, false});
    dg.crossings.push_back(std::move(c));
  }

  // Walk components to get passage order, Gauss codes and PD arcs.
  struct ArcEnds {
    std::size_t in = 0, out = 0;
  };
  std::vector<ArcEnds> over_arcs(dg.crossings.size() + 1), under_arcs(dg.crossings.size() + 1);
  std::size_t base = 0;
  std::size_t seg = 1;
  for (std::size_t c = 0; c < l.components.size(); ++c) {
    std::vector<Passage> walk;
    for (std::size_t i = 0; i < l.components[c].size(); ++i, ++seg) {
      auto ps = on_segment[seg];
      std::sort(ps.begin(), ps.end(), [](const Passage& a, const Passage& b) { return a.param < b.param; });
      walk.insert(walk.end(), ps.begin(), ps.end());
    }
    std::vector<long> code;
    const std::size_t m = walk.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Passage& p = walk[i];
      code.push_back(p.over ? static_cast<long>(p.crossing) : -static_cast<long>(p.crossing));
      ArcEnds& ends = p.over ? over_arcs[p.crossing] : under_arcs[p.crossing];
      ends.out = base + i + 1;
      ends.in = base + (i + m - 1) % m + 1;
    }
    base += m;
    dg.gauss.push_back(std::move(code));
  }
  for (const Crossing& c : dg.crossings) {
    const ArcEnds& u = under_arcs[c.id];
    const ArcEnds& o = over_arcs[c.id];
    // counterclockwise from the incoming under arc
    if (c.sign > 0)
      dg.pd.push_back({u.in, o.out, u.out, o.in});
    else
      dg.pd.push_back({u.in, o.in, u.out, o.out});
  }
  std::sort(dg.pd.begin(), dg.pd.end());
  return dg;
}

std::vector<std::vector<long>> linking_matrix(const Diagram& dg) {
  const std::size_t n = dg.components.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (const Crossing& c : dg.crossings) {
    if (c.over_component == c.under_component) {
      m[c.over_component][c.over_component] += c.sign;
    } else {
      m[c.over_component][c.under_component] += c.sign;
      m[c.under_component][c.over_component] += c.sign;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] % 2 != 0) throw Error("odd signed crossing sum between two components");
      m[i][j] /= 2;
    }
  return m;
}

std::string pd_text(const Diagram& dg) {
  std::ostringstream os;
  for (const auto& x : dg.pd) os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << "]\n";
  return os.str();
}

std::string gauss_text(const Diagram& dg) {
  std::ostringstream os;
  for (const auto& code : dg.gauss) {
    for (std::size_t i = 0; i < code.size(); ++i) os << (i ? " " : "") << code[i];
    os << '\n';
  }
  return os.str();
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const Diagram& dg) {
  constexpr double kSize = 600.0, kMargin = 40.0, kGap = 8.0;
  static const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& s : dg.strands)
    for (const Vec2& p : s) {
      double x = p[0].get_d(), y = p[1].get_d();
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  double scale = (kSize - 2 * kMargin) / span;
  auto px = [&](const Vec2& p) { return kMargin + (p[0].get_d() - xmin) * scale; };
  auto py = [&](const Vec2& p) { return kSize - kMargin - (p[1].get_d() - ymin) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  std::vector<std::pair<Vec2, Vec2>> seg_ends{{}};  // 1-based
  for (std::size_t c = 0; c < dg.strands.size(); ++c) {
    const auto& s = dg.strands[c];
    const char* color = kColors[c % (sizeof kColors / sizeof *kColors)];
    os << "<g class=\"component\" stroke=\"" << color << "\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Vec2& a = s[i];
      const Vec2& b = s[(i + 1) % s.size()];
      seg_ends.emplace_back(a, b);
      os << "<line x1=\"" << fmt(px(a)) << "\" y1=\"" << fmt(py(a)) << "\" x2=\"" << fmt(px(b)) << "\" y2=\""
         << fmt(py(b)) << "\"/>\n";
    }
    os << "</g>\n";
  }
  // Break the under strand and redraw the over strand across the gap.
  for (const Crossing& c : dg.crossings) {
    auto piece = [&](std::size_t seg, const char* cls, const char* stroke, double width) {
      const auto& [a, b] = seg_ends[seg];
      double ax = px(a), ay = py(a), bx = px(b), by = py(b);
      double len = std::max(std::hypot(bx - ax, by - ay), 1e-12);
      double ux = (bx - ax) / len, uy = (by - ay) / len;
      double cx = px(c.point), cy = py(c.point);
      os << "<line class=\"" << cls << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << "\" x1=\""
         << fmt(cx - ux * kGap) << "\" y1=\"" << fmt(cy - uy * kGap) << "\" x2=\"" << fmt(cx + ux * kGap)
         << "\" y2=\"" << fmt(cy + uy * kGap) << "\"/>\n";
    };
    piece(c.under_segment, "gap", "white", 9.0);
    piece(c.over_segment, "over", kColors[c.over_component % (sizeof kColors / sizeof *kColors)], 3.0);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace trilink
