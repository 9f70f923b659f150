#include "fk/lamination.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fk {

namespace {

Rat cross(const PtQ& o, const PtQ& a, const PtQ& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

struct Crossing {
  int seg;   // polyline segment index
  Rat t;     // parameter along the segment, in (0,1)
  int edge;  // comb edge id
};

// exact segment/segment intersection, transverse interior crossings only
bool segment_crossing(const PtQ& p, const PtQ& q, const PtQ& a, const PtQ& b, Rat* t_out,
                      bool* degenerate) {
  PtQ d{q.x - p.x, q.y - p.y}, e{b.x - a.x, b.y - a.y};
  Rat denom = d.x * e.y - d.y * e.x;
  Rat pa_x = a.x - p.x, pa_y = a.y - p.y;
  if (denom == 0) {
    // parallel; overlap would be degenerate but collinearity without overlap
    // is fine to ignore
    Rat c = pa_x * d.y - pa_y * d.x;
    if (c == 0) *degenerate = true;
    return false;
  }
  Rat t = (pa_x * e.y - pa_y * e.x) / denom;
  Rat u = (pa_x * d.y - pa_y * d.x) / denom;
  bool t_in = t > 0 && t < 1, u_in = u > 0 && u < 1;
  bool t_touch = t == 0 || t == 1, u_touch = u == 0 || u == 1;
  if ((t_in || t_touch) && (u_in || u_touch) && (t_touch || u_touch)) {
    *degenerate = true;
    return false;
  }
  if (t_in && u_in) {
    *t_out = t;
    return true;
  }
  return false;
}

int locate_triangle(const Comb& comb, const PtQ& p) {
  for (int t = 0; t < comb.triangle_count(); ++t) {
    const auto& tr = comb.triangle(t);
    PtQ a{comb.vertex(tr.v[0]).x, comb.vertex(tr.v[0]).y};
    PtQ b{comb.vertex(tr.v[1]).x, comb.vertex(tr.v[1]).y};
    PtQ c{comb.vertex(tr.v[2]).x, comb.vertex(tr.v[2]).y};
    if (cross(a, b, p) > 0 && cross(b, c, p) > 0 && cross(c, a, p) > 0) return t;
  }
  return -1;
}

std::vector<Crossing> collect_crossings(const Comb& comb, const std::vector<PtQ>& pts,
                                        bool closed) {
  std::vector<Crossing> xs;
  const int n = static_cast<int>(pts.size());
  const int segs = closed ? n : n - 1;
  for (int i = 0; i < segs; ++i) {
    const PtQ& p = pts[i];
    const PtQ& q = pts[(i + 1) % n];
    std::vector<Crossing> here;
    for (int e = 0; e < comb.edge_count(); ++e) {
      const auto& ed = comb.edge(e);
      PtQ a{comb.vertex(ed.v0).x, comb.vertex(ed.v0).y};
      PtQ b{comb.vertex(ed.v1).x, comb.vertex(ed.v1).y};
      Rat t;
      bool degenerate = false;
      if (segment_crossing(p, q, a, b, &t, &degenerate)) here.push_back({i, t, e});
      if (degenerate)
        throw std::invalid_argument("trace: polyline touches an edge or vertex degenerately");
    }
    std::sort(here.begin(), here.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
    xs.insert(xs.end(), here.begin(), here.end());
  }
  return xs;
}

PtQ midpoint_after(const std::vector<PtQ>& pts, bool closed, const Crossing& a,
                   const Crossing& b_next) {
  // a point strictly between crossing a and the following crossing
  const int n = static_cast<int>(pts.size());
  auto at = [&](int seg, const Rat& t) {
    const PtQ& p = pts[seg];
    const PtQ& q = pts[(seg + 1) % n];
    return PtQ{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
  };
  if (a.seg == b_next.seg && a.t < b_next.t) {
    Rat tm = (a.t + b_next.t) / 2;
    return at(a.seg, tm);
  }
  // otherwise the stretch passes a polyline vertex; use the first vertex after a
  return pts[(a.seg + 1) % n];
}

NormalPath crossings_to_path(const Comb& comb, const TriSurface& surf,
                             const std::vector<PtQ>& pts, std::vector<Crossing> xs,
                             bool closed) {
  NormalPath path;
  path.closed = closed;
  const int k = static_cast<int>(xs.size());
  if (k == 0) return path;  // curve inside one triangle: trivial
  const int segments = closed ? k : k - 1;
  for (int i = 0; i < segments; ++i) {
    const Crossing& a = xs[i];
    const Crossing& b = xs[(i + 1) % k];
    PtQ mid = midpoint_after(pts, closed, a, b);
    int t = locate_triangle(comb, mid);
    if (t < 0) throw std::logic_error("trace: mid point not inside any triangle");
    int in_side = comb.side_of(t, a.edge);
    int out_side = comb.side_of(t, b.edge);
    if (in_side < 0 || out_side < 0)
      throw std::logic_error("trace: consecutive crossings not on the located triangle");
    path.segs.push_back({t, in_side, out_side});
  }
  validate_path(surf, path);
  return reduce_path(surf, path);
}

}  // namespace

NormalPath trace_closed_polyline(const Comb& comb, const TriSurface& surf,
                                 const std::vector<PtQ>& pts) {
  return crossings_to_path(comb, surf, pts, collect_crossings(comb, pts, true), true);
}

NormalPath trace_open_polyline(const Comb& comb, const TriSurface& surf,
                               const std::vector<PtQ>& pts) {
  auto xs = collect_crossings(comb, pts, false);
  if (xs.size() < 2) throw std::invalid_argument("trace_open: need boundary-to-boundary crossings");
  if (!comb.edge(xs.front().edge).boundary || !comb.edge(xs.back().edge).boundary)
    throw std::invalid_argument("trace_open: endpoints must exit through boundary edges");
  return crossings_to_path(comb, surf, pts, std::move(xs), false);
}

NormalPath round_curve_path(const Comb& comb, const TriSurface& surf, int lo, int hi) {
  if (!(1 <= lo && lo < hi && hi <= comb.marked()))
    throw std::invalid_argument("round_curve_path: interval out of range");
  Rat dx(31, 100), dy(37, 100);
  std::vector<PtQ> pts = {
      {Rat(lo) - dx, -dy}, {Rat(hi) + dx, -dy}, {Rat(hi) + dx, dy}, {Rat(lo) - dx, dy}};
  return trace_closed_polyline(comb, surf, pts);
}

NormalPath puncture_loop_path(const Comb& comb, const TriSurface& surf, int j) {
  if (!(1 <= j && j <= comb.marked()))
    throw std::invalid_argument("puncture_loop_path: puncture out of range");
  Rat r(1, 5), w(1, 31);
  std::vector<PtQ> pts = {
      {Rat(j) - r, Rat(-1, 17)}, {Rat(j) + w, -r}, {Rat(j) + r, Rat(-1, 17)},
      {Rat(j) + r, Rat(1, 17)},  {Rat(j) - w, r},  {Rat(j) - r, Rat(1, 17)}};
  return trace_closed_polyline(comb, surf, pts);
}

bool DiskCoords::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Int DiskCoords::norm() const {
  Int n = 0;
  for (const auto& c : coords) n += abs(c);
  return n;
}

std::string DiskCoords::str() const {
  std::ostringstream os;
  os << punctures << ';';
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  return os.str();
}

DiskCoords DiskCoords::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("DiskCoords::parse: missing ';'");
  DiskCoords dc;
  dc.punctures = std::stoi(text.substr(0, semi));
  std::istringstream is(text.substr(semi + 1));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    dc.coords.push_back(Int(tok));
  }
  return dc;
}

DiskCoords weights_to_coords(const Comb& comb, const std::vector<Int>& edge_weights) {
  DiskCoords dc;
  dc.punctures = comb.marked();
  dc.coords.reserve(comb.interior_edges().size());
  for (int e : comb.interior_edges()) dc.coords.push_back(edge_weights.at(e));
  return dc;
}

std::vector<Int> coords_to_weights(const Comb& comb, const DiskCoords& dc) {
  if (dc.punctures != comb.marked())
    throw std::invalid_argument("coords_to_weights: puncture count mismatch");
  if (dc.coords.size() != comb.interior_edges().size())
    throw std::invalid_argument("coords_to_weights: wrong coordinate dimension");
  std::vector<Int> w(comb.edge_count(), 0);
  for (size_t i = 0; i < dc.coords.size(); ++i) w[comb.interior_edges()[i]] = dc.coords[i];
  return w;
}

}  // namespace fk
