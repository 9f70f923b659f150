#include "fk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fk {

namespace {

using P = PtQ;

Rat cross3(const P& o, const P& a, const P& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

struct Seg {
  P a, b;
};

struct BoxD {
  double x0, x1, y0, y1;
  bool overlaps(const BoxD& o) const {
    const double pad = 1e-7;
    return x0 <= o.x1 + pad && o.x0 <= x1 + pad && y0 <= o.y1 + pad && o.y0 <= y1 + pad;
  }
};

BoxD seg_box(const P& a, const P& b) {
  double ax = to_double(a.x), ay = to_double(a.y);
  double bx = to_double(b.x), by = to_double(b.y);
  return BoxD{std::min(ax, bx), std::max(ax, bx), std::min(ay, by), std::max(ay, by)};
}

// Proper interior crossing of two segments; touching configurations are
// reported through *degenerate.
std::optional<std::pair<Rat, Rat>> seg_cross(const P& p, const P& q, const P& a, const P& b,
                                             bool* degenerate) {
  Rat dx = q.x - p.x, dy = q.y - p.y;
  Rat ex = b.x - a.x, ey = b.y - a.y;
  Rat denom = dx * ey - dy * ex;
  Rat wx = a.x - p.x, wy = a.y - p.y;
  if (denom == 0) {
    if (wx * dy - wy * dx == 0 && degenerate) {
      auto dot = [](Rat ux, Rat uy, Rat vx, Rat vy) { return ux * vx + uy * vy; };
      Rat t0 = dot(wx, wy, dx, dy);
      Rat t1 = dot(b.x - p.x, b.y - p.y, dx, dy);
      Rat len = dot(dx, dy, dx, dy);
      Rat lo = std::min(t0, t1), hi = std::max(t0, t1);
      if (hi >= 0 && lo <= len) *degenerate = true;
    }
    return std::nullopt;
  }
  Rat t = (wx * ey - wy * ex) / denom;
  Rat u = (wx * dy - wy * dx) / denom;
  bool t_in = t > 0 && t < 1, u_in = u > 0 && u < 1;
  bool t_touch = t == 0 || t == 1, u_touch = u == 0 || u == 1;
  if ((t_in && u_touch) || (u_in && t_touch) || (t_touch && u_touch)) {
    if (degenerate) *degenerate = true;
    return std::nullopt;
  }
  if (t_in && u_in) return std::make_pair(t, u);
  return std::nullopt;
}

P lerp(const P& p, const P& q, const Rat& t) {
  return P{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// winding number of a closed polyline around pt; pt must avoid the polyline.
// double fast path with exact fallback near ties.
int winding(const std::vector<P>& loop, const P& pt) {
  int w = 0;
  const size_t n = loop.size();
  double py = to_double(pt.y), px = to_double(pt.x);
  for (size_t i = 0; i < n; ++i) {
    const P& a = loop[i];
    const P& b = loop[(i + 1) % n];
    double ay = to_double(a.y), by = to_double(b.y);
    const double eps = 1e-9;
    bool a_up, b_up;
    if (std::abs(ay - py) > eps)
      a_up = ay > py;
    else
      a_up = a.y > pt.y;
    if (std::abs(by - py) > eps)
      b_up = by > py;
    else
      b_up = b.y > pt.y;
    if (a_up == b_up) continue;
    // x coordinate where the edge meets the horizontal through pt
    double ax = to_double(a.x), bx = to_double(b.x);
    double tD = (py - ay) / (by - ay);
    double xiD = ax + tD * (bx - ax);
    bool right;
    if (std::abs(xiD - px) > eps) {
      right = xiD > px;
    } else {
      Rat t = (pt.y - a.y) / (b.y - a.y);
      Rat xi = a.x + t * (b.x - a.x);
      right = xi > pt.x;
    }
    if (right) w += b_up ? 1 : -1;
  }
  return w;
}

// ------------------------------------------------------------------
// the piecewise-affine half-twist gadget
// ------------------------------------------------------------------

struct AffineTri {
  P a, b, c;     // domain
  P ia, ib, ic;  // images
};

struct TriD {
  double ax, ay, bx, by, cx, cy;
};

struct StepMap {
  std::vector<AffineTri> tris;
  std::vector<TriD> tris_d;  // double shadows for fast location
  std::vector<Seg> edges;    // all domain edges, deduplicated
  std::vector<BoxD> edge_boxes;
  std::vector<P> verts;  // all domain vertices
  P lo, hi;              // bounding box of the support
  double lo_x, lo_y, hi_x, hi_y;
  int points = 0;  // perimeter resolution; half twist = points/2 steps
};

// Rational unit vectors a quarter turn around, angles within a few degrees
// of uniform (scaled Pythagorean triples), so ring rotations by one index
// stay embedded.
const std::pair<Rat, Rat> kQuarter[4] = {
    {Rat(1), Rat(0)},
    {Rat(12, 13), Rat(5, 13)},
    {Rat(21, 29), Rat(20, 29)},
    {Rat(5, 13), Rat(12, 13)},
};

std::vector<P> ring_polygon(const P& c, const Rat& r) {
  std::vector<P> pts;
  auto push = [&](Rat ux, Rat uy) { pts.push_back(P{c.x + r * ux, c.y + r * uy}); };
  for (int q = 0; q < 4; ++q)
    for (int i = 0; i < 4; ++i) {
      Rat ux = kQuarter[i].first, uy = kQuarter[i].second;
      // rotate the quarter by q right angles
      for (int rot = 0; rot < q; ++rot) {
        Rat t = ux;
        ux = -uy;
        uy = t;
      }
      push(ux, uy);
    }
  return pts;
}

// The half twist about punctures t, t+1 as a single piecewise-affine map:
// the inner 16-gon is point-reflected, and eight concentric rings between
// radii 1/2 and 7/10 each unwind the rotation by one polygon index.
StepMap build_twist(int t, int dir) {
  const int points = 16, K = 8;
  const P c{Rat(2 * t + 1, 2), Rat(0)};
  std::vector<std::vector<P>> ring(K + 1);
  for (int j = 0; j <= K; ++j) ring[j] = ring_polygon(c, Rat(1, 2) + Rat(j, 40));

  auto at = [&](int j, int k) { return ring[j][((k % points) + points) % points]; };
  auto shifted = [&](int j, int k) {
    int s = dir * (K - j);  // ring j rotates by K-j indices
    return at(j, k + s);
  };

  StepMap sm;
  sm.points = points;
  // core: fan from the center, rotated by a point reflection
  for (int k = 0; k < points; ++k)
    sm.tris.push_back({c, at(0, k), at(0, k + 1), c, shifted(0, k), shifted(0, k + 1)});
  // rings; the quad diagonal leans against the shear direction
  for (int j = 0; j < K; ++j)
    for (int k = 0; k < points; ++k) {
      if (dir > 0) {
        sm.tris.push_back({at(j, k), at(j + 1, k), at(j + 1, k + 1),
                           shifted(j, k), shifted(j + 1, k), shifted(j + 1, k + 1)});
        sm.tris.push_back({at(j, k), at(j + 1, k + 1), at(j, k + 1),
                           shifted(j, k), shifted(j + 1, k + 1), shifted(j, k + 1)});
      } else {
        sm.tris.push_back({at(j, k), at(j + 1, k), at(j, k + 1),
                           shifted(j, k), shifted(j + 1, k), shifted(j, k + 1)});
        sm.tris.push_back({at(j + 1, k), at(j + 1, k + 1), at(j, k + 1),
                           shifted(j + 1, k), shifted(j + 1, k + 1), shifted(j, k + 1)});
      }
    }
  for (const auto& tr : sm.tris) {
    if (!(cross3(tr.a, tr.b, tr.c) > 0))
      throw std::logic_error("gadget: domain triangle not positively oriented");
    if (!(cross3(tr.ia, tr.ib, tr.ic) > 0))
      throw std::logic_error("gadget: image triangle not positively oriented");
  }
  std::set<std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>>> seen;
  auto add_edge = [&](const P& a, const P& b) {
    auto ka = std::make_pair(a.x, a.y), kb = std::make_pair(b.x, b.y);
    auto key = ka < kb ? std::make_pair(ka, kb) : std::make_pair(kb, ka);
    if (seen.insert(key).second) sm.edges.push_back({a, b});
  };
  for (const auto& tr : sm.tris) {
    add_edge(tr.a, tr.b);
    add_edge(tr.b, tr.c);
    add_edge(tr.c, tr.a);
  }
  for (const auto& e : sm.edges) sm.edge_boxes.push_back(seg_box(e.a, e.b));
  sm.verts.push_back(c);
  for (int j = 0; j <= K; ++j)
    for (int k = 0; k < points; ++k) sm.verts.push_back(ring[j][k]);
  const Rat R(7, 10);
  sm.lo = P{c.x - R, -R};
  sm.hi = P{c.x + R, R};
  for (const auto& tr : sm.tris)
    sm.tris_d.push_back(TriD{to_double(tr.a.x), to_double(tr.a.y), to_double(tr.b.x),
                             to_double(tr.b.y), to_double(tr.c.x), to_double(tr.c.y)});
  sm.lo_x = to_double(sm.lo.x);
  sm.lo_y = to_double(sm.lo.y);
  sm.hi_x = to_double(sm.hi.x);
  sm.hi_y = to_double(sm.hi.y);
  return sm;
}

struct StepPlan {
  StepMap sm;
  int reps;  // applications per half twist
};

const StepPlan& build_step(int t, int dir) {
  static std::map<std::pair<int, int>, StepPlan> cache;
  auto it = cache.find({t, dir});
  if (it != cache.end()) return it->second;
  StepPlan plan{build_twist(t, dir), 1};
  return cache.emplace(std::make_pair(t, dir), std::move(plan)).first->second;
}

bool in_closed_tri(const AffineTri& t, const P& p) {
  return cross3(t.a, t.b, p) >= 0 && cross3(t.b, t.c, p) >= 0 && cross3(t.c, t.a, p) >= 0;
}

P map_by_tri(const AffineTri& t, const P& p) {
  Rat d = cross3(t.a, t.b, t.c);
  Rat alpha = cross3(t.a, p, t.c) / d;  // weight of b
  Rat beta = cross3(t.a, t.b, p) / d;   // weight of c
  return P{t.ia.x + alpha * (t.ib.x - t.ia.x) + beta * (t.ic.x - t.ia.x),
           t.ia.y + alpha * (t.ib.y - t.ia.y) + beta * (t.ic.y - t.ia.y)};
}

P map_point(const StepMap& sm, const P& p) {
  double px = to_double(p.x), py = to_double(p.y);
  const double eps = 1e-9;
  if (px < sm.lo_x - eps || px > sm.hi_x + eps || py < sm.lo_y - eps || py > sm.hi_y + eps)
    return p;
  if (p.x <= sm.lo.x || p.x >= sm.hi.x || p.y <= sm.lo.y || p.y >= sm.hi.y) return p;
  // confident double location first, exact verification after
  for (size_t i = 0; i < sm.tris_d.size(); ++i) {
    const TriD& td = sm.tris_d[i];
    double c1 = (td.bx - td.ax) * (py - td.ay) - (td.by - td.ay) * (px - td.ax);
    double c2 = (td.cx - td.bx) * (py - td.by) - (td.cy - td.by) * (px - td.bx);
    double c3 = (td.ax - td.cx) * (py - td.cy) - (td.ay - td.cy) * (px - td.cx);
    if (c1 > eps && c2 > eps && c3 > eps) {
      if (in_closed_tri(sm.tris[i], p)) return map_by_tri(sm.tris[i], p);
      break;  // double lied; fall through to the exact scan
    }
  }
  for (const auto& t : sm.tris) {
    if (!in_closed_tri(t, p)) continue;
    return map_by_tri(t, p);
  }
  return p;
}

std::vector<P> apply_step(const StepMap& sm, const std::vector<P>& pts) {
  std::vector<P> cutpts;
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    const P& p = pts[i];
    const P& q = pts[(i + 1) % n];
    BoxD pq = seg_box(p, q);
    std::vector<Rat> ts;
    for (size_t e = 0; e < sm.edges.size(); ++e) {
      if (!pq.overlaps(sm.edge_boxes[e])) continue;
      auto x = seg_cross(p, q, sm.edges[e].a, sm.edges[e].b, nullptr);
      if (x) ts.push_back(x->first);
    }
    for (const auto& vtx : sm.verts) {
      double vx = to_double(vtx.x), vy = to_double(vtx.y);
      if (vx < pq.x0 - 1e-7 || vx > pq.x1 + 1e-7 || vy < pq.y0 - 1e-7 || vy > pq.y1 + 1e-7)
        continue;
      Rat dx = q.x - p.x, dy = q.y - p.y;
      if ((vtx.x - p.x) * dy - (vtx.y - p.y) * dx != 0) continue;
      Rat t = dx != 0 ? (vtx.x - p.x) / dx : (dy != 0 ? (vtx.y - p.y) / dy : Rat(-1));
      if (t > 0 && t < 1) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    cutpts.push_back(p);
    for (const Rat& t : ts) cutpts.push_back(lerp(p, q, t));
  }
  std::vector<P> out;
  out.reserve(cutpts.size());
  for (const auto& p : cutpts) out.push_back(map_point(sm, p));
  // drop duplicates and straight-through collinear vertices
  std::vector<P> clean;
  for (const auto& p : out) {
    if (!clean.empty() && clean.back().x == p.x && clean.back().y == p.y) continue;
    clean.push_back(p);
  }
  while (clean.size() >= 2 && clean.front().x == clean.back().x &&
         clean.front().y == clean.back().y)
    clean.pop_back();
  if (clean.size() < 3) return clean;
  std::vector<P> simp;
  const size_t cn = clean.size();
  for (size_t i = 0; i < cn; ++i) {
    const P& prev = simp.empty() ? clean[cn - 1] : simp.back();
    const P& cur = clean[i];
    const P& next = clean[(i + 1) % cn];
    if (cross3(prev, cur, next) == 0) {
      Rat dot = (prev.x - cur.x) * (next.x - cur.x) + (prev.y - cur.y) * (next.y - cur.y);
      if (dot > 0) simp.push_back(cur);  // fold point, keep
      continue;
    }
    simp.push_back(cur);
  }
  return simp.size() >= 3 ? simp : clean;
}

// ------------------------------------------------------------------
// events of a polyline against a straight segment, with side resolution
// ------------------------------------------------------------------

struct EdgeEvent {
  int pseg;   // polyline segment carrying the event
  Rat t;      // parameter along that segment
  Rat u;      // parameter along the edge, in (0,1)
  P pt;
  bool alive = true;
};

// transverse crossings of a closed polyline with segment (ea, eb); vertices
// and collinear runs exactly on the edge line are resolved by their
// neighbors' sides. Throws only if the polyline meets an edge endpoint.
std::vector<EdgeEvent> edge_events(const std::vector<P>& A, const P& ea, const P& eb,
                                   bool closed = true) {
  const int n = static_cast<int>(A.size());
  const int nseg = closed ? n : n - 1;
  Rat ex = eb.x - ea.x, ey = eb.y - ea.y;
  Rat elen2 = ex * ex + ey * ey;
  auto side = [&](const P& p) { return sign_of(ex * (p.y - ea.y) - ey * (p.x - ea.x)); };
  auto uparam = [&](const P& p) { return ((p.x - ea.x) * ex + (p.y - ea.y) * ey) / elen2; };

  std::vector<int> sides(n);
  BoxD ebox = seg_box(ea, eb);
  double eax = to_double(ea.x), eay = to_double(ea.y);
  double ebx = to_double(eb.x), eby = to_double(eb.y);
  double exd = ebx - eax, eyd = eby - eay;
  for (int i = 0; i < n; ++i) {
    double px = to_double(A[i].x), py = to_double(A[i].y);
    double c = exd * (py - eay) - eyd * (px - eax);
    if (std::abs(c) > 1e-9)
      sides[i] = c > 0 ? 1 : -1;
    else
      sides[i] = side(A[i]);
  }

  std::vector<EdgeEvent> out;
  auto emit = [&](int pseg, const Rat& t, const P& pt) {
    Rat u = uparam(pt);
    if (u == 0 || u == 1)
      throw std::runtime_error("oracle: curve passes through an edge endpoint");
    if (u > 0 && u < 1) out.push_back({pseg, t, u, pt});
  };

  (void)ebox;
  for (int i = 0; i < nseg; ++i) {
    int j = (i + 1) % n;
    if (sides[i] != 0 && sides[j] != 0 && sides[i] != sides[j]) {
      // plain transverse crossing of the line; emit keeps only hits on the
      // open segment
      const P& p = A[i];
      const P& q = A[j];
      Rat dx = q.x - p.x, dy = q.y - p.y;
      Rat denom = dx * ey - dy * ex;
      Rat t = ((ea.x - p.x) * ey - (ea.y - p.y) * ex) / denom;
      emit(i, t, lerp(p, q, t));
    }
  }
  // zero-side runs: vertices on the edge line
  for (int i = 0; i < n; ++i) {
    if (sides[i] != 0) continue;
    if (!closed && (i == 0 || i == n - 1))
      throw std::runtime_error("oracle: open endpoint on edge line");
    int prev = (i + n - 1) % n;
    if (sides[prev] == 0) continue;  // not the start of the run
    int j = i, len = 0;
    while (sides[j] == 0 && len < n) {
      j = (j + 1) % n;
      ++len;
    }
    if (len >= n) throw std::runtime_error("oracle: curve lies on an edge line");
    // run i..(j-1) on the line, sides[prev] and sides[j] off it
    Rat u0 = uparam(A[i]);
    Rat u1 = uparam(A[(j + n - 1) % n]);
    if (u0 == 0 || u0 == 1 || u1 == 0 || u1 == 1)
      throw std::runtime_error("oracle: curve passes through an edge endpoint");
    Rat lo = std::min(u0, u1), hi = std::max(u0, u1);
    if ((lo < 0 && hi > 0) || (lo < 1 && hi > 1))
      throw std::runtime_error("oracle: collinear run spans an edge endpoint");
    bool inside = u0 > 0 && u0 < 1;
    if (sides[prev] != sides[j] && inside) {
      EdgeEvent ev{(i + n - 1) % n, Rat(1), u0, A[i]};
      out.push_back(ev);  // crossing at the run start
    }
  }
  return out;
}

// ------------------------------------------------------------------
// crossing data and lens reduction
// ------------------------------------------------------------------

struct Crossing {
  int id;
  int sa;
  Rat ta;
  int sb;
  Rat tb;
  P pt;
  bool alive = true;
};

std::vector<P> forward_arc(const std::vector<P>& pts, int sx, const Rat& tx, int sy,
                           const Rat& ty, const P& from, const P& to) {
  std::vector<P> arc{from};
  const int n = static_cast<int>(pts.size());
  if (sx == sy && tx < ty) {
    arc.push_back(to);
    return arc;
  }
  int s = (sx + 1) % n;
  arc.push_back(pts[s]);
  while (s != sy) {
    s = (s + 1) % n;
    arc.push_back(pts[s]);
  }
  arc.push_back(to);
  return arc;
}

struct LensReducer {
  const std::vector<P>& A;
  const std::vector<P>& B;
  const std::vector<P>& punctures;
  std::vector<Crossing> xs;
  std::vector<int> orderA, orderB;

  int next_alive(const std::vector<int>& order, const std::vector<int>& pos_in, int id) const {
    int k = pos_in[id];
    const int n = static_cast<int>(order.size());
    for (int step = 1; step <= n; ++step) {
      int j = order[(k + step) % n];
      if (xs[j].alive) return j;
    }
    return -1;
  }

  bool lens_free(const std::vector<P>& loop) const {
    for (const auto& p : punctures)
      if (winding(loop, p) != 0) return false;
    return true;
  }

  std::vector<P> make_loop(const Crossing& x, const Crossing& y, bool b_forward) const {
    std::vector<P> loop = forward_arc(A, x.sa, x.ta, y.sa, y.ta, x.pt, y.pt);
    if (b_forward) {
      std::vector<P> arcB = forward_arc(B, x.sb, x.tb, y.sb, y.tb, x.pt, y.pt);
      for (size_t i = arcB.size() - 1; i-- > 1;) loop.push_back(arcB[i]);
    } else {
      std::vector<P> arcB = forward_arc(B, y.sb, y.tb, x.sb, x.tb, y.pt, x.pt);
      for (size_t i = 1; i + 1 < arcB.size(); ++i) loop.push_back(arcB[i]);
    }
    return loop;
  }

  long long reduce() {
    const int n = static_cast<int>(xs.size());
    std::vector<int> posA(n), posB(n);
    for (int i = 0; i < n; ++i) posA[orderA[i]] = i;
    for (int i = 0; i < n; ++i) posB[orderB[i]] = i;
    long long alive = n;
    bool changed = true;
    while (changed && alive >= 2) {
      changed = false;
      for (int id = 0; id < n && alive >= 2; ++id) {
        if (!xs[id].alive) continue;
        int y = next_alive(orderA, posA, id);
        if (y == id || y < 0) continue;
        bool fwd = next_alive(orderB, posB, id) == y;
        bool bwd = next_alive(orderB, posB, y) == id;
        bool removed = false;
        for (int pass = 0; pass < 2 && !removed; ++pass) {
          bool dir = pass == 0;
          if ((dir && !fwd) || (!dir && !bwd)) continue;
          auto loop = make_loop(xs[id], xs[y], dir);
          if (lens_free(loop)) {
            xs[id].alive = xs[y].alive = false;
            alive -= 2;
            changed = true;
            removed = true;
          }
        }
      }
    }
    return alive;
  }
};

std::vector<Crossing> curve_crossings(const std::vector<P>& A, const std::vector<P>& B) {
  std::vector<Crossing> xs;
  const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
  std::vector<BoxD> bboxes(nb);
  for (int j = 0; j < nb; ++j) bboxes[j] = seg_box(B[j], B[(j + 1) % nb]);
  for (int i = 0; i < na; ++i) {
    BoxD abox = seg_box(A[i], A[(i + 1) % na]);
    for (int j = 0; j < nb; ++j) {
      if (!abox.overlaps(bboxes[j])) continue;
      bool dg = false;
      auto x = seg_cross(A[i], A[(i + 1) % na], B[j], B[(j + 1) % nb], &dg);
      if (dg) throw std::runtime_error("oracle: degenerate curve contact");
      if (x) {
        Crossing c;
        c.id = static_cast<int>(xs.size());
        c.sa = i;
        c.ta = x->first;
        c.sb = j;
        c.tb = x->second;
        c.pt = lerp(A[i], A[(i + 1) % na], x->first);
        xs.push_back(c);
      }
    }
  }
  return xs;
}

void sort_orders(std::vector<Crossing>& xs, std::vector<int>& orderA, std::vector<int>& orderB) {
  orderA.resize(xs.size());
  orderB.resize(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) orderA[i] = orderB[i] = static_cast<int>(i);
  std::sort(orderA.begin(), orderA.end(), [&](int a, int b) {
    return xs[a].sa != xs[b].sa ? xs[a].sa < xs[b].sa : xs[a].ta < xs[b].ta;
  });
  std::sort(orderB.begin(), orderB.end(), [&](int a, int b) {
    return xs[a].sb != xs[b].sb ? xs[a].sb < xs[b].sb : xs[a].tb < xs[b].tb;
  });
}

}  // namespace

// ------------------------------------------------------------------

OracleCurve::OracleCurve(int punctures, std::vector<PtQ> polyline)
    : m_(punctures), pts_(std::move(polyline)) {
  if (m_ < 2) throw std::invalid_argument("OracleCurve: need at least 2 punctures");
  if (pts_.size() < 3) throw std::invalid_argument("OracleCurve: need a closed polyline");
}

OracleCurve OracleCurve::round_curve(int punctures, int lo, int hi, int jiggle_seed) {
  if (!(1 <= lo && lo < hi && hi <= punctures))
    throw std::invalid_argument("OracleCurve::round_curve: interval out of range");
  int len = hi - lo;
  Rat dx = Rat(31, 100) + Rat(len, 100) + Rat((5 * lo + 3 * hi + 101 * jiggle_seed) % 97, 40000);
  Rat dy = Rat(37, 100) + Rat(len, 100) + Rat((7 * lo + 11 * hi + 131 * jiggle_seed) % 89, 40000);
  std::vector<PtQ> pts = {
      {Rat(lo) - dx, -dy}, {Rat(hi) + dx, -dy}, {Rat(hi) + dx, dy}, {Rat(lo) - dx, dy}};
  return OracleCurve(punctures, std::move(pts));
}

std::vector<std::string> OracleCurve::cell_word() const {
  struct Wall {
    std::string name;
    P a, b;
  };
  std::vector<Wall> walls;
  for (int j = 1; j <= m_; ++j)
    walls.push_back({"U" + std::to_string(j), P{Rat(j), Rat(0)}, P{Rat(j), Rat(2)}});
  for (int j = 1; j <= m_; ++j)
    walls.push_back({"L" + std::to_string(j), P{Rat(j), Rat(0)}, P{Rat(j), Rat(-2)}});
  for (int g = 0; g <= m_; ++g)
    walls.push_back({"A" + std::to_string(g), P{Rat(g), Rat(0)}, P{Rat(g + 1), Rat(0)}});

  std::vector<std::pair<std::pair<int, Rat>, std::string>> hits;
  for (const auto& w : walls)
    for (const auto& ev : edge_events(pts_, w.a, w.b))
      hits.push_back({{ev.pseg, ev.t}, w.name});
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    return a.first.first != b.first.first ? a.first.first < b.first.first
                                          : a.first.second < b.first.second;
  });
  std::vector<std::string> word;
  for (auto& h : hits) word.push_back(h.second);
  bool changed = true;
  while (changed && word.size() >= 2) {
    changed = false;
    for (size_t i = 0; i < word.size() && word.size() >= 2; ++i) {
      size_t j = (i + 1) % word.size();
      if (word[i] == word[j]) {
        if (j > i) {
          word.erase(word.begin() + j);
          word.erase(word.begin() + i);
        } else {
          word.erase(word.begin() + i);
          word.erase(word.begin() + j);
        }
        changed = true;
        break;
      }
    }
  }
  return word;
}

namespace {

long long min_crossings_with_segment(const std::vector<P>& A, const P& ea, const P& eb,
                                     const std::vector<P>& punctures) {
  std::vector<EdgeEvent> xs = edge_events(A, ea, eb);
  if (xs.empty()) return 0;

  std::vector<int> orderA(xs.size()), orderE(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) orderA[i] = orderE[i] = static_cast<int>(i);
  std::sort(orderA.begin(), orderA.end(), [&](int a, int b) {
    return xs[a].pseg != xs[b].pseg ? xs[a].pseg < xs[b].pseg : xs[a].t < xs[b].t;
  });
  std::sort(orderE.begin(), orderE.end(), [&](int a, int b) { return xs[a].u < xs[b].u; });
  std::vector<int> posA(xs.size()), posE(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) posA[orderA[i]] = static_cast<int>(i);
  for (size_t i = 0; i < xs.size(); ++i) posE[orderE[i]] = static_cast<int>(i);

  long long alive = static_cast<long long>(xs.size());
  auto next_alive_A = [&](int id) {
    const int N = static_cast<int>(xs.size());
    int k = posA[id];
    for (int s = 1; s <= N; ++s) {
      int j = orderA[(k + s) % N];
      if (xs[j].alive) return j;
    }
    return -1;
  };
  auto seg_neighbor = [&](int id, int dir) {
    const int N = static_cast<int>(xs.size());
    int k = posE[id] + dir;
    while (k >= 0 && k < N) {
      if (xs[orderE[k]].alive) return orderE[k];
      k += dir;
    }
    return -1;
  };

  bool changed = true;
  while (changed && alive >= 2) {
    changed = false;
    for (int id = 0; id < static_cast<int>(xs.size()) && alive >= 2; ++id) {
      if (!xs[id].alive) continue;
      int y = next_alive_A(id);
      if (y < 0 || y == id) continue;
      if (seg_neighbor(id, +1) != y && seg_neighbor(id, -1) != y) continue;
      // lens: forward arc of A, closed by the straight run along the edge
      auto loop = forward_arc(A, xs[id].pseg, xs[id].t, xs[y].pseg, xs[y].t, xs[id].pt, xs[y].pt);
      bool free = true;
      for (const auto& p : punctures)
        if (winding(loop, p) != 0) {
          free = false;
          break;
        }
      if (free) {
        xs[id].alive = xs[y].alive = false;
        alive -= 2;
        changed = true;
      }
    }
  }
  return alive;
}

// straight-chord drawing of a normal form; tag shifts the slot grid to keep
// distinct curves off each other
std::vector<P> redraw_from_coords(const Comb& comb, const TriSurface& surf,
                                  const DiskCoords& dc, int tag) {
  auto ex = extract_multicurve_slots(surf, coords_to_weights(comb, dc));
  if (ex.mc.components.size() != 1)
    throw std::runtime_error("oracle redraw: expected a single component");
  const NormalPath& path = ex.mc.components[0];
  const auto& slots = ex.out_slots[0];
  auto weights = coords_to_weights(comb, dc);
  std::vector<P> pts;
  for (int i = 0; i < path.length(); ++i) {
    int e = comb.triangle(path.segs[i].tri).e[path.segs[i].out_side];
    long long w = weights[e].convert_to<long long>();
    Rat u = Rat(slots[i] + 1, w + 1) + Rat(tag, 9973 * (w + 2));
    const auto& ed = comb.edge(e);
    P a{comb.vertex(ed.v0).x, comb.vertex(ed.v0).y};
    P b{comb.vertex(ed.v1).x, comb.vertex(ed.v1).y};
    pts.push_back(lerp(a, b, u));
  }
  if (pts.size() < 3) throw std::runtime_error("oracle redraw: degenerate normal form");
  return pts;
}

struct CombCache {
  Comb comb;
  TriSurface surf;
  explicit CombCache(int m) : comb(m), surf(TriSurface::from_comb(comb)) {}
};

const CombCache& comb_cache(int m) {
  static std::map<int, CombCache> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, CombCache(m)).first;
  return it->second;
}

DiskCoords coords_of_polyline(const std::vector<P>& pts, int m);

// re-tighten: replace the polyline by the straight-chord drawing of its
// normal form, verifying the class is unchanged
std::vector<P> retighten(const std::vector<P>& pts, int m, int first_tag) {
  const CombCache& cc = comb_cache(m);
  DiskCoords dc = coords_of_polyline(pts, m);
  if (dc.is_zero()) throw std::runtime_error("oracle: curve became trivial");
  for (int tag = first_tag; tag < first_tag + 8; ++tag) {
    try {
      std::vector<P> redrawn = redraw_from_coords(cc.comb, cc.surf, dc, tag);
      if (coords_of_polyline(redrawn, m) == dc) return redrawn;
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("oracle: retighten failed for all grid shifts");
}

}  // namespace

namespace {

DiskCoords coords_of_polyline(const std::vector<P>& pts, int m) {
  const CombCache& cc = comb_cache(m);
  std::vector<P> punct;
  for (int j = 1; j <= m; ++j) punct.push_back(P{Rat(j), Rat(0)});
  DiskCoords dc;
  dc.punctures = m;
  for (int e : cc.comb.interior_edges()) {
    const auto& ed = cc.comb.edge(e);
    P a{cc.comb.vertex(ed.v0).x, cc.comb.vertex(ed.v0).y};
    P b{cc.comb.vertex(ed.v1).x, cc.comb.vertex(ed.v1).y};
    dc.coords.push_back(Int(min_crossings_with_segment(pts, a, b, punct)));
  }
  return dc;
}

}  // namespace

DiskCoords OracleCurve::comb_coords(const Comb& comb) const {
  if (comb.marked() != m_) throw std::invalid_argument("comb_coords: puncture mismatch");
  return coords_of_polyline(pts_, m_);
}

OracleCurve oracle_apply(const OracleCurve& c, const BraidWord& w, const OracleBudget& budget) {
  if (w.strands() != c.punctures())
    throw std::invalid_argument("oracle_apply: strand/puncture mismatch");
  std::vector<P> pts = c.polyline();
  for (const auto& l : w.letters()) {
    const StepPlan& plan = build_step(l.index, l.sign > 0 ? +1 : -1);
    for (int step = 0; step < plan.reps; ++step) {
      pts = apply_step(plan.sm, pts);
      if (static_cast<long long>(pts.size()) > budget.max_vertices)
        throw std::runtime_error("oracle_apply: vertex budget exceeded");
    }
    // the marked points are back in place only after the full half twist, so
    // the drawing may be pulled tight again just once per letter
    pts = retighten(pts, c.punctures(), 0);
  }
  return OracleCurve(c.punctures(), std::move(pts));
}

long long oracle_intersection(const OracleCurve& a, const OracleCurve& b,
                              const OracleBudget& budget) {
  if (a.punctures() != b.punctures())
    throw std::invalid_argument("oracle_intersection: puncture mismatch");
  if (static_cast<long long>(a.vertex_count()) * b.vertex_count() > budget.max_vertices * 4)
    throw std::runtime_error("oracle_intersection: budget exceeded");
  std::vector<P> punct;
  for (int j = 1; j <= a.punctures(); ++j) punct.push_back(P{Rat(j), Rat(0)});
  DiskCoords ca = coords_of_polyline(a.polyline(), a.punctures());
  DiskCoords cb = coords_of_polyline(b.polyline(), b.punctures());
  if (ca == cb) return 0;  // isotopic simple closed curves are disjoint
  // redraw on shifted grids so the two curves stay transverse
  std::vector<P> pa = retighten(a.polyline(), a.punctures(), 1);
  std::vector<P> pb = retighten(b.polyline(), b.punctures(), 11);
  for (int attempt = 0; attempt < 6; ++attempt) {
    try {
      LensReducer lr{pa, pb, punct, curve_crossings(pa, pb)};
      sort_orders(lr.xs, lr.orderA, lr.orderB);
      return lr.reduce();
    } catch (const std::runtime_error&) {
      pb = retighten(pb, b.punctures(), 21 + 10 * attempt);
    }
  }
  throw std::runtime_error("oracle_intersection: persistent degeneracy");
}

// ------------------------------------------------------------------
// complementary region census
// ------------------------------------------------------------------

std::vector<OracleRegion> oracle_region_census(const OracleCurve& ca, const OracleCurve& cb) {
  const std::vector<P>& A = ca.polyline();
  const std::vector<P>& B = cb.polyline();
  std::vector<P> punct;
  for (int j = 1; j <= ca.punctures(); ++j) punct.push_back(P{Rat(j), Rat(0)});

  auto xs = curve_crossings(A, B);
  {
    LensReducer lr{A, B, punct, xs};
    sort_orders(lr.xs, lr.orderA, lr.orderB);
    long long minimal = lr.reduce();
    if (minimal != static_cast<long long>(xs.size()))
      throw std::invalid_argument("oracle_region_census: pair not drawn in minimal position");
  }
  if (xs.empty()) throw std::invalid_argument("oracle_region_census: disjoint pair");

  struct Arc {
    int from, to;
    std::vector<P> geom;
    int curve;
  };
  std::vector<Arc> arcs;
  auto build_arcs = [&](const std::vector<P>& pts, int curve) {
    std::vector<int> order;
    for (size_t i = 0; i < xs.size(); ++i) order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(), [&](int u, int v) {
      int su = curve == 0 ? xs[u].sa : xs[u].sb;
      int sv = curve == 0 ? xs[v].sa : xs[v].sb;
      Rat tu = curve == 0 ? xs[u].ta : xs[u].tb;
      Rat tv = curve == 0 ? xs[v].ta : xs[v].tb;
      return su != sv ? su < sv : tu < tv;
    });
    const int k = static_cast<int>(order.size());
    for (int i = 0; i < k; ++i) {
      int u = order[i], v = order[(i + 1) % k];
      int su = curve == 0 ? xs[u].sa : xs[u].sb;
      int sv = curve == 0 ? xs[v].sa : xs[v].sb;
      Rat tu = curve == 0 ? xs[u].ta : xs[u].tb;
      Rat tv = curve == 0 ? xs[v].ta : xs[v].tb;
      Arc arc;
      arc.from = u;
      arc.to = v;
      arc.curve = curve;
      arc.geom = forward_arc(pts, su, tu, sv, tv, xs[u].pt, xs[v].pt);
      arcs.push_back(std::move(arc));
    }
  };
  build_arcs(A, 0);
  build_arcs(B, 1);

  const int nd = static_cast<int>(arcs.size()) * 2;
  auto dart_tail = [&](int d) { return d % 2 == 0 ? arcs[d / 2].from : arcs[d / 2].to; };
  auto dart_head = [&](int d) { return d % 2 == 0 ? arcs[d / 2].to : arcs[d / 2].from; };
  auto dart_dir = [&](int d) {
    const Arc& a = arcs[d / 2];
    if (d % 2 == 0) return P{a.geom[1].x - a.geom[0].x, a.geom[1].y - a.geom[0].y};
    size_t n = a.geom.size();
    return P{a.geom[n - 2].x - a.geom[n - 1].x, a.geom[n - 2].y - a.geom[n - 1].y};
  };
  auto reverse_dart = [&](int d) { return d % 2 == 0 ? d + 1 : d - 1; };

  std::vector<std::vector<int>> out_darts(xs.size());
  for (int d = 0; d < nd; ++d) out_darts[dart_tail(d)].push_back(d);
  auto angle_less = [&](int d1, int d2) {
    P u = dart_dir(d1), v = dart_dir(d2);
    auto half = [](const P& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return u.x * v.y - u.y * v.x > 0;
  };
  for (auto& v : out_darts) std::sort(v.begin(), v.end(), angle_less);

  auto next_in_face = [&](int d) {
    int r = reverse_dart(d);
    const auto& ring = out_darts[dart_head(d)];
    int idx = -1;
    for (size_t i = 0; i < ring.size(); ++i)
      if (ring[i] == r) idx = static_cast<int>(i);
    return ring[(idx + ring.size() - 1) % ring.size()];
  };

  std::vector<int> face_of(nd, -1);
  std::vector<OracleRegion> regions;
  std::vector<std::vector<P>> face_geom;
  for (int d0 = 0; d0 < nd; ++d0) {
    if (face_of[d0] != -1) continue;
    int f = static_cast<int>(regions.size());
    OracleRegion reg;
    std::vector<P> loop;
    int d = d0;
    int corners = 0;
    do {
      face_of[d] = f;
      const Arc& a = arcs[d / 2];
      if (d % 2 == 0)
        loop.insert(loop.end(), a.geom.begin(), a.geom.end() - 1);
      else
        loop.insert(loop.end(), a.geom.rbegin(), a.geom.rend() - 1);
      ++corners;
      d = next_in_face(d);
    } while (d != d0);
    reg.corners = corners;
    regions.push_back(reg);
    face_geom.push_back(std::move(loop));
  }

  for (size_t f = 0; f < regions.size(); ++f) {
    const auto& loop = face_geom[f];
    Rat area2 = 0;
    for (size_t i = 0; i < loop.size(); ++i) {
      const P& p = loop[i];
      const P& q = loop[(i + 1) % loop.size()];
      area2 += p.x * q.y - p.y * q.x;
    }
    if (area2 < 0) regions[f].outer = true;
  }

  for (int j = 1; j <= ca.punctures(); ++j) {
    P p{Rat(j), Rat(0)};
    Rat best_x;
    int best_dart = -1;
    for (int d = 0; d < nd; d += 2) {
      const Arc& a = arcs[d / 2];
      for (size_t i = 0; i + 1 < a.geom.size(); ++i) {
        const P& u = a.geom[i];
        const P& v = a.geom[i + 1];
        bool u_up = u.y > p.y, v_up = v.y > p.y;
        if (u_up == v_up) continue;
        Rat t = (p.y - u.y) / (v.y - u.y);
        Rat xi = u.x + t * (v.x - u.x);
        if (xi <= p.x) continue;
        if (best_dart == -1 || xi < best_x) {
          best_x = xi;
          best_dart = v_up ? d : reverse_dart(d);
        }
      }
    }
    if (best_dart == -1)
      throw std::logic_error("oracle_region_census: puncture sees no arc");
    regions[face_of[best_dart]].punctures.push_back(j);
  }
  return regions;
}

bool oracle_fills(const OracleCurve& a, const OracleCurve& b) {
  long long i = oracle_intersection(a, b);
  if (i == 0) return false;
  auto regions = oracle_region_census(a, b);
  for (const auto& r : regions) {
    int load = static_cast<int>(r.punctures.size()) + (r.outer ? 1 : 0);
    if (load > 1) return false;
  }
  return true;
}

void BandArcData::validate() const {
  if (k < 0 || m_arcs < 0 || n_out < 0) throw std::invalid_argument("BandArcData: negative count");
  if (m_arcs > k) throw std::invalid_argument("BandArcData: more sloped arcs than band arcs");
}

long long band_intersection_count(const BandArcData& d) {
  d.validate();
  switch (d.slope) {
    case BandArcData::Positive:
      return d.k + d.m_arcs + d.n_out;
    case BandArcData::Negative:
      return d.k - d.m_arcs + d.n_out;
    case BandArcData::VerticalOnly:
      return d.k + d.n_out;
  }
  return 0;
}

}  // namespace fk
