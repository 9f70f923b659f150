#include "fk/trisurface.hpp"

#include <list>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fk {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int TriSurface::side_of(int t, int e) const {
  for (int s = 0; s < 3; ++s)
    if (tris_[t].sides[s].edge == e) return s;
  return -1;
}

int TriSurface::other_tri(int e, int t) const {
  auto [a, b] = edge_tris_[e];
  return a == t ? b : a;
}

void TriSurface::finalize() {
  edge_tris_.assign(edge_count_, {-1, -1});
  for (int t = 0; t < triangle_count(); ++t)
    for (int s = 0; s < 3; ++s) {
      int e = tris_[t].sides[s].edge;
      auto& slot = edge_tris_[e];
      if (slot[0] == -1)
        slot[0] = t;
      else if (slot[1] == -1)
        slot[1] = t;
      else
        throw std::logic_error("TriSurface: edge bounds three triangles");
    }

  // corner orbits = vertices
  const int C = 3 * triangle_count();
  DSU dsu(C);
  for (int t = 0; t < triangle_count(); ++t)
    for (int c = 0; c < 3; ++c) {
      // crossing the outgoing side c identifies this corner with a corner of
      // the neighbor triangle
      int e = tris_[t].sides[c].edge;
      int t2 = other_tri(e, t);
      if (t2 == -1) continue;
      int s2 = side_of(t2, e);
      dsu.unite(3 * t + c, 3 * t2 + (s2 + 1) % 3);
    }
  corner_vertex_.assign(C, -1);
  std::map<int, int> root_to_vertex;
  verts_.clear();
  for (int i = 0; i < C; ++i) {
    int r = dsu.find(i);
    auto it = root_to_vertex.find(r);
    if (it == root_to_vertex.end()) {
      it = root_to_vertex.emplace(r, static_cast<int>(verts_.size())).first;
      verts_.push_back(Vertex{});
    }
    corner_vertex_[i] = it->second;
    verts_[it->second].corners.push_back({i / 3, i % 3});
  }
  // boundary detection: a vertex is on the boundary if some incident side is
  for (int t = 0; t < triangle_count(); ++t)
    for (int s = 0; s < 3; ++s) {
      int e = tris_[t].sides[s].edge;
      if (edge_tris_[e][1] != -1) continue;
      verts_[corner_vertex_[3 * t + s]].kind = VertexKind::Boundary;
      verts_[corner_vertex_[3 * t + (s + 1) % 3]].kind = VertexKind::Boundary;
    }
}

int TriSurface::euler_characteristic() const {
  return vertex_count() - edge_count_ + triangle_count();
}

int TriSurface::boundary_circles() const {
  std::map<std::pair<int, int>, bool> seen;  // boundary (tri, side)
  int circles = 0;
  for (int t0 = 0; t0 < triangle_count(); ++t0)
    for (int s0 = 0; s0 < 3; ++s0) {
      if (edge_tris_[tris_[t0].sides[s0].edge][1] != -1) continue;
      if (seen.count({t0, s0})) continue;
      ++circles;
      int t = t0, s = s0;
      do {
        seen[{t, s}] = true;
        // walk around the head vertex of side s to the next boundary side
        int ct = t, cc = (s + 1) % 3;
        for (;;) {
          int e = tris_[ct].sides[cc].edge;
          int t2 = other_tri(e, ct);
          if (t2 == -1) {
            t = ct;
            s = cc;
            break;
          }
          int s2 = side_of(t2, e);
          ct = t2;
          cc = (s2 + 1) % 3;
        }
      } while (!(t == t0 && s == s0));
    }
  return circles;
}

int TriSurface::marked_count() const {
  int n = 0;
  for (const auto& v : verts_)
    if (v.kind == VertexKind::Marked) ++n;
  return n;
}

TriSurface TriSurface::from_comb(const Comb& comb) {
  TriSurface s;
  s.edge_count_ = comb.edge_count();
  s.base_edge_count_ = comb.edge_count();
  for (int t = 0; t < comb.triangle_count(); ++t) {
    Tri tr;
    tr.base_tri = t;
    tr.sheet = 0;
    for (int i = 0; i < 3; ++i) {
      int e = comb.triangle(t).e[i];
      tr.sides[i] = Side{e, comb.edge(e).v0 == comb.triangle(t).v[i]};
    }
    s.tris_.push_back(tr);
  }
  s.finalize();
  // marked points
  for (int t = 0; t < comb.triangle_count(); ++t)
    for (int c = 0; c < 3; ++c) {
      int cv = comb.triangle(t).v[c];
      Vertex& v = s.verts_[s.corner_vertex_[3 * t + c]];
      v.base_vertex = cv;
      if (v.kind != VertexKind::Boundary && comb.vertex(cv).kind == CombVertex::Marked)
        v.kind = VertexKind::Marked;
    }
  return s;
}

TriSurface TriSurface::triple_cover(const Comb& comb, const CoverSpec& cs) {
  cs.validate();
  if (cs.branch_points() != comb.marked())
    throw std::invalid_argument("triple_cover: branch point count mismatch");
  TriSurface s;
  s.edge_count_ = 3 * comb.edge_count();
  s.base_edge_count_ = comb.edge_count();
  s.cover_edge_map_.assign(s.edge_count_, -1);
  for (int e = 0; e < comb.edge_count(); ++e)
    for (int sh = 1; sh <= 3; ++sh) s.cover_edge_map_[3 * e + (sh - 1)] = 3 * e + (sh - 1);

  // cut edges: the lower walls L_j
  std::vector<int> cut_perm(comb.edge_count(), -1);  // branch index or -1
  for (int j = 1; j <= comb.marked(); ++j) cut_perm[comb.edge_id(CombEdge::L, j)] = j;

  for (int t = 0; t < comb.triangle_count(); ++t) {
    for (int sh = 1; sh <= 3; ++sh) {
      Tri tr;
      tr.base_tri = t;
      tr.sheet = sh;
      for (int i = 0; i < 3; ++i) {
        int e = comb.triangle(t).e[i];
        bool fwd = comb.edge(e).v0 == comb.triangle(t).v[i];
        int copy_sheet = sh;
        if (cut_perm[e] != -1 && comb.edge_triangles(e)[0] != t) {
          // right-side triangle uses the copy labeled by the left sheet
          Perm rho = cs.monodromy(cut_perm[e]);
          copy_sheet = rho.inverse()[sh - 1] + 1;
        }
        tr.sides[i] = Side{3 * e + (copy_sheet - 1), fwd};
      }
      s.tris_.push_back(tr);
    }
  }
  s.finalize();

  // vertex bookkeeping relative to the base
  TriSurface base = TriSurface::from_comb(comb);
  for (int t = 0; t < comb.triangle_count(); ++t)
    for (int sh = 0; sh < 3; ++sh)
      for (int c = 0; c < 3; ++c) {
        int up = s.corner_vertex_[3 * (3 * t + sh) + c];
        int down = base.corner_vertex_[3 * t + c];
        Vertex& v = s.verts_[up];
        v.base_vertex = down;
        // branch preimages upstairs are ordinary (unmarked) interior points
        if (v.kind != VertexKind::Boundary) v.kind = VertexKind::Unmarked;
      }
  for (auto& v : s.verts_) {
    if (v.base_vertex < 0) continue;
    int down_corners = static_cast<int>(base.verts_[v.base_vertex].corners.size());
    if (down_corners > 0) v.branch_degree = static_cast<int>(v.corners.size()) / down_corners;
  }
  return s;
}

int TriSurface::cover_edge(int base_edge, int sheet) const {
  if (cover_edge_map_.empty()) throw std::logic_error("cover_edge: not a cover surface");
  return cover_edge_map_.at(3 * base_edge + (sheet - 1));
}

std::string TriSurface::export_text() const {
  std::ostringstream os;
  os << "triangles " << triangle_count() << " edges " << edge_count_ << "\n";
  for (int t = 0; t < triangle_count(); ++t) {
    const Tri& tr = tris_[t];
    os << "tri " << t << " edges";
    for (int i = 0; i < 3; ++i)
      os << ' ' << tr.sides[i].edge << (tr.sides[i].forward ? '+' : '-');
    os << " sheet " << tr.sheet << " base " << tr.base_tri << "\n";
  }
  return os.str();
}

Int Multicurve::total_weight() const {
  Int n = 0;
  for (const auto& c : components) n += c.length();
  return n;
}

void validate_path(const TriSurface& surf, const NormalPath& p) {
  const int n = p.length();
  for (int i = 0; i < n; ++i) {
    const auto& s = p.segs[i];
    if (s.tri < 0 || s.tri >= surf.triangle_count() || s.in_side < 0 || s.in_side > 2 ||
        s.out_side < 0 || s.out_side > 2)
      throw std::invalid_argument("NormalPath: malformed segment");
    bool last = i == n - 1;
    if (!p.closed && last) continue;
    const auto& t = p.segs[(i + 1) % n];
    int e = surf.tri(s.tri).sides[s.out_side].edge;
    if (surf.other_tri(e, s.tri) != t.tri || surf.tri(t.tri).sides[t.in_side].edge != e)
      throw std::invalid_argument("NormalPath: segments not glued");
  }
}

NormalPath reduce_path(const TriSurface& surf, NormalPath p) {
  auto edge_of = [&](const NormalPath::Seg& s, bool out) {
    return surf.tri(s.tri).sides[out ? s.out_side : s.in_side].edge;
  };
  std::list<NormalPath::Seg> segs(p.segs.begin(), p.segs.end());

  bool changed = true;
  while (changed) {
    changed = false;
    if (segs.size() < 2) break;
    for (auto it = segs.begin(); it != segs.end();) {
      bool middle = p.closed || (it != segs.begin() && it != std::prev(segs.end()));
      if (middle && edge_of(*it, false) == edge_of(*it, true)) {
        auto prev = it == segs.begin() ? std::prev(segs.end()) : std::prev(it);
        auto nxt = std::next(it) == segs.end() ? segs.begin() : std::next(it);
        if (prev == it || nxt == it || prev == nxt) {
          // one or two segments left: a trivial circle
          segs.clear();
          break;
        }
        prev->out_side = nxt->out_side;
        segs.erase(nxt);
        it = segs.erase(it);
        changed = true;
        continue;
      }
      ++it;
    }
    if (p.closed && segs.size() == 1) {
      auto& s = segs.front();
      if (surf.tri(s.tri).sides[s.in_side].edge == surf.tri(s.tri).sides[s.out_side].edge)
        segs.clear();
    }
  }
  p.segs.assign(segs.begin(), segs.end());
  return p;
}

std::vector<Int> path_weights(const TriSurface& surf, const NormalPath& p) {
  std::vector<Int> w(surf.edge_count(), 0);
  const int n = p.length();
  for (int i = 0; i < n; ++i) {
    if (!p.closed && i == n - 1) break;
    w[surf.tri(p.segs[i].tri).sides[p.segs[i].out_side].edge] += 1;
  }
  return w;
}

std::vector<Int> multicurve_weights(const TriSurface& surf, const Multicurve& mc) {
  std::vector<Int> w(surf.edge_count(), 0);
  for (const auto& c : mc.components) {
    auto cw = path_weights(surf, c);
    for (size_t i = 0; i < w.size(); ++i) w[i] += cw[i];
  }
  return w;
}

bool weights_admissible(const TriSurface& surf, const std::vector<Int>& w, std::string* why) {
  if (static_cast<int>(w.size()) != surf.edge_count()) {
    if (why) *why = "wrong coordinate dimension";
    return false;
  }
  for (int e = 0; e < surf.edge_count(); ++e) {
    if (w[e] < 0) {
      if (why) *why = "negative weight";
      return false;
    }
    if (surf.edge_is_boundary(e) && w[e] != 0) {
      if (why) *why = "nonzero weight on a boundary edge";
      return false;
    }
  }
  for (int t = 0; t < surf.triangle_count(); ++t) {
    Int a = w[surf.tri(t).sides[0].edge];
    Int b = w[surf.tri(t).sides[1].edge];
    Int c = w[surf.tri(t).sides[2].edge];
    if ((a + b + c) % 2 != 0) {
      if (why) *why = "odd triangle sum";
      return false;
    }
    if (a > b + c || b > a + c || c > a + b) {
      if (why) *why = "triangle inequality violated";
      return false;
    }
  }
  return true;
}

Multicurve extract_multicurve(const TriSurface& surf, const std::vector<Int>& w) {
  return extract_multicurve_slots(surf, w).mc;
}

ExtractedCurves extract_multicurve_slots(const TriSurface& surf, const std::vector<Int>& w) {
  std::string why;
  if (!weights_admissible(surf, w, &why))
    throw std::invalid_argument("extract_multicurve: inadmissible weights: " + why);

  Int total = 0;
  for (const auto& x : w) total += x;
  if (total > Int(20000000))
    throw std::runtime_error("extract_multicurve: weights exceed extraction budget");

  auto wv = [&](int e) { return w[e].convert_to<long long>(); };

  // Arcs inside each triangle, grouped by the corner they cut off.
  std::vector<std::array<long long, 3>> corner_count(surf.triangle_count());
  std::vector<std::array<long long, 3>> corner_base(surf.triangle_count());
  long long arc_total = 0;
  for (int t = 0; t < surf.triangle_count(); ++t) {
    long long ws[3];
    for (int s = 0; s < 3; ++s) ws[s] = wv(surf.tri(t).sides[s].edge);
    for (int c = 0; c < 3; ++c) {
      long long cc = (ws[c] + ws[(c + 2) % 3] - ws[(c + 1) % 3]) / 2;
      corner_count[t][c] = cc;
      corner_base[t][c] = arc_total;
      arc_total += cc;
    }
  }

  auto slot_of = [&](int t, int side, long long pos) {
    const auto& sd = surf.tri(t).sides[side];
    long long n = wv(sd.edge);
    return std::pair<int, long long>(sd.edge, sd.forward ? pos : n - 1 - pos);
  };

  std::map<std::pair<int, long long>, std::array<long long, 2>> touch;
  auto record = [&](int t, int side, long long pos, long long arc) {
    auto key = slot_of(t, side, pos);
    auto it = touch.find(key);
    if (it == touch.end())
      touch[key] = {arc, -1};
    else
      it->second[1] = arc;
  };

  std::vector<std::array<int, 2>> arc_sides(arc_total);
  std::vector<std::array<long long, 2>> arc_pos(arc_total);
  std::vector<int> arc_tri(arc_total);
  for (int t = 0; t < surf.triangle_count(); ++t) {
    long long ws[3];
    for (int s = 0; s < 3; ++s) ws[s] = wv(surf.tri(t).sides[s].edge);
    for (int c = 0; c < 3; ++c) {
      int sa = (c + 2) % 3;  // incoming side, head at corner c
      int sb = c;            // outgoing side, tail at corner c
      for (long long k = 0; k < corner_count[t][c]; ++k) {
        long long arc = corner_base[t][c] + k;
        arc_tri[arc] = static_cast<int>(t);
        arc_sides[arc] = {sa, sb};
        arc_pos[arc] = {ws[sa] - 1 - k, k};
        record(t, sa, ws[sa] - 1 - k, arc);
        record(t, sb, k, arc);
      }
    }
  }

  for (auto& [key, v] : touch)
    if (v[1] == -1) throw std::logic_error("extract_multicurve: dangling slot");

  ExtractedCurves out;
  std::vector<char> used(arc_total, 0);
  for (long long a0 = 0; a0 < arc_total; ++a0) {
    if (used[a0]) continue;
    NormalPath path;
    path.closed = true;
    std::vector<long long> slots;
    long long arc = a0;
    int enter_side = arc_sides[a0][0];
    do {
      used[arc] = 1;
      int t = arc_tri[arc];
      int out_side = arc_sides[arc][0] == enter_side ? arc_sides[arc][1] : arc_sides[arc][0];
      long long out_pos = arc_sides[arc][0] == enter_side ? arc_pos[arc][1] : arc_pos[arc][0];
      path.segs.push_back({t, enter_side, out_side});
      auto key = slot_of(t, out_side, out_pos);
      slots.push_back(key.second);
      auto& pr = touch.at(key);
      long long nxt = pr[0] == arc ? pr[1] : pr[0];
      int t2 = arc_tri[nxt];
      int e = surf.tri(t).sides[out_side].edge;
      int s2 = surf.side_of(t2, e);
      arc = nxt;
      enter_side = s2;
      if (arc_sides[nxt][0] != s2 && arc_sides[nxt][1] != s2)
        throw std::logic_error("extract_multicurve: inconsistent gluing");
    } while (!(arc == a0 && enter_side == arc_sides[a0][0]));
    validate_path(surf, path);
    out.mc.components.push_back(std::move(path));
    out.out_slots.push_back(std::move(slots));
  }
  return out;
}

NormalPath lift_path(const TriSurface& cover, const Comb& comb, const CoverSpec& cs,
                     const NormalPath& base, int sheet) {
  std::vector<int> cut_perm(comb.edge_count(), -1);
  for (int j = 1; j <= comb.marked(); ++j) cut_perm[comb.edge_id(CombEdge::L, j)] = j;

  NormalPath up;
  up.closed = base.closed;
  int s = sheet;
  const int laps_max = base.closed ? 3 : 1;
  for (int lap = 0; lap < laps_max; ++lap) {
    for (int i = 0; i < base.length(); ++i) {
      const auto& seg = base.segs[i];
      up.segs.push_back({3 * seg.tri + (s - 1), seg.in_side, seg.out_side});
      if (!base.closed && i == base.length() - 1) break;
      int e = comb.triangle(seg.tri).e[seg.out_side];
      if (cut_perm[e] != -1) {
        Perm rho = cs.monodromy(cut_perm[e]);
        bool from_left = comb.edge_triangles(e)[0] == seg.tri;
        s = from_left ? rho[s - 1] + 1 : rho.inverse()[s - 1] + 1;
      }
    }
    if (!base.closed || s == sheet) break;
  }
  if (base.closed && s != sheet)
    throw std::logic_error("lift_path: component failed to close after 3 laps");
  validate_path(cover, up);
  return up;
}

Multicurve lift_multicurve(const TriSurface& cover, const Comb& comb, const CoverSpec& cs,
                           const Multicurve& base) {
  std::vector<int> cut_perm(comb.edge_count(), -1);
  for (int j = 1; j <= comb.marked(); ++j) cut_perm[comb.edge_id(CombEdge::L, j)] = j;

  Multicurve out;
  for (const auto& comp : base.components) {
    Perm mono(3);
    for (int i = 0; i < comp.length(); ++i) {
      int e = comb.triangle(comp.segs[i].tri).e[comp.segs[i].out_side];
      if (cut_perm[e] != -1) {
        Perm rho = cs.monodromy(cut_perm[e]);
        bool from_left = comb.edge_triangles(e)[0] == comp.segs[i].tri;
        mono = (from_left ? rho : rho.inverse()) * mono;
      }
    }
    std::vector<char> taken(4, 0);
    for (int sh = 1; sh <= 3; ++sh) {
      if (taken[sh]) continue;
      int x = sh;
      do {
        taken[x] = 1;
        x = mono[x - 1] + 1;
      } while (x != sh);
      out.components.push_back(lift_path(cover, comb, cs, comp, sh));
    }
  }
  return out;
}

}  // namespace fk
