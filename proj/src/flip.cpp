#include "fk/flip.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fk {

FlipComplex::FlipComplex(const Comb& comb) {
  edge_count_ = comb.edge_count();
  for (int t = 0; t < comb.triangle_count(); ++t)
    tris_.push_back(comb.triangle(t).e);
  rebuild_adjacency();
}

void FlipComplex::rebuild_adjacency() {
  etris_.assign(edge_count_, {-1, -1});
  for (int t = 0; t < triangle_count(); ++t)
    for (int s = 0; s < 3; ++s) {
      auto& slot = etris_[tris_[t][s]];
      if (slot[0] == -1)
        slot[0] = t;
      else if (slot[1] == -1)
        slot[1] = t;
      else
        throw std::logic_error("FlipComplex: edge on three triangles");
    }
}

bool FlipComplex::flippable(int e) const {
  if (boundary(e)) return false;
  int t1 = etris_[e][0], t2 = etris_[e][1];
  if (t1 == t2) return false;
  // exactly one shared edge keeps the quad embedded
  int shared = 0;
  for (int s1 = 0; s1 < 3; ++s1)
    for (int s2 = 0; s2 < 3; ++s2)
      if (tris_[t1][s1] == tris_[t2][s2]) ++shared;
  return shared == 1;
}

FlipComplex::Quad FlipComplex::quad(int e) const {
  int t1 = etris_[e][0], t2 = etris_[e][1];
  if (t1 < 0 || t2 < 0) throw std::invalid_argument("quad: boundary edge");
  int p1 = -1, p2 = -1;
  for (int s = 0; s < 3; ++s) {
    if (tris_[t1][s] == e) p1 = s;
    if (tris_[t2][s] == e) p2 = s;
  }
  Quad q;
  q.e = e;
  q.a = tris_[t1][(p1 + 1) % 3];
  q.b = tris_[t1][(p1 + 2) % 3];
  q.c = tris_[t2][(p2 + 1) % 3];
  q.d = tris_[t2][(p2 + 2) % 3];
  return q;
}

void FlipComplex::flip(int e) {
  if (!flippable(e)) throw std::invalid_argument("flip: edge not flippable");
  Quad q = quad(e);
  int t1 = etris_[e][0], t2 = etris_[e][1];
  // new triangles around the other diagonal, which inherits the id e
  tris_[t1] = {q.b, q.c, e};
  tris_[t2] = {e, q.d, q.a};
  rebuild_adjacency();
}

std::vector<int> FlipComplex::encoding() const {
  std::vector<std::array<int, 3>> rows;
  for (const auto& t : tris_) {
    std::array<int, 3> best = t;
    for (int r = 1; r < 3; ++r) {
      std::array<int, 3> rot = {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
      if (rot < best) best = rot;
    }
    rows.push_back(best);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> out;
  for (const auto& r : rows) {
    out.push_back(r[0]);
    out.push_back(r[1]);
    out.push_back(r[2]);
  }
  return out;
}

void carry_flip(const FlipComplex::Quad& q, std::vector<Int>& w) {
  Int ac = w[q.a] + w[q.c];
  Int bd = w[q.b] + w[q.d];
  w[q.e] = (ac >= bd ? ac : bd) - w[q.e];
}

int resolve_edge(const Comb& comb, const EdgeRef& ref, int i) {
  const int m = comb.marked();
  const int p = i + ref.offset;
  switch (ref.kind) {
    case EdgeKind::U:
      if (p == 0) return comb.edge_id(CombEdge::Bdry, 200);
      if (p == m + 1) return comb.edge_id(CombEdge::Bdry, 202);
      if (p < 0 || p > m + 1) throw std::out_of_range("resolve_edge: U wall out of range");
      return comb.edge_id(CombEdge::U, p);
    case EdgeKind::L:
      if (p == 0) return comb.edge_id(CombEdge::Bdry, 201);
      if (p == m + 1) return comb.edge_id(CombEdge::Bdry, 203);
      if (p < 0 || p > m + 1) throw std::out_of_range("resolve_edge: L wall out of range");
      return comb.edge_id(CombEdge::L, p);
    case EdgeKind::A:
      if (p < 0 || p > m) throw std::out_of_range("resolve_edge: axis out of range");
      return comb.edge_id(CombEdge::A, p);
    case EdgeKind::DU:
      if (p < 0 || p > m) throw std::out_of_range("resolve_edge: DU out of range");
      return comb.edge_id(CombEdge::DU, p);
    case EdgeKind::DL:
      if (p < 0 || p > m) throw std::out_of_range("resolve_edge: DL out of range");
      return comb.edge_id(CombEdge::DL, p);
  }
  throw std::logic_error("resolve_edge: bad kind");
}

TwistProgram compile_half_twist(const Comb& comb, int i, int sign) {
  if (i < 1 || i >= comb.marked())
    throw std::invalid_argument("compile_half_twist: generator out of range");
  std::vector<EdgeRef> seq = half_twist_flips();
  if (sign < 0) std::reverse(seq.begin(), seq.end());
  FlipComplex fc(comb);
  std::vector<int> initial = fc.encoding();
  TwistProgram prog;
  for (const auto& ref : seq) {
    int e = resolve_edge(comb, ref, i);
    prog.steps.push_back(fc.quad(e));
    fc.flip(e);
  }
  if (fc.encoding() != initial)
    throw std::logic_error("compile_half_twist: flip recipe does not return the triangulation");
  return prog;
}

void run_twist(const TwistProgram& prog, std::vector<Int>& w, std::vector<int>* pieces) {
  for (const auto& q : prog.steps) {
    if (pieces) pieces->push_back(w[q.a] + w[q.c] >= w[q.b] + w[q.d] ? +1 : -1);
    carry_flip(q, w);
  }
}

}  // namespace fk
