#include "fk/comb.hpp"

#include <map>
#include <stdexcept>

namespace fk {

int Comb::add_edge(int a, int b, CombEdge::Kind k, int param, bool boundary) {
  CombEdge e;
  e.v0 = a;
  e.v1 = b;
  e.kind = k;
  e.param = param;
  e.boundary = boundary;
  edges_.push_back(e);
  return edge_count() - 1;
}

void Comb::add_triangle(int a, int b, int c, int eab, int ebc, int eca) {
  tris_.push_back(CombTriangle{{a, b, c}, {eab, ebc, eca}});
}

Comb::Comb(int marked) : m_(marked) {
  if (m_ < 2) throw std::invalid_argument("Comb: need at least 2 marked points");
  const int n = m_ + 2;  // vertex columns 0..m+1

  // vertices: axis row, top row, bottom row
  auto axis = [&](int j) { return j; };
  auto top = [&](int j) { return n + j; };
  auto bot = [&](int j) { return 2 * n + j; };
  for (int j = 0; j <= m_ + 1; ++j)
    verts_.push_back({Rat(j), Rat(0), (j >= 1 && j <= m_) ? CombVertex::Marked : CombVertex::Boundary});
  for (int j = 0; j <= m_ + 1; ++j) verts_.push_back({Rat(j), Rat(1), CombVertex::Boundary});
  for (int j = 0; j <= m_ + 1; ++j) verts_.push_back({Rat(j), Rat(-1), CombVertex::Boundary});

  std::map<std::pair<int, int>, int> byname;  // (kind, param) -> id
  auto mk = [&](int a, int b, CombEdge::Kind k, int param, bool bd) {
    int id = add_edge(a, b, k, param, bd);
    byname[{static_cast<int>(k), param}] = id;
    return id;
  };

  // interior edges
  for (int j = 1; j <= m_; ++j) mk(axis(j), top(j), CombEdge::U, j, false);
  for (int j = 1; j <= m_; ++j) mk(axis(j), bot(j), CombEdge::L, j, false);
  for (int j = 0; j <= m_; ++j) mk(axis(j), axis(j + 1), CombEdge::A, j, false);
  for (int j = 0; j <= m_; ++j) mk(axis(j), top(j + 1), CombEdge::DU, j, false);
  for (int j = 0; j <= m_; ++j) mk(axis(j + 1), bot(j), CombEdge::DL, j, false);

  // boundary edges (param doubles as a disambiguator)
  std::map<std::pair<int, int>, int> bd;
  for (int j = 0; j <= m_; ++j) bd[{top(j), top(j + 1)}] = mk(top(j), top(j + 1), CombEdge::Bdry, j, true);
  for (int j = 0; j <= m_; ++j) bd[{bot(j), bot(j + 1)}] = mk(bot(j), bot(j + 1), CombEdge::Bdry, 100 + j, true);
  bd[{axis(0), top(0)}] = mk(axis(0), top(0), CombEdge::Bdry, 200, true);
  bd[{axis(0), bot(0)}] = mk(axis(0), bot(0), CombEdge::Bdry, 201, true);
  bd[{axis(m_ + 1), top(m_ + 1)}] = mk(axis(m_ + 1), top(m_ + 1), CombEdge::Bdry, 202, true);
  bd[{axis(m_ + 1), bot(m_ + 1)}] = mk(axis(m_ + 1), bot(m_ + 1), CombEdge::Bdry, 203, true);

  auto U = [&](int j) {
    if (j == 0) return bd.at({axis(0), top(0)});
    if (j == m_ + 1) return bd.at({axis(m_ + 1), top(m_ + 1)});
    return byname.at({static_cast<int>(CombEdge::U), j});
  };
  auto L = [&](int j) {
    if (j == 0) return bd.at({axis(0), bot(0)});
    if (j == m_ + 1) return bd.at({axis(m_ + 1), bot(m_ + 1)});
    return byname.at({static_cast<int>(CombEdge::L), j});
  };
  auto A = [&](int j) { return byname.at({static_cast<int>(CombEdge::A), j}); };
  auto DU = [&](int j) { return byname.at({static_cast<int>(CombEdge::DU), j}); };
  auto DL = [&](int j) { return byname.at({static_cast<int>(CombEdge::DL), j}); };

  for (int j = 0; j <= m_; ++j) {
    // upper: (p_j, T_{j+1}, T_j) and (p_j, p_{j+1}, T_{j+1})
    add_triangle(axis(j), top(j + 1), top(j), DU(j), bd.at({top(j), top(j + 1)}), U(j));
    add_triangle(axis(j), axis(j + 1), top(j + 1), A(j), U(j + 1), DU(j));
    // lower: (p_j, B_j, p_{j+1}) and (p_{j+1}, B_j, B_{j+1})
    add_triangle(axis(j), bot(j), axis(j + 1), L(j), DL(j), A(j));
    add_triangle(axis(j + 1), bot(j), bot(j + 1), DL(j), bd.at({bot(j), bot(j + 1)}), L(j + 1));
  }

  // interior edge ordering for serialization
  interior_index_.assign(edge_count(), -1);
  auto push = [&](CombEdge::Kind k, int j) {
    int id = byname.at({static_cast<int>(k), j});
    interior_index_[id] = static_cast<int>(interior_.size());
    interior_.push_back(id);
  };
  for (int j = 1; j <= m_; ++j) push(CombEdge::U, j);
  for (int j = 1; j <= m_; ++j) push(CombEdge::L, j);
  for (int j = 0; j <= m_; ++j) push(CombEdge::A, j);
  for (int j = 0; j <= m_; ++j) push(CombEdge::DU, j);
  for (int j = 0; j <= m_; ++j) push(CombEdge::DL, j);

  // adjacency
  edge_tris_.assign(edge_count(), {-1, -1});
  for (int t = 0; t < triangle_count(); ++t)
    for (int s = 0; s < 3; ++s) {
      auto& slot = edge_tris_[tris_[t].e[s]];
      if (slot[0] == -1)
        slot[0] = t;
      else if (slot[1] == -1)
        slot[1] = t;
      else
        throw std::logic_error("Comb: edge bounds three triangles");
    }
  for (int e = 0; e < edge_count(); ++e) {
    bool has_two = edge_tris_[e][1] != -1;
    if (edges_[e].boundary == has_two)
      throw std::logic_error("Comb: boundary flag inconsistent with adjacency");
  }
}

int Comb::marked_vertex(int j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("Comb: marked point out of range");
  return j;
}

int Comb::edge_id(CombEdge::Kind kind, int param) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].kind == kind && edges_[e].param == param) return e;
  throw std::invalid_argument("Comb: no such edge");
}

int Comb::interior_index(int edge_id) const { return interior_index_.at(edge_id); }

std::array<int, 2> Comb::edge_triangles(int e) const { return edge_tris_.at(e); }

int Comb::side_of(int t, int e) const {
  for (int s = 0; s < 3; ++s)
    if (tris_[t].e[s] == e) return s;
  return -1;
}

}  // namespace fk
