#pragma once

#include <array>
#include <vector>

#include "fk/ints.hpp"

namespace fk {

// Fixed triangulation of the disk with m marked points on the axis.
//
// Geometric model: the rectangle [0, m+1] x [-1, 1]. Marked points p_j=(j,0)
// for j=1..m; auxiliary boundary vertices p_0=(0,0), p_{m+1}=(m+1,0),
// T_j=(j,1), B_j=(j,-1) for j=0..m+1. Every strip [j, j+1] x [-1,1] carries
// four triangles with the diagonals chosen point-symmetric about each gap
// center, so every half-twist support looks the same:
//   upper: (p_j, T_{j+1}, T_j), (p_j, p_{j+1}, T_{j+1})   diagonal p_j-T_{j+1}
//   lower: (p_j, B_j, p_{j+1}), (p_{j+1}, B_j, B_{j+1})   diagonal p_{j+1}-B_j
//
// Interior edge kinds: U_j = p_j-T_j, L_j = p_j-B_j (j=1..m, the walls; L_j
// doubles as the cut arc of the branched cover), A_j = p_j-p_{j+1} (j=0..m),
// DU_j = p_j-T_{j+1}, DL_j = p_{j+1}-B_j (j=0..m).
struct CombVertex {
  Rat x, y;
  enum Kind { Marked, Boundary } kind;
};

struct CombEdge {
  int v0 = -1, v1 = -1;
  bool boundary = false;
  // Interior edges keep their classification for serialization order.
  enum Kind { U, L, A, DU, DL, Bdry } kind = Bdry;
  int param = 0;  // the j above
};

struct CombTriangle {
  std::array<int, 3> v;  // CCW vertices
  std::array<int, 3> e;  // e[i] joins v[i] and v[(i+1)%3]
};

class Comb {
 public:
  explicit Comb(int marked);

  int marked() const { return m_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int triangle_count() const { return static_cast<int>(tris_.size()); }

  const CombVertex& vertex(int i) const { return verts_[i]; }
  const CombEdge& edge(int i) const { return edges_[i]; }
  const CombTriangle& triangle(int i) const { return tris_[i]; }

  int marked_vertex(int j) const;  // 1-based puncture index -> vertex id
  int edge_id(CombEdge::Kind kind, int param) const;

  // Interior edges in the documented serialization order:
  // U_1..U_m, L_1..L_m, A_0..A_m, DU_0..DU_m, DL_0..DL_m.
  const std::vector<int>& interior_edges() const { return interior_; }
  int interior_index(int edge_id) const;  // -1 if boundary

  // The two triangles adjacent to an edge (second = -1 for boundary edges).
  std::array<int, 2> edge_triangles(int e) const;
  // Index of edge e within triangle t (0..2), or -1.
  int side_of(int t, int e) const;

 private:
  int m_ = 0;
  std::vector<CombVertex> verts_;
  std::vector<CombEdge> edges_;
  std::vector<CombTriangle> tris_;
  std::vector<int> interior_;
  std::vector<int> interior_index_;
  std::vector<std::array<int, 2>> edge_tris_;

  int add_edge(int a, int b, CombEdge::Kind k, int param, bool boundary);
  void add_triangle(int a, int b, int c, int eab, int ebc, int eca);
};

}  // namespace fk
