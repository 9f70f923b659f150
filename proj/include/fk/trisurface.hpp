#pragma once

#include <array>
#include <string>
#include <vector>

#include "fk/branched_cover.hpp"
#include "fk/comb.hpp"
#include "fk/ints.hpp"

namespace fk {

// Oriented triangulated surface with boundary. Sides of a triangle are listed
// CCW; side s runs from corner s to corner (s+1)%3. Each side traverses its
// edge either along the edge's intrinsic orientation or against it.
class TriSurface {
 public:
  struct Side {
    int edge = -1;
    bool forward = true;
  };
  struct Tri {
    std::array<Side, 3> sides;
    int sheet = 0;      // 0 for base surfaces, 1..3 for covers
    int base_tri = -1;  // projection to the base triangulation
  };

  enum class VertexKind { Marked, Unmarked, Boundary };

  struct Vertex {
    VertexKind kind = VertexKind::Unmarked;
    int base_vertex = -1;
    int branch_degree = 1;  // local covering degree for interior cover vertices
    std::vector<std::pair<int, int>> corners;  // (tri, corner)
  };

  int triangle_count() const { return static_cast<int>(tris_.size()); }
  int edge_count() const { return edge_count_; }
  const Tri& tri(int t) const { return tris_[t]; }
  bool edge_is_boundary(int e) const { return edge_tris_[e][1] == -1; }
  std::array<int, 2> edge_tris(int e) const { return edge_tris_[e]; }
  // side slot of edge e in triangle t, -1 if absent
  int side_of(int t, int e) const;
  // the triangle across edge e from t (-1 for boundary)
  int other_tri(int e, int t) const;

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const Vertex& vertex(int v) const { return verts_[v]; }
  // vertex id at corner c of triangle t (the corner at the start of side c)
  int corner_vertex(int t, int c) const { return corner_vertex_[3 * t + c]; }

  int euler_characteristic() const;
  int boundary_circles() const;

  // Number of marked interior vertices (the punctures downstairs).
  int marked_count() const;

  // --- construction ---
  static TriSurface from_comb(const Comb& comb);
  // 3-sheeted cover glued across the cut edges L_j by rho(j). Interior branch
  // vertices of the cover are Unmarked (curves upstairs may cross them).
  static TriSurface triple_cover(const Comb& comb, const CoverSpec& cs);

  // Text export: one line per triangle (edges, sheet, base triangle).
  std::string export_text() const;

  // base edge id -> the three cover edge ids by sheet (cover surfaces only)
  int cover_edge(int base_edge, int sheet) const;

 private:
  std::vector<Tri> tris_;
  int edge_count_ = 0;
  std::vector<std::array<int, 2>> edge_tris_;
  std::vector<Vertex> verts_;
  std::vector<int> corner_vertex_;
  std::vector<int> cover_edge_map_;  // [base_edge * 3 + sheet-1]
  int base_edge_count_ = 0;

  void finalize();  // builds adjacency and vertex orbits
  friend class TriBuilder;
};

// A normal path: segments through triangles, each entering and leaving
// through a side. Closed unless `closed` is false (arcs have their first
// in-side and last out-side on boundary edges).
struct NormalPath {
  struct Seg {
    int tri = -1;
    int in_side = -1;
    int out_side = -1;
  };
  bool closed = true;
  std::vector<Seg> segs;

  int length() const { return static_cast<int>(segs.size()); }
  bool empty() const { return segs.empty(); }
};

// A multicurve: a list of disjoint closed normal paths.
struct Multicurve {
  std::vector<NormalPath> components;
  bool empty() const { return components.empty(); }
  Int total_weight() const;
};

void validate_path(const TriSurface& surf, const NormalPath& p);
// Remove backtracks (segments entering and leaving through the same edge).
// Closed paths that collapse entirely become empty.
NormalPath reduce_path(const TriSurface& surf, NormalPath p);

// Edge crossing counts of a path/multicurve.
std::vector<Int> path_weights(const TriSurface& surf, const NormalPath& p);
std::vector<Int> multicurve_weights(const TriSurface& surf, const Multicurve& mc);

// Admissibility of an edge-weight vector: per-triangle parity and triangle
// inequalities, zero on boundary edges.
bool weights_admissible(const TriSurface& surf, const std::vector<Int>& w, std::string* why = nullptr);

// Unique normal multicurve with the given admissible weights.
Multicurve extract_multicurve(const TriSurface& surf, const std::vector<Int>& w);

// Extraction with the crossing positions along each edge: out_slots[c][i] is
// the slot (0-based along the edge's intrinsic orientation) of the crossing
// that component c makes leaving segment i.
struct ExtractedCurves {
  Multicurve mc;
  std::vector<std::vector<long long>> out_slots;
};
ExtractedCurves extract_multicurve_slots(const TriSurface& surf, const std::vector<Int>& w);

// Lift a downstairs path through the cover, starting on `sheet` (1..3).
// The component closes after 1, 2 or 3 laps depending on the sheet monodromy.
NormalPath lift_path(const TriSurface& cover, const Comb& comb, const CoverSpec& cs,
                     const NormalPath& base, int sheet);
// All components of the full preimage of a downstairs multicurve.
Multicurve lift_multicurve(const TriSurface& cover, const Comb& comb, const CoverSpec& cs,
                           const Multicurve& base);

}  // namespace fk
