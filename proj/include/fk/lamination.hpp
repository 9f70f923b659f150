#pragma once

#include <string>
#include <vector>

#include "fk/comb.hpp"
#include "fk/trisurface.hpp"

namespace fk {

struct PtQ {
  Rat x, y;
};

// Trace a closed polyline (exact rational vertices, generic position) through
// the comb triangulation and return the reduced normal path. Throws on
// degenerate contact with edges or vertices.
NormalPath trace_closed_polyline(const Comb& comb, const TriSurface& surf,
                                 const std::vector<PtQ>& pts);

// Open variant: endpoints must lie strictly inside boundary edges; the path
// starts and ends on those boundary sides.
NormalPath trace_open_polyline(const Comb& comb, const TriSurface& surf,
                               const std::vector<PtQ>& pts);

// The round curve enclosing punctures lo..hi.
NormalPath round_curve_path(const Comb& comb, const TriSurface& surf, int lo, int hi);

// A small loop around puncture j.
NormalPath puncture_loop_path(const Comb& comb, const TriSurface& surf, int j);

// Exact integer coordinates of a multicurve on the m-punctured disk: the edge
// weights on the comb triangulation, in the documented interior-edge order.
struct DiskCoords {
  int punctures = 0;
  std::vector<Int> coords;  // indexed by Comb::interior_edges order

  bool operator==(const DiskCoords&) const = default;
  bool is_zero() const;
  Int norm() const;  // total weight
  std::string str() const;  // "m; c1,c2,..."
  static DiskCoords parse(const std::string& text);
};

DiskCoords weights_to_coords(const Comb& comb, const std::vector<Int>& edge_weights);
std::vector<Int> coords_to_weights(const Comb& comb, const DiskCoords& dc);

}  // namespace fk
