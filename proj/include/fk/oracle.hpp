#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fk/braid.hpp"
#include "fk/comb.hpp"
#include "fk/lamination.hpp"

namespace fk {

// Slow, independently-built reference implementation. Curves are exact
// rational polylines in the plane with punctures at (1,0)..(m,0); braid
// generators act by an explicit piecewise-affine homeomorphism supported in a
// square around the two swapped punctures. Isotopy invariants are computed
// geometrically: crossing counts are minimized by removing innermost
// puncture-free lenses, which only ever needs the initial exact crossing data.
class OracleCurve {
 public:
  OracleCurve(int punctures, std::vector<PtQ> polyline);

  static OracleCurve round_curve(int punctures, int lo, int hi, int jiggle_seed = 0);

  int punctures() const { return m_; }
  const std::vector<PtQ>& polyline() const { return pts_; }
  int vertex_count() const { return static_cast<int>(pts_.size()); }

  // Elementary-move word through the wall decomposition (cells: one region
  // per gap between punctures, split above/below the axis). Letters name the
  // crossed wall; the cyclic word is backtrack-reduced.
  std::vector<std::string> cell_word() const;

  // Minimal crossing numbers with the comb triangulation edges (the shared
  // coordinate system), i.e. the exact normal coordinates of the class.
  DiskCoords comb_coords(const Comb& comb) const;

 private:
  int m_;
  std::vector<PtQ> pts_;
};

struct OracleBudget {
  long long max_vertices = 1000000;
};

// Image under the explicit half-twist homeomorphism model, one letter at a
// time. Throws when the polyline grows past the budget.
OracleCurve oracle_apply(const OracleCurve& c, const BraidWord& w,
                         const OracleBudget& budget = OracleBudget{});

// Exact geometric intersection number of two oracle curves.
long long oracle_intersection(const OracleCurve& a, const OracleCurve& b,
                              const OracleBudget& budget = OracleBudget{});

// Complementary-region census of a pair in minimal position (the pair must
// already be crossing-minimal as drawn; the census refuses otherwise).
struct OracleRegion {
  int corners = 0;
  std::vector<int> punctures;  // enclosed punctures (1-based)
  bool outer = false;          // the region meeting the disk boundary
};
std::vector<OracleRegion> oracle_region_census(const OracleCurve& a, const OracleCurve& b);

// true iff every complementary region is a disk or once-punctured disk (the
// outer region counts via the boundary marker)
bool oracle_fills(const OracleCurve& a, const OracleCurve& b);

// --- stabilization band model ---

struct BandArcData {
  long long k = 0;       // intersections of delta with the co-core
  long long m_arcs = 0;  // non-vertical band arcs of the image
  long long n_out = 0;   // image-vs-arc intersections outside the band
  enum Slope { Positive, Negative, VerticalOnly } slope = VerticalOnly;
  void validate() const;
};

long long band_intersection_count(const BandArcData& d);

}  // namespace fk
