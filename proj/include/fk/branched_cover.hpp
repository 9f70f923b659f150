#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fk/braid.hpp"
#include "fk/perm.hpp"

namespace fk {

// Transposition in S3, stored by the two moved sheets (1-based, a < b).
struct Transposition {
  int a = 1, b = 2;
  Perm perm() const { return Perm::transposition(3, a - 1, b - 1); }
  bool operator==(const Transposition&) const = default;
  std::string str() const { return std::to_string(a) + std::to_string(b); }
};

// Assignment of a transposition to each branch point: the monodromy of a
// simple 3-fold branched cover of the disk.
struct CoverSpec {
  std::vector<Transposition> rho;  // rho[i] for branch point i+1

  int branch_points() const { return static_cast<int>(rho.size()); }
  Perm monodromy(int i) const { return rho.at(i - 1).perm(); }  // 1-based
  // Product rho(1) rho(2) ... rho(m) applied left to right (walk order).
  Perm boundary_monodromy() const;
  bool transitive() const;
  void validate() const;

  std::string str() const;  // "12,12,...,23"
  static CoverSpec parse(const std::string& csv);
};

// The cover fixed for the construction: 2g branch points mapping to (1 2) and
// the distinguished last one to (2 3).
CoverSpec standard_cover(int g);

struct SurfaceType {
  int genus = 0;
  int boundary = 0;
  int euler() const { return 2 - 2 * genus - boundary; }
  bool operator==(const SurfaceType&) const = default;
  std::string str() const {
    return "S_{" + std::to_string(genus) + "," + std::to_string(boundary) + "}";
  }
};

// Fiber surface of the cover over the whole disk (Riemann-Hurwitz plus
// boundary-cycle count). Throws if the monodromy is intransitive.
SurfaceType fiber_surface(const CoverSpec& cs);

struct RoundCurve {
  int lo = 1, hi = 2;  // encircles punctures lo..hi, 1 <= lo < hi <= m
  void validate(int m) const;
};

struct PreimageComponent {
  SurfaceType type;
  int sheets = 0;                // orbit size, 1..3
  std::vector<int> orbit;        // sheet labels, 1-based
  int branch_points_inside = 0;  // branch points covered with e_p = 2
};

struct PreimageReport {
  std::vector<PreimageComponent> components;
  int enclosed_branch_points = 0;
  bool touches_distinguished = false;  // interval includes a branch point whose
                                       // transposition differs from the rest
  int total_euler() const;
  int total_sheets() const;
};

// Classify the preimage of the round disk bounded by r via the orbit
// structure of the enclosed transpositions.
PreimageReport preimage_of_round_disk(const CoverSpec& cs, const RoundCurve& r);

// Degenerate variant allowing a single enclosed branch point (lo == hi).
PreimageReport preimage_of_interval(const CoverSpec& cs, int lo, int hi);

// True when the mapping class of w lifts through the cover: rho composed with
// the induced free-group automorphism equals rho up to one inner automorphism
// of S3.
bool braid_lift_check(const CoverSpec& cs, const BraidWord& w);

}  // namespace fk
