#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fk/comb.hpp"
#include "fk/ints.hpp"

namespace fk {

// Mutable triangulation for diagonal flips. Tracks only the combinatorics
// (triangle -> edge-id triples); lamination data rides along as edge-indexed
// weight vectors updated by the tropical exchange rule.
class FlipComplex {
 public:
  explicit FlipComplex(const Comb& comb);

  int edge_count() const { return edge_count_; }
  int triangle_count() const { return static_cast<int>(tris_.size()); }
  const std::array<int, 3>& tri(int t) const { return tris_[t]; }

  bool boundary(int e) const { return etris_[e][1] == -1; }
  // both triangles must be distinct and share exactly the one edge
  bool flippable(int e) const;

  // The flip quad of edge e: opposite side pairs (a, c) and (b, d).
  struct Quad {
    int e, a, b, c, d;
  };
  Quad quad(int e) const;

  void flip(int e);

  // canonical encoding for state comparison: sorted rotated triples
  std::vector<int> encoding() const;

 private:
  std::vector<std::array<int, 3>> tris_;
  int edge_count_ = 0;
  std::vector<std::array<int, 2>> etris_;
  void rebuild_adjacency();
};

// exchange rule: w[e] <- max(w[a]+w[c], w[b]+w[d]) - w[e]
void carry_flip(const FlipComplex::Quad& q, std::vector<Int>& w);

// Edge naming relative to a generator position: (kind, offset) resolves to
// U_{i+o}, L_{i+o}, A_{i+o}, DU_{i+o}, DL_{i+o}; out-of-range wall params hit
// the corner boundary edges (always weight zero, never flipped).
enum class EdgeKind { U, L, A, DU, DL };
struct EdgeRef {
  EdgeKind kind;
  int offset;
};
int resolve_edge(const Comb& comb, const EdgeRef& ref, int i);

// The frozen flip recipe for the positive half twist (derived once, verified
// against the geometric reference implementation by the acceptance suite).
const std::vector<EdgeRef>& half_twist_flips();

// Compiled program: the flip quads in execution order plus the final check
// data, all resolved to concrete edge ids for one (m, i, sign) instance.
struct TwistProgram {
  std::vector<FlipComplex::Quad> steps;
  // piece selector per step gets recorded during tracked application
};

TwistProgram compile_half_twist(const Comb& comb, int i, int sign);

// Apply the program; optionally record the linear piece chosen per step
// (+1 if w[a]+w[c] >= w[b]+w[d], else -1).
void run_twist(const TwistProgram& prog, std::vector<Int>& w, std::vector<int>* pieces = nullptr);

}  // namespace fk
