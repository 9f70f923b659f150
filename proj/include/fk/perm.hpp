#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fk {

// Permutation of {0, .., n-1}, stored as the image vector.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);                       // identity
  explicit Perm(std::vector<int> images);     // checked bijection

  static Perm transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_.at(i); }

  // (a * b)(x) = a(b(x))
  Perm operator*(const Perm& other) const;
  Perm inverse() const;

  bool operator==(const Perm& other) const { return img_ == other.img_; }
  bool is_identity() const;

  std::vector<std::vector<int>> cycles() const;  // includes fixed points
  int cycle_count() const;
  bool is_single_cycle() const;  // one cycle through all n points

  // Orbits of the subgroup generated by the given permutations.
  static std::vector<std::vector<int>> orbits(int n, const std::vector<Perm>& gens);

  std::string str() const;  // cycle notation, 1-based

 private:
  std::vector<int> img_;
};

}  // namespace fk
