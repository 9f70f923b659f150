#pragma once

#include <string>
#include <vector>

#include "fk/perm.hpp"

namespace fk {

// One Artin generator occurrence: sigma_{index}^{sign}, index in 1..strands-1.
struct BraidLetter {
  int index = 1;
  int sign = +1;
  bool operator==(const BraidLetter&) const = default;
};

// A word in the braid group on `strands` strands, stored as a flat letter
// sequence in application order: letters[0] acts first on the disk.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }
  static BraidWord gen(int strands, int index, int sign = +1) {
    return BraidWord(strands, {BraidLetter{index, sign}});
  }

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const BraidWord&) const = default;

  BraidWord pow(int n) const;  // n may be negative

  // Serialization: comma-separated signed generator indices, "2,-3,5".
  std::string str() const;
  static BraidWord parse(int strands, const std::string& csv);

 private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

// Functional composition: result applies b first, then a.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
Perm underlying_permutation(const BraidWord& w);  // sigma_i -> (i-1, i) on 0-based points
long long exponent_sum(const BraidWord& w);

BraidWord free_reduce(const BraidWord& w);
BraidWord cyclic_free_reduce(const BraidWord& w);

// One Markov move record for the destabilization trace.
struct DestabilizeMove {
  enum Kind { CyclicReduce, DestabilizeBottom, DestabilizeTop } kind;
  BraidWord result;  // word after the move
};

struct DestabilizeTrace {
  BraidWord terminal;
  std::vector<DestabilizeMove> moves;
  // True when `w` appears (up to cyclic rotation) as an intermediate or
  // terminal state of the trace.
  bool reaches(const BraidWord& w) const;
};

// Greedy Markov destabilization of the braid closure: cyclically free-reduce;
// delete a strand whose extreme generator index occurs exactly once; repeat.
DestabilizeTrace markov_destabilize_closure(const BraidWord& w);

}  // namespace fk
