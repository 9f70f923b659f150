#pragma once

#include "fk/braid.hpp"

namespace fk {

// Parameters of the braid family. `pi` is a k-strand braid whose closure is a
// knot; it gets included on the last k strands of the (2g+1)-strand group.
struct FamilyParams {
  int g = 3;
  int k = 6;
  int n = 0;
  BraidWord pi;  // on k strands

  int ambient_strands() const { return 2 * g + 1; }
  void validate() const;  // throws on violated invariants
};

struct Family {
  BraidWord phi;     // on 2g+1 strands
  BraidWord sigma;   // on 2g+1 strands
  BraidWord pi_inc;  // pi included on the last k strands
  BraidWord beta_n;  // pi_inc . phi^n . sigma . phi^-n (functional order)
};

Family build_family(const FamilyParams& p);

// pi re-indexed from the last k strands of 2g+1 down to a k-strand word.
BraidWord pi_on_k_strands(const FamilyParams& p);

}  // namespace fk
