#include "fk/family.hpp"

#include <stdexcept>

namespace fk {

void FamilyParams::validate() const {
  if (g <= 1) throw std::invalid_argument("FamilyParams: g must be > 1");
  if (k < 6) throw std::invalid_argument("FamilyParams: k must be >= 6");
  if (2 * g + 1 <= k) throw std::invalid_argument("FamilyParams: need 2g+1 > k");
  if (n < 0) throw std::invalid_argument("FamilyParams: n must be >= 0");
  if (pi.strands() != k) throw std::invalid_argument("FamilyParams: pi must live on k strands");
  if (!underlying_permutation(pi).is_single_cycle())
    throw std::invalid_argument("FamilyParams: closure of pi must be a knot (k-cycle)");
}

Family build_family(const FamilyParams& p) {
  p.validate();
  const int m = p.ambient_strands();
  const int base = 2 * p.g + 2 - p.k;  // lowest strand of the pi block

  std::vector<BraidLetter> phi;
  for (int t = 0; t < 4; ++t) phi.push_back({base + t, t % 2 == 0 ? -1 : +1});

  // Alternating staircase from 2g+1-k down to 1, first letter positive.
  std::vector<BraidLetter> sig;
  int s = +1;
  for (int i = 2 * p.g + 1 - p.k; i >= 1; --i, s = -s) sig.push_back({i, s});

  std::vector<BraidLetter> pinc;
  for (const auto& l : p.pi.letters()) pinc.push_back({l.index + base - 1, l.sign});

  Family f;
  f.phi = BraidWord(m, std::move(phi));
  f.sigma = BraidWord(m, std::move(sig));
  f.pi_inc = BraidWord(m, std::move(pinc));
  // beta_n = Pi . Phi^n . Sigma . Phi^-n, applied right factor first.
  f.beta_n = compose(f.pi_inc, compose(f.phi.pow(p.n), compose(f.sigma, f.phi.pow(-p.n))));
  return f;
}

BraidWord pi_on_k_strands(const FamilyParams& p) { return p.pi; }

}  // namespace fk
