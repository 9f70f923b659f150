#include "fk/branched_cover.hpp"

#include <sstream>
#include <stdexcept>

namespace fk {

Perm CoverSpec::boundary_monodromy() const {
  Perm p(3);
  for (int i = 1; i <= branch_points(); ++i) p = monodromy(i) * p;
  return p;
}

bool CoverSpec::transitive() const {
  std::vector<Perm> gens;
  for (const auto& t : rho) gens.push_back(t.perm());
  return Perm::orbits(3, gens).size() == 1;
}

void CoverSpec::validate() const {
  if (rho.empty()) throw std::invalid_argument("CoverSpec: no branch points");
  for (const auto& t : rho)
    if (!(t.a >= 1 && t.a < t.b && t.b <= 3))
      throw std::invalid_argument("CoverSpec: not a transposition in S3");
  if (!transitive()) throw std::invalid_argument("CoverSpec: monodromy not transitive");
}

std::string CoverSpec::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rho.size(); ++i) {
    if (i) os << ',';
    os << rho[i].str();
  }
  return os.str();
}

CoverSpec CoverSpec::parse(const std::string& csv) {
  CoverSpec cs;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.size() != 2) throw std::invalid_argument("CoverSpec::parse: want two digits per entry");
    Transposition t{tok[0] - '0', tok[1] - '0'};
    if (!(t.a >= 1 && t.a < t.b && t.b <= 3))
      throw std::invalid_argument("CoverSpec::parse: bad transposition " + tok);
    cs.rho.push_back(t);
  }
  return cs;
}

CoverSpec standard_cover(int g) {
  if (g <= 1) throw std::invalid_argument("standard_cover: g must be > 1");
  CoverSpec cs;
  for (int i = 0; i < 2 * g; ++i) cs.rho.push_back({1, 2});
  cs.rho.push_back({2, 3});
  return cs;
}

SurfaceType fiber_surface(const CoverSpec& cs) {
  cs.validate();
  const int m = cs.branch_points();
  const int chi = 3 - m;  // 3 * chi(disk) - sum (e_p - 1), one index-2 point each
  const int b = cs.boundary_monodromy().cycle_count();
  const int twice_genus = 2 - chi - b;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("fiber_surface: inconsistent Euler characteristic");
  return SurfaceType{twice_genus / 2, b};
}

void RoundCurve::validate(int m) const {
  if (!(1 <= lo && lo < hi && hi <= m))
    throw std::invalid_argument("RoundCurve: interval out of range");
}

int PreimageReport::total_euler() const {
  int s = 0;
  for (const auto& c : components) s += c.type.euler();
  return s;
}

int PreimageReport::total_sheets() const {
  int s = 0;
  for (const auto& c : components) s += c.sheets;
  return s;
}

PreimageReport preimage_of_round_disk(const CoverSpec& cs, const RoundCurve& r) {
  r.validate(cs.branch_points());
  return preimage_of_interval(cs, r.lo, r.hi);
}

PreimageReport preimage_of_interval(const CoverSpec& cs, int lo, int hi) {
  if (!(1 <= lo && lo <= hi && hi <= cs.branch_points()))
    throw std::invalid_argument("preimage_of_interval: interval out of range");
  PreimageReport rep;
  rep.enclosed_branch_points = hi - lo + 1;
  for (int i = lo; i <= hi; ++i)
    if (!(cs.rho[i - 1] == cs.rho[lo - 1])) rep.touches_distinguished = true;

  std::vector<Perm> gens;
  for (int i = lo; i <= hi; ++i) gens.push_back(cs.monodromy(i));
  Perm enclosed(3);
  for (int i = lo; i <= hi; ++i) enclosed = cs.monodromy(i) * enclosed;

  for (const auto& orbit : Perm::orbits(3, gens)) {
    PreimageComponent comp;
    comp.sheets = static_cast<int>(orbit.size());
    for (int s : orbit) comp.orbit.push_back(s + 1);

    // Branch points whose transposition acts inside this orbit contribute one
    // index-2 preimage here; all other preimages have e_p = 1.
    int branched = 0;
    for (int i = lo; i <= hi; ++i) {
      const auto& t = cs.rho[i - 1];
      bool a_in = false, b_in = false;
      for (int s : orbit) {
        if (s == t.a - 1) a_in = true;
        if (s == t.b - 1) b_in = true;
      }
      if (a_in && b_in) ++branched;
      else if (a_in != b_in)
        throw std::logic_error("preimage_of_round_disk: orbit not invariant");
    }
    comp.branch_points_inside = branched;
    const int chi = comp.sheets - branched;

    // Boundary circles: cycles of the enclosed product restricted to the orbit.
    std::vector<char> in_orbit(3, 0);
    for (int s : orbit) in_orbit[s] = 1;
    int cycles = 0;
    std::vector<char> seen(3, 0);
    for (int s = 0; s < 3; ++s) {
      if (!in_orbit[s] || seen[s]) continue;
      ++cycles;
      int j = s;
      while (!seen[j]) {
        seen[j] = 1;
        j = enclosed[j];
      }
    }
    const int twice_genus = 2 - chi - cycles;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw std::logic_error("preimage_of_round_disk: bad component invariants");
    comp.type = SurfaceType{twice_genus / 2, cycles};
    rep.components.push_back(std::move(comp));
  }
  return rep;
}

// Word in free generators x_1..x_m, letters +-(index).
using FreeWord = std::vector<int>;

bool braid_lift_check(const CoverSpec& cs, const BraidWord& w) {
  if (w.strands() != cs.branch_points())
    throw std::invalid_argument("braid_lift_check: strand count mismatch");
  const int m = w.strands();

  // Images of the free generators under w_*, built letter by letter:
  // sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
  std::vector<FreeWord> img(m);
  for (int i = 0; i < m; ++i) img[i] = {i + 1};
  for (const auto& l : w.letters()) {
    const int i = l.index - 1;
    FreeWord xi = img[i], xj = img[i + 1];
    if (l.sign > 0) {
      // x_i -> x_i x_{i+1} x_i^-1
      FreeWord t = xi;
      t.insert(t.end(), xj.begin(), xj.end());
      for (auto it = xi.rbegin(); it != xi.rend(); ++it) t.push_back(-*it);
      img[i] = t;
      img[i + 1] = xi;
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      FreeWord t;
      for (auto it = xj.rbegin(); it != xj.rend(); ++it) t.push_back(-*it);
      t.insert(t.end(), xi.begin(), xi.end());
      t.insert(t.end(), xj.begin(), xj.end());
      img[i] = xj;
      img[i + 1] = t;
    }
  }

  auto eval = [&](const FreeWord& fw) {
    // rho(x_{a_1} ... x_{a_L}) = rho(a_1) * rho(a_2) * ... * rho(a_L).
    Perm p(3);
    for (int g : fw) {
      Perm q = cs.monodromy(g > 0 ? g : -g);
      if (g < 0) q = q.inverse();
      p = p * q;
    }
    return p;
  };

  std::vector<Perm> image_rho(m);
  for (int i = 0; i < m; ++i) image_rho[i] = eval(img[i]);

  // Compare with rho up to a single inner automorphism of S3.
  static const int elems[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& e : elems) {
    Perm h(std::vector<int>{e[0], e[1], e[2]});
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (!(h * cs.monodromy(i + 1) * h.inverse() == image_rho[i])) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace fk
