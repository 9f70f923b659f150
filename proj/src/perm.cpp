#include "fk/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fk {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p(n);
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("Perm: transposition out of range");
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Perm Perm::operator*(const Perm& other) const {
  if (size() != other.size()) throw std::invalid_argument("Perm: size mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < size(); ++i) r[i] = img_[other.img_[i]];
  return Perm(std::move(r));
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < size(); ++i) r[img_[i]] = i;
  return Perm(std::move(r));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Perm::cycle_count() const { return static_cast<int>(cycles().size()); }

bool Perm::is_single_cycle() const { return cycle_count() == 1 && size() >= 1; }

std::vector<std::vector<int>> Perm::orbits(int n, const std::vector<Perm>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : gens)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g[i]);
      if (a != b) parent[a] = b;
    }
  std::vector<std::vector<int>> buckets(n);
  for (int i = 0; i < n; ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& b : buckets)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

std::string Perm::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& cyc : cycles()) {
    if (cyc.size() < 2) continue;
    any = true;
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i] + 1;
    os << ')';
  }
  if (!any) os << "id";
  return os.str();
}

}  // namespace fk
