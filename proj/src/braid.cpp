#include "fk/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace fk {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (letters_.empty()) {
    if (strands_ < 1) throw std::invalid_argument("BraidWord: strands must be >= 1");
  } else if (strands_ < 2) {
    throw std::invalid_argument("BraidWord: nonempty word needs >= 2 strands");
  }
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw std::invalid_argument("BraidWord: generator index out of range");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("BraidWord: sign must be +-1");
  }
}

BraidWord BraidWord::pow(int n) const {
  BraidWord base = n >= 0 ? *this : invert(*this);
  int reps = n >= 0 ? n : -n;
  std::vector<BraidLetter> out;
  out.reserve(static_cast<size_t>(reps) * letters_.size());
  for (int i = 0; i < reps; ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ',';
    os << letters_[i].sign * letters_[i].index;
  }
  return os.str();
}

BraidWord BraidWord::parse(int strands, const std::string& csv) {
  std::vector<BraidLetter> ls;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v == 0) throw std::invalid_argument("BraidWord::parse: zero generator");
    ls.push_back(BraidLetter{v > 0 ? v : -v, v > 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(ls));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("compose: strand count mismatch");
  std::vector<BraidLetter> out = b.letters();
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  return BraidWord(a.strands(), std::move(out));
}

BraidWord invert(const BraidWord& w) {
  std::vector<BraidLetter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(out));
}

Perm underlying_permutation(const BraidWord& w) {
  Perm p(w.strands());
  for (const auto& l : w.letters())
    p = Perm::transposition(w.strands(), l.index - 1, l.index) * p;
  return p;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (const auto& l : w.letters()) s += l.sign;
  return s;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> st;
  for (const auto& l : w.letters()) {
    if (!st.empty() && st.back().index == l.index && st.back().sign == -l.sign)
      st.pop_back();
    else
      st.push_back(l);
  }
  return BraidWord(w.strands(), std::move(st));
}

BraidWord cyclic_free_reduce(const BraidWord& w) {
  BraidWord cur = free_reduce(w);
  while (cur.length() >= 2) {
    const auto& ls = cur.letters();
    if (ls.front().index == ls.back().index && ls.front().sign == -ls.back().sign) {
      std::vector<BraidLetter> trimmed(ls.begin() + 1, ls.end() - 1);
      cur = free_reduce(BraidWord(cur.strands(), std::move(trimmed)));
    } else {
      break;
    }
  }
  return cur;
}

namespace {

// Count occurrences of a generator index (either sign).
int count_index(const BraidWord& w, int idx) {
  int n = 0;
  for (const auto& l : w.letters())
    if (l.index == idx) ++n;
  return n;
}

// Delete the unique occurrence of `idx` and renumber for the reduced strand
// count. Bottom move shifts every index down by one; top move keeps indices.
BraidWord destabilize_at(const BraidWord& w, int idx, bool bottom) {
  std::vector<BraidLetter> out;
  for (const auto& l : w.letters()) {
    if (l.index == idx) continue;
    BraidLetter m = l;
    if (bottom) m.index -= 1;
    out.push_back(m);
  }
  return BraidWord(w.strands() - 1, std::move(out));
}

bool cyclically_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands() || a.length() != b.length()) return false;
  if (a.length() == 0) return true;
  const auto& x = a.letters();
  const auto& y = b.letters();
  for (size_t r = 0; r < y.size(); ++r) {
    bool ok = true;
    for (size_t i = 0; i < x.size() && ok; ++i)
      if (!(x[i] == y[(i + r) % y.size()])) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool DestabilizeTrace::reaches(const BraidWord& w) const {
  if (cyclically_equal(terminal, w)) return true;
  for (const auto& m : moves)
    if (cyclically_equal(m.result, w)) return true;
  return false;
}

DestabilizeTrace markov_destabilize_closure(const BraidWord& w) {
  DestabilizeTrace tr;
  BraidWord cur = w;
  for (;;) {
    BraidWord red = cyclic_free_reduce(cur);
    if (!(red == cur)) {
      cur = red;
      tr.moves.push_back({DestabilizeMove::CyclicReduce, cur});
    }
    if (cur.strands() >= 2 && count_index(cur, 1) == 1) {
      cur = destabilize_at(cur, 1, /*bottom=*/true);
      tr.moves.push_back({DestabilizeMove::DestabilizeBottom, cur});
      continue;
    }
    if (cur.strands() >= 2 && count_index(cur, cur.strands() - 1) == 1) {
      cur = destabilize_at(cur, cur.strands() - 1, /*bottom=*/false);
      tr.moves.push_back({DestabilizeMove::DestabilizeTop, cur});
      continue;
    }
    break;
  }
  tr.terminal = cur;
  return tr;
}

}  // namespace fk
