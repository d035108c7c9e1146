#include "rainbowkit/braid.hpp"

#include <numeric>
#include <sstream>

namespace rainbowkit {

BraidWord BraidWord::inverse() const {
  std::vector<int> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back(-*it);
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands_ != o.strands_)
    throw std::invalid_argument("product: strand-count mismatch");
  std::vector<int> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::str() const {
  std::ostringstream os;
  os << "b=" << strands_ << ":";
  for (int l : letters_) os << ' ' << l;
  return os.str();
}

std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> perm(w.strands());
  std::iota(perm.begin(), perm.end(), 0);
  // perm[i] = current exit position of the strand entering at i.
  for (int l : w.letters()) {
    int i = (l < 0 ? -l : l) - 1;  // crossing swaps positions i, i+1
    for (int& p : perm) {
      if (p == i)
        p = i + 1;
      else if (p == i + 1)
        p = i;
    }
  }
  return perm;
}

int closure_components(const BraidWord& w) {
  std::vector<int> perm = permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int l : w.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.letters().size());
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("stabilize: sign must be +1 or -1");
  BraidWord out = w.widened(w.strands() + 1);
  out.push_back(sign * w.strands());
  return out;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  if (w.strands() != g.strands())
    throw std::invalid_argument("conjugate: strand-count mismatch");
  return free_reduce(g.inverse() * w * g);
}

BraidWord parse_braid(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head.rfind("b=", 0) != 0)
    throw std::invalid_argument("braid grammar: expected `b=<n>:`");
  std::string num = head.substr(2);
  if (!num.empty() && num.back() == ':') num.pop_back();
  int strands = std::stoi(num);
  std::vector<int> letters;
  int l;
  while (is >> l) letters.push_back(l);
  if (!is.eof()) throw std::invalid_argument("braid grammar: trailing junk");
  return BraidWord(strands, std::move(letters));
}

}  // namespace rainbowkit
