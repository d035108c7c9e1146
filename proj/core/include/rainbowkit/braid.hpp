#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbowkit {

/// A word in the standard generators of the braid group on `strands` strands.
/// Letters are nonzero signed indices: +i encodes sigma_i, -i encodes its
/// inverse, 1 <= i <= strands-1. Letters act left to right; braids are read
/// top to bottom, so the closure of u followed by v is the closure of u*v.
class BraidWord {
 public:
  BraidWord() : strands_(1) {}
  explicit BraidWord(int strands) : strands_(strands) { check_strands(); }
  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    check_strands();
    for (int l : letters_) check_letter(l);
  }

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int letter(int pos) const { return letters_.at(pos); }

  void push_back(int letter) {
    check_letter(letter);
    letters_.push_back(letter);
  }

  bool operator==(const BraidWord& o) const = default;

  /// Same letters reinterpreted on a wider braid group.
  BraidWord widened(int strands) const {
    if (strands < strands_)
      throw std::invalid_argument("widened: cannot shrink strand count");
    return BraidWord(strands, letters_);
  }

  /// Reverse the letter order and negate signs.
  BraidWord inverse() const;

  /// Concatenation (group multiplication), no reduction.
  BraidWord operator*(const BraidWord& o) const;

  std::string str() const;

 private:
  void check_strands() const {
    if (strands_ < 1) throw std::invalid_argument("braid needs >= 1 strand");
  }
  void check_letter(int l) const {
    int i = l < 0 ? -l : l;
    if (i < 1 || i >= strands_)
      throw std::invalid_argument("letter index " + std::to_string(l) +
                                  " out of range for " +
                                  std::to_string(strands_) + " strands");
  }

  int strands_;
  std::vector<int> letters_;
};

/// Image of the word in the symmetric group: perm[i] is the 0-based position
/// where the strand entering at position i (0-based) exits.
std::vector<int> permutation(const BraidWord& w);

/// Number of cycles of permutation(w), i.e. components of the braid closure.
int closure_components(const BraidWord& w);

/// Sum of letter signs (writhe of the braided diagram).
int exponent_sum(const BraidWord& w);

/// Cancel adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Markov stabilization: strand count b+1 and the word w * sigma_b^{sign}.
BraidWord stabilize(const BraidWord& w, int sign);

/// g^{-1} * w * g, free-reduced. Throws on strand-count mismatch.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

/// Parses the text grammar `b=<n>: <signed ints>`.
BraidWord parse_braid(const std::string& text);

}  // namespace rainbowkit
