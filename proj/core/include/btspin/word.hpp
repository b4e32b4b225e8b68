#pragma once

#include <compare>
#include <vector>

namespace btspin {

// One letter of a free-group word: 0-based generator index, exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word over generators x_0, x_1, ...
// The identity element is the empty word. All mutating operations re-reduce,
// so adjacent inverse pairs never survive.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(int gen, int exp = 1);
  static Word power(int gen, int k);  // x_gen^k spelled out as |k| letters

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  Word inverse() const;
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  int exponent_sum(int gen) const;  // total exponent of one generator
  int exponent_sum() const;         // total exponent over all letters
  int occurrences(int gen) const;   // number of letters using gen
  int max_gen() const;              // largest generator index, -1 if empty

  // Replaces every occurrence of `gen` by replacement^{±1}. When `drop` is
  // set, generator indices above `gen` shift down by one.
  Word substitute(int gen, const Word& replacement, bool drop) const;

  // Equal as a relator: identical to `other` or other^{-1} up to rotation.
  bool same_relator(const Word& other) const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void reduce();
  std::vector<Letter> letters_;
};

}  // namespace btspin
