#include "btspin/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "btspin/errors.hpp"

namespace btspin {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.gen < 0 || (l.exp != 1 && l.exp != -1))
      throw DomainError("word letter must have gen >= 0 and exponent +1/-1");
  }
  reduce();
}

Word Word::generator(int gen, int exp) { return Word({Letter{gen, exp}}); }

Word Word::power(int gen, int k) {
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(std::abs(k)));
  for (int i = 0; i < std::abs(k); ++i) ls.push_back(Letter{gen, k > 0 ? 1 : -1});
  return Word(std::move(ls));
}

void Word::reduce() {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(Letter{it->gen, -it->exp});
  Word w;
  w.letters_ = std::move(out);  // already reduced
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  reduce();
  return *this;
}

int Word::exponent_sum(int gen) const {
  int s = 0;
  for (const Letter& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

int Word::exponent_sum() const {
  int s = 0;
  for (const Letter& l : letters_) s += l.exp;
  return s;
}

int Word::occurrences(int gen) const {
  int c = 0;
  for (const Letter& l : letters_)
    if (l.gen == gen) ++c;
  return c;
}

int Word::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word Word::substitute(int gen, const Word& replacement, bool drop) const {
  if (replacement.occurrences(gen) != 0)
    throw DomainError("substitution value may not mention the replaced generator");
  const auto shift = [&](int g) { return (drop && g > gen) ? g - 1 : g; };
  std::vector<Letter> out;
  const Word inv = replacement.inverse();
  for (const Letter& l : letters_) {
    if (l.gen == gen) {
      const Word& rep = (l.exp == 1) ? replacement : inv;
      for (const Letter& rl : rep.letters()) out.push_back(Letter{shift(rl.gen), rl.exp});
    } else {
      out.push_back(Letter{shift(l.gen), l.exp});
    }
  }
  return Word(std::move(out));
}

bool Word::same_relator(const Word& other) const {
  if (letters_.size() != other.letters_.size()) return false;
  if (letters_.empty()) return true;
  const Word inv = other.inverse();
  const std::size_t n = letters_.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool eq_fwd = true, eq_inv = true;
    for (std::size_t i = 0; i < n && (eq_fwd || eq_inv); ++i) {
      const Letter& mine = letters_[(i + shift) % n];
      if (mine != other.letters_[i]) eq_fwd = false;
      if (mine != inv.letters_[i]) eq_inv = false;
    }
    if (eq_fwd || eq_inv) return true;
  }
  return false;
}

}  // namespace btspin
