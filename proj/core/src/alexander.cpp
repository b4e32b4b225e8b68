#include "btspin/alexander.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "btspin/checked.hpp"
#include "btspin/errors.hpp"

namespace btspin {

std::vector<FoxTerm> fox_derivative(const Word& w, int gen) {
  // d(l_1 ... l_k)/dx = sum over positions: +prefix for x^{+1} letters and
  // -prefix*x^{-1} for x^{-1} letters (the running prefix includes the
  // letter itself in the second case).
  std::map<Word, long long> terms;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen && l.exp == 1) {
      terms[prefix] += 1;
    }
    prefix *= Word::generator(l.gen, l.exp);
    if (l.gen == gen && l.exp == -1) {
      terms[prefix] -= 1;
    }
  }
  std::vector<FoxTerm> out;
  for (const auto& [word, coeff] : terms)
    if (coeff != 0) out.push_back(FoxTerm{coeff, word});
  return out;
}

AlexanderMatrix alexander_matrix(const FinitePresentation& p) {
  p.validate();
  for (const Word& r : p.relators)
    if (r.exponent_sum() != 0)
      throw DomainError(
          "presentation is not Wirtinger-like: a relator has nonzero total "
          "exponent under the map sending every generator to t");

  AlexanderMatrix m;
  m.rows = p.relator_count();
  m.cols = p.generator_count();
  m.entries.assign(static_cast<std::size_t>(m.rows),
                   std::vector<LaurentPoly>(static_cast<std::size_t>(m.cols)));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      LaurentPoly entry;
      for (const FoxTerm& term : fox_derivative(p.relators[static_cast<std::size_t>(i)], j))
        entry += LaurentPoly::monomial(term.word.exponent_sum(), term.coefficient);
      m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(entry);
    }
  }
  return m;
}

namespace {

LaurentPoly minor_det(const AlexanderMatrix& m, int skip_row, int skip_col) {
  std::vector<std::vector<LaurentPoly>> sub;
  for (int i = 0; i < m.rows; ++i) {
    if (i == skip_row) continue;
    std::vector<LaurentPoly> row;
    for (int j = 0; j < m.cols; ++j) {
      if (j == skip_col) continue;
      row.push_back(m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    sub.push_back(std::move(row));
  }
  return laurent_det_up_to_unit(std::move(sub));
}

}  // namespace

LaurentPoly alexander_polynomial(const FinitePresentation& p) {
  const int gens = p.generator_count();
  const int rels = p.relator_count();
  if (rels == 0) {
    if (gens == 1) return LaurentPoly::one();  // unknot: <x | >
    throw DomainError("free presentation of rank > 1 is not a knot group");
  }
  if (rels != gens && rels != gens - 1)
    throw DomainError("expected a Wirtinger-shaped presentation (relators = generators or one less)");

  const AlexanderMatrix m = alexander_matrix(p);
  LaurentPoly gcd;
  for (int col = 0; col < m.cols; ++col) {
    if (rels == gens - 1) {
      gcd = laurent_gcd(gcd, minor_det(m, /*skip_row=*/-1, col));
    } else {
      for (int row = 0; row < m.rows; ++row)
        gcd = laurent_gcd(gcd, minor_det(m, row, col));
    }
    if (!gcd.is_zero() && gcd.canonical() == LaurentPoly::one()) break;
  }
  if (gcd.is_zero())
    throw DomainError("all Alexander minors vanish: input is not a knot presentation");
  return gcd.canonical();
}

long long determinant(const FinitePresentation& p) {
  const long long v = alexander_polynomial(p).evaluate(-1);
  return v < 0 ? -v : v;
}

LaurentPoly torus_alexander(long long p, long long q) {
  if (p < 2 || q < 2) throw DomainError("torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus knot needs coprime p, q");
  if (p * q > 4096) throw ResourceError("torus parameters too large");
  const auto one_minus_tk = [](long long k) {
    return LaurentPoly::one() - LaurentPoly::monomial(static_cast<int>(k), 1);
  };
  const LaurentPoly numerator = one_minus_tk(p * q) * one_minus_tk(1);
  return divide_exact(divide_exact(numerator, one_minus_tk(p)), one_minus_tk(q)).canonical();
}

long long torus_determinant(long long p, long long q) {
  if (p < 2 || q < 2) throw DomainError("torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus knot needs coprime p, q");
  if (p % 2 == 0) return q;
  if (q % 2 == 0) return p;
  return 1;
}

long long branched_cover_h1_order(const LaurentPoly& delta, long long m) {
  if (m < 2) throw DomainError("branched cover order needs m >= 2");
  if (m > 4096) throw ResourceError("branched cover order m too large");
  if (delta.is_zero()) throw DomainError("Alexander polynomial cannot be zero");
  // |H1| = |prod over m-th roots of unity != 1 of Delta(zeta)|
  //      = |resultant(1 + t + ... + t^{m-1}, Delta)|; 0 encodes infinite H1.
  LaurentPoly cyclo_like;
  for (long long i = 0; i < m; ++i) cyclo_like += LaurentPoly::monomial(static_cast<int>(i), 1);
  const long long r = resultant(cyclo_like, delta.canonical());
  return r < 0 ? -r : r;
}

}  // namespace btspin
