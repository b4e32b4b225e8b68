#pragma once

#include <vector>

#include "btspin/laurent.hpp"
#include "btspin/presentation.hpp"
#include "btspin/word.hpp"

namespace btspin {

// Formal integer combination of free-group words, kept in canonical sorted
// order with no zero coefficients.
struct FoxTerm {
  long long coefficient = 0;
  Word word;
  friend bool operator==(const FoxTerm&, const FoxTerm&) = default;
};

// Free derivative d(w)/d(x_gen) in the group ring of the free group:
//   d(x_j)/d(x_j) = 1,  d(x_k)/d(x_j) = 0 for k != j,
//   d(uv)/d(x_j) = d(u)/d(x_j) + u d(v)/d(x_j),
//   d(x_j^-1)/d(x_j) = -x_j^-1.
std::vector<FoxTerm> fox_derivative(const Word& w, int gen);

// Relators x Generators matrix of Fox derivatives specialized under the
// abelianization that sends every generator to t.
struct AlexanderMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<LaurentPoly>> entries;
};

// Requires every relator to have total exponent sum 0 (all generators map
// to the same t), as Wirtinger relators do; throws DomainError otherwise.
AlexanderMatrix alexander_matrix(const FinitePresentation& p);

// First elementary ideal generator: gcd of all maximal minors obtained by
// deleting one column (and, for square matrices, one row) of the Alexander
// matrix, in canonical form. The unknot presentation <x | > returns 1.
// Throws DomainError when every minor vanishes.
LaurentPoly alexander_polynomial(const FinitePresentation& p);

// |Delta(-1)|.
long long determinant(const FinitePresentation& p);

// Closed form (1-t^{pq})(1-t) / ((1-t^p)(1-t^q)) for the (p,q)-torus knot,
// coprime p,q >= 2, in canonical form.
LaurentPoly torus_alexander(long long p, long long q);

// |Delta_{T(p,q)}(-1)|: q if p is even, p if q is even, 1 if both are odd.
long long torus_determinant(long long p, long long q);

// Order of the first homology of the m-fold cyclic branched cover, computed
// exactly as |resultant(Delta(t), 1 + t + ... + t^{m-1})|. Returns 0 when
// the group is infinite. Requires m >= 2 and delta in canonical form.
long long branched_cover_h1_order(const LaurentPoly& delta, long long m);

}  // namespace btspin
