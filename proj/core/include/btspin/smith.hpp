#pragma once

#include <string>
#include <vector>

#include "btspin/presentation.hpp"

namespace btspin {

// Invariant factors d1 | d2 | ... of a finitely generated abelian group.
// Zeros trail and encode free Z factors.
struct SmithForm {
  std::vector<long long> diagonal;

  // Invariant factors with the leading 1s removed: {} for the trivial
  // group, {0} for Z, {2,0} for Z/2 + Z, ...
  std::vector<long long> nontrivial_factors() const;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

// Smith normal form diagonal of an integer matrix (min(rows, cols) entries,
// nonnegative, divisibility chain enforced). Exact integer elimination.
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m);

// Abelianization of a finite presentation: Smith normal form of the
// relator exponent-sum matrix, padded with zeros to generator_count entries.
SmithForm abelianization(const FinitePresentation& p);

// "1", "Z", "Z/3", "Z/2 + Z", ...
std::string describe_abelian(const SmithForm& s);

}  // namespace btspin
