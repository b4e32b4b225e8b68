#pragma once

#include <optional>
#include <string>
#include <utility>

#include "btspin/knot.hpp"
#include "btspin/presentation.hpp"

namespace btspin {

/*
 * Twist parameters (m,n) of a branched twist spin K^{m,n}.
 *
 * K^{m,n} and K^{m,n+2m} are equivalent, so the canonical representative is
 * (0,1), (1,1), or m >= 2 with 1 <= n < 2m. Negative m is rejected; the
 * orientation convention is to reverse the ambient sphere instead.
 */
struct MNPair {
  long long m = 0;
  long long n = 1;
  friend bool operator==(const MNPair&, const MNPair&) = default;
  std::string to_text() const;  // "m/n"
};

// Canonical representative; throws DomainError on non-coprime input,
// negative m, or (1,n) with n != 1 (which has no canonical form here).
MNPair normalize_mn(long long m, long long n);

// Least positive beta with n*beta == 1 (mod m); requires coprime m >= 2.
long long beta(long long m, long long n);

// Group of the complement of K^{m,n} built from a Wirtinger presentation
// <x1..xl | r1..rl>: adds a generator h, commutators [xi, h] for every i,
// and the relator x1^m h^beta. Requires canonical mn with m >= 2; the pairs
// (0,1) (knot group itself) and (1,1) (trivial 2-knot) are rejected with a
// pointer to their special cases.
FinitePresentation btspin_group(const FinitePresentation& wirtinger, const MNPair& mn);

// Fundamental group of the associated 3-orbifold of cyclic type:
// <x1..xl | r1..rl, x1^m>, m >= 2.
FinitePresentation orbifold_group(const FinitePresentation& wirtinger, long long m);

// <mu, lambda | mu^p lambda^-q> for the (p,q)-torus knot, coprime p,q >= 2.
FinitePresentation torus_group(long long p, long long q);

// Geometric type declared for the underlying 1-knot. The engine only acts
// on declared labels; Unknown is never guessed around.
enum class KnotClass { Trivial, Torus, Hyperbolic, Satellite, Composite, Unknown };
enum class TriState { Yes, No, Unknown };

std::string knot_class_text(KnotClass c);
std::string tri_state_text(TriState t);

// A branched twist spin: 1-knot diagram plus canonical (m,n) and the
// user-declared classification labels the decision rules consume.
struct BtSpinSpec {
  KnotDiagram diagram;
  MNPair mn;
  KnotClass class_label = KnotClass::Unknown;
  std::optional<std::pair<long long, long long>> torus_pq;  // set iff Torus
  TriState prime = TriState::Unknown;
  TriState sufficiently_large = TriState::Unknown;
  bool figure_eight = false;
  std::string name;

  // Prime status with label implications applied: torus and hyperbolic
  // knots are prime, composite knots are not.
  TriState effective_prime() const;
  // Satellite knots are sufficiently large.
  TriState effective_sufficiently_large() const;
};

// Contradiction checks: torus label needs a coprime pair p,q >= 2; a
// trivial label needs a diagram whose Wirtinger presentation simplifies to
// <x | >; label/flag combinations that cannot coexist are rejected.
void validate_spec(const BtSpinSpec& spec);

// Spec for a built-in named knot with curated labels (unknot -> trivial,
// trefoil -> torus(2,3), figure8 -> hyperbolic, T(p,q) -> torus(p,q)).
// Throws ParseError for unknown names.
BtSpinSpec named_spec(std::string_view name, const MNPair& mn);

}  // namespace btspin
