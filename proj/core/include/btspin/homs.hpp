#pragma once

#include <vector>

#include "btspin/finite_group.hpp"
#include "btspin/presentation.hpp"

namespace btspin {

struct HomSearchOptions {
  // Caps fail loudly (ResourceError), never truncate silently.
  int max_group_order = 24;
  int max_generators = 12;

  // Restrict all generator images to a single conjugacy class at a time and
  // sum over classes. Only valid for presentations whose generators are all
  // mutually conjugate (Wirtinger-like); callers opt in.
  bool conjugacy_fast_path = false;
};

// All assignments (g_1, ..., g_l) in G^l under which every relator
// evaluates to the identity, in lexicographic order of element indices.
// The search assigns generators in relator-coverage order and evaluates a
// relator as soon as its support is fully assigned; the pruned result set
// equals the brute-force one.
std::vector<std::vector<int>> enumerate_homs(const FinitePresentation& p,
                                             const FiniteGroupTable& g,
                                             const HomSearchOptions& options = {});

// |enumerate_homs(p, g)| without materializing the assignments.
long long count_homs(const FinitePresentation& p, const FiniteGroupTable& g,
                     const HomSearchOptions& options = {});

}  // namespace btspin
