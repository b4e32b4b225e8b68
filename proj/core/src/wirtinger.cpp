#include "btspin/wirtinger.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "btspin/errors.hpp"

namespace btspin {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

FinitePresentation wirtinger_presentation(const KnotDiagram& d) {
  FinitePresentation p;
  if (d.crossing_count() == 0) {
    p.generator_names = {"x1"};
    return p;
  }

  // Arcs merge across over-passages; the classes are the Wirtinger arcs.
  const int arcs = d.arc_count();
  UnionFind uf(arcs + 1);
  for (const Crossing& c : d.crossings()) uf.unite(c.over_in, c.over_out);

  std::map<int, int> class_index;  // root -> generator index, ordered by smallest arc
  for (int arc = 1; arc <= arcs; ++arc) {
    const int root = uf.find(arc);
    if (!class_index.count(root)) {
      const int idx = static_cast<int>(class_index.size());
      class_index[root] = idx;
      p.generator_names.push_back("x" + std::to_string(idx + 1));
    }
  }
  auto gen = [&](int arc) { return class_index.at(uf.find(arc)); };

  // One relator per crossing: x_out = x_over^e x_in x_over^-e, stored as the
  // trivial word x_out^-1 x_over^e x_in x_over^-e. A kink whose arcs all
  // coincide reduces to the empty word and is dropped.
  for (const Crossing& c : d.crossings()) {
    const int over = gen(c.over_in);
    Word relator({Letter{gen(c.under_out), -1}, Letter{over, c.sign},
                  Letter{gen(c.under_in), 1}, Letter{over, -c.sign}});
    if (!relator.empty()) p.relators.push_back(std::move(relator));
  }

  p.validate();
  return p;
}

FinitePresentation tietze_simplify(const FinitePresentation& input, int budget) {
  FinitePresentation p = input;
  p.validate();

  int moves = 0;
  bool changed = true;
  while (changed && moves < budget) {
    changed = false;

    // Drop relators that reduce to nothing or repeat an earlier relator up
    // to rotation and inversion.
    for (std::size_t i = 0; i < p.relators.size() && !changed; ++i) {
      bool drop = p.relators[i].empty();
      for (std::size_t j = 0; j < i && !drop; ++j)
        drop = p.relators[i].same_relator(p.relators[j]);
      if (drop) {
        p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(i));
        ++moves;
        changed = true;
      }
    }
    if (changed) continue;

    // Eliminate the lowest-index generator some relator mentions exactly
    // once, using the lowest-index such relator as its definition.
    const int gens = p.generator_count();
    if (gens <= 1) break;
    for (int g = 0; g < gens && !changed; ++g) {
      for (std::size_t r = 0; r < p.relators.size() && !changed; ++r) {
        if (p.relators[r].occurrences(g) != 1) continue;
        const auto& letters = p.relators[r].letters();
        std::size_t at = 0;
        while (letters[at].gen != g) ++at;
        // relator = A g^e B  =>  g^e = A^-1 B^-1.
        Word prefix(std::vector<Letter>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(at)));
        Word suffix(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(at) + 1, letters.end()));
        Word value = (letters[at].exp == 1) ? prefix.inverse() * suffix.inverse()
                                            : suffix * prefix;
        // The defining relator had a single occurrence, so the value cannot
        // mention g; substitute it everywhere else.
        std::vector<Word> next;
        next.reserve(p.relators.size() - 1);
        for (std::size_t k = 0; k < p.relators.size(); ++k) {
          if (k == r) continue;
          next.push_back(p.relators[k].substitute(g, value, /*drop=*/true));
        }
        p.relators = std::move(next);
        p.generator_names.erase(p.generator_names.begin() + g);
        ++moves;
        changed = true;
      }
    }
  }

  // Stored relators stay freely reduced; empties left by the final move are
  // removed without charging the budget, since validate() forbids them.
  std::erase_if(p.relators, [](const Word& w) { return w.empty(); });
  p.validate();
  return p;
}

}  // namespace btspin
