#include "btspin/homs.hpp"

#include <algorithm>
#include <numeric>

#include "btspin/errors.hpp"

namespace btspin {
namespace {

struct SearchPlan {
  // Generators in assignment order and, per depth, the relators whose
  // support becomes fully assigned at that depth. Evaluating each relator
  // at the earliest possible depth prunes without changing the result set.
  std::vector<int> order;
  std::vector<std::vector<int>> checks_at;
};

SearchPlan make_plan(const FinitePresentation& p) {
  const int gens = p.generator_count();
  std::vector<std::vector<int>> support(p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::vector<bool> used(static_cast<std::size_t>(gens), false);
    for (const Letter& l : p.relators[r].letters()) used[static_cast<std::size_t>(l.gen)] = true;
    for (int g = 0; g < gens; ++g)
      if (used[static_cast<std::size_t>(g)]) support[r].push_back(g);
  }

  SearchPlan plan;
  plan.checks_at.resize(static_cast<std::size_t>(gens));
  std::vector<bool> assigned(static_cast<std::size_t>(gens), false);
  std::vector<bool> relator_done(p.relators.size(), false);
  for (int depth = 0; depth < gens; ++depth) {
    // Greedy: the generator completing the most relators, lowest index wins.
    int best = -1, best_score = -1;
    for (int g = 0; g < gens; ++g) {
      if (assigned[static_cast<std::size_t>(g)]) continue;
      int score = 0;
      for (std::size_t r = 0; r < support.size(); ++r) {
        if (relator_done[r]) continue;
        bool completes = true;
        for (int s : support[r])
          if (s != g && !assigned[static_cast<std::size_t>(s)]) completes = false;
        if (completes && !support[r].empty()) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best = g;
      }
    }
    assigned[static_cast<std::size_t>(best)] = true;
    plan.order.push_back(best);
    for (std::size_t r = 0; r < support.size(); ++r) {
      if (relator_done[r]) continue;
      bool done = true;
      for (int s : support[r])
        if (!assigned[static_cast<std::size_t>(s)]) done = false;
      if (done) {
        relator_done[r] = true;
        plan.checks_at[static_cast<std::size_t>(depth)].push_back(static_cast<int>(r));
      }
    }
  }
  return plan;
}

bool relator_holds(const Word& w, const FiniteGroupTable& g, const std::vector<int>& image) {
  int acc = g.identity();
  for (const Letter& l : w.letters()) {
    const int v = image[static_cast<std::size_t>(l.gen)];
    acc = g.mul(acc, l.exp == 1 ? v : g.inverse(v));
  }
  return acc == g.identity();
}

template <typename OnSolution>
void search(const FinitePresentation& p, const FiniteGroupTable& g, const SearchPlan& plan,
            const std::vector<int>& domain, OnSolution&& on_solution) {
  const int gens = p.generator_count();
  std::vector<int> image(static_cast<std::size_t>(gens), g.identity());
  std::vector<int> choice(static_cast<std::size_t>(gens), 0);
  int depth = 0;
  while (depth >= 0) {
    if (choice[static_cast<std::size_t>(depth)] >= static_cast<int>(domain.size())) {
      choice[static_cast<std::size_t>(depth)] = 0;
      --depth;
      if (depth >= 0) ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    image[static_cast<std::size_t>(plan.order[static_cast<std::size_t>(depth)])] =
        domain[static_cast<std::size_t>(choice[static_cast<std::size_t>(depth)])];
    bool ok = true;
    for (int r : plan.checks_at[static_cast<std::size_t>(depth)])
      if (!relator_holds(p.relators[static_cast<std::size_t>(r)], g, image)) {
        ok = false;
        break;
      }
    if (!ok) {
      ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    if (depth == gens - 1) {
      on_solution(image);
      ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    ++depth;
  }
}

void check_caps(const FinitePresentation& p, const FiniteGroupTable& g,
                const HomSearchOptions& options) {
  p.validate();
  if (g.order() > options.max_group_order)
    throw ResourceError("group order " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(options.max_group_order));
  if (p.generator_count() > options.max_generators)
    throw ResourceError("generator count " + std::to_string(p.generator_count()) +
                        " exceeds cap " + std::to_string(options.max_generators) +
                        " (simplify the presentation or raise the cap)");
  for (const Word& r : p.relators)
    if (r.empty()) throw DomainError("empty relator");
}

// Relators with no generators at all hold trivially; p.validate() already
// rejects them, so every relator is covered by some depth of the plan.

template <typename OnSolution>
void run_search(const FinitePresentation& p, const FiniteGroupTable& g,
                const HomSearchOptions& options, OnSolution&& on_solution) {
  check_caps(p, g, options);
  const SearchPlan plan = make_plan(p);
  if (options.conjugacy_fast_path) {
    // All generator images must be mutually conjugate for Wirtinger-like
    // presentations, so the search may sweep one conjugacy class at a time.
    for (const auto& cls : g.conjugacy_classes()) search(p, g, plan, cls, on_solution);
  } else {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    search(p, g, plan, all, on_solution);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_homs(const FinitePresentation& p,
                                             const FiniteGroupTable& g,
                                             const HomSearchOptions& options) {
  std::vector<std::vector<int>> out;
  run_search(p, g, options, [&](const std::vector<int>& image) { out.push_back(image); });
  std::sort(out.begin(), out.end());
  return out;
}

long long count_homs(const FinitePresentation& p, const FiniteGroupTable& g,
                     const HomSearchOptions& options) {
  long long count = 0;
  run_search(p, g, options, [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace btspin
