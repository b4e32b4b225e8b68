#pragma once

#include <string>
#include <vector>

#include "btspin/word.hpp"

namespace btspin {

// Finite presentation <g_1, ..., g_n | r_1, ..., r_k>. Relators are freely
// reduced, nonempty words whose generator indices are < generator_count().
struct FinitePresentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
  int relator_count() const { return static_cast<int>(relators.size()); }

  void validate() const;  // throws DomainError if the invariants fail

  std::string to_text() const;  // "<x1, x2 | x1 x2 x1^-1 x2^-1>"
};

// Word rendered with generator names, powers collapsed: "x1^2 h".
// The empty word renders as "1".
std::string word_to_text(const Word& w, const std::vector<std::string>& names);

// {"generators": ["x1", ...], "relators": [[signed 1-based indices], ...]}
// where letter (gen i, exp e) is encoded as e*(i+1).
std::string presentation_json(const FinitePresentation& p);

}  // namespace btspin
