#include "btspin/presentation.hpp"

#include <sstream>

#include "btspin/errors.hpp"
#include "json.hpp"

namespace btspin {

void FinitePresentation::validate() const {
  if (generator_names.empty())
    throw DomainError("presentation needs at least one generator");
  for (const Word& r : relators) {
    if (r.empty()) throw DomainError("empty relator is not allowed");
    if (r.max_gen() >= generator_count())
      throw DomainError("relator references a generator out of range");
  }
}

std::string word_to_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].exp == ls[i].exp) ++j;
    const int power = static_cast<int>(j - i) * ls[i].exp;
    if (!first) out << ' ';
    first = false;
    out << names.at(static_cast<std::size_t>(ls[i].gen));
    if (power != 1) out << '^' << power;
    i = j;
  }
  return out.str();
}

std::string FinitePresentation::to_text() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < generator_names.size(); ++i) {
    if (i) out << ", ";
    out << generator_names[i];
  }
  out << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out << ", ";
    out << word_to_text(relators[i], generator_names);
  }
  out << '>';
  return out.str();
}

std::string presentation_json(const FinitePresentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = p.generator_names;
  auto& rels = j["relators"] = nlohmann::ordered_json::array();
  for (const Word& r : p.relators) {
    nlohmann::ordered_json rel = nlohmann::ordered_json::array();
    for (const Letter& l : r.letters()) rel.push_back(l.exp * (l.gen + 1));
    rels.push_back(std::move(rel));
  }
  return j.dump();
}

}  // namespace btspin
