#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btspin/group_model.hpp"
#include "btspin/homs.hpp"
#include "btspin/laurent.hpp"
#include "btspin/smith.hpp"

namespace btspin {

enum class Outcome { Distinct, Equivalent, ReducesTo1Knot, Unknown };

std::string outcome_text(Outcome o);  // "DISTINCT", ...

// One fired rule: stable id, the mathematical statement it encodes, and the
// computed evidence that its hypotheses held for this pair.
struct RuleCitation {
  std::string rule_id;
  std::string statement;
  std::string evidence;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<RuleCitation> justification;  // fired rule first, then corroboration
};

struct RuleInfo {
  std::string id;
  std::string statement;
  std::string note;  // precedence remarks ("shadowed by R-M"), empty otherwise
};

// The fixed, ordered rule catalog the engine applies.
const std::vector<RuleInfo>& rule_catalog();

// Applies the catalog in order and returns on the first decisive rule;
// cheap determinant corroboration is appended to DISTINCT verdicts when its
// own hypotheses also hold. Rules whose label hypotheses involve Unknown
// are skipped, never guessed. Inputs must be canonical and label-consistent
// (validate_spec), otherwise DomainError.
Verdict decide(const BtSpinSpec& a, const BtSpinSpec& b,
               const HomSearchOptions& options = {});

// Deterministic bundle of every computable invariant of one spec.
struct InvariantReport {
  std::string knot_name;
  MNPair mn;
  KnotClass class_label = KnotClass::Unknown;
  std::optional<std::pair<long long, long long>> torus_pq;
  std::optional<long long> beta_value;  // m >= 2
  int wirtinger_generators = 0;
  int wirtinger_relators = 0;
  int simplified_generators = 0;
  int simplified_relators = 0;
  LaurentPoly alexander;
  long long knot_determinant = 0;
  std::optional<long long> h1_order;  // m >= 2; 0 encodes infinite
  std::optional<SmithForm> orbifold_abelianization;  // m >= 2
  std::optional<SmithForm> btspin_abelianization;    // m >= 2
  // Hom counts of the (simplified) orbifold group into the built-in groups.
  // Only populated when the orbifold group is an invariant of the 2-knot,
  // i.e. the knot is declared neither trivial nor torus.
  bool hom_counts_applicable = false;
  std::vector<std::pair<std::string, long long>> hom_counts;
  std::string note;  // special-case remarks for m in {0, 1}
};

InvariantReport invariant_report(const BtSpinSpec& spec,
                                 const HomSearchOptions& options = {});

std::string verdict_text(const Verdict& v);
std::string verdict_json(const Verdict& v);
std::string report_text(const InvariantReport& r);
std::string report_json(const InvariantReport& r);

}  // namespace btspin
