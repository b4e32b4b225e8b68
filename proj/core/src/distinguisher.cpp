#include "btspin/distinguisher.hpp"

#include <algorithm>
#include <sstream>

#include "btspin/alexander.hpp"
#include "btspin/errors.hpp"
#include "btspin/wirtinger.hpp"
#include "json.hpp"

namespace btspin {

std::string outcome_text(Outcome o) {
  switch (o) {
    case Outcome::Distinct: return "DISTINCT";
    case Outcome::Equivalent: return "EQUIVALENT";
    case Outcome::ReducesTo1Knot: return "REDUCES_TO_1KNOT";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> catalog = {
      {"R-M", "Branched twist spins with different twist orders m are never equivalent.",
       "skipped when both knots are declared trivial: every twist spin of the "
       "trivial knot is the trivial 2-knot"},
      {"R-11", "Every (1,1) branched twist spin is the trivial 2-knot, so any two are equivalent.",
       ""},
      {"R-01",
       "Spun knots ((m,n) = (0,1)) of prime knots are equivalent exactly when the "
       "underlying 1-knots are; the question reduces to 1-knot equivalence.",
       ""},
      {"R-T1",
       "For m >= 2, the twist spin of a trivial knot is never equivalent to the "
       "twist spin of a non-trivial knot.",
       ""},
      {"R-T2c",
       "For m >= 2, a composite knot and a non-composite knot never yield "
       "equivalent branched twist spins.",
       ""},
      {"R-T2t",
       "For m >= 2, a torus knot and a non-torus knot never yield equivalent "
       "branched twist spins.",
       ""},
      {"R-T3",
       "For m >= 3, a hyperbolic knot and a satellite knot never yield equivalent "
       "branched twist spins.",
       ""},
      {"R-H",
       "For m >= 3 and two hyperbolic knots, the branched twist spins are "
       "equivalent if and only if the knots are; the question reduces to 1-knot "
       "equivalence.",
       ""},
      {"R-SL",
       "For m >= 2 and two prime, sufficiently large knots, the branched twist "
       "spins are equivalent if and only if the knots are; the question reduces "
       "to 1-knot equivalence.",
       ""},
      {"R-D1",
       "If both twist orders are even and the knot determinants |Delta(-1)| "
       "differ, the branched twist spins are not equivalent.",
       ""},
      {"R-D2",
       "If one twist order is even, the other odd, and the even side's knot "
       "determinant is not 1, the branched twist spins are not equivalent.",
       "shadowed by R-M in the fixed order (its hypotheses force different m); "
       "kept for corroborating evidence"},
      {"R-TT",
       "For even m and torus knots T(p1,q1), T(p2,q2) with p1 even: the twist "
       "spins are not equivalent if p2 is even with q1 != q2, or if p2 and q2 are "
       "both odd.",
       "its hypotheses force distinct determinants, so R-D1 always fires first; "
       "kept for corroborating evidence on torus pairs"},
      {"R-HOM",
       "For m >= 2 and two knots declared neither trivial nor torus, differing "
       "homomorphism counts from the order-m orbifold group into some finite "
       "group certify that the branched twist spins are not equivalent.",
       ""},
  };
  return catalog;
}

namespace {

const RuleInfo& rule(const std::string& id) {
  for (const RuleInfo& r : rule_catalog())
    if (r.id == id) return r;
  throw DomainError("unknown rule id " + id);
}

RuleCitation cite(const std::string& id, std::string evidence) {
  return RuleCitation{id, rule(id).statement, std::move(evidence)};
}

bool labeled(const BtSpinSpec& s) { return s.class_label != KnotClass::Unknown; }

// Memoized per-decide() knot determinant.
class DeterminantCache {
 public:
  explicit DeterminantCache(const BtSpinSpec& a, const BtSpinSpec& b) : specs_{&a, &b} {}
  long long of(int side) {
    if (!value_[side])
      value_[side] = determinant(wirtinger_presentation(specs_[side]->diagram));
    return *value_[side];
  }

 private:
  const BtSpinSpec* specs_[2];
  std::optional<long long> value_[2];
};

bool torus_parity_rule_fires(const BtSpinSpec& a, const BtSpinSpec& b);
std::string torus_parity_evidence(const BtSpinSpec& a, const BtSpinSpec& b, long long m);

// Corroboration appended to DISTINCT verdicts whenever the hypotheses of
// R-D1, R-D2 or R-TT independently hold for the pair.
void corroborate(const BtSpinSpec& a, const BtSpinSpec& b, DeterminantCache& dets, Verdict& v) {
  const bool even_a = a.mn.m % 2 == 0;
  const bool even_b = b.mn.m % 2 == 0;
  const auto evidence = [&](long long da, long long db) {
    return "|Delta_K1(-1)| = " + std::to_string(da) + ", |Delta_K2(-1)| = " + std::to_string(db);
  };
  const auto already_cited = [&](const std::string& id) {
    for (const RuleCitation& c : v.justification)
      if (c.rule_id == id) return true;
    return false;
  };
  if (even_a && even_b) {
    const long long da = dets.of(0), db = dets.of(1);
    if (da != db && !already_cited("R-D1"))
      v.justification.push_back(cite("R-D1", evidence(da, db)));
  } else if (even_a != even_b) {
    const long long dev = even_a ? dets.of(0) : dets.of(1);
    if (dev != 1) {
      const long long da = dets.of(0), db = dets.of(1);
      v.justification.push_back(cite("R-D2", evidence(da, db)));
    }
  }
  if (a.mn.m == b.mn.m && a.mn.m >= 2 && even_a && torus_parity_rule_fires(a, b) &&
      !already_cited("R-TT"))
    v.justification.push_back(cite("R-TT", torus_parity_evidence(a, b, a.mn.m)));
}

std::string label_evidence(const BtSpinSpec& a, const BtSpinSpec& b) {
  return "class(K1) = " + knot_class_text(a.class_label) +
         ", class(K2) = " + knot_class_text(b.class_label) + ", m = " + std::to_string(a.mn.m);
}

// Even member first, for the parity case split of the torus rule.
std::pair<long long, long long> even_first(std::pair<long long, long long> pq) {
  if (pq.first % 2 != 0 && pq.second % 2 == 0) std::swap(pq.first, pq.second);
  return pq;
}

bool torus_parity_rule_fires(const BtSpinSpec& a, const BtSpinSpec& b) {
  if (!a.torus_pq || !b.torus_pq) return false;
  const auto [p1, q1] = even_first(*a.torus_pq);
  const auto [p2, q2] = even_first(*b.torus_pq);
  return (p1 % 2 == 0 && p2 % 2 == 0 && q1 != q2) ||
         (p1 % 2 == 0 && p2 % 2 != 0 && q2 % 2 != 0) ||
         (p2 % 2 == 0 && p1 % 2 != 0 && q1 % 2 != 0);
}

std::string torus_parity_evidence(const BtSpinSpec& a, const BtSpinSpec& b, long long m) {
  const auto [p1, q1] = even_first(*a.torus_pq);
  const auto [p2, q2] = even_first(*b.torus_pq);
  return "T(" + std::to_string(p1) + "," + std::to_string(q1) + ") vs T(" + std::to_string(p2) +
         "," + std::to_string(q2) + "), m = " + std::to_string(m);
}

}  // namespace

Verdict decide(const BtSpinSpec& a, const BtSpinSpec& b, const HomSearchOptions& options) {
  validate_spec(a);
  validate_spec(b);
  DeterminantCache dets(a, b);
  Verdict v;

  const bool both_trivial =
      a.class_label == KnotClass::Trivial && b.class_label == KnotClass::Trivial;

  // R-M: different twist orders. Guarded for the pair of trivial knots,
  // whose twist spins are the trivial 2-knot for every (m,n).
  if (a.mn.m != b.mn.m && !both_trivial) {
    v.outcome = Outcome::Distinct;
    v.justification.push_back(
        cite("R-M", "m1 = " + std::to_string(a.mn.m) + ", m2 = " + std::to_string(b.mn.m)));
    corroborate(a, b, dets, v);
    return v;
  }

  const MNPair one_one{1, 1};
  const MNPair zero_one{0, 1};

  // R-11: two (1,1) twist spins.
  if (a.mn == one_one && b.mn == one_one) {
    v.outcome = Outcome::Equivalent;
    v.justification.push_back(cite("R-11", "(m,n) = 1/1 on both sides"));
    return v;
  }

  // R-01: two spun prime knots.
  if (a.mn == zero_one && b.mn == zero_one &&
      a.effective_prime() == TriState::Yes && b.effective_prime() == TriState::Yes) {
    v.outcome = Outcome::ReducesTo1Knot;
    v.justification.push_back(cite("R-01", "(m,n) = 0/1 on both sides, both knots prime"));
    return v;
  }

  const long long m = a.mn.m;
  const auto distinct_by_label = [&](const std::string& id) {
    v.outcome = Outcome::Distinct;
    v.justification.push_back(cite(id, label_evidence(a, b)));
    corroborate(a, b, dets, v);
    return v;
  };

  // R-T1: trivial vs declared non-trivial.
  if (m >= 2 && labeled(a) && labeled(b)) {
    const bool ta = a.class_label == KnotClass::Trivial;
    const bool tb = b.class_label == KnotClass::Trivial;
    if (ta != tb) return distinct_by_label("R-T1");
  }

  // R-T2c / R-T2t: exactly one side in the composite (resp. torus) class,
  // the other declared and outside it.
  if (m >= 2 && labeled(a) && labeled(b)) {
    const bool ca = a.class_label == KnotClass::Composite;
    const bool cb = b.class_label == KnotClass::Composite;
    if (ca != cb) return distinct_by_label("R-T2c");
    const bool ra = a.class_label == KnotClass::Torus;
    const bool rb = b.class_label == KnotClass::Torus;
    if (ra != rb) return distinct_by_label("R-T2t");
  }

  // R-T3: hyperbolic vs satellite for m >= 3.
  if (m >= 3) {
    const bool ha = a.class_label == KnotClass::Hyperbolic;
    const bool hb = b.class_label == KnotClass::Hyperbolic;
    const bool sa = a.class_label == KnotClass::Satellite;
    const bool sb = b.class_label == KnotClass::Satellite;
    if ((ha && sb) || (sa && hb)) return distinct_by_label("R-T3");

    // R-H: both hyperbolic.
    if (ha && hb) {
      v.outcome = Outcome::ReducesTo1Knot;
      std::string note = label_evidence(a, b);
      if (m == 3 && (a.figure_eight || b.figure_eight))
        note += "; m = 3 with a figure-eight side (flat branched cover case)";
      v.justification.push_back(cite("R-H", note));
      return v;
    }
  }

  // R-SL: both prime and sufficiently large.
  if (m >= 2 && a.effective_prime() == TriState::Yes && b.effective_prime() == TriState::Yes &&
      a.effective_sufficiently_large() == TriState::Yes &&
      b.effective_sufficiently_large() == TriState::Yes) {
    v.outcome = Outcome::ReducesTo1Knot;
    v.justification.push_back(cite("R-SL", "both knots prime and sufficiently large, m = " +
                                               std::to_string(m)));
    return v;
  }

  // R-D1: determinant comparison for even m.
  if (m % 2 == 0) {
    const long long da = dets.of(0), db = dets.of(1);
    if (da != db) {
      v.outcome = Outcome::Distinct;
      v.justification.push_back(cite("R-D1", "|Delta_K1(-1)| = " + std::to_string(da) +
                                                 ", |Delta_K2(-1)| = " + std::to_string(db)));
      corroborate(a, b, dets, v);
      return v;
    }
  }

  // R-TT: torus parity cases for even m. Its hypotheses force distinct
  // determinants, so R-D1 has already resolved every pair it covers; it is
  // kept in the fixed order for fidelity and fires as corroboration above.
  if (m >= 2 && m % 2 == 0 && a.torus_pq && b.torus_pq && torus_parity_rule_fires(a, b)) {
    v.outcome = Outcome::Distinct;
    v.justification.push_back(cite("R-TT", torus_parity_evidence(a, b, m)));
    return v;
  }

  // R-HOM: orbifold-group hom counts, only meaningful when both knots are
  // declared neither trivial nor torus.
  const auto hom_applicable = [](const BtSpinSpec& s) {
    return s.class_label == KnotClass::Hyperbolic || s.class_label == KnotClass::Satellite ||
           s.class_label == KnotClass::Composite;
  };
  if (m >= 2 && hom_applicable(a) && hom_applicable(b)) {
    const FinitePresentation pa =
        tietze_simplify(orbifold_group(wirtinger_presentation(a.diagram), m));
    const FinitePresentation pb =
        tietze_simplify(orbifold_group(wirtinger_presentation(b.diagram), m));
    for (const FiniteGroupTable& g : builtin_groups()) {
      if (g.order() > options.max_group_order) continue;
      const long long ca = count_homs(pa, g, options);
      const long long cb = count_homs(pb, g, options);
      if (ca != cb) {
        v.outcome = Outcome::Distinct;
        v.justification.push_back(
            cite("R-HOM", "hom counts into " + g.name() + " differ: " + std::to_string(ca) +
                              " vs " + std::to_string(cb) + " (orbifold order m = " +
                              std::to_string(m) + ")"));
        return v;
      }
    }
  }

  v.outcome = Outcome::Unknown;
  return v;
}

InvariantReport invariant_report(const BtSpinSpec& spec, const HomSearchOptions& options) {
  validate_spec(spec);
  InvariantReport r;
  r.knot_name = spec.name.empty() ? "(unnamed)" : spec.name;
  r.mn = spec.mn;
  r.class_label = spec.class_label;
  r.torus_pq = spec.torus_pq;

  const FinitePresentation wirt = wirtinger_presentation(spec.diagram);
  const FinitePresentation simplified = tietze_simplify(wirt);
  r.wirtinger_generators = wirt.generator_count();
  r.wirtinger_relators = wirt.relator_count();
  r.simplified_generators = simplified.generator_count();
  r.simplified_relators = simplified.relator_count();

  r.alexander = alexander_polynomial(wirt);
  r.knot_determinant = r.alexander.evaluate(-1) < 0 ? -r.alexander.evaluate(-1)
                                                    : r.alexander.evaluate(-1);

  const long long m = spec.mn.m;
  if (m >= 2) {
    r.beta_value = beta(m, spec.mn.n);
    r.h1_order = branched_cover_h1_order(r.alexander, m);
    r.orbifold_abelianization = abelianization(orbifold_group(wirt, m));
    r.btspin_abelianization = abelianization(btspin_group(wirt, spec.mn));
    r.hom_counts_applicable = spec.class_label == KnotClass::Hyperbolic ||
                              spec.class_label == KnotClass::Satellite ||
                              spec.class_label == KnotClass::Composite;
    if (r.hom_counts_applicable) {
      const FinitePresentation orb = tietze_simplify(orbifold_group(wirt, m));
      for (const FiniteGroupTable& g : builtin_groups()) {
        if (g.order() > options.max_group_order) continue;
        r.hom_counts.emplace_back(g.name(), count_homs(orb, g, options));
      }
    }
  } else if (m == 0) {
    r.note = "spun knot: the 2-knot group is the knot group itself";
  } else {
    r.note = "(1,1) twist spin: the trivial 2-knot";
  }
  return r;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << "outcome: " << outcome_text(v.outcome) << '\n';
  if (v.justification.empty() && v.outcome == Outcome::Unknown)
    out << "  no decisive rule applies to the declared labels and computed invariants\n";
  for (const RuleCitation& c : v.justification) {
    out << "  rule " << c.rule_id << ": " << c.statement << '\n';
    out << "    evidence: " << c.evidence << '\n';
  }
  return out.str();
}

std::string verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["outcome"] = outcome_text(v.outcome);
  auto& rules = j["justification"] = nlohmann::ordered_json::array();
  for (const RuleCitation& c : v.justification) {
    nlohmann::ordered_json r;
    r["rule"] = c.rule_id;
    r["statement"] = c.statement;
    r["evidence"] = c.evidence;
    rules.push_back(std::move(r));
  }
  return j.dump();
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "knot: " << r.knot_name << '\n';
  out << "(m,n): " << r.mn.to_text() << '\n';
  out << "class: " << knot_class_text(r.class_label);
  if (r.torus_pq) out << "(" << r.torus_pq->first << "," << r.torus_pq->second << ")";
  out << '\n';
  if (r.beta_value) out << "beta: " << *r.beta_value << '\n';
  out << "wirtinger: " << r.wirtinger_generators << " generators, " << r.wirtinger_relators
      << " relators\n";
  out << "simplified: " << r.simplified_generators << " generators, " << r.simplified_relators
      << " relators\n";
  out << "alexander: " << r.alexander.to_text() << '\n';
  out << "determinant: " << r.knot_determinant << '\n';
  if (r.h1_order) {
    out << "|H1(M_" << r.mn.m << ")|: ";
    if (*r.h1_order == 0)
      out << "infinite\n";
    else
      out << *r.h1_order << '\n';
  }
  if (r.orbifold_abelianization)
    out << "abelianization(orbifold): " << describe_abelian(*r.orbifold_abelianization) << '\n';
  if (r.btspin_abelianization)
    out << "abelianization(btspin): " << describe_abelian(*r.btspin_abelianization) << '\n';
  if (r.hom_counts_applicable) {
    out << "hom counts (orbifold group):\n";
    for (const auto& [name, count] : r.hom_counts)
      out << "  " << name << ": " << count << '\n';
  } else if (r.mn.m >= 2) {
    out << "hom counts: omitted (orbifold invariance needs a non-trivial, non-torus knot)\n";
  }
  if (!r.note.empty()) out << "note: " << r.note << '\n';
  return out.str();
}

std::string report_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["knot"] = r.knot_name;
  j["mn"] = r.mn.to_text();
  std::string cls = knot_class_text(r.class_label);
  if (r.torus_pq)
    cls += "(" + std::to_string(r.torus_pq->first) + "," + std::to_string(r.torus_pq->second) + ")";
  j["class"] = cls;
  if (r.beta_value)
    j["beta"] = *r.beta_value;
  else
    j["beta"] = nullptr;
  j["wirtinger"] = {{"generators", r.wirtinger_generators}, {"relators", r.wirtinger_relators}};
  j["simplified"] = {{"generators", r.simplified_generators}, {"relators", r.simplified_relators}};
  j["alexander"] = nlohmann::ordered_json::parse(r.alexander.to_json());
  j["alexander_text"] = r.alexander.to_text();
  j["determinant"] = r.knot_determinant;
  if (r.h1_order)
    j["h1_order"] = *r.h1_order;
  else
    j["h1_order"] = nullptr;
  if (r.orbifold_abelianization) {
    j["orbifold_abelianization"] = {{"diagonal", r.orbifold_abelianization->diagonal},
                                    {"description", describe_abelian(*r.orbifold_abelianization)}};
  } else {
    j["orbifold_abelianization"] = nullptr;
  }
  if (r.btspin_abelianization) {
    j["btspin_abelianization"] = {{"diagonal", r.btspin_abelianization->diagonal},
                                  {"description", describe_abelian(*r.btspin_abelianization)}};
  } else {
    j["btspin_abelianization"] = nullptr;
  }
  if (r.hom_counts_applicable) {
    nlohmann::ordered_json counts;
    for (const auto& [name, count] : r.hom_counts) counts[name] = count;
    j["hom_counts"] = std::move(counts);
  } else {
    j["hom_counts"] = nullptr;
  }
  j["note"] = r.note;
  return j.dump();
}

}  // namespace btspin
