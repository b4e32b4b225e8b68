// btspin: presentations, Alexander-type invariants and rule-based
// comparison of branched twist spins built from 1-knot diagrams.
//
// Exit status: 0 success, 1 input error, 2 resource-cap error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "btspin/alexander.hpp"
#include "btspin/distinguisher.hpp"
#include "btspin/errors.hpp"
#include "btspin/group_model.hpp"
#include "btspin/homs.hpp"
#include "btspin/wirtinger.hpp"
#include "json.hpp"

namespace {

using namespace btspin;

struct KnotSourceFlags {
  std::string named;
  std::string pd;
  std::string gauss;
  std::string braid;
  int strands = 2;
  std::string class_label = "unknown";
  std::string prime = "unknown";
  std::string suff_large = "unknown";
  bool figure_eight = false;
};

void add_knot_flags(CLI::App* cmd, KnotSourceFlags& f, const std::string& suffix) {
  auto* named = cmd->add_option("--knot" + suffix, f.named,
                                "built-in name: unknot, trefoil/3_1, figure8/4_1, T(p,q)");
  auto* pd = cmd->add_option("--pd" + suffix, f.pd, "PD code, e.g. \"X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)\"");
  auto* gauss = cmd->add_option("--gauss" + suffix, f.gauss, "signed Gauss code, e.g. \"O1-,U2-,...\"");
  auto* braid = cmd->add_option("--braid" + suffix, f.braid, "braid word, e.g. \"1,1,1\"");
  cmd->add_option("--strands" + suffix, f.strands, "strand count for --braid" + suffix);
  named->excludes(pd)->excludes(gauss)->excludes(braid);
  pd->excludes(gauss)->excludes(braid);
  gauss->excludes(braid);
  cmd->add_option("--class" + suffix, f.class_label,
                  "declared class: trivial|torus(p,q)|hyperbolic|satellite|composite|unknown");
  cmd->add_option("--prime" + suffix, f.prime, "declared primality: yes|no|unknown");
  cmd->add_option("--suff-large" + suffix, f.suff_large,
                  "declared sufficiently-large flag: yes|no|unknown");
  cmd->add_flag("--figure-eight" + suffix, f.figure_eight, "mark the knot as the figure-eight");
}

TriState parse_tristate(const std::string& s) {
  if (s == "yes") return TriState::Yes;
  if (s == "no") return TriState::No;
  if (s == "unknown") return TriState::Unknown;
  throw ParseError("tri-state flag must be yes, no or unknown; got '" + s + "'");
}

MNPair parse_mn(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos)
    throw ParseError("(m,n) must be written m/n, e.g. 2/1");
  long long m = 0, n = 0;
  try {
    m = std::stoll(s.substr(0, slash));
    n = std::stoll(s.substr(slash + 1));
  } catch (const std::exception&) {
    throw ParseError("(m,n) must be two integers m/n");
  }
  const MNPair canon = normalize_mn(m, n);
  if (canon.m != m || canon.n != n)
    std::cerr << "note: (m,n) = " << m << "/" << n << " normalized to " << canon.to_text()
              << "\n";
  return canon;
}

BtSpinSpec build_spec(const KnotSourceFlags& f, const MNPair& mn) {
  BtSpinSpec spec;
  bool named = false;
  if (!f.named.empty()) {
    spec = named_spec(f.named, mn);
    named = true;
  } else if (!f.pd.empty()) {
    spec.diagram = parse_pd(f.pd);
    spec.name = "pd";
  } else if (!f.gauss.empty()) {
    spec.diagram = parse_gauss(f.gauss);
    spec.name = "gauss";
  } else if (!f.braid.empty()) {
    spec.diagram = braid_to_diagram(parse_braid(f.braid, f.strands));
    spec.name = "braid";
  } else {
    throw ParseError("no knot given: use --knot, --pd, --gauss or --braid");
  }
  spec.mn = mn;

  // Explicit labels override curated ones for named knots.
  if (f.class_label != "unknown" || !named) {
    const std::string& c = f.class_label;
    spec.torus_pq.reset();
    if (c == "trivial") {
      spec.class_label = KnotClass::Trivial;
    } else if (c == "hyperbolic") {
      spec.class_label = KnotClass::Hyperbolic;
    } else if (c == "satellite") {
      spec.class_label = KnotClass::Satellite;
    } else if (c == "composite") {
      spec.class_label = KnotClass::Composite;
    } else if (c == "unknown") {
      spec.class_label = KnotClass::Unknown;
    } else if (c.rfind("torus(", 0) == 0 && c.back() == ')') {
      const std::string inner = c.substr(6, c.size() - 7);
      const std::size_t comma = inner.find(',');
      if (comma == std::string::npos)
        throw ParseError("torus class must be written torus(p,q)");
      try {
        spec.torus_pq = {std::stoll(inner.substr(0, comma)), std::stoll(inner.substr(comma + 1))};
      } catch (const std::exception&) {
        throw ParseError("torus class must be written torus(p,q)");
      }
      spec.class_label = KnotClass::Torus;
    } else {
      throw ParseError("unknown class '" + c + "'");
    }
  }
  if (f.prime != "unknown" || !named) spec.prime = parse_tristate(f.prime);
  if (f.figure_eight) spec.figure_eight = true;
  if (f.suff_large != "unknown" || !named)
    spec.sufficiently_large = parse_tristate(f.suff_large);
  validate_spec(spec);
  return spec;
}

HomSearchOptions hom_options(int cap_flag) {
  HomSearchOptions opts;
  if (const char* env = std::getenv("BTSPIN_HOM_CAP")) {
    try {
      opts.max_group_order = std::stoi(env);
    } catch (const std::exception&) {
      throw ParseError("BTSPIN_HOM_CAP must be an integer");
    }
  }
  if (cap_flag > 0) opts.max_group_order = cap_flag;
  return opts;
}

int run(int argc, char** argv) {
  CLI::App app{"group-presentation and Alexander-type invariants of branched twist spins"};
  app.require_subcommand(1);
  std::string format = "text";

  // invariants
  auto* inv = app.add_subcommand("invariants", "invariant report for one branched twist spin");
  KnotSourceFlags inv_knot;
  std::string inv_mn;
  int inv_cap = 0;
  add_knot_flags(inv, inv_knot, "");
  inv->add_option("--mn", inv_mn, "twist parameters m/n")->required();
  inv->add_option("--format", format, "text|json");
  inv->add_option("--hom-cap", inv_cap, "max finite-group order for hom counting");

  // compare
  auto* cmp = app.add_subcommand("compare", "decide whether two branched twist spins differ");
  KnotSourceFlags cmp_knot1, cmp_knot2;
  std::string cmp_mn, cmp_mn2;
  int cmp_cap = 0;
  add_knot_flags(cmp, cmp_knot1, "1");
  add_knot_flags(cmp, cmp_knot2, "2");
  cmp->add_option("--mn", cmp_mn, "twist parameters m/n applied to both sides")->required();
  cmp->add_option("--mn2", cmp_mn2, "twist parameters for the second side when they differ");
  cmp->add_option("--format", format, "text|json");
  cmp->add_option("--hom-cap", cmp_cap, "max finite-group order for hom counting");

  // group
  auto* grp = app.add_subcommand("group", "print the twist-spin or orbifold group presentation");
  KnotSourceFlags grp_knot;
  std::string grp_mn;
  bool grp_orbifold = false;
  add_knot_flags(grp, grp_knot, "");
  grp->add_option("--mn", grp_mn, "twist parameters m/n")->required();
  grp->add_flag("--orbifold", grp_orbifold, "print the orbifold quotient instead");
  grp->add_option("--format", format, "text|json");

  // table
  auto* tab = app.add_subcommand("table", "torus-knot determinant table");
  long long pmax = 5, qmax = 7;
  tab->add_option("--pmax", pmax, "largest p")->required();
  tab->add_option("--qmax", qmax, "largest q")->required();
  tab->add_option("--format", format, "text|json");

  // homs
  auto* hom = app.add_subcommand("homs", "orbifold-group hom counts into finite groups");
  KnotSourceFlags hom_knot;
  std::string hom_mn, hom_group, hom_group_json;
  int hom_cap = 0;
  add_knot_flags(hom, hom_knot, "");
  hom->add_option("--mn", hom_mn, "twist parameters m/n")->required();
  hom->add_option("--group", hom_group, "count into one built-in group only");
  hom->add_option("--group-json", hom_group_json, "JSON file with a custom group table");
  hom->add_option("--hom-cap", hom_cap, "max finite-group order for hom counting");
  hom->add_option("--format", format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every flag problem is an input error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const bool json = format == "json";
  if (!json && format != "text") throw ParseError("format must be text or json");

  if (inv->parsed()) {
    const BtSpinSpec spec = build_spec(inv_knot, parse_mn(inv_mn));
    const InvariantReport r = invariant_report(spec, hom_options(inv_cap));
    std::cout << (json ? report_json(r) + "\n" : report_text(r));
    return 0;
  }

  if (cmp->parsed()) {
    const MNPair mn1 = parse_mn(cmp_mn);
    const MNPair mn2 = cmp_mn2.empty() ? mn1 : parse_mn(cmp_mn2);
    const BtSpinSpec a = build_spec(cmp_knot1, mn1);
    const BtSpinSpec b = build_spec(cmp_knot2, mn2);
    const Verdict v = decide(a, b, hom_options(cmp_cap));
    std::cout << (json ? verdict_json(v) + "\n" : verdict_text(v));
    return 0;
  }

  if (grp->parsed()) {
    const MNPair mn = parse_mn(grp_mn);
    const BtSpinSpec spec = build_spec(grp_knot, mn);
    const FinitePresentation wirt = wirtinger_presentation(spec.diagram);
    const FinitePresentation pres =
        grp_orbifold ? orbifold_group(wirt, mn.m) : btspin_group(wirt, mn);
    std::cout << (json ? presentation_json(pres) + "\n" : pres.to_text() + "\n");
    return 0;
  }

  if (tab->parsed()) {
    if (pmax < 2 || qmax < 2) throw ParseError("pmax and qmax must be >= 2");
    if (pmax > 64 || qmax > 64) throw ParseError("table range too large");
    if (json) {
      nlohmann::ordered_json j;
      j["pmax"] = pmax;
      j["qmax"] = qmax;
      auto& entries = j["entries"] = nlohmann::ordered_json::array();
      for (long long p = 2; p <= pmax; ++p)
        for (long long q = 2; q <= qmax; ++q) {
          if (std::gcd(p, q) != 1) continue;
          entries.push_back({{"p", p}, {"q", q}, {"determinant", torus_determinant(p, q)}});
        }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "p\\q";
      for (long long q = 2; q <= qmax; ++q) std::cout << '\t' << q;
      std::cout << '\n';
      for (long long p = 2; p <= pmax; ++p) {
        std::cout << p;
        for (long long q = 2; q <= qmax; ++q) {
          std::cout << '\t';
          if (std::gcd(p, q) != 1)
            std::cout << '.';
          else
            std::cout << torus_determinant(p, q);
        }
        std::cout << '\n';
      }
    }
    return 0;
  }

  if (hom->parsed()) {
    const MNPair mn = parse_mn(hom_mn);
    const BtSpinSpec spec = build_spec(hom_knot, mn);
    if (mn.m < 2) throw DomainError("hom counts use the orbifold group, which needs m >= 2");
    const HomSearchOptions opts = hom_options(hom_cap);
    const FinitePresentation orb =
        tietze_simplify(orbifold_group(wirtinger_presentation(spec.diagram), mn.m));

    std::vector<std::pair<std::string, long long>> counts;
    if (!hom_group_json.empty()) {
      std::ifstream in(hom_group_json);
      if (!in) throw ParseError("cannot open group JSON file " + hom_group_json);
      std::stringstream buffer;
      buffer << in.rdbuf();
      const FiniteGroupTable g = group_from_json_text(buffer.str());
      counts.emplace_back(g.name(), count_homs(orb, g, opts));
    } else if (!hom_group.empty()) {
      const FiniteGroupTable& g = find_builtin(hom_group);
      counts.emplace_back(g.name(), count_homs(orb, g, opts));
    } else {
      for (const FiniteGroupTable& g : builtin_groups()) {
        if (g.order() > opts.max_group_order) continue;
        counts.emplace_back(g.name(), count_homs(orb, g, opts));
      }
    }
    if (json) {
      nlohmann::ordered_json j;
      j["knot"] = spec.name;
      j["mn"] = mn.to_text();
      nlohmann::ordered_json c;
      for (const auto& [name, count] : counts) c[name] = count;
      j["counts"] = std::move(c);
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& [name, count] : counts) std::cout << name << ": " << count << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const btspin::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const btspin::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const btspin::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
