#include "btspin/group_model.hpp"

#include <numeric>

#include "btspin/errors.hpp"
#include "btspin/wirtinger.hpp"

namespace btspin {

std::string MNPair::to_text() const {
  return std::to_string(m) + "/" + std::to_string(n);
}

MNPair normalize_mn(long long m, long long n) {
  if (m < 0)
    throw DomainError("negative m rejected: reverse the ambient orientation instead");
  if (n < 1) throw DomainError("n must be >= 1");
  if (std::gcd(m, n) != 1)
    throw DomainError("(m,n) must be coprime; gcd is " + std::to_string(std::gcd(m, n)));
  if (m == 0) return MNPair{0, 1};  // coprimality forces n = 1
  if (m == 1) {
    if (n != 1)
      throw DomainError("(1,n) with n != 1 has no canonical form here; use (1,1)");
    return MNPair{1, 1};
  }
  // K^{m,n} and K^{m,n+2m} agree, so reduce n into [1, 2m-1]. Coprimality
  // keeps the residue nonzero.
  return MNPair{m, n % (2 * m)};
}

long long beta(long long m, long long n) {
  if (m < 2) throw DomainError("beta needs m >= 2");
  if (std::gcd(m, n) != 1) throw DomainError("beta needs coprime (m,n)");
  // Least positive solution of n*beta == 1 (mod m) by extended Euclid.
  long long r0 = m, r1 = ((n % m) + m) % m;
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  return ((t0 % m) + m) % m;
}

namespace {

constexpr long long kMaxTwistOrder = 100000;  // relator length x1^m stays sane

void require_canonical(const MNPair& mn) {
  const MNPair canon = normalize_mn(mn.m, mn.n);
  if (!(canon == mn))
    throw DomainError("(m,n) = " + mn.to_text() + " is not canonical; use " + canon.to_text());
}

}  // namespace

FinitePresentation btspin_group(const FinitePresentation& wirtinger, const MNPair& mn) {
  wirtinger.validate();
  require_canonical(mn);
  if (mn.m < 2)
    throw DomainError(
        "twist-spin presentation needs m >= 2: for (0,1) the group is the "
        "knot group itself and for (1,1) the 2-knot is trivial");
  if (mn.m > kMaxTwistOrder) throw ResourceError("m too large");

  FinitePresentation p = wirtinger;
  const int h = p.generator_count();
  p.generator_names.push_back("h");
  for (int i = 0; i < h; ++i)
    p.relators.push_back(
        Word({Letter{i, 1}, Letter{h, 1}, Letter{i, -1}, Letter{h, -1}}));
  const long long b = beta(mn.m, mn.n);
  p.relators.push_back(Word::power(0, static_cast<int>(mn.m)) *
                       Word::power(h, static_cast<int>(b)));
  p.validate();
  return p;
}

FinitePresentation orbifold_group(const FinitePresentation& wirtinger, long long m) {
  wirtinger.validate();
  if (m < 2) throw DomainError("orbifold group needs m >= 2");
  if (m > kMaxTwistOrder) throw ResourceError("m too large");
  FinitePresentation p = wirtinger;
  p.relators.push_back(Word::power(0, static_cast<int>(m)));
  p.validate();
  return p;
}

FinitePresentation torus_group(long long p, long long q) {
  if (p < 2 || q < 2) throw DomainError("torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus knot needs coprime p, q");
  if (p > kMaxTwistOrder || q > kMaxTwistOrder) throw ResourceError("p or q too large");
  FinitePresentation pres;
  pres.generator_names = {"mu", "lambda"};
  pres.relators.push_back(Word::power(0, static_cast<int>(p)) *
                          Word::power(1, static_cast<int>(-q)));
  pres.validate();
  return pres;
}

std::string knot_class_text(KnotClass c) {
  switch (c) {
    case KnotClass::Trivial: return "trivial";
    case KnotClass::Torus: return "torus";
    case KnotClass::Hyperbolic: return "hyperbolic";
    case KnotClass::Satellite: return "satellite";
    case KnotClass::Composite: return "composite";
    case KnotClass::Unknown: return "unknown";
  }
  return "unknown";
}

std::string tri_state_text(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

TriState BtSpinSpec::effective_prime() const {
  if (class_label == KnotClass::Torus || class_label == KnotClass::Hyperbolic)
    return TriState::Yes;
  if (class_label == KnotClass::Composite) return TriState::No;
  return prime;
}

TriState BtSpinSpec::effective_sufficiently_large() const {
  if (class_label == KnotClass::Satellite) return TriState::Yes;
  return sufficiently_large;
}

void validate_spec(const BtSpinSpec& spec) {
  require_canonical(spec.mn);

  if ((spec.class_label == KnotClass::Torus) != spec.torus_pq.has_value())
    throw DomainError("torus parameters (p,q) must be given exactly for the torus label");
  if (spec.torus_pq) {
    const auto [p, q] = *spec.torus_pq;
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
      throw DomainError("torus label needs coprime p, q >= 2");
  }

  switch (spec.class_label) {
    case KnotClass::Torus:
    case KnotClass::Hyperbolic:
      if (spec.prime == TriState::No)
        throw DomainError("contradictory labels: torus and hyperbolic knots are prime");
      break;
    case KnotClass::Composite:
      if (spec.prime == TriState::Yes)
        throw DomainError("contradictory labels: composite knots are not prime");
      break;
    default:
      break;
  }

  if (spec.figure_eight) {
    if (spec.class_label != KnotClass::Hyperbolic && spec.class_label != KnotClass::Unknown)
      throw DomainError("contradictory labels: the figure-eight knot is hyperbolic");
    if (spec.prime == TriState::No)
      throw DomainError("contradictory labels: the figure-eight knot is prime");
  }

  const bool provably_trivial =
      spec.diagram.crossing_count() == 0 ||
      [&] {
        const FinitePresentation simplified = tietze_simplify(wirtinger_presentation(spec.diagram));
        return simplified.generator_count() == 1 && simplified.relator_count() == 0;
      }();
  if (spec.class_label == KnotClass::Trivial && !provably_trivial)
    throw DomainError(
        "class 'trivial' requires a diagram whose Wirtinger presentation "
        "simplifies to <x | >");
  if (spec.class_label != KnotClass::Trivial && spec.class_label != KnotClass::Unknown &&
      provably_trivial)
    throw DomainError("contradictory labels: the diagram is provably trivial");
}

BtSpinSpec named_spec(std::string_view name, const MNPair& mn) {
  auto diagram = named_diagram(name);
  if (!diagram) throw ParseError("unknown knot name '" + std::string(name) + "'");

  BtSpinSpec spec;
  spec.diagram = *diagram;
  spec.mn = normalize_mn(mn.m, mn.n);
  spec.name = diagram->name();

  const std::string& key = spec.name;
  if (key == "unknot") {
    spec.class_label = KnotClass::Trivial;
    spec.prime = TriState::No;
    spec.sufficiently_large = TriState::No;
  } else if (key == "trefoil") {
    spec.class_label = KnotClass::Torus;
    spec.torus_pq = {2, 3};
  } else if (key == "figure8") {
    spec.class_label = KnotClass::Hyperbolic;
    spec.figure_eight = true;
  } else if (key.size() > 2 && key[0] == 'T' && key[1] == '(') {
    const std::size_t comma = key.find(',');
    const long long p = std::stoll(key.substr(2, comma - 2));
    const long long q = std::stoll(key.substr(comma + 1, key.size() - comma - 2));
    spec.class_label = KnotClass::Torus;
    spec.torus_pq = {p, q};
  }
  validate_spec(spec);
  return spec;
}

}  // namespace btspin
