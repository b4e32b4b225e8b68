#include "btspin/knot.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "btspin/errors.hpp"

namespace btspin {
namespace {

// Slot roles inside a crossing while orienting a PD code.
enum class Role { Unknown, In, Out };

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Successor map (arc -> next arc along the knot) from explicit crossings.
// Every arc must occur exactly once as an incoming end and once as an
// outgoing end; violations mean the data is not a knot diagram.
std::map<int, int> successor_map(const std::vector<Crossing>& crossings) {
  std::map<int, int> succ;
  std::map<int, int> pred_count;
  auto add = [&](int from, int to) {
    if (!succ.emplace(from, to).second)
      throw ParseError("arc " + std::to_string(from) + " leaves two different crossings");
    if (++pred_count[to] > 1)
      throw ParseError("arc " + std::to_string(to) + " enters two different crossings");
  };
  for (const Crossing& c : crossings) {
    add(c.under_in, c.under_out);
    add(c.over_in, c.over_out);
  }
  return succ;
}

}  // namespace

KnotDiagram KnotDiagram::trivial(std::string name) {
  KnotDiagram d;
  d.name_ = std::move(name);
  return d;
}

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings, std::string name)
    : crossings_(std::move(crossings)), name_(std::move(name)) {
  if (crossings_.empty()) return;

  for (const Crossing& c : crossings_)
    if (c.sign != 1 && c.sign != -1) throw ParseError("crossing sign must be +1 or -1");

  const auto succ = successor_map(crossings_);
  const int n = crossing_count();
  if (static_cast<int>(succ.size()) != 2 * n)
    throw ParseError("diagram does not use exactly 2n arc labels");

  // Walk the knot from the lowest label; the traversal must close up after
  // visiting every arc, otherwise the input has several components.
  std::map<int, int> relabel;
  int current = succ.begin()->first;
  for (int step = 1; step <= 2 * n; ++step) {
    if (!relabel.emplace(current, step).second)
      throw ParseError("multi-component input: diagram closes up after " +
                       std::to_string(step - 1) + " of " + std::to_string(2 * n) + " arcs");
    auto it = succ.find(current);
    if (it == succ.end()) throw ParseError("arc " + std::to_string(current) + " has no successor");
    current = it->second;
  }
  if (current != succ.begin()->first)
    throw ParseError("inconsistent arc traversal");

  for (Crossing& c : crossings_) {
    c.under_in = relabel.at(c.under_in);
    c.under_out = relabel.at(c.under_out);
    c.over_in = relabel.at(c.over_in);
    c.over_out = relabel.at(c.over_out);
  }
  std::sort(crossings_.begin(), crossings_.end(),
            [](const Crossing& a, const Crossing& b) { return a.under_in < b.under_in; });
}

KnotDiagram parse_pd(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) return KnotDiagram::trivial();

  // Tokenize "X(a,b,c,d)" groups; both (...) and [...] delimiters parse.
  std::vector<std::array<int, 4>> tuples;
  std::size_t i = 0;
  auto skip_seps = [&] {
    while (i < body.size() &&
           (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
      ++i;
  };
  skip_seps();
  while (i < body.size()) {
    if (body[i] != 'X' && body[i] != 'x')
      throw ParseError("expected crossing tuple 'X(a,b,c,d)' at position " + std::to_string(i));
    ++i;
    if (i >= body.size() || (body[i] != '(' && body[i] != '['))
      throw ParseError("expected '(' after X");
    const char close = body[i] == '(' ? ')' : ']';
    ++i;
    std::array<int, 4> tuple{};
    int count = 0;
    while (true) {
      while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
        ++i;
      if (i < body.size() && body[i] == close) {
        ++i;
        break;
      }
      if (i >= body.size()) throw ParseError("unterminated crossing tuple");
      if (!std::isdigit(static_cast<unsigned char>(body[i])))
        throw ParseError("arc labels must be positive integers");
      long v = 0;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
        v = v * 10 + (body[i] - '0');
        if (v > 1000000) throw ParseError("arc label too large");
        ++i;
      }
      if (v <= 0) throw ParseError("arc labels must be positive integers");
      if (count >= 4) throw ParseError("crossing tuple has more than 4 entries");
      tuple[static_cast<std::size_t>(count++)] = static_cast<int>(v);
    }
    if (count != 4)
      throw ParseError("crossing tuple has " + std::to_string(count) + " entries, expected 4");
    tuples.push_back(tuple);
    skip_seps();
  }

  // Each arc label must appear exactly twice across all tuples.
  std::map<int, std::vector<std::pair<int, int>>> occurrences;  // label -> (tuple, slot)
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t)
    for (int s = 0; s < 4; ++s)
      occurrences[tuples[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)]].emplace_back(t, s);
  for (const auto& [label, occ] : occurrences)
    if (occ.size() != 2)
      throw ParseError("arc label " + std::to_string(label) + " appears " +
                       std::to_string(occ.size()) + " times (expected 2)");

  // Orient the over-strands. Slot 0 is the incoming under arc and slot 2 the
  // outgoing one; each label is incoming at exactly one of its two slots, so
  // the roles of the over slots (1 and 3) propagate to a fixpoint.
  std::vector<std::array<Role, 4>> roles(tuples.size(), {Role::Unknown, Role::Unknown, Role::Unknown, Role::Unknown});
  std::vector<std::pair<int, int>> worklist;
  auto assign = [&](int t, int s, Role r) {
    Role& cur = roles[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
    if (cur == r) return;
    if (cur != Role::Unknown)
      throw ParseError("inconsistent strand orientation around arc " +
                       std::to_string(tuples[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)]));
    cur = r;
    worklist.emplace_back(t, s);
  };
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
    assign(t, 0, Role::In);
    assign(t, 2, Role::Out);
  }
  while (!worklist.empty()) {
    auto [t, s] = worklist.back();
    worklist.pop_back();
    const Role r = roles[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
    const Role opposite = (r == Role::In) ? Role::Out : Role::In;
    // The other occurrence of this label plays the opposite role.
    const int label = tuples[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
    for (const auto& [ot, os] : occurrences.at(label))
      if (ot != t || os != s) assign(ot, os, opposite);
    // Inside one crossing the two over slots are an in/out pair.
    if (s == 1) assign(t, 3, opposite);
    if (s == 3) assign(t, 1, opposite);
  }

  std::vector<Crossing> crossings;
  crossings.reserve(tuples.size());
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
    const auto& tp = tuples[static_cast<std::size_t>(t)];
    const Role rb = roles[static_cast<std::size_t>(t)][1];
    const Role rd = roles[static_cast<std::size_t>(t)][3];
    if (rb == Role::Unknown || rd == Role::Unknown)
      throw ParseError("multi-component input: over-strand through arcs " +
                       std::to_string(tp[1]) + "," + std::to_string(tp[3]) +
                       " belongs to a closed component without under-passages");
    Crossing c;
    c.under_in = tp[0];
    c.under_out = tp[2];
    if (rd == Role::In && rb == Role::Out) {
      c.over_in = tp[3];
      c.over_out = tp[1];
      c.sign = 1;
    } else if (rb == Role::In && rd == Role::Out) {
      c.over_in = tp[1];
      c.over_out = tp[3];
      c.sign = -1;
    } else {
      throw ParseError("inconsistent over-strand orientation in crossing " + std::to_string(t + 1));
    }
    crossings.push_back(c);
  }

  return KnotDiagram(std::move(crossings));
}

std::string emit_pd(const KnotDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const Crossing& c : d.crossings()) {
    if (!first) out << ',';
    first = false;
    const int b = c.sign > 0 ? c.over_out : c.over_in;
    const int dd = c.sign > 0 ? c.over_in : c.over_out;
    out << "X(" << c.under_in << ',' << b << ',' << c.under_out << ',' << dd << ')';
  }
  return out.str();
}

KnotDiagram parse_gauss(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) return KnotDiagram::trivial();

  struct Token {
    bool over = false;
    int id = 0;
    int sign = 0;
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() &&
           (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
      ++i;
    if (i >= body.size()) break;
    Token tok;
    const char kind = body[i];
    if (kind == 'O' || kind == 'o')
      tok.over = true;
    else if (kind == 'U' || kind == 'u')
      tok.over = false;
    else
      throw ParseError("Gauss token must start with O or U");
    ++i;
    if (i >= body.size() || !std::isdigit(static_cast<unsigned char>(body[i])))
      throw ParseError("Gauss token needs a crossing number");
    long v = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      v = v * 10 + (body[i] - '0');
      if (v > 1000000) throw ParseError("crossing number too large");
      ++i;
    }
    tok.id = static_cast<int>(v);
    if (i >= body.size() || (body[i] != '+' && body[i] != '-'))
      throw ParseError("Gauss token needs a trailing sign (+ or -)");
    tok.sign = body[i] == '+' ? 1 : -1;
    ++i;
    tokens.push_back(tok);
  }

  if (tokens.size() % 2 != 0) throw ParseError("odd number of Gauss tokens");
  const int n = static_cast<int>(tokens.size()) / 2;

  struct Passages {
    int over_at = -1;
    int under_at = -1;
    int sign = 0;
  };
  std::map<int, Passages> byid;
  for (int t = 0; t < static_cast<int>(tokens.size()); ++t) {
    Passages& p = byid[tokens[static_cast<std::size_t>(t)].id];
    int& slot = tokens[static_cast<std::size_t>(t)].over ? p.over_at : p.under_at;
    if (slot != -1)
      throw ParseError("crossing " + std::to_string(tokens[static_cast<std::size_t>(t)].id) +
                       " passed in the same way twice");
    slot = t;
    if (p.sign == 0)
      p.sign = tokens[static_cast<std::size_t>(t)].sign;
    else if (p.sign != tokens[static_cast<std::size_t>(t)].sign)
      throw ParseError("crossing " + std::to_string(tokens[static_cast<std::size_t>(t)].id) +
                       " has conflicting signs");
  }
  for (const auto& [id, p] : byid)
    if (p.over_at == -1 || p.under_at == -1)
      throw ParseError("crossing " + std::to_string(id) + " needs one O and one U passage");

  // Token i is the passage at the end of arc i+1; the next arc starts there.
  std::vector<Crossing> crossings;
  crossings.reserve(static_cast<std::size_t>(n));
  auto arc_in = [&](int token_index) { return token_index + 1; };
  auto arc_out = [&](int token_index) { return (token_index + 1) % (2 * n) + 1; };
  for (const auto& [id, p] : byid) {
    Crossing c;
    c.under_in = arc_in(p.under_at);
    c.under_out = arc_out(p.under_at);
    c.over_in = arc_in(p.over_at);
    c.over_out = arc_out(p.over_at);
    c.sign = p.sign;
    crossings.push_back(c);
  }
  return KnotDiagram(std::move(crossings));
}

std::string emit_gauss(const KnotDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (int arc = 1; arc <= d.arc_count(); ++arc) {
    // Find the passage that ends this arc.
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
      const Crossing& c = d.crossings()[static_cast<std::size_t>(ci)];
      const bool under = c.under_in == arc;
      const bool over = c.over_in == arc;
      if (!under && !over) continue;
      if (!first) out << ',';
      first = false;
      out << (over ? 'O' : 'U') << (ci + 1) << (c.sign > 0 ? '+' : '-');
    }
  }
  return out.str();
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> perm(static_cast<std::size_t>(strand_count));
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : letters) {
    const int p = std::abs(letter) - 1;
    std::swap(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(p + 1)]);
  }
  return perm;
}

bool BraidWord::closure_is_knot() const {
  const auto perm = permutation();
  int seen = 1;
  int at = perm[0];
  while (at != 0) {
    at = perm[static_cast<std::size_t>(at)];
    ++seen;
  }
  return seen == strand_count;
}

namespace {

void validate_braid(const BraidWord& b) {
  if (b.strand_count < 1) throw DomainError("braid needs at least one strand");
  for (int letter : b.letters) {
    if (letter == 0 || std::abs(letter) >= b.strand_count)
      throw DomainError("braid generator index " + std::to_string(letter) +
                        " out of range for " + std::to_string(b.strand_count) + " strands");
  }
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strand_count) {
  BraidWord b;
  b.strand_count = strand_count;
  const std::string_view body = trim(text);
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() &&
           (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
      ++i;
    if (i >= body.size()) break;
    int sign = 1;
    if (body[i] == '-') {
      sign = -1;
      ++i;
    } else if (body[i] == '+') {
      ++i;
    }
    if (i >= body.size() || !std::isdigit(static_cast<unsigned char>(body[i])))
      throw ParseError("braid letters must be nonzero integers");
    long v = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      v = v * 10 + (body[i] - '0');
      if (v > 1000000) throw ParseError("braid letter too large");
      ++i;
    }
    if (v == 0) throw ParseError("braid letters must be nonzero");
    b.letters.push_back(sign * static_cast<int>(v));
  }
  validate_braid(b);
  if (!b.closure_is_knot())
    throw DomainError("braid closure is a link with more than one component");
  return b;
}

BraidWord torus_braid(long long p, long long q) {
  if (p < 2 || q < 2) throw DomainError("torus braid needs p, q >= 2");
  if (std::gcd(p, q) != 1)
    throw DomainError("torus braid needs coprime p, q; gcd is " +
                      std::to_string(std::gcd(p, q)));
  if (p > 64 || q > 4096) throw ResourceError("torus braid parameters too large");
  BraidWord b;
  b.strand_count = static_cast<int>(p);
  for (long long rep = 0; rep < q; ++rep)
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  return b;
}

KnotDiagram braid_to_diagram(const BraidWord& b) {
  validate_braid(b);
  if (!b.closure_is_knot())
    throw DomainError("braid closure is a link with more than one component");
  const int c = static_cast<int>(b.letters.size());
  if (c == 0) return KnotDiagram::trivial();

  // Walk the closed-up braid from the top of position 1, numbering arcs
  // consecutively; each letter contributes one over and one under passage.
  struct Passage {
    int in = 0, out = 0;
    bool seen = false;
  };
  std::vector<Passage> over(static_cast<std::size_t>(c)), under(static_cast<std::size_t>(c));

  int pos = 1;
  int letter_index = 0;
  int arc = 1;
  int passages = 0;
  while (passages < 2 * c) {
    bool advanced = false;
    for (int k = letter_index; k < c; ++k) {
      const int p = std::abs(b.letters[static_cast<std::size_t>(k)]);
      if (pos != p && pos != p + 1) continue;
      // sigma_i takes the strand entering at position i over the one at i+1;
      // a negative letter swaps the roles.
      const bool positive = b.letters[static_cast<std::size_t>(k)] > 0;
      const bool is_over = (pos == p) == positive;
      Passage& slot = is_over ? over[static_cast<std::size_t>(k)] : under[static_cast<std::size_t>(k)];
      if (slot.seen) throw DomainError("braid walk revisited a passage");
      slot.seen = true;
      slot.in = arc;
      slot.out = arc % (2 * c) + 1;
      arc = slot.out;
      ++passages;
      pos = (pos == p) ? p + 1 : p;
      letter_index = k + 1;
      advanced = true;
      break;
    }
    if (!advanced) letter_index = 0;  // fell off the bottom: close up to the top
  }

  std::vector<Crossing> crossings;
  crossings.reserve(static_cast<std::size_t>(c));
  for (int k = 0; k < c; ++k) {
    if (!over[static_cast<std::size_t>(k)].seen || !under[static_cast<std::size_t>(k)].seen)
      throw DomainError("braid walk missed a crossing passage");
    Crossing cr;
    cr.under_in = under[static_cast<std::size_t>(k)].in;
    cr.under_out = under[static_cast<std::size_t>(k)].out;
    cr.over_in = over[static_cast<std::size_t>(k)].in;
    cr.over_out = over[static_cast<std::size_t>(k)].out;
    cr.sign = b.letters[static_cast<std::size_t>(k)] > 0 ? 1 : -1;
    crossings.push_back(cr);
  }
  return KnotDiagram(std::move(crossings));
}

std::optional<KnotDiagram> named_diagram(std::string_view name) {
  const std::string key = lower(trim(name));
  if (key == "unknot") return KnotDiagram::trivial("unknot");
  if (key == "trefoil" || key == "3_1") {
    KnotDiagram d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
    d.set_name("trefoil");
    return d;
  }
  if (key == "figure8" || key == "figure-eight" || key == "4_1") {
    KnotDiagram d = parse_pd("X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)");
    d.set_name("figure8");
    return d;
  }
  // "T(p,q)" torus knots via the braid closure.
  if (key.size() >= 6 && key[0] == 't' && key[1] == '(' && key.back() == ')') {
    const std::string inner = key.substr(2, key.size() - 3);
    const std::size_t comma = inner.find(',');
    if (comma == std::string::npos) return std::nullopt;
    long long p = 0, q = 0;
    try {
      p = std::stoll(inner.substr(0, comma));
      q = std::stoll(inner.substr(comma + 1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    KnotDiagram d = braid_to_diagram(torus_braid(p, q));
    d.set_name("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
    return d;
  }
  return std::nullopt;
}

}  // namespace btspin
