#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btspin {

/*
 * Diagram model.
 *
 * Arcs are the segments between consecutive crossing passages, numbered
 * 1..2n for an n-crossing diagram in traversal order along the knot's
 * orientation. Each crossing records the incoming/outgoing arc of the
 * under-strand and of the over-strand plus the crossing sign.
 *
 * The PD text form is the usual one: X(a,b,c,d) lists the four arcs
 * counterclockwise starting from the incoming under-strand arc a, so c is
 * the outgoing under-strand arc and {b,d} is the over-strand. The sign is
 * +1 when the over-strand enters at d and -1 when it enters at b.
 */
struct Crossing {
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class KnotDiagram {
 public:
  // Default-constructed diagrams are the 0-crossing unknot.
  KnotDiagram() = default;

  static KnotDiagram trivial(std::string name = {});

  // Validates, renumbers arcs canonically (1..2n in traversal order from the
  // lowest input label) and sorts crossings by incoming under-strand arc.
  // Throws ParseError if the data is not a single-component knot diagram.
  explicit KnotDiagram(std::vector<Crossing> crossings, std::string name = {});

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) {
    return a.crossings_ == b.crossings_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::string name_;
};

// PD codes: "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)". The empty string denotes the
// trivial diagram. Errors: malformed tuples, an arc label not appearing
// exactly twice, inconsistent strand orientation, multi-component input.
KnotDiagram parse_pd(std::string_view text);
std::string emit_pd(const KnotDiagram& d);

// Signed Gauss codes: "O1-,U2-,O3-,U1-,O2-,U3-". Each crossing id must occur
// once as O and once as U with matching signs.
KnotDiagram parse_gauss(std::string_view text);
std::string emit_gauss(const KnotDiagram& d);

// Braid word on `strand_count` strands; letters are signed generator indices
// i (for sigma_i) with 1 <= |i| < strand_count.
struct BraidWord {
  int strand_count = 1;
  std::vector<int> letters;

  // Permutation of {0..s-1} induced by the word (top to bottom).
  std::vector<int> permutation() const;
  bool closure_is_knot() const;  // the permutation is a single s-cycle
};

// "1,-2,1,-2" with strands=3. Errors: indices out of range, closure with
// more than one component.
BraidWord parse_braid(std::string_view text, int strand_count);

// (sigma_1 ... sigma_{p-1})^q on p strands; requires coprime p,q >= 2.
BraidWord torus_braid(long long p, long long q);

// Diagram of the braid closure; one crossing per letter.
KnotDiagram braid_to_diagram(const BraidWord& b);

// Built-in table: "unknot", "trefoil"/"3_1", "figure8"/"4_1", "T(p,q)".
// Returns nothing when the name is not recognized.
std::optional<KnotDiagram> named_diagram(std::string_view name);

}  // namespace btspin
