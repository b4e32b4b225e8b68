#pragma once

#include <map>
#include <string>
#include <vector>

namespace btspin {

// Integer Laurent polynomial in one variable t. No zero coefficients are
// stored; the zero polynomial is the empty map. All arithmetic is exact
// (checked 64-bit, overflow raises ResourceError).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long coefficient);
  static LaurentPoly constant(long long c) { return monomial(0, c); }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, long long>& coefficients() const { return coeffs_; }
  long long coefficient(int exponent) const;
  int lowest_exponent() const;   // requires nonzero
  int highest_exponent() const;  // requires nonzero

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  LaurentPoly shifted(int by) const;  // multiply by t^by

  long long evaluate(long long x) const;  // exact, checked

  // Normal form for comparison up to units ±t^k: lowest exponent shifted to
  // 0 and the leading (highest-degree) coefficient made positive.
  LaurentPoly canonical() const;

  // Mirror image under t -> 1/t.
  LaurentPoly reversed() const;

  long long content() const;       // gcd of coefficients, >= 0
  LaurentPoly primitive_part() const;

  std::string to_text() const;  // "t^2 - t + 1", "0", "t^-1 + 1"
  std::string to_json() const;  // {"0":1,"1":-1,"2":1}

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, long long> coeffs_;
};

// Exact quotient a / b; throws DomainError when b is zero or the division
// leaves a remainder.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Gcd over Z[t, t^-1] in canonical form (content times primitive part).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Resultant of two ordinary polynomials (lowest exponents must be >= 0),
// computed exactly as a Sylvester determinant.
long long resultant(const LaurentPoly& f, const LaurentPoly& g);

// Determinant of a square matrix of Laurent polynomials by fraction-free
// elimination, exact up to a unit ±t^k (rows are unit-rescaled into Z[t]).
LaurentPoly laurent_det_up_to_unit(std::vector<std::vector<LaurentPoly>> m);

}  // namespace btspin
