#include "btspin/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "btspin/checked.hpp"
#include "btspin/errors.hpp"

namespace btspin {

LaurentPoly LaurentPoly::monomial(int exponent, long long coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.coeffs_[exponent] = coefficient;
  return p;
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::lowest_exponent() const {
  if (is_zero()) throw DomainError("zero polynomial has no lowest exponent");
  return coeffs_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
  if (is_zero()) throw DomainError("zero polynomial has no highest exponent");
  return coeffs_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) {
    const long long sum = checked_add(coefficient(e), c);
    if (sum == 0)
      coeffs_.erase(e);
    else
      coeffs_[e] = sum;
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = checked_sub(0, c);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : rhs.coeffs_) {
      const int e = ea + eb;
      const long long sum = checked_add(out.coefficient(e), checked_mul(ca, cb));
      if (sum == 0)
        out.coeffs_.erase(e);
      else
        out.coeffs_[e] = sum;
    }
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e + by] = c;
  return out;
}

long long LaurentPoly::evaluate(long long x) const {
  if (is_zero()) return 0;
  const int lo = lowest_exponent();
  if (lo < 0 && x != 1 && x != -1)
    throw DomainError("cannot evaluate negative exponents at |x| != 1 exactly");
  long long value = 0;
  for (const auto& [e, c] : coeffs_) {
    long long term = c;
    const int steps = std::abs(e);
    for (int i = 0; i < steps; ++i) term = checked_mul(term, x);
    // For |x| = 1 the inverse power equals the positive one.
    value = checked_add(value, term);
  }
  return value;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return *this;
  LaurentPoly out = shifted(-lowest_exponent());
  if (out.coeffs_.rbegin()->second < 0) out = -out;
  return out;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
  return out;
}

long long LaurentPoly::content() const {
  long long g = 0;
  for (const auto& [e, c] : coeffs_) g = std::gcd(g, c);
  return g < 0 ? -g : g;
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return *this;
  const long long g = content();
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = c / g;
  return out;
}

std::string LaurentPoly::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    const long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) out << mag;
    if (e != 0) {
      out << 't';
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

std::string LaurentPoly::to_json() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << ',';
    first = false;
    out << '"' << e << "\":" << c;
  }
  out << '}';
  return out.str();
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return a;
  // Work in Z[t] after unit shifts, undo the shift at the end.
  const int sa = a.lowest_exponent();
  const int sb = b.lowest_exponent();
  LaurentPoly rem = a.shifted(-sa);
  const LaurentPoly div = b.shifted(-sb);
  const int db = div.highest_exponent();
  const long long lb = div.coefficient(db);
  LaurentPoly quotient;
  while (!rem.is_zero() && rem.highest_exponent() >= db) {
    const int e = rem.highest_exponent();
    const long long lc = rem.coefficient(e);
    if (lc % lb != 0) throw DomainError("polynomial division is not exact");
    const LaurentPoly term = LaurentPoly::monomial(e - db, lc / lb);
    quotient += term;
    rem -= term * div;
  }
  if (!rem.is_zero()) throw DomainError("polynomial division is not exact");
  return quotient.shifted(sa - sb);
}

namespace {

// Pseudo-remainder of a by b over Z[t] (both nonzero, deg a >= deg b).
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const int db = b.highest_exponent();
  const long long lb = b.coefficient(db);
  while (!a.is_zero() && a.highest_exponent() >= db) {
    const int e = a.highest_exponent();
    const long long la = a.coefficient(e);
    // a <- lb*a - la*t^{e-db}*b kills the leading term.
    LaurentPoly scaled;
    for (const auto& [ee, cc] : a.coefficients())
      scaled += LaurentPoly::monomial(ee, checked_mul(cc, lb));
    LaurentPoly sub;
    for (const auto& [ee, cc] : b.coefficients())
      sub += LaurentPoly::monomial(ee + e - db, checked_mul(cc, la));
    a = scaled - sub;
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  const long long content = std::gcd(a.content(), b.content());
  LaurentPoly x = a.primitive_part().shifted(-a.lowest_exponent());
  LaurentPoly y = b.primitive_part().shifted(-b.lowest_exponent());
  if (x.highest_exponent() < y.highest_exponent()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
    if (!y.is_zero()) y = y.shifted(-y.lowest_exponent());
  }
  LaurentPoly out;
  for (const auto& [e, c] : x.coefficients())
    out += LaurentPoly::monomial(e, checked_mul(c, content));
  return out.canonical();
}

long long resultant(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.lowest_exponent() < 0 || g.lowest_exponent() < 0)
    throw DomainError("resultant needs ordinary polynomials (no negative exponents)");
  const int df = f.highest_exponent();
  const int dg = g.highest_exponent();
  auto int_pow = [](long long base, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v = checked_mul(v, base);
    return v;
  };
  if (df == 0) return int_pow(f.coefficient(0), dg);
  if (dg == 0) return int_pow(g.coefficient(0), df);

  // Sylvester matrix, Bareiss fraction-free elimination.
  const int n = df + dg;
  std::vector<std::vector<long long>> s(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coefficient(df - k);
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k)
      s[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + k)] = g.coefficient(dg - k);

  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    const long long pivot = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const long long num =
            checked_sub(checked_mul(pivot, s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]),
                        checked_mul(s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                    s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
        s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;  // exact
      }
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
    }
    prev = pivot;
  }
  return checked_mul(sign, s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
}

LaurentPoly laurent_det_up_to_unit(std::vector<std::vector<LaurentPoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::one();
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw DomainError("determinant needs a square matrix");

  // Unit-rescale each row into Z[t]; this only changes the result by ±t^k.
  for (auto& row : m) {
    int lo = 0;
    for (const auto& e : row)
      if (!e.is_zero()) lo = std::min(lo, e.lowest_exponent());
    if (lo < 0)
      for (auto& e : row) e = e.shifted(-lo);
  }

  bool negate = false;
  LaurentPoly prev = LaurentPoly::one();
  for (int k = 0; k + 1 < n; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return LaurentPoly();
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
      negate = !negate;
    }
    const LaurentPoly pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = pivot * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                              m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = divide_exact(num, prev);
      }
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = LaurentPoly();
    }
    prev = pivot;
  }
  LaurentPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return negate ? -det : det;
}

}  // namespace btspin
