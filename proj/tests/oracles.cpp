#include "oracles.hpp"

#include <cassert>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

void set_coeff(Poly& p, int e, long long c) {
  if (c == 0)
    p.erase(e);
  else
    p[e] = c;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) set_coeff(out, ea + eb, out.count(ea + eb) ? out[ea + eb] + ca * cb : ca * cb);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) set_coeff(a, e, (a.count(e) ? a[e] : 0) - c);
  return a;
}

namespace {

Poly poly_add(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) set_coeff(a, e, (a.count(e) ? a[e] : 0) + c);
  return a;
}

}  // namespace

Poly poly_canonical(Poly p) {
  if (p.empty()) return p;
  const int lo = p.begin()->first;
  Poly shifted;
  for (const auto& [e, c] : p) shifted[e - lo] = c;
  if (shifted.rbegin()->second < 0) {
    for (auto& [e, c] : shifted) c = -c;
  }
  return shifted;
}

namespace {

using Mat = std::vector<std::vector<Poly>>;

Mat identity(int n) {
  Mat m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Poly{{0, 1}};
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly cell;
      for (int k = 0; k < n; ++k)
        cell = poly_add(std::move(cell),
                        poly_mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                 b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(cell);
    }
  return out;
}

// Unreduced Burau of sigma_i^{+-1} on s strands: identity except the 2x2
// block at rows/cols (i, i+1), which is [[1-t, t],[1, 0]] for the positive
// letter and its inverse [[0, 1],[t^-1, 1 - t^-1]] for the negative one.
Mat burau_letter(int letter, int s) {
  Mat m = identity(s);
  const int i = std::abs(letter) - 1;
  auto& a = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  auto& b = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)];
  auto& c = m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)];
  auto& d = m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i + 1)];
  if (letter > 0) {
    a = Poly{{0, 1}, {1, -1}};
    b = Poly{{1, 1}};
    c = Poly{{0, 1}};
    d = Poly{};
  } else {
    a = Poly{};
    b = Poly{{0, 1}};
    c = Poly{{-1, 1}};
    d = Poly{{0, 1}, {-1, -1}};
  }
  return m;
}

Poly laplace_det(const Mat& m, std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return Poly{{0, 1}};
  Poly det;
  const int r = rows.front();
  std::vector<int> rest_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& entry = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[k])];
    if (entry.empty()) continue;
    std::vector<int> rest_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest_cols.push_back(cols[j]);
    const Poly term = poly_mul(entry, laplace_det(m, rest_rows, rest_cols));
    det = (k % 2 == 0) ? poly_add(std::move(det), term) : poly_sub(std::move(det), term);
  }
  return det;
}

}  // namespace

Poly burau_alexander(const btspin::BraidWord& b) {
  const int s = b.strand_count;
  if (b.letters.empty()) return Poly{{0, 1}};
  Mat prod = identity(s);
  for (int letter : b.letters) prod = mat_mul(prod, burau_letter(letter, s));
  // M = I - Burau(b); any maximal minor of this Alexander-type matrix
  // generates the first elementary ideal, so drop row 0 and column 0.
  Mat m = identity(s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          poly_sub(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                   prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  std::vector<int> idx;
  for (int i = 1; i < s; ++i) idx.push_back(i);
  return poly_canonical(laplace_det(m, idx, idx));
}

long long burau_determinant(const btspin::BraidWord& b) {
  const Poly delta = burau_alexander(b);
  long long v = 0;
  for (const auto& [e, c] : delta) v += (e % 2 == 0) ? c : -c;
  return std::llabs(v);
}

Poly from_laurent(const btspin::LaurentPoly& p) {
  Poly out;
  for (const auto& [e, c] : p.coefficients()) out[e] = c;
  return out;
}

long long brute_force_hom_count(const btspin::FinitePresentation& p,
                                const btspin::FiniteGroupTable& g) {
  const int gens = p.generator_count();
  std::vector<int> image(static_cast<std::size_t>(gens), 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (const btspin::Word& r : p.relators) {
      int acc = g.identity();
      for (const btspin::Letter& l : r.letters()) {
        const int v = image[static_cast<std::size_t>(l.gen)];
        acc = g.mul(acc, l.exp == 1 ? v : g.inverse(v));
      }
      if (acc != g.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int d = gens - 1;
    while (d >= 0 && image[static_cast<std::size_t>(d)] == g.order() - 1) {
      image[static_cast<std::size_t>(d)] = 0;
      --d;
    }
    if (d < 0) break;
    ++image[static_cast<std::size_t>(d)];
  }
  return count;
}

long long numeric_h1_order(const btspin::LaurentPoly& delta, long long m) {
  std::complex<double> prod(1.0, 0.0);
  const double pi = std::acos(-1.0);
  for (long long k = 1; k < m; ++k) {
    const std::complex<double> zeta = std::polar(1.0, 2.0 * pi * static_cast<double>(k) / static_cast<double>(m));
    std::complex<double> value(0.0, 0.0);
    for (const auto& [e, c] : delta.coefficients())
      value += static_cast<double>(c) * std::pow(zeta, e);
    prod *= value;
  }
  const double magnitude = std::abs(prod);
  const long long rounded = std::llround(magnitude);
  if (std::abs(magnitude - static_cast<double>(rounded)) > 1e-6 * std::max(1.0, magnitude))
    throw std::runtime_error("numeric H1 oracle did not land on an integer");
  return rounded;
}

namespace {

long long int_gcd(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

long long int_minor(const std::vector<std::vector<long long>>& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  if (rows.empty()) return 1;
  long long det = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const long long entry = m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[k])];
    if (entry == 0) continue;
    std::vector<int> rest_rows(rows.begin() + 1, rows.end());
    std::vector<int> rest_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest_cols.push_back(cols[j]);
    const long long sub = int_minor(m, rest_rows, rest_cols);
    det += ((k % 2 == 0) ? 1 : -1) * entry * sub;
  }
  return det;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

bool smith_matches_minor_gcds(const std::vector<std::vector<long long>>& m,
                              const std::vector<long long>& diagonal) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  const int size = std::min(rows, cols);
  for (int k = 1; k <= size; ++k) {
    std::vector<std::vector<int>> row_sets, col_sets;
    combinations(rows, k, row_sets);
    combinations(cols, k, col_sets);
    long long gcd = 0;
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) gcd = int_gcd(gcd, int_minor(m, rs, cs));
    long long product = 1;
    for (int i = 0; i < k; ++i) product *= diagonal[static_cast<std::size_t>(i)];
    if (std::llabs(product) != gcd) return false;
  }
  return true;
}

}  // namespace oracle
