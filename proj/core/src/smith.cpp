#include "btspin/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "btspin/checked.hpp"
#include "btspin/errors.hpp"

namespace btspin {

std::vector<long long> SmithForm::nontrivial_factors() const {
  std::vector<long long> out;
  for (long long d : diagonal)
    if (d != 1) out.push_back(d);
  return out;
}

namespace {

using Matrix = std::vector<std::vector<long long>>;

bool find_pivot(const Matrix& m, int s, int& pi, int& pj) {
  long long best = 0;
  pi = pj = -1;
  for (int i = s; i < static_cast<int>(m.size()); ++i)
    for (int j = s; j < static_cast<int>(m[0].size()); ++j) {
      const long long v = std::llabs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (v != 0 && (best == 0 || v < best)) {
        best = v;
        pi = i;
        pj = j;
      }
    }
  return pi >= 0;
}

void add_row(Matrix& m, int dst, int src, long long factor) {
  for (std::size_t j = 0; j < m[0].size(); ++j)
    m[static_cast<std::size_t>(dst)][j] =
        checked_add(m[static_cast<std::size_t>(dst)][j],
                    checked_mul(factor, m[static_cast<std::size_t>(src)][j]));
}

void add_col(Matrix& m, int dst, int src, long long factor) {
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i][static_cast<std::size_t>(dst)] =
        checked_add(m[i][static_cast<std::size_t>(dst)],
                    checked_mul(factor, m[i][static_cast<std::size_t>(src)]));
}

}  // namespace

std::vector<long long> smith_normal_form(Matrix m) {
  if (m.empty() || m[0].empty()) return {};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw DomainError("ragged matrix");
  const int steps = std::min(rows, cols);

  for (int s = 0; s < steps; ++s) {
    int pi, pj;
    if (!find_pivot(m, s, pi, pj)) break;  // all-zero tail: trailing zeros
    std::swap(m[static_cast<std::size_t>(s)], m[static_cast<std::size_t>(pi)]);
    for (auto& row : m) std::swap(row[static_cast<std::size_t>(s)], row[static_cast<std::size_t>(pj)]);

    // Kill the rest of row/column s; the pivot shrinks until it divides
    // everything it meets, so this terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = s + 1; i < rows; ++i) {
        const long long v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        if (v == 0) continue;
        const long long q = v / m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
        add_row(m, i, s, -q);
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] != 0) {
          std::swap(m[static_cast<std::size_t>(s)], m[static_cast<std::size_t>(i)]);
          clean = false;
        }
      }
      for (int j = s + 1; j < cols; ++j) {
        const long long v = m[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
        if (v == 0) continue;
        const long long q = v / m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
        add_col(m, j, s, -q);
        if (m[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] != 0) {
          for (auto& row : m) std::swap(row[static_cast<std::size_t>(s)], row[static_cast<std::size_t>(j)]);
          clean = false;
        }
      }
    }

    // Divisibility: fold any entry the pivot does not divide into column s.
    for (int i = s + 1; i < rows && m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] != 0; ++i)
      for (int j = s + 1; j < cols; ++j)
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] %
                m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] !=
            0) {
          add_row(m, s, i, 1);
          // Redo this step with the enlarged row.
          --s;
          i = rows;
          break;
        }
  }

  std::vector<long long> diag;
  for (int s = 0; s < steps; ++s) {
    long long d = m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
    diag.push_back(d < 0 ? -d : d);
  }
  // Zeros trail by construction; normalize the (rare) interleavings anyway.
  std::stable_partition(diag.begin(), diag.end(), [](long long d) { return d != 0; });
  return diag;
}

SmithForm abelianization(const FinitePresentation& p) {
  p.validate();
  const int gens = p.generator_count();
  Matrix m;
  for (const Word& r : p.relators) {
    std::vector<long long> row(static_cast<std::size_t>(gens), 0);
    for (int g = 0; g < gens; ++g) row[static_cast<std::size_t>(g)] = r.exponent_sum(g);
    m.push_back(std::move(row));
  }
  std::vector<long long> diag = p.relators.empty() ? std::vector<long long>{} : smith_normal_form(std::move(m));
  diag.resize(static_cast<std::size_t>(gens), 0);  // free factors
  return SmithForm{std::move(diag)};
}

std::string describe_abelian(const SmithForm& s) {
  std::string out;
  for (long long d : s.nontrivial_factors()) {
    if (!out.empty()) out += " + ";
    out += (d == 0) ? "Z" : ("Z/" + std::to_string(d));
  }
  return out.empty() ? "1" : out;
}

}  // namespace btspin
