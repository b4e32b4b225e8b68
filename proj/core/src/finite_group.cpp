#include "btspin/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "btspin/errors.hpp"
#include "json.hpp"

namespace btspin {

FiniteGroupTable FiniteGroupTable::from_mul(std::string name, int order, std::vector<int> mul) {
  if (order < 1) throw ParseError("group order must be positive");
  if (static_cast<int>(mul.size()) != order * order)
    throw ParseError("multiplication table must have order^2 entries");
  for (int v : mul)
    if (v < 0 || v >= order) throw ParseError("table entry out of range");

  FiniteGroupTable g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.mul_ = std::move(mul);

  // Two-sided identity.
  g.identity_ = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  if (g.identity_ < 0) throw ParseError("table has no identity element");

  // Two-sided inverses.
  g.inverse_.assign(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (g.inverse_[static_cast<std::size_t>(a)] < 0)
      throw ParseError("element " + std::to_string(a) + " has no inverse");
  }

  // Full associativity check; the tables used here are small.
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ParseError("multiplication table is not associative");

  return g;
}

int FiniteGroupTable::element_order(int a) const {
  int n = 1;
  int x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::vector<std::vector<int>> FiniteGroupTable::conjugacy_classes() const {
  std::vector<bool> seen(static_cast<std::size_t>(order_), false);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < order_; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::set<int> cls;
    for (int g = 0; g < order_; ++g) cls.insert(mul(mul(g, a), inverse(g)));
    std::vector<int> sorted(cls.begin(), cls.end());
    for (int x : sorted) seen[static_cast<std::size_t>(x)] = true;
    classes.push_back(std::move(sorted));
  }
  return classes;
}

namespace {

FiniteGroupTable cyclic(int k) {
  std::vector<int> mul(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) mul[static_cast<std::size_t>(a) * k + b] = (a + b) % k;
  return FiniteGroupTable::from_mul("Z/" + std::to_string(k), k, std::move(mul));
}

// Dihedral group of order 2k: rotations r^i are 0..k-1, reflections r^i s
// are k..2k-1.
FiniteGroupTable dihedral(int k) {
  const int n = 2 * k;
  auto idx = [&](int i, int j) { return j == 0 ? i : k + i; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i1 = 0; i1 < k; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < k; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          const int i = ((j1 == 0 ? i1 + i2 : i1 - i2) % k + k) % k;
          const int j = (j1 + j2) % 2;
          mul[static_cast<std::size_t>(idx(i1, j1)) * n + idx(i2, j2)] = idx(i, j);
        }
  return FiniteGroupTable::from_mul("D" + std::to_string(k), n, std::move(mul));
}

FiniteGroupTable symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> q{};
      for (int x = 0; x < 3; ++x)
        q[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      mul[static_cast<std::size_t>(a) * n + b] = find(q);
    }
  return FiniteGroupTable::from_mul("S3", n, std::move(mul));
}

FiniteGroupTable alternating4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (const auto& q : all) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (q[static_cast<std::size_t>(i)] > q[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(q);
  }
  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::array<int, 4>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 4> q{};
      for (int x = 0; x < 4; ++x)
        q[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      mul[static_cast<std::size_t>(a) * n + b] = find(q);
    }
  return FiniteGroupTable::from_mul("A4", n, std::move(mul));
}

// Quaternion units as integer 4-vectors (w,x,y,z) with a single ±1 entry.
FiniteGroupTable quaternion8() {
  using Quat = std::array<int, 4>;
  auto qmul = [](const Quat& a, const Quat& b) {
    return Quat{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  };
  std::vector<Quat> elems;
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) {
      Quat q{0, 0, 0, 0};
      q[static_cast<std::size_t>(axis)] = sign;
      elems.push_back(q);
    }
  const int n = static_cast<int>(elems.size());
  auto find = [&](const Quat& q) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), q) - elems.begin());
  };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] =
          find(qmul(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  return FiniteGroupTable::from_mul("Q8", n, std::move(mul));
}

// 2x2 matrices over Z/3 with determinant 1, enumerated lexicographically.
FiniteGroupTable sl2z3() {
  using Mat = std::array<int, 4>;  // row-major (a,b,c,d)
  std::vector<Mat> elems;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back(Mat{a, b, c, d});
  const int n = static_cast<int>(elems.size());
  auto find = [&](const Mat& q) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), q) - elems.begin());
  };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Mat& a = elems[static_cast<std::size_t>(x)];
      const Mat& b = elems[static_cast<std::size_t>(y)];
      const Mat q{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
                  (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
      mul[static_cast<std::size_t>(x) * n + y] = find(q);
    }
  return FiniteGroupTable::from_mul("SL(2,Z3)", n, std::move(mul));
}

}  // namespace

const std::vector<FiniteGroupTable>& builtin_groups() {
  static const std::vector<FiniteGroupTable> groups = [] {
    std::vector<FiniteGroupTable> g;
    for (int k = 1; k <= 12; ++k) g.push_back(cyclic(k));
    g.push_back(symmetric3());
    g.push_back(dihedral(4));
    g.push_back(dihedral(5));
    g.push_back(dihedral(6));
    g.push_back(quaternion8());
    g.push_back(alternating4());
    g.push_back(sl2z3());
    return g;
  }();
  return groups;
}

const FiniteGroupTable& find_builtin(std::string_view name) {
  for (const FiniteGroupTable& g : builtin_groups())
    if (g.name() == name) return g;
  throw ParseError("unknown group '" + std::string(name) + "'");
}

FiniteGroupTable group_from_json_text(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid group JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
    throw ParseError("group JSON needs 'order' and 'mul' fields");
  const std::string name = j.value("name", std::string("custom"));
  if (!j["order"].is_number_integer() || !j["mul"].is_array())
    throw ParseError("group JSON: 'order' must be an integer and 'mul' an array");
  const int order = j["order"].get<int>();
  std::vector<int> mul;
  for (const auto& v : j["mul"]) {
    if (!v.is_number_integer()) throw ParseError("group JSON: table entries must be integers");
    mul.push_back(v.get<int>());
  }
  return FiniteGroupTable::from_mul(name, order, std::move(mul));
}

}  // namespace btspin
