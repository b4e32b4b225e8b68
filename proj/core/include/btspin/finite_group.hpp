#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace btspin {

// Multiplication table of a finite group. Elements are indices 0..order-1;
// construction validates identity, inverses, the Latin-square property and
// full associativity, so a held table is always a group.
class FiniteGroupTable {
 public:
  static FiniteGroupTable from_mul(std::string name, int order, std::vector<int> mul);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;

  // Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> conjugacy_classes() const;

 private:
  FiniteGroupTable() = default;
  std::string name_;
  int order_ = 1;
  std::vector<int> mul_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

// Built-in targets: Z/1..Z/12, S3, D4, D5, D6, Q8, A4, SL(2,Z3); fixed
// order, each table validated on first use.
const std::vector<FiniteGroupTable>& builtin_groups();

// Lookup by name ("Z/5", "S3", "SL(2,Z3)"); throws ParseError when unknown.
const FiniteGroupTable& find_builtin(std::string_view name);

// Load a table from a JSON document {"name": ..., "order": n, "mul": [n*n
// row-major entries]}. Throws ParseError on malformed input or when the
// table is not a group.
FiniteGroupTable group_from_json_text(std::string_view json_text);

}  // namespace btspin
