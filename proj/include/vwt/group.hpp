#pragma once

#include <string>
#include <vector>

namespace vwt {

using GroupElement = std::vector<long>;

/// Z/m_1 x ... x Z/m_r with elements listed in lexicographic order of their
/// coordinate vectors.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<long> orders);
  /// (Z/p^n)^d.
  static FiniteAbelianGroup tower_level(long p, int n, int d);

  const std::vector<long>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  /// Least common multiple of the orders.
  long exponent() const noexcept { return exponent_; }

  GroupElement identity() const { return GroupElement(orders_.size(), 0); }
  GroupElement reduce(const std::vector<long>& v) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
  /// Position in elements(); throws UnknownLabel for foreign vectors.
  std::size_t index_of(const GroupElement& a) const;
  bool contains(const GroupElement& a) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<long> orders_;
  std::vector<GroupElement> elements_;
  long exponent_ = 1;
};

/// "(1,0)" style label.
std::string element_label(const GroupElement& a);

/// Sorted element list of a subgroup; throws NotSubgroup unless the set
/// contains 0 and is closed under addition and negation.
std::vector<GroupElement> check_subgroup(const FiniteAbelianGroup& g, std::vector<GroupElement> h);

/// Subgroup generated by the given elements, sorted.
std::vector<GroupElement> generated_subgroup(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens);

}  // namespace vwt
