#include "vwt/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vwt/error.hpp"

namespace vwt {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> orders) : orders_(std::move(orders)) {
  for (long m : orders_) {
    if (m < 1) throw DimensionMismatch("cyclic orders must be positive");
    exponent_ = std::lcm(exponent_, m);
  }
  elements_.push_back(identity());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::vector<GroupElement> next;
    next.reserve(elements_.size() * static_cast<std::size_t>(orders_[i]));
    for (const auto& e : elements_) {
      for (long k = 0; k < orders_[i]; ++k) {
        GroupElement f = e;
        f[i] = k;
        next.push_back(std::move(f));
      }
    }
    elements_ = std::move(next);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::tower_level(long p, int n, int d) {
  long m = 1;
  for (int i = 0; i < n; ++i) m *= p;
  return FiniteAbelianGroup(std::vector<long>(static_cast<std::size_t>(d), m));
}

GroupElement FiniteAbelianGroup::reduce(const std::vector<long>& v) const {
  if (v.size() != orders_.size()) throw DimensionMismatch("group element has wrong rank");
  GroupElement r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = ((v[i] % orders_[i]) + orders_[i]) % orders_[i];
  return r;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.size() != orders_.size() || b.size() != orders_.size()) throw DimensionMismatch("group element has wrong rank");
  GroupElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  GroupElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (orders_[i] - a[i]) % orders_[i];
  return r;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
  if (a.size() != orders_.size()) throw UnknownLabel("element " + element_label(a) + " has wrong rank");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= orders_[i]) throw UnknownLabel("element " + element_label(a) + " is not reduced");
    idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(a[i]);
  }
  return idx;
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
  if (a.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= orders_[i]) return false;
  }
  return true;
}

std::string element_label(const GroupElement& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::vector<GroupElement> check_subgroup(const FiniteAbelianGroup& g, std::vector<GroupElement> h) {
  std::set<GroupElement> set;
  for (const auto& x : h) {
    if (!g.contains(x)) throw NotSubgroup(element_label(x) + " is not an element of the group");
    set.insert(x);
  }
  if (!set.count(g.identity())) throw NotSubgroup("subset does not contain 0");
  for (const auto& a : set) {
    if (!set.count(g.neg(a))) throw NotSubgroup("subset is not closed under negation");
    for (const auto& b : set) {
      if (!set.count(g.add(a, b))) throw NotSubgroup("subset is not closed under addition");
    }
  }
  return {set.begin(), set.end()};
}

std::vector<GroupElement> generated_subgroup(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> set{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> current(set.begin(), set.end());
    for (const auto& a : current) {
      for (const auto& s : gens) {
        if (set.insert(g.add(a, g.reduce(s))).second) grew = true;
      }
    }
  }
  return {set.begin(), set.end()};
}

}  // namespace vwt
