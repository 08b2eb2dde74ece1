#pragma once

#include <string>
#include <vector>

#include "grouplab/rational.hpp"

namespace grouplab {

// Group elements are dense indices 0..n-1 into a Cayley table; the identity
// is always index 0. This pins identity bookkeeping once, in validation,
// instead of in every algorithm.
using Elem = int;

// Immutable validated multiplication table. Construction goes through
// validate(), which checks identity placement, the Latin-square property,
// inverses, and full associativity (n^3; affordable at the supported scale
// of n <= 256, and it yields witness triples on failure).
class FiniteGroup {
 public:
  static FiniteGroup validate(const std::vector<std::vector<Elem>>& table,
                              std::string name = "");

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }

  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

  bool same_table(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

  void check_index(Elem g) const;

 private:
  FiniteGroup(int n, std::vector<Elem> table, std::vector<Elem> inverse, std::string name)
      : n_(n), table_(std::move(table)), inverse_(std::move(inverse)), name_(std::move(name)) {}

  int n_;
  std::vector<Elem> table_;  // flat n*n, row-major
  std::vector<Elem> inverse_;
  std::string name_;
};

// Subset of the elements of a fixed group. Members are kept sorted and
// unique; membership is a binary search. Hot loops build their own bitmasks.
struct ElementSet {
  int group_order = 0;
  std::vector<Elem> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(Elem g) const;
  bool is_full() const { return size() == group_order; }

  // Sorts, dedups and range-checks.
  static ElementSet of(int group_order, std::vector<Elem> members);
  static ElementSet trivial(int group_order) { return ElementSet{group_order, {0}}; }
  static ElementSet full(int group_order);

  std::vector<char> mask() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.group_order == b.group_order && a.members == b.members;
  }
};

// Total map on element indices between two groups. Whether it is a
// homomorphism / automorphism is a property checked against the groups, not
// a stored flag; enumeration code only hands out verified maps.
struct Morphism {
  int source_order = 0;
  int target_order = 0;
  std::vector<Elem> images;

  Elem operator()(Elem g) const { return images[g]; }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_order == b.source_order && a.target_order == b.target_order &&
           a.images == b.images;
  }
};

Morphism identity_morphism(int n);

// f after g; both must be endomaps of the same order.
Morphism compose(const Morphism& f, const Morphism& g);

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt, const Morphism& m);
bool is_automorphism(const FiniteGroup& g, const Morphism& m);

// g^e by binary exponentiation; negative e routes through the inverse array.
Elem power(const FiniteGroup& g, Elem x, long long e);

int element_order(const FiniteGroup& g, Elem x);

// { x : xg = gx }. Always a subgroup containing 0 and g.
ElementSet centralizer(const FiniteGroup& g, Elem x);

// { g : centralizer(g) = G }.
ElementSet center(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);

// Partition of 0..n-1 into conjugation orbits. Classes are sorted
// internally and ordered by their minimal element, so the class of the
// identity comes first.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

// |{(x,y) : xy = yx}| / n^2, exact. Also computed as (#classes)/n; the two
// routes are asserted equal before returning.
Rational commuting_probability(const FiniteGroup& g);

// tau_g : x -> g x g^-1, always a verified automorphism.
Morphism conjugation_map(const FiniteGroup& g, Elem x);

}  // namespace grouplab
