#pragma once

#include <cstddef>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

inline constexpr std::size_t kDefaultLatticeCap = 10'000;

// Smallest subgroup containing the seed, by product saturation (a finite
// set closed under products is closed under inverses too). Contains 0.
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

// When a witness pointer is given and the set is not normal, it receives a
// (conjugator, member) pair whose conjugate escapes the set.
bool is_normal(const FiniteGroup& g, const ElementSet& s,
               std::pair<Elem, Elem>* witness = nullptr);

// The complete list of normal subgroups, deduplicated and sorted by
// (size, members). Computed by fixpoint: extend each known normal subgroup
// by one whole conjugacy class outside it and close; a class-closed seed
// generates a normal subgroup, and every normal subgroup is the closure of
// the classes it contains, so the sweep is exhaustive.
struct SubgroupLattice {
  std::vector<ElementSet> normals;
};

SubgroupLattice normal_subgroups(const FiniteGroup& g,
                                 std::size_t cap = kDefaultLatticeCap);

// Coset group with the identity coset at index 0 (cosets are indexed by
// ascending minimal element). The projection is checked to be a surjective
// homomorphism with kernel exactly n.
struct QuotientResult {
  FiniteGroup group;
  Morphism projection;
};

QuotientResult quotient(const FiniteGroup& g, const ElementSet& n);

// Relabels a subgroup as a standalone group (identity stays at index 0) so
// series code has a single input type. to_parent maps local -> parent index.
struct InducedSubgroup {
  FiniteGroup group;
  std::vector<Elem> to_parent;
};

InducedSubgroup induced_subgroup(const FiniteGroup& g, const ElementSet& h);

enum class SeriesKind { Derived, LowerCentral };

// Descending chain of subgroups, strictly decreasing until stable. For the
// derived series, `terminated` means solvable and `length` is the derived
// length (0 for the trivial group, 1 for nontrivial abelian). For the
// lower central series, `terminated` means nilpotent and `length` is the
// nilpotency class. A chain that stabilizes above the trivial subgroup has
// `terminated = false` and `length` counts the strict steps taken.
struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<ElementSet> terms;
  bool terminated = false;
  int length = 0;
};

SeriesReport derived_series(const FiniteGroup& h);
SeriesReport lower_central_series(const FiniteGroup& h);

// Subgroup variants: the series is computed on the induced standalone group
// and the terms are mapped back to parent indices.
SeriesReport derived_series(const FiniteGroup& g, const ElementSet& subgroup);
SeriesReport lower_central_series(const FiniteGroup& g, const ElementSet& subgroup);

bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);

// Largest solvable / nilpotent normal subgroup. Both scan the full normal
// subgroup lattice and verify the maximum contains every qualifying member
// before returning it.
ElementSet solvable_radical(const FiniteGroup& g, std::size_t cap = kDefaultLatticeCap);
ElementSet fitting_subgroup(const FiniteGroup& g, std::size_t cap = kDefaultLatticeCap);

// Lattice-reusing variants for callers that already enumerated it.
ElementSet solvable_radical_in(const FiniteGroup& g, const SubgroupLattice& lattice);
ElementSet fitting_subgroup_in(const FiniteGroup& g, const SubgroupLattice& lattice);

}  // namespace grouplab
