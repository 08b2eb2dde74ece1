#pragma once

#include <cstddef>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

inline constexpr std::size_t kDefaultAutCap = 1'000'000;

// Greedy generating sequence: repeatedly append the smallest-index element
// outside the closure of what we have. Empty for the trivial group.
std::vector<Elem> minimal_generators(const FiniteGroup& g);

struct AutGroup {
  std::vector<Morphism> elements;        // sorted lexicographically by image tuple
  std::vector<Elem> generator_indices;   // the generating sequence the search used
};

// Exhaustive enumeration by backtracking over generator images. Candidate
// images must match the generator's element order; each partial assignment
// is extended to the closure of the assigned generators and rejected on any
// homomorphism or injectivity violation. Throws AutGroupTooLarge as soon as
// more than `cap` automorphisms have been found, which signals the group is
// out of feasible lambda-scan range.
AutGroup automorphism_group(const FiniteGroup& g, std::size_t cap = kDefaultAutCap);

// The conjugation maps, deduplicated; |Inn| = |G| / |center|.
std::vector<Morphism> inner_automorphisms(const FiniteGroup& g);

// { g : alpha(g) = g^e }. Always contains 0.
ElementSet power_agreement_set(const FiniteGroup& g, const Morphism& alpha, long long e);

// { g : alpha(g) = g }, verified to be a subgroup.
ElementSet fixed_points(const FiniteGroup& g, const Morphism& alpha);

struct LambdaResult {
  long long e = 0;
  Rational value;           // |agreement_set| / |G|
  Morphism witness;         // attains the maximum; first in enumeration order
  ElementSet agreement_set;
  bool certified = true;    // false when only Inn(G) was scanned (lower bound)
};

// lambda_e(G): maximum agreement fraction over the full automorphism group.
// Ties go to the earliest automorphism in the canonical enumeration order so
// witnesses are reproducible.
LambdaResult lambda(const FiniteGroup& g, long long e, std::size_t cap = kDefaultAutCap);

// Same scan over an already-enumerated automorphism group.
LambdaResult lambda_from_aut(const FiniteGroup& g, const AutGroup& aut, long long e);

// Lower bound for lambda_e from the inner automorphisms only; used when the
// full enumeration exceeds its cap. Result carries certified = false.
LambdaResult lambda_inner_lower_bound(const FiniteGroup& g, long long e);

}  // namespace grouplab
