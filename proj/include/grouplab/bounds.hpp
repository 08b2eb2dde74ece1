#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/automorphisms.hpp"
#include "grouplab/group.hpp"
#include "grouplab/rational.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

// Threshold constants for the set-intersection machinery:
//   k(rho) = ceil(1/rho) + 1   (so k * rho >= 1 + rho)
//   Delta_n = n (n + 1) / 2
//   t(rho) = rho / Delta_(k-1)
struct RhoConstants {
  Rational rho;
  BigInt k;
  BigInt triangle_index;  // ceil(1/rho) = k - 1
  Rational t;
};

BigInt triangle_number(const BigInt& n);

RhoConstants rho_constants(const Rational& rho);

// Inversion bounds: cp(G) >= rho^5 / 12 and [G:Fit(G)] <= 144 rho^-10.
Rational inversion_cp_lower(const Rational& rho);
Rational inversion_fit_index_upper(const Rational& rho);

// Exact form of dl(Rad G) <= max(2, log_{3/4}(2 rho) + 3): true iff dl <= 2
// or 2 rho <= (3/4)^(dl-3). No floating point.
bool inversion_dl_bound_holds(int dl, const Rational& rho);

// Largest dl passing the inversion predicate at this rho (the predicate is
// monotone in dl, so this is well-defined).
int inversion_dl_upper(const Rational& rho);

// Squaring bounds: cp >= rho^2, [G:Fit] <= rho^-4, and
// dl <= max({4} u { l >= 0 : 2^(l+1) <= (4l-7)/rho^2 }).
struct SquaringBounds {
  Rational cp_lower;
  Rational fit_index_upper;
  int dl_upper;
  std::vector<int> qualifying;  // the finite qualifying set, for reporting
};

SquaringBounds squaring_bounds(const Rational& rho);

enum class VerdictStatus { Pass, Skipped };

// One checked inequality with the two compared exact values. A failing
// check never lands in a report: it throws CounterexampleFound instead.
struct Verdict {
  std::string name;      // stable code, e.g. "thm2.1a.cp_ge_rho5_over_12"
  std::string relation;  // human-readable statement of the comparison
  Rational lhs;
  Rational rhs;
  VerdictStatus status = VerdictStatus::Pass;
  std::string note;  // vacuity or skip reason
};

// Everything verify_group measured for one group, all exact. When the
// automorphism enumeration blows its cap, the exact lambda fields stay
// empty and the inn_* fields carry lower bounds from Inn(G) only; verdicts
// are then checked at those lower bounds (still valid theorem instances,
// just weaker) and flagged in their notes.
struct BoundReport {
  std::string name;
  int order = 0;
  bool abelian = false;
  int class_count = 0;
  Rational cp;

  bool aut_enumerated = false;
  std::size_t aut_count = 0;  // meaningful only when aut_enumerated
  std::optional<Rational> lambda_m1, lambda_2, lambda_3;
  std::optional<Rational> inn_lambda_m1, inn_lambda_2, inn_lambda_3;

  long long fit_order = 0, rad_order = 0;
  long long fit_index = 0, rad_index = 0;
  int dl_rad = 0;

  std::vector<Verdict> verdicts;

  bool all_pass() const;
  const Verdict* find(const std::string& name) const;
};

// Computes lambda_{-1,2,3}, cp, Fit, Rad and dl(Rad), then checks every
// inequality of the main theorem plus the cited facts, instantiating rho at
// the computed lambda values. Throws CounterexampleFound with a full
// witness if any comparison fails.
BoundReport verify_group(const FiniteGroup& g,
                         std::size_t aut_cap = kDefaultAutCap,
                         std::size_t lattice_cap = kDefaultLatticeCap);

}  // namespace grouplab
