#pragma once

#include <string>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

inline constexpr int kDefaultOrderCap = 256;

enum class GroupFamily {
  Cyclic,
  Dihedral,
  Dicyclic,
  Symmetric,
  Alternating,
  ElementaryAbelian,
  Heisenberg,
  DirectProduct,
  SemidirectCyclic,
  Imported,
};

// A constructible group description. The canonical string form doubles as
// the group's display name, e.g. "dicyclic:2", "semidirect_cyclic:7,3,2",
// "cyclic:2*alternating:5" (direct product), "file:fixtures/s3.cayley".
struct GroupSpec {
  GroupFamily family = GroupFamily::Cyclic;
  std::vector<int> parameters;
  std::vector<GroupSpec> factors;  // DirectProduct only
  std::string source_path;         // Imported only

  std::string str() const;
  static GroupSpec parse(const std::string& text);
};

// Builds and validates the group. Family orders: cyclic(n)=n, dihedral(n)=2n,
// dicyclic(n)=4n (dicyclic(2)=Q8), symmetric(n)=n!, alternating(n)=n!/2,
// elementary_abelian(p,k)=p^k, heisenberg(p)=p^3 (exponent p),
// semidirect_cyclic(n,m,k)=n*m with the C_m generator acting as g -> g^k.
FiniteGroup construct(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

// Plain-text Cayley table format (bit-exact):
//   line 1:       "order N"
//   lines 2..N+1: N space-separated base-10 indices in 0..N-1 (row r of the
//                 table); a trailing newline is required and '#' starts a
//                 comment line, allowed anywhere. Identity must be index 0.
FiniteGroup parse_cayley_file(const std::string& path);
FiniteGroup parse_cayley_text(const std::string& text, const std::string& name);

void serialize_cayley(const FiniteGroup& g, const std::string& path);
std::string serialize_cayley_text(const FiniteGroup& g);

// The pinned scan universe: every parameterized family instance of order
// <= max_order (deduplicated by canonical spec string) plus the members of
// the odd-order showcase that fit. Sorted by (order, name).
std::vector<GroupSpec> default_scan_specs(int max_order);

// Odd-order groups used for the cube-power checks.
std::vector<GroupSpec> odd_order_showcase();

}  // namespace grouplab
