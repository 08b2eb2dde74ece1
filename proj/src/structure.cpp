#include "grouplab/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

// Product saturation over a membership mask; returns sorted members.
std::vector<Elem> close_under_products(const FiniteGroup& g, std::vector<Elem> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> elems;
  const auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (Elem s : seed) {
    g.check_index(s);
    add(s);
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Elem commutator(const FiniteGroup& g, Elem a, Elem b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

SeriesReport run_series(const FiniteGroup& h, SeriesKind kind) {
  const int n = h.order();
  SeriesReport report;
  report.kind = kind;
  ElementSet current = ElementSet::full(n);
  report.terms.push_back(current);
  while (true) {
    std::vector<Elem> seed;
    if (kind == SeriesKind::Derived) {
      for (Elem a : current.members) {
        for (Elem b : current.members) seed.push_back(commutator(h, a, b));
      }
    } else {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b : current.members) seed.push_back(commutator(h, a, b));
      }
    }
    ElementSet next = ElementSet{n, close_under_products(h, std::move(seed))};
    if (next.members == current.members) {
      report.terminated = current.size() == 1;
      return report;
    }
    report.terms.push_back(next);
    ++report.length;
    if (next.size() == 1) {
      report.terminated = true;
      return report;
    }
    current = std::move(next);
  }
}

SeriesReport map_series_to_parent(SeriesReport local, const std::vector<Elem>& to_parent,
                                  int parent_order) {
  for (auto& term : local.terms) {
    std::vector<Elem> mapped;
    mapped.reserve(term.members.size());
    for (Elem x : term.members) mapped.push_back(to_parent[x]);
    std::sort(mapped.begin(), mapped.end());
    term = ElementSet{parent_order, std::move(mapped)};
  }
  return local;
}

}  // namespace

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  return ElementSet{g.order(), close_under_products(g, seed.members)};
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.group_order != g.order() || s.members.empty() || !s.contains(0)) return false;
  const auto m = s.mask();
  for (Elem a : s.members) {
    for (Elem b : s.members) {
      if (!m[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& s, std::pair<Elem, Elem>* witness) {
  const auto m = s.mask();
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem h : s.members) {
      if (!m[g.conj(x, h)]) {
        if (witness) *witness = {x, h};
        return false;
      }
    }
  }
  return true;
}

SubgroupLattice normal_subgroups(const FiniteGroup& g, std::size_t cap) {
  const auto classes = conjugacy_classes(g);

  std::set<std::vector<Elem>> known;
  std::vector<std::vector<Elem>> work;
  const std::vector<Elem> trivial{0};
  known.insert(trivial);
  work.push_back(trivial);

  while (!work.empty()) {
    const std::vector<Elem> current = std::move(work.back());
    work.pop_back();
    std::vector<char> in(g.order(), 0);
    for (Elem x : current) in[x] = 1;
    for (const auto& cls : classes) {
      bool outside = false;
      for (Elem x : cls) {
        if (!in[x]) {
          outside = true;
          break;
        }
      }
      if (!outside) continue;
      std::vector<Elem> seed = current;
      seed.insert(seed.end(), cls.begin(), cls.end());
      std::vector<Elem> closed = close_under_products(g, std::move(seed));
      if (known.insert(closed).second) {
        if (known.size() > cap) {
          throw GroupError(ErrorCode::LatticeTooLarge,
                           g.name() + ": more than " + std::to_string(cap) +
                               " normal subgroups");
        }
        work.push_back(std::move(closed));
      }
    }
  }

  SubgroupLattice lattice;
  lattice.normals.reserve(known.size());
  for (const auto& members : known) {
    lattice.normals.push_back(ElementSet{g.order(), members});
  }
  std::sort(lattice.normals.begin(), lattice.normals.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return a.size() != b.size() ? a.size() < b.size() : a.members < b.members;
            });
  return lattice;
}

QuotientResult quotient(const FiniteGroup& g, const ElementSet& n) {
  if (!is_subgroup(g, n)) {
    throw GroupError(ErrorCode::NotASubgroup, "quotient by a non-subgroup");
  }
  std::pair<Elem, Elem> w;
  if (!is_normal(g, n, &w)) {
    throw GroupError(ErrorCode::NotNormal,
                     "conjugate of " + std::to_string(w.second) + " by " +
                         std::to_string(w.first) + " escapes the subgroup");
  }

  const int order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<Elem> rep;  // minimal element of each coset, in discovery order
  for (Elem x = 0; x < order; ++x) {
    if (coset_of[x] != -1) continue;
    const int id = static_cast<int>(rep.size());
    Elem least = x;
    for (Elem h : n.members) {
      const Elem y = g.mul(x, h);
      coset_of[y] = id;
      least = std::min(least, y);
    }
    rep.push_back(least);
  }
  // Scanning x in ascending order makes each coset's first-seen element its
  // minimum, so discovery order is already the canonical order and the
  // coset of 0 is index 0.

  const int q = static_cast<int>(rep.size());
  std::vector<std::vector<Elem>> table(q, std::vector<Elem>(q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) table[a][b] = coset_of[g.mul(rep[a], rep[b])];
  }
  FiniteGroup quot = FiniteGroup::validate(table, g.name() + "/N" + std::to_string(n.size()));

  Morphism proj{order, q, std::vector<Elem>(coset_of.begin(), coset_of.end())};
  if (!is_homomorphism(g, quot, proj)) {
    throw GroupError(ErrorCode::Internal, "quotient projection is not a homomorphism");
  }
  std::vector<Elem> kernel;
  for (Elem x = 0; x < order; ++x) {
    if (proj.images[x] == 0) kernel.push_back(x);
  }
  if (kernel != n.members) {
    throw GroupError(ErrorCode::Internal, "quotient projection kernel mismatch");
  }
  return QuotientResult{std::move(quot), std::move(proj)};
}

InducedSubgroup induced_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) {
    throw GroupError(ErrorCode::NotASubgroup, "cannot induce a group from a non-subgroup");
  }
  const std::vector<Elem>& to_parent = h.members;  // sorted; 0 first
  std::vector<int> local_of(g.order(), -1);
  for (size_t i = 0; i < to_parent.size(); ++i) local_of[to_parent[i]] = static_cast<int>(i);
  const int m = h.size();
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) table[a][b] = local_of[g.mul(to_parent[a], to_parent[b])];
  }
  FiniteGroup sub = FiniteGroup::validate(table, g.name() + ".sub" + std::to_string(m));
  return InducedSubgroup{std::move(sub), to_parent};
}

SeriesReport derived_series(const FiniteGroup& h) { return run_series(h, SeriesKind::Derived); }

SeriesReport lower_central_series(const FiniteGroup& h) {
  return run_series(h, SeriesKind::LowerCentral);
}

SeriesReport derived_series(const FiniteGroup& g, const ElementSet& subgroup) {
  const InducedSubgroup ind = induced_subgroup(g, subgroup);
  return map_series_to_parent(derived_series(ind.group), ind.to_parent, g.order());
}

SeriesReport lower_central_series(const FiniteGroup& g, const ElementSet& subgroup) {
  const InducedSubgroup ind = induced_subgroup(g, subgroup);
  return map_series_to_parent(lower_central_series(ind.group), ind.to_parent, g.order());
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).terminated; }

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).terminated; }

namespace {

ElementSet largest_with_property(const FiniteGroup& g, const SubgroupLattice& lattice,
                                 bool (*pred)(const FiniteGroup&), const char* what) {
  std::vector<char> qualifies(lattice.normals.size(), 0);
  int best = -1;
  for (size_t i = 0; i < lattice.normals.size(); ++i) {
    const InducedSubgroup ind = induced_subgroup(g, lattice.normals[i]);
    if (pred(ind.group)) {
      qualifies[i] = 1;
      if (best < 0 || lattice.normals[i].size() > lattice.normals[best].size()) {
        best = static_cast<int>(i);
      }
    }
  }
  if (best < 0) {
    throw GroupError(ErrorCode::Internal,
                     std::string(what) + ": not even the trivial subgroup qualified");
  }
  const ElementSet& top = lattice.normals[best];
  const auto m = top.mask();
  for (size_t i = 0; i < lattice.normals.size(); ++i) {
    if (!qualifies[i]) continue;
    for (Elem x : lattice.normals[i].members) {
      if (!m[x]) {
        throw GroupError(ErrorCode::Internal,
                         std::string(what) + " of " + g.name() +
                             " does not contain a qualifying normal subgroup (element " +
                             std::to_string(x) + ")");
      }
    }
  }
  return top;
}

}  // namespace

ElementSet solvable_radical_in(const FiniteGroup& g, const SubgroupLattice& lattice) {
  return largest_with_property(g, lattice, &is_solvable, "solvable radical");
}

ElementSet fitting_subgroup_in(const FiniteGroup& g, const SubgroupLattice& lattice) {
  return largest_with_property(g, lattice, &is_nilpotent, "fitting subgroup");
}

ElementSet solvable_radical(const FiniteGroup& g, std::size_t cap) {
  return solvable_radical_in(g, normal_subgroups(g, cap));
}

ElementSet fitting_subgroup(const FiniteGroup& g, std::size_t cap) {
  return fitting_subgroup_in(g, normal_subgroups(g, cap));
}

}  // namespace grouplab
