#include "grouplab/group.hpp"

#include <algorithm>

#include "grouplab/errors.hpp"

namespace grouplab {

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<Elem>>& table,
                                  std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    throw GroupError(ErrorCode::InvalidParameters, "empty multiplication table");
  }
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n) {
      throw GroupError(ErrorCode::InvalidParameters,
                       "table is not square: row " + std::to_string(r) + " has " +
                           std::to_string(table[r].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      const Elem v = table[r][c];
      if (v < 0 || v >= n) {
        throw GroupError(ErrorCode::InvalidParameters,
                         "entry out of range at (" + std::to_string(r) + "," +
                             std::to_string(c) + "): " + std::to_string(v));
      }
      flat.push_back(v);
    }
  }
  const auto at = [&](Elem a, Elem b) { return flat[static_cast<size_t>(a) * n + b]; };

  for (Elem a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      throw GroupError(ErrorCode::NoIdentityAtZero,
                       "index 0 is not a two-sided identity at element " + std::to_string(a));
    }
  }

  // Latin-square property: every row and column is a permutation.
  std::vector<char> seen(n);
  for (Elem r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem c = 0; c < n; ++c) {
      if (seen[at(r, c)]++) {
        throw GroupError(ErrorCode::NotLatinSquare,
                         "row " + std::to_string(r) + " repeats value " +
                             std::to_string(at(r, c)));
      }
    }
  }
  for (Elem c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem r = 0; r < n; ++r) {
      if (seen[at(r, c)]++) {
        throw GroupError(ErrorCode::NotLatinSquare,
                         "column " + std::to_string(c) + " repeats value " +
                             std::to_string(at(r, c)));
      }
    }
  }

  std::vector<Elem> inverse(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (at(a, b) == 0 && at(b, a) == 0) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0) {
      throw GroupError(ErrorCode::MissingInverse,
                       "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = at(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw GroupError(ErrorCode::NotAssociative,
                           "(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                               " b=" + std::to_string(b) + " c=" + std::to_string(c));
        }
      }
    }
  }

  return FiniteGroup(n, std::move(flat), std::move(inverse), std::move(name));
}

void FiniteGroup::check_index(Elem g) const {
  if (g < 0 || g >= n_) {
    throw GroupError(ErrorCode::IndexOutOfRange,
                     "element index " + std::to_string(g) + " not in 0.." +
                         std::to_string(n_ - 1));
  }
}

bool ElementSet::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

ElementSet ElementSet::of(int group_order, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem g : members) {
    if (g < 0 || g >= group_order) {
      throw GroupError(ErrorCode::IndexOutOfRange,
                       "set member " + std::to_string(g) + " not in 0.." +
                           std::to_string(group_order - 1));
    }
  }
  return ElementSet{group_order, std::move(members)};
}

ElementSet ElementSet::full(int group_order) {
  std::vector<Elem> all(group_order);
  for (int i = 0; i < group_order; ++i) all[i] = i;
  return ElementSet{group_order, std::move(all)};
}

std::vector<char> ElementSet::mask() const {
  std::vector<char> m(group_order, 0);
  for (Elem g : members) m[g] = 1;
  return m;
}

Morphism identity_morphism(int n) {
  Morphism m{n, n, std::vector<Elem>(n)};
  for (int i = 0; i < n; ++i) m.images[i] = i;
  return m;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (g.target_order != f.source_order) {
    throw GroupError(ErrorCode::InvalidParameters, "morphism composition order mismatch");
  }
  Morphism out{g.source_order, f.target_order, std::vector<Elem>(g.source_order)};
  for (int x = 0; x < g.source_order; ++x) out.images[x] = f.images[g.images[x]];
  return out;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt, const Morphism& m) {
  const int n = src.order();
  if (m.source_order != n || m.target_order != tgt.order() ||
      static_cast<int>(m.images.size()) != n) {
    return false;
  }
  for (Elem x : m.images) {
    if (x < 0 || x >= tgt.order()) return false;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (m.images[src.mul(a, b)] != tgt.mul(m.images[a], m.images[b])) return false;
    }
  }
  return true;
}

bool is_automorphism(const FiniteGroup& g, const Morphism& m) {
  const int n = g.order();
  if (m.source_order != n || m.target_order != n) return false;
  if (m.images.empty() || m.images[0] != 0) return false;
  std::vector<char> seen(n, 0);
  for (Elem x : m.images) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return is_homomorphism(g, g, m);
}

Elem power(const FiniteGroup& g, Elem x, long long e) {
  g.check_index(x);
  Elem base = x;
  unsigned long long k;
  if (e < 0) {
    base = g.inv(x);
    k = static_cast<unsigned long long>(-(e + 1)) + 1;  // avoids overflow at LLONG_MIN
  } else {
    k = static_cast<unsigned long long>(e);
  }
  Elem acc = 0;
  while (k > 0) {
    if (k & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return acc;
}

int element_order(const FiniteGroup& g, Elem x) {
  g.check_index(x);
  int ord = 1;
  Elem cur = x;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++ord;
  }
  return ord;
}

ElementSet centralizer(const FiniteGroup& g, Elem x) {
  g.check_index(x);
  std::vector<Elem> members;
  for (Elem y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == g.mul(y, x)) members.push_back(y);
  }
  return ElementSet{g.order(), std::move(members)};
}

ElementSet center(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Elem> members;
  for (Elem x = 0; x < n; ++x) {
    bool central = true;
    for (Elem y = 0; y < n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) members.push_back(x);
  }
  return ElementSet{n, std::move(members)};
}

bool is_abelian(const FiniteGroup& g) { return center(g).is_full(); }

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> visited(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (visited[x]) continue;
    std::vector<Elem> cls;
    for (Elem y = 0; y < n; ++y) {
      const Elem z = g.conj(y, x);
      if (!visited[z]) {
        visited[z] = 1;
        cls.push_back(z);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Rational commuting_probability(const FiniteGroup& g) {
  const int n = g.order();
  long long pairs = 0;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (g.mul(x, y) == g.mul(y, x)) ++pairs;
    }
  }
  const long long k = static_cast<long long>(conjugacy_classes(g).size());
  // Burnside: the pair count must equal (#classes) * n.
  if (pairs != k * n) {
    throw GroupError(ErrorCode::Internal,
                     "commuting pair count " + std::to_string(pairs) +
                         " disagrees with class count " + std::to_string(k) + " * " +
                         std::to_string(n));
  }
  return Rational(pairs, static_cast<long long>(n) * n);
}

Morphism conjugation_map(const FiniteGroup& g, Elem x) {
  g.check_index(x);
  Morphism m{g.order(), g.order(), std::vector<Elem>(g.order())};
  for (Elem y = 0; y < g.order(); ++y) m.images[y] = g.conj(x, y);
  return m;
}

}  // namespace grouplab
