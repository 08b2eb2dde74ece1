#include "grouplab/automorphisms.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "grouplab/errors.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

std::vector<Elem> minimal_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  ElementSet closure = ElementSet::trivial(g.order());
  while (closure.size() < g.order()) {
    Elem next = -1;
    for (Elem x = 0; x < g.order(); ++x) {
      if (!closure.contains(x)) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    std::vector<Elem> seed = closure.members;
    seed.push_back(next);
    closure = subgroup_closure(g, ElementSet{g.order(), std::move(seed)});
  }
  return gens;
}

namespace {

// Backtracking state for the image search. `img` is the partial map,
// `assigned` lists elements with known images in discovery order, and every
// extension is recorded so it can be undone on backtrack.
struct AutSearch {
  const FiniteGroup& g;
  int n;
  std::vector<Elem> gens;
  std::vector<int> order_of;
  std::size_t cap;

  std::vector<int> img;
  std::vector<char> used;
  std::vector<Elem> assigned;

  std::vector<std::uint16_t> found;  // n images per automorphism, flat
  std::size_t count = 0;

  explicit AutSearch(const FiniteGroup& group, std::size_t cap_limit)
      : g(group), n(group.order()), cap(cap_limit), img(n, -1), used(n, 0) {
    gens = minimal_generators(g);
    order_of.resize(n);
    for (Elem x = 0; x < n; ++x) order_of[x] = element_order(g, x);
    img[0] = 0;
    used[0] = 1;
    assigned.push_back(0);
  }

  bool set_image(Elem e, Elem y) {
    if (img[e] != -1) return img[e] == y;
    if (used[y]) return false;
    img[e] = y;
    used[y] = 1;
    assigned.push_back(e);
    return true;
  }

  // Extends the partial map to the closure of everything assigned so far.
  // Pairs among pre-checkpoint elements are already consistent; each new
  // element is multiplied against the whole current list, and elements it
  // spawns are themselves processed later in the same sweep.
  bool close(std::size_t checkpoint) {
    for (std::size_t i = checkpoint; i < assigned.size(); ++i) {
      const Elem e = assigned[i];
      for (std::size_t j = 0; j < assigned.size(); ++j) {
        const Elem a = assigned[j];
        if (!set_image(g.mul(e, a), g.mul(img[e], img[a]))) return false;
        if (!set_image(g.mul(a, e), g.mul(img[a], img[e]))) return false;
      }
    }
    return true;
  }

  void rewind(std::size_t checkpoint) {
    while (assigned.size() > checkpoint) {
      const Elem e = assigned.back();
      assigned.pop_back();
      used[img[e]] = 0;
      img[e] = -1;
    }
  }

  void record() {
    if (count >= cap) {
      throw GroupError(ErrorCode::AutGroupTooLarge,
                       g.name() + ": more than " + std::to_string(cap) + " automorphisms");
    }
    ++count;
    for (Elem x = 0; x < n; ++x) found.push_back(static_cast<std::uint16_t>(img[x]));
  }

  void search(std::size_t gen_index) {
    if (gen_index == gens.size()) {
      record();
      return;
    }
    const Elem gen = gens[gen_index];
    const int want = order_of[gen];
    for (Elem y = 0; y < n; ++y) {
      if (order_of[y] != want) continue;
      const std::size_t checkpoint = assigned.size();
      if (set_image(gen, y) && close(checkpoint)) {
        search(gen_index + 1);
      }
      rewind(checkpoint);
    }
  }
};

}  // namespace

AutGroup automorphism_group(const FiniteGroup& g, std::size_t cap) {
  AutSearch search(g, cap);
  search.search(0);

  const int n = g.order();
  AutGroup aut;
  aut.generator_indices = search.gens;
  aut.elements.reserve(search.count);
  for (std::size_t k = 0; k < search.count; ++k) {
    Morphism m{n, n, std::vector<Elem>(n)};
    for (int x = 0; x < n; ++x) m.images[x] = search.found[k * n + x];
    aut.elements.push_back(std::move(m));
  }
  std::sort(aut.elements.begin(), aut.elements.end(),
            [](const Morphism& a, const Morphism& b) { return a.images < b.images; });

  // The generators generate G, so every complete consistent assignment is a
  // bijective endomorphism; the checks below guard the search itself.
  if (aut.elements.empty() || !(aut.elements.front() == identity_morphism(n))) {
    throw GroupError(ErrorCode::Internal, "automorphism search lost the identity map");
  }
  const std::size_t inn = static_cast<std::size_t>(n) / center(g).size();
  if (aut.elements.size() % inn != 0) {
    throw GroupError(ErrorCode::Internal,
                     "|Inn| = " + std::to_string(inn) + " does not divide |Aut| = " +
                         std::to_string(aut.elements.size()));
  }
  return aut;
}

std::vector<Morphism> inner_automorphisms(const FiniteGroup& g) {
  std::vector<Morphism> inner;
  for (Elem x = 0; x < g.order(); ++x) inner.push_back(conjugation_map(g, x));
  std::sort(inner.begin(), inner.end(),
            [](const Morphism& a, const Morphism& b) { return a.images < b.images; });
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  return inner;
}

namespace {

void require_automorphism(const FiniteGroup& g, const Morphism& alpha) {
  if (!is_automorphism(g, alpha)) {
    throw GroupError(ErrorCode::NotAnAutomorphism,
                     "map is not an automorphism of " + g.name());
  }
}

std::vector<Elem> power_table(const FiniteGroup& g, long long e) {
  std::vector<Elem> p(g.order());
  for (Elem x = 0; x < g.order(); ++x) p[x] = power(g, x, e);
  return p;
}

}  // namespace

ElementSet power_agreement_set(const FiniteGroup& g, const Morphism& alpha, long long e) {
  require_automorphism(g, alpha);
  const auto pow_e = power_table(g, e);
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    if (alpha.images[x] == pow_e[x]) members.push_back(x);
  }
  return ElementSet{g.order(), std::move(members)};
}

ElementSet fixed_points(const FiniteGroup& g, const Morphism& alpha) {
  require_automorphism(g, alpha);
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    if (alpha.images[x] == x) members.push_back(x);
  }
  ElementSet fix{g.order(), std::move(members)};
  if (!is_subgroup(g, fix)) {
    throw GroupError(ErrorCode::Internal, "fixed points of an automorphism must form a subgroup");
  }
  return fix;
}

namespace {

LambdaResult lambda_over(const FiniteGroup& g, const std::vector<Morphism>& autos,
                         long long e, bool certified) {
  const int n = g.order();
  const auto pow_e = power_table(g, e);
  int best_size = -1;
  const Morphism* best = nullptr;
  for (const Morphism& alpha : autos) {
    int agree = 0;
    for (Elem x = 0; x < n; ++x) {
      if (alpha.images[x] == pow_e[x]) ++agree;
    }
    if (agree > best_size) {
      best_size = agree;
      best = &alpha;
    }
  }
  LambdaResult result;
  result.e = e;
  result.value = Rational(best_size, n);
  result.witness = *best;
  result.certified = certified;
  std::vector<Elem> members;
  for (Elem x = 0; x < n; ++x) {
    if (best->images[x] == pow_e[x]) members.push_back(x);
  }
  result.agreement_set = ElementSet{n, std::move(members)};
  return result;
}

}  // namespace

LambdaResult lambda_from_aut(const FiniteGroup& g, const AutGroup& aut, long long e) {
  return lambda_over(g, aut.elements, e, /*certified=*/true);
}

LambdaResult lambda(const FiniteGroup& g, long long e, std::size_t cap) {
  return lambda_from_aut(g, automorphism_group(g, cap), e);
}

LambdaResult lambda_inner_lower_bound(const FiniteGroup& g, long long e) {
  return lambda_over(g, inner_automorphisms(g), e, /*certified=*/false);
}

}  // namespace grouplab
