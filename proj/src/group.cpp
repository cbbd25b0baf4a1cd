#include "pbr/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pbr/errors.hpp"

namespace pbr {

Group::Group(int degree, std::vector<Perm> generators, int order_cap)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw InvalidPermutation("degree must be positive");
  for (const Perm &g : generators_)
    if (g.degree() != degree)
      throw InvalidPermutation("generator degree does not match group degree");

  std::set<Perm> closure;
  std::vector<Perm> frontier;
  closure.insert(Perm::identity(degree));
  for (const Perm &g : generators_)
    if (closure.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm &f : frontier) {
      for (const Perm &g : generators_) {
        for (const Perm &p : {f * g, g * f}) {
          if (closure.insert(p).second) {
            if (static_cast<int>(closure.size()) > order_cap)
              throw ClosureExceedsCap("order exceeds " + std::to_string(order_cap));
            next.push_back(p);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  elements_.assign(closure.begin(), closure.end()); // std::set is already lexicographic
  // Identity is lexicographically minimal among permutations, hence index 0.
  const int n = order();
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[elements_[i]] = i;

  mult_table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mult_table_[static_cast<size_t>(i) * n + j] = index.at(elements_[i] * elements_[j]);

  inverse_.resize(n);
  for (int i = 0; i < n; ++i) inverse_[i] = index.at(elements_[i].inverse());

  for (const Perm &g : generators_) generator_indices_.push_back(index.at(g));
}

int Group::index_of(const Perm &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int Group::element_order(int i) const {
  int ord = 1;
  int x = i;
  while (x != 0) {
    x = mult(x, i);
    ++ord;
  }
  return ord;
}

bool Group::is_abelian() const {
  for (int gi : generator_indices_)
    for (int gj : generator_indices_)
      if (mult(gi, gj) != mult(gj, gi)) return false;
  return true;
}

GroupPtr group_from_generators(int degree, const std::vector<Perm> &gens, int order_cap) {
  return std::make_shared<Group>(degree, gens, order_cap);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<std::uint8_t> mask)
    : parent_(std::move(parent)), mask_(std::move(mask)) {
  if (static_cast<int>(mask_.size()) != parent_->order())
    throw InternalInconsistency("subgroup mask size does not match group order");
  for (int i = 0; i < parent_->order(); ++i)
    if (mask_[i]) elems_.push_back(i);
}

bool Subgroup::contains_subgroup(const Subgroup &other) const {
  if (parent_ != other.parent_) throw ParentMismatch("containment across groups");
  for (int e : other.elems_)
    if (!mask_[e]) return false;
  return true;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->order())
    throw InternalInconsistency("hom image map size does not match source order");
  const int n = source_->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (images_[source_->mult(x, y)] != target_->mult(images_[x], images_[y]))
        throw InternalInconsistency("map does not respect multiplication");
}

bool GroupHom::is_surjective() const {
  std::vector<std::uint8_t> hit(target_->order(), 0);
  int count = 0;
  for (int v : images_)
    if (!hit[v]) { hit[v] = 1; ++count; }
  return count == target_->order();
}

Subgroup trivial_subgroup(GroupPtr g) {
  std::vector<std::uint8_t> mask(g->order(), 0);
  mask[0] = 1;
  return Subgroup(std::move(g), std::move(mask));
}

Subgroup full_subgroup(GroupPtr g) {
  std::vector<std::uint8_t> mask(g->order(), 1);
  return Subgroup(std::move(g), std::move(mask));
}

Subgroup subgroup_closure(GroupPtr g, const std::vector<int> &seed) {
  const int n = g->order();
  std::vector<std::uint8_t> mask(n, 0);
  std::vector<int> elems{0};
  mask[0] = 1;
  std::vector<int> frontier;
  for (int s : seed) {
    if (s < 0 || s >= n) throw Error("seed element index out of range");
    if (!mask[s]) { mask[s] = 1; elems.push_back(s); frontier.push_back(s); }
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int f : frontier) {
      // products against everything collected so far, in both orders
      for (size_t k = 0; k < elems.size(); ++k) {
        int e = elems[k];
        for (int p : {g->mult(f, e), g->mult(e, f)}) {
          if (!mask[p]) { mask[p] = 1; elems.push_back(p); next.push_back(p); }
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup(std::move(g), std::move(mask));
}

Subgroup subgroup_from_elements(GroupPtr g, const std::vector<int> &elements) {
  std::vector<std::uint8_t> mask(g->order(), 0);
  for (int e : elements) {
    if (e < 0 || e >= g->order()) throw Error("element index out of range");
    mask[e] = 1;
  }
  Subgroup h(g, mask);
  // must already be closed
  for (int a : h.elems())
    for (int b : h.elems())
      if (!h.contains(g->mult(a, b)))
        throw Error("element set is not closed under multiplication");
  if (!h.contains(0)) throw Error("element set does not contain the identity");
  return h;
}

Subgroup conjugate_subgroup(const Subgroup &h, int g) {
  const Group &grp = *h.parent();
  std::vector<std::uint8_t> mask(grp.order(), 0);
  for (int e : h.elems()) mask[grp.conj(g, e)] = 1;
  return Subgroup(h.parent(), std::move(mask));
}

Subgroup intersect(const Subgroup &h, const Subgroup &k) {
  if (h.parent() != k.parent()) throw ParentMismatch("intersect");
  std::vector<std::uint8_t> mask(h.parent()->order(), 0);
  for (int i = 0; i < h.parent()->order(); ++i) mask[i] = h.mask()[i] && k.mask()[i];
  return Subgroup(h.parent(), std::move(mask));
}

Subgroup join(const Subgroup &h, const Subgroup &k) {
  if (h.parent() != k.parent()) throw ParentMismatch("join");
  std::vector<int> seed = h.elems();
  seed.insert(seed.end(), k.elems().begin(), k.elems().end());
  return subgroup_closure(h.parent(), seed);
}

bool is_normal(const Subgroup &h) {
  const Group &g = *h.parent();
  for (int gi : g.generator_indices())
    for (int e : h.elems())
      if (!h.contains(g.conj(gi, e))) return false;
  return true;
}

Subgroup normalizer(const Subgroup &h) {
  const Group &g = *h.parent();
  std::vector<std::uint8_t> mask(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (int e : h.elems())
      if (!h.contains(g.conj(x, e))) { fixes = false; break; }
    mask[x] = fixes;
  }
  return Subgroup(h.parent(), std::move(mask));
}

Subgroup centralizer_of_group(GroupPtr g) {
  const int n = g->order();
  std::vector<std::uint8_t> mask(n, 0);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n; ++y)
      if (g->mult(x, y) != g->mult(y, x)) { central = false; break; }
    mask[x] = central;
  }
  return Subgroup(std::move(g), std::move(mask));
}

Subgroup commutator_subgroup(GroupPtr g) {
  const int n = g->order();
  std::vector<int> seed;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      seed.push_back(g->mult(g->mult(x, y), g->mult(g->inv(x), g->inv(y))));
  return subgroup_closure(std::move(g), seed);
}

std::vector<Subgroup> lower_central_series(GroupPtr g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  for (;;) {
    const Subgroup &prev = series.back();
    std::vector<int> seed;
    for (int x : prev.elems())
      for (int y = 0; y < g->order(); ++y)
        seed.push_back(g->mult(g->mult(x, y), g->mult(g->inv(x), g->inv(y))));
    Subgroup next = subgroup_closure(g, seed);
    if (next == prev) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

bool is_nilpotent(GroupPtr g) {
  return lower_central_series(std::move(g)).back().order() == 1;
}

std::pair<GroupPtr, GroupHom> quotient_group(GroupPtr g, const Subgroup &n) {
  if (n.parent() != g) throw ParentMismatch("quotient_group");
  if (!is_normal(n)) throw NotNormal("quotient_group");
  const int order = g->order();
  const int index = order / n.order();

  // Cosets keyed by least element; the identity coset gets point 0.
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int e : n.elems()) coset_of[g->mult(x, e)] = id;
  }

  auto coset_perm = [&](int x) {
    std::vector<int> im(index);
    for (int c = 0; c < index; ++c) im[c] = coset_of[g->mult(x, reps[c])];
    return Perm(std::move(im));
  };

  std::vector<Perm> qgens;
  for (int gi : g->generator_indices()) qgens.push_back(coset_perm(gi));
  if (qgens.empty()) qgens.push_back(Perm::identity(index));
  GroupPtr q = group_from_generators(index, qgens, order);
  if (q->order() != index)
    throw InternalInconsistency("coset action has wrong order");

  std::vector<int> images(order);
  for (int x = 0; x < order; ++x) {
    int idx = q->index_of(coset_perm(x));
    if (idx < 0) throw InternalInconsistency("coset permutation missing from quotient");
    images[x] = idx;
  }
  GroupHom pi(g, q, std::move(images));
  return {q, std::move(pi)};
}

Subgroup hom_image(const GroupHom &f, const Subgroup &h) {
  if (h.parent() != f.source()) throw ParentMismatch("hom_image");
  std::vector<std::uint8_t> mask(f.target()->order(), 0);
  for (int e : h.elems()) mask[f.apply(e)] = 1;
  return Subgroup(f.target(), std::move(mask));
}

Subgroup hom_kernel(const GroupHom &f) {
  std::vector<std::uint8_t> mask(f.source()->order(), 0);
  for (int x = 0; x < f.source()->order(); ++x) mask[x] = f.apply(x) == 0;
  return Subgroup(f.source(), std::move(mask));
}

} // namespace pbr
