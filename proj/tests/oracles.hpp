// Independent oracles for test expectations. These deliberately avoid the
// library's own algorithms: closures are computed by repeated full pairwise
// products, subgroup enumeration by subset scan, and ring products by orbit
// decomposition of the explicit product G-set.
#ifndef PBR_TESTS_ORACLES_HPP
#define PBR_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "pbr/burnside.hpp"
#include "pbr/group.hpp"
#include "pbr/lattice.hpp"

namespace pbr::testing {

using Images = std::vector<int>;

inline Images compose_images(const Images &a, const Images &b) {
  Images r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

/// Closure of permutations under composition by saturating full pairwise
/// products (no generator bookkeeping, no BFS frontier).
inline std::set<Images> naive_closure(int degree, const std::vector<Images> &gens) {
  std::set<Images> all;
  Images id(degree);
  std::iota(id.begin(), id.end(), 0);
  all.insert(id);
  for (const auto &g : gens) all.insert(g);
  for (;;) {
    std::set<Images> next = all;
    for (const auto &a : all)
      for (const auto &b : all) next.insert(compose_images(a, b));
    if (next.size() == all.size()) return all;
    all = std::move(next);
  }
}

/// Every subgroup of g (order <= 20 keeps this quick in tests), by scanning
/// all identity-containing subsets for closure under multiplication.
inline std::vector<std::vector<std::uint8_t>> oracle_subgroup_masks(const Group &g) {
  const int n = g.order();
  std::vector<std::vector<std::uint8_t>> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); mask += 2) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) elems.push_back(i);
    if (n % static_cast<int>(elems.size()) != 0) continue;
    bool closed = true;
    for (int a : elems) {
      for (int b : elems)
        if (!(mask >> g.mult(a, b) & 1)) { closed = false; break; }
      if (!closed) break;
    }
    if (!closed) continue;
    std::vector<std::uint8_t> bytes(n, 0);
    for (int e : elems) bytes[e] = 1;
    out.push_back(std::move(bytes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The set product HK = {hk} as a membership mask (not necessarily a group).
inline std::vector<std::uint8_t> oracle_set_product(const Group &g, const Subgroup &h,
                                                    const Subgroup &k) {
  std::vector<std::uint8_t> mask(g.order(), 0);
  for (int a : h.elems())
    for (int b : k.elems()) mask[g.mult(a, b)] = 1;
  return mask;
}

/// Normal closure of K: the subgroup generated by all conjugates of K.
inline std::vector<std::uint8_t> oracle_normal_closure(GroupPtr g, const Subgroup &k) {
  std::vector<int> seed;
  for (int x = 0; x < g->order(); ++x)
    for (int e : k.elems()) seed.push_back(g->conj(x, e));
  return subgroup_closure(g, seed).mask();
}

/// [G/H]*[G/K] by decomposing the explicit product G-set (G/H) x (G/K) into
/// orbits and classifying each orbit's point stabilizer. Returns coefficients
/// over the family's classes.
inline std::vector<Int> oracle_basis_product(const Collection &family, int pos_h, int pos_k) {
  const SubgroupLattice &lat = *family.lattice();
  const Group &g = *lat.parent();
  const Subgroup &h = lat.class_rep(family.class_ids()[pos_h]);
  const Subgroup &k = lat.class_rep(family.class_ids()[pos_k]);
  const int n = g.order();

  // coset spaces as point lists: coset id per group element
  auto coset_ids = [&](const Subgroup &s) {
    std::vector<int> id(n, -1);
    int count = 0;
    for (int x = 0; x < n; ++x) {
      if (id[x] >= 0) continue;
      for (int e : s.elems()) id[g.mult(x, e)] = count;
      ++count;
    }
    return std::pair{id, count};
  };
  auto [hid, hcount] = coset_ids(h);
  auto [kid, kcount] = coset_ids(k);
  std::vector<int> hrep(hcount, -1), krep(kcount, -1);
  for (int x = n - 1; x >= 0; --x) { hrep[hid[x]] = x; krep[kid[x]] = x; }

  // product points (a,b); action x.(a,b) = (x a, x b)
  const int points = hcount * kcount;
  std::vector<std::uint8_t> seen(points, 0);
  std::vector<Int> coeffs(family.size(), 0);
  for (int p = 0; p < points; ++p) {
    if (seen[p]) continue;
    // orbit of p
    std::vector<int> orbit;
    for (int x = 0; x < n; ++x) {
      int a = hid[g.mult(x, hrep[p / kcount])];
      int b = kid[g.mult(x, krep[p % kcount])];
      int q = a * kcount + b;
      if (!seen[q]) { seen[q] = 1; orbit.push_back(q); }
    }
    // stabilizer of the base point p
    std::vector<std::uint8_t> stab(n, 0);
    for (int x = 0; x < n; ++x) {
      int a = hid[g.mult(x, hrep[p / kcount])];
      int b = kid[g.mult(x, krep[p % kcount])];
      stab[x] = (a == hid[hrep[p / kcount]]) && (b == kid[krep[p % kcount]]);
    }
    int cls = lat.class_of_mask(stab);
    int pos = family.position_of_class(cls);
    if (pos < 0) throw std::logic_error("oracle: stabilizer class outside the family");
    coeffs[pos] += 1;
  }
  return coeffs;
}

} // namespace pbr::testing

#endif
