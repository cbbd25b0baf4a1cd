#include "pbr/burnside.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pbr/errors.hpp"

namespace pbr {

Int MarkMatrix::det() const {
  Int d = 1;
  for (int i = 0; i < size(); ++i) d *= entries[i][i];
  return d;
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Int &c) { return c == 0; });
}

bool BurnsideElement::operator==(const BurnsideElement &rhs) const {
  return family == rhs.family && coeffs == rhs.coeffs;
}

std::string BurnsideElement::to_string() const {
  const SubgroupLattice &lat = *family.lattice();
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < family.size(); ++i) {
    const Int &c = coeffs[i];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string label = class_label(lat, family.class_ids()[i]);
    if (label == "G") {
      out << a; // [G/G] is the identity
    } else {
      if (a != 1) out << a;
      out << "[G/" << label << "]";
    }
  }
  if (first) return "0";
  return out.str();
}

namespace {

void require_same_family(const BurnsideElement &x, const BurnsideElement &y, const char *op) {
  if (!(x.family == y.family)) throw ParentMismatch(std::string(op) + ": different families");
}

} // namespace

BurnsideElement zero_element(const Collection &d) {
  return BurnsideElement{d, std::vector<Int>(d.size(), 0)};
}

BurnsideElement one_element(const Collection &d) {
  if (!d.is_collection()) throw Error("identity needs a collection (G in the family)");
  BurnsideElement e = zero_element(d);
  e.coeffs.back() = 1; // (G) is the last class in canonical order
  return e;
}

BurnsideElement basis_element(const Collection &d, int position) {
  BurnsideElement e = zero_element(d);
  e.coeffs.at(position) = 1;
  return e;
}

BurnsideElement make_element(const Collection &d, std::vector<Int> coeffs) {
  if (static_cast<int>(coeffs.size()) != d.size())
    throw Error("coefficient vector length does not match family size");
  return BurnsideElement{d, std::move(coeffs)};
}

BurnsideElement add(const BurnsideElement &x, const BurnsideElement &y) {
  require_same_family(x, y, "add");
  BurnsideElement r = x;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
  return r;
}

BurnsideElement sub(const BurnsideElement &x, const BurnsideElement &y) {
  require_same_family(x, y, "sub");
  BurnsideElement r = x;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= y.coeffs[i];
  return r;
}

BurnsideElement neg(const BurnsideElement &x) {
  BurnsideElement r = x;
  for (auto &c : r.coeffs) c = -c;
  return r;
}

BurnsideElement scale(const Int &c, const BurnsideElement &x) {
  BurnsideElement r = x;
  for (auto &v : r.coeffs) v *= c;
  return r;
}

BurnsideElement embed(const BurnsideElement &x, const Collection &into) {
  if (x.family.lattice() != into.lattice()) throw ParentMismatch("embed: different lattices");
  BurnsideElement r = zero_element(into);
  for (int i = 0; i < x.family.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    int pos = into.position_of_class(x.family.class_ids()[i]);
    if (pos < 0) throw ParentMismatch("embed: class outside the target family");
    r.coeffs[pos] = x.coeffs[i];
  }
  return r;
}

int mark(const Subgroup &k, const Subgroup &h) {
  if (k.parent() != h.parent()) throw ParentMismatch("mark");
  const Group &g = *k.parent();
  const int n = g.order();
  std::vector<std::uint8_t> covered(n, 0);
  int fixed = 0;
  for (int x = 0; x < n; ++x) {
    if (covered[x]) continue;
    for (int e : h.elems()) covered[g.mult(x, e)] = 1;
    // coset xH is K-fixed iff K <= xHx^-1 iff x^-1 K x <= H
    int xi = g.inv(x);
    bool ok = true;
    for (int e : k.elems())
      if (!h.contains(g.mult(g.mult(xi, e), x))) { ok = false; break; }
    fixed += ok;
  }
  return fixed;
}

MarkMatrix table_of_marks(const Collection &d) {
  const SubgroupLattice &lat = *d.lattice();
  const int n = d.size();
  MarkMatrix m{d, std::vector<std::vector<Int>>(n, std::vector<Int>(n, 0))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && !lat.subconjugate(d.class_ids()[i], d.class_ids()[j])) continue;
      m.entries[i][j] = mark(lat.class_rep(d.class_ids()[i]), lat.class_rep(d.class_ids()[j]));
    }
  return m;
}

std::vector<Int> ghost(const MarkMatrix &m, const std::vector<Int> &coeffs) {
  const int n = m.size();
  if (static_cast<int>(coeffs.size()) != n) throw Error("ghost: wrong coefficient length");
  std::vector<Int> v(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i] += m.entries[i][j] * coeffs[j];
  return v;
}

std::vector<Int> ghost(const BurnsideElement &x) {
  return ghost(table_of_marks(x.family), x.coeffs);
}

std::optional<BurnsideElement> unghost(const MarkMatrix &m, const std::vector<Int> &v) {
  const int n = m.size();
  if (static_cast<int>(v.size()) != n) throw Error("unghost: wrong vector length");
  std::vector<Int> c(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    Int rhs = v[i];
    for (int j = i + 1; j < n; ++j) rhs -= m.entries[i][j] * c[j];
    if (rhs % m.entries[i][i] != 0) return std::nullopt;
    c[i] = rhs / m.entries[i][i];
  }
  return BurnsideElement{m.family, std::move(c)};
}

std::optional<BurnsideElement> unghost(const Collection &d, const std::vector<Int> &v) {
  return unghost(table_of_marks(d), v);
}

namespace {

// [G/H]*[G/K] = sum over double cosets HgK of [G/(H cap gKg^-1)], as a
// coefficient vector over the family's classes.
std::vector<Int> product_basis(const Collection &d, int pos_h, int pos_k) {
  const SubgroupLattice &lat = *d.lattice();
  const Group &g = *lat.parent();
  const Subgroup &h = lat.class_rep(d.class_ids()[pos_h]);
  const Subgroup &k = lat.class_rep(d.class_ids()[pos_k]);
  const int n = g.order();
  std::vector<Int> out(d.size(), 0);
  std::vector<std::uint8_t> covered(n, 0);
  for (int x = 0; x < n; ++x) {
    if (covered[x]) continue;
    for (int eh : h.elems()) {
      int hx = g.mult(eh, x);
      for (int ek : k.elems()) covered[g.mult(hx, ek)] = 1;
    }
    // stabilizer class of the orbit through (H, xK): H cap xKx^-1
    std::vector<std::uint8_t> meet(n, 0);
    for (int ek : k.elems()) {
      int c = g.conj(x, ek);
      if (h.contains(c)) meet[c] = 1;
    }
    int cls = lat.class_of_mask(meet);
    int pos = d.position_of_class(cls);
    if (pos < 0)
      throw InternalInconsistency("double-coset stabilizer left the family");
    out[pos] += 1;
  }
  return out;
}

} // namespace

BurnsideElement multiply_cosets(const BurnsideElement &x, const BurnsideElement &y) {
  require_same_family(x, y, "multiply");
  const int n = x.family.size();
  std::vector<Int> acc(n, 0);
  for (int i = 0; i < n; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y.coeffs[j] == 0) continue;
      std::vector<Int> p = product_basis(x.family, i, j);
      Int w = x.coeffs[i] * y.coeffs[j];
      for (int t = 0; t < n; ++t) acc[t] += w * p[t];
    }
  }
  return BurnsideElement{x.family, std::move(acc)};
}

BurnsideElement multiply_ghost(const BurnsideElement &x, const BurnsideElement &y) {
  require_same_family(x, y, "multiply");
  MarkMatrix m = table_of_marks(x.family);
  std::vector<Int> gx = ghost(m, x.coeffs), gy = ghost(m, y.coeffs);
  for (size_t i = 0; i < gx.size(); ++i) gx[i] *= gy[i];
  auto r = unghost(m, gx);
  if (!r)
    throw InternalInconsistency("pointwise ghost product is not integral");
  return *r;
}

namespace {

// Depth-first search over per-row target choices, solving each coefficient
// by exact back-substitution and pruning on non-integrality. Rows are
// processed from the largest class down (M is upper triangular).
std::vector<BurnsideElement> solve_with_targets(const MarkMatrix &m,
                                                const std::vector<Int> &targets) {
  const int n = m.size();
  std::vector<BurnsideElement> out;
  std::vector<Int> c(n, 0), chosen(n, 0);
  auto dfs = [&](auto &&self, int i) -> void {
    if (i < 0) {
      out.push_back(BurnsideElement{m.family, c});
      return;
    }
    Int partial = 0;
    for (int j = i + 1; j < n; ++j) partial += m.entries[i][j] * c[j];
    for (const Int &t : targets) {
      Int rhs = t - partial;
      if (rhs % m.entries[i][i] != 0) continue;
      c[i] = rhs / m.entries[i][i];
      self(self, i - 1);
    }
    c[i] = 0;
  };
  dfs(dfs, n - 1);
  std::sort(out.begin(), out.end(),
            [](const BurnsideElement &a, const BurnsideElement &b) { return a.coeffs < b.coeffs; });
  return out;
}

// Sign pattern over GF(2): bit 1 where the ghost coordinate is -1.
std::vector<std::uint8_t> sign_bits(const std::vector<Int> &ghost_vec) {
  std::vector<std::uint8_t> bits(ghost_vec.size());
  for (size_t i = 0; i < ghost_vec.size(); ++i) {
    if (ghost_vec[i] != 1 && ghost_vec[i] != -1)
      throw InternalInconsistency("unit ghost coordinate is not a sign");
    bits[i] = ghost_vec[i] == -1;
  }
  return bits;
}

} // namespace

std::vector<BurnsideElement> nil_square_set(const Collection &family) {
  if (family.size() == 0) return {zero_element(family)}; // the zero ring
  return solve_with_targets(table_of_marks(family), {Int(0), Int(-2)});
}

UnitGroup units_bruteforce(const Collection &d, int search_cap) {
  if (!d.is_collection()) throw Error("unit search needs a collection (G in the family)");
  if (d.size() > search_cap)
    throw SearchCapExceeded(std::to_string(d.size()) + " classes > cap " +
                            std::to_string(search_cap));
  MarkMatrix m = table_of_marks(d);
  UnitGroup ug{d, solve_with_targets(m, {Int(1), Int(-1)}), {}};

  // Greedy GF(2)-independent generators from the units' sign patterns.
  std::vector<std::vector<std::uint8_t>> basis; // reduced, with pivot = first set bit
  std::vector<int> pivots;
  for (const BurnsideElement &u : ug.all_units) {
    std::vector<std::uint8_t> bits = sign_bits(ghost(m, u.coeffs));
    for (size_t b = 0; b < basis.size(); ++b) {
      if (bits[pivots[b]])
        for (size_t i = 0; i < bits.size(); ++i) bits[i] ^= basis[b][i];
    }
    auto first = std::find(bits.begin(), bits.end(), 1);
    if (first == bits.end()) continue; // dependent (includes the identity)
    pivots.push_back(static_cast<int>(first - bits.begin()));
    basis.push_back(bits);
    ug.generators.push_back(u);
  }
  if (Int(1) << ug.generators.size() != ug.order())
    throw InternalInconsistency("unit group is not elementary abelian over its generators");
  return ug;
}

std::vector<BurnsideElement> generated_unit_group(const Collection &d,
                                                  const std::vector<BurnsideElement> &gens) {
  MarkMatrix m = table_of_marks(d);
  std::map<std::vector<std::uint8_t>, BurnsideElement> seen;
  std::vector<Int> ones(d.size(), 1);
  auto id = unghost(m, ones);
  if (!id) throw InternalInconsistency("identity has no integral coefficients");
  seen.emplace(sign_bits(ones), *id);
  std::vector<std::vector<std::uint8_t>> frontier{sign_bits(ones)};
  std::vector<std::vector<std::uint8_t>> gen_bits;
  for (const auto &u : gens) gen_bits.push_back(sign_bits(ghost(m, u.coeffs)));
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto &bits : frontier) {
      for (const auto &gb : gen_bits) {
        std::vector<std::uint8_t> prod(bits.size());
        for (size_t i = 0; i < bits.size(); ++i) prod[i] = bits[i] ^ gb[i];
        if (seen.count(prod)) continue;
        std::vector<Int> gv(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) gv[i] = prod[i] ? -1 : 1;
        auto elem = unghost(m, gv);
        if (!elem)
          throw InternalInconsistency("generated sign pattern is not in the ring");
        seen.emplace(prod, *elem);
        next.push_back(prod);
      }
    }
    frontier = std::move(next);
  }
  std::vector<BurnsideElement> out;
  for (auto &[bits, elem] : seen) out.push_back(elem);
  std::sort(out.begin(), out.end(),
            [](const BurnsideElement &a, const BurnsideElement &b) { return a.coeffs < b.coeffs; });
  return out;
}

Int matsuda_unit_count(const Collection &d, const BasicCollection &s) {
  if (d.lattice() != s.lattice()) throw ParentMismatch("matsuda_unit_count");
  const int full = d.lattice()->full_subgroup_id();
  Int count = 2;
  for (int id : s.member_ids()) {
    if (id == full) continue;
    count *= static_cast<int>(nil_square_set(bs_family(d, s, id)).size());
  }
  return count;
}

std::vector<BurnsideElement> matsuda_unit_generators(const Collection &d,
                                                     const BasicCollection &s) {
  if (d.lattice() != s.lattice()) throw ParentMismatch("matsuda_unit_generators");
  const int full = d.lattice()->full_subgroup_id();
  MarkMatrix m = table_of_marks(d);
  std::vector<BurnsideElement> gens{neg(one_element(d))};
  for (int id : s.member_ids()) {
    if (id == full) continue; // H = G only contributes 1 + (-2) = -1 again
    for (const BurnsideElement &x : nil_square_set(bs_family(d, s, id))) {
      if (x.is_zero()) continue;
      gens.push_back(add(one_element(d), embed(x, d)));
    }
  }
  for (const BurnsideElement &u : gens)
    sign_bits(ghost(m, u.coeffs)); // throws unless every coordinate is +-1
  return gens;
}

Int normal_collection_unit_formula(const LatticePtr &lattice) {
  int count = 0;
  for (int i = 0; i < lattice->subgroup_count(); ++i)
    if (lattice->subgroup(i).index() <= 2) ++count;
  return Int(1) << count;
}

CheckReport decomposition_check(const Collection &d, const BasicCollection &s) {
  CheckReport report;
  report.claim = "B(G,D) decomposes as the direct sum of B(G,bs(D,H)) over H in S^D";
  const SubgroupLattice &lat = *d.lattice();

  std::vector<int> sd = s_upper_d(d, s);
  std::map<int, Collection> parts;
  for (int id : sd) parts.emplace(id, bs_family(d, s, id));

  // (1) the bs families partition D classwise
  std::vector<int> seen(lat.class_count(), -1);
  std::vector<int> covered;
  for (const auto &[id, part] : parts) {
    for (int c : part.class_ids()) {
      if (seen[c] >= 0) {
        report.fail_with("class " + class_label(lat, c) + " lies in bs of members " +
                         std::to_string(seen[c]) + " and " + std::to_string(id));
        break;
      }
      seen[c] = id;
      covered.push_back(c);
    }
  }
  std::sort(covered.begin(), covered.end());
  if (report.passed() && covered != d.class_ids())
    report.fail_with("union of bs families differs from D");
  report.add("partition_sizes", [&] {
    std::string t;
    for (const auto &[id, part] : parts)
      t += (t.empty() ? "" : ",") + std::to_string(part.size());
    return t;
  }());

  // (2) products land in bs(D, H1 cap H2)
  for (int id1 : sd) {
    for (int id2 : sd) {
      if (!report.passed()) break;
      Subgroup meet = intersect(lat.subgroup(id1), lat.subgroup(id2));
      for (int c1 : parts.at(id1).class_ids()) {
        for (int c2 : parts.at(id2).class_ids()) {
          BurnsideElement prod = multiply_cosets(basis_element(d, d.position_of_class(c1)),
                                                 basis_element(d, d.position_of_class(c2)));
          for (int t = 0; t < d.size(); ++t) {
            if (prod.coeffs[t] == 0) continue;
            const Subgroup &rep = lat.class_rep(d.class_ids()[t]);
            bool ok = rep.contains_subgroup(meet);
            if (ok) {
              for (int other : s.member_ids()) {
                const Subgroup &hp = lat.subgroup(other);
                if (hp.contains_subgroup(meet) && !(hp == meet) && rep.contains_subgroup(hp)) {
                  ok = false;
                  break;
                }
              }
            }
            if (!ok) {
              report.fail_with("product of " + class_label(lat, c1) + " and " +
                               class_label(lat, c2) + " hits class " +
                               class_label(lat, d.class_ids()[t]) +
                               " outside bs(D, H1 cap H2)");
              break;
            }
          }
          if (!report.passed()) break;
        }
        if (!report.passed()) break;
      }
    }
  }

  // (3) bs(D,G) = {(G)}
  Collection top = bs_family(d, s, lat.full_subgroup_id());
  if (report.passed() &&
      !(top.size() == 1 && top.class_ids()[0] == lat.full_class()))
    report.fail_with("bs(D,G) is not {(G)}");

  report.add("parts", std::to_string(parts.size()));
  return report;
}

} // namespace pbr
