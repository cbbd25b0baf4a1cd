#include "pbr/morphisms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pbr/builtin.hpp"
#include "pbr/errors.hpp"

namespace pbr {

namespace {

std::string pair_witness(const Collection &d, int i, int j, const char *what) {
  const SubgroupLattice &lat = *d.lattice();
  return std::string(what) + " mismatch at basis pair (" +
         class_label(lat, d.class_ids()[i]) + ", " + class_label(lat, d.class_ids()[j]) + ")";
}

// Shared verification: bijectivity, mark-matrix equality, structure constants.
void verify_iso(RingIso &iso) {
  const int n = iso.source.size();
  if (iso.target.size() != n)
    throw VerificationFailed("class counts differ: " + std::to_string(n) + " vs " +
                             std::to_string(iso.target.size()));
  std::vector<std::uint8_t> hit(n, 0);
  for (int v : iso.class_map) {
    if (v < 0 || v >= n || hit[v]) throw VerificationFailed("class map is not a bijection");
    hit[v] = 1;
  }

  MarkMatrix ms = table_of_marks(iso.source);
  MarkMatrix mt = table_of_marks(iso.target);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (ms.entries[i][j] != mt.entries[iso.class_map[i]][iso.class_map[j]])
        throw VerificationFailed(pair_witness(iso.source, i, j, "mark"));

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BurnsideElement ps = multiply_cosets(basis_element(iso.source, i), basis_element(iso.source, j));
      BurnsideElement pt = multiply_cosets(basis_element(iso.target, iso.class_map[i]),
                                           basis_element(iso.target, iso.class_map[j]));
      for (int k = 0; k < n; ++k)
        if (ps.coeffs[k] != pt.coeffs[iso.class_map[k]])
          throw VerificationFailed(pair_witness(iso.source, i, j, "structure constant"));
    }
  }
  iso.verified = true;
}

} // namespace

RingIso quotient_iso(const LatticePtr &lattice, const Subgroup &n) {
  if (n.parent() != lattice->parent()) throw ParentMismatch("quotient_iso");
  auto [q, pi] = quotient_group(lattice->parent(), n);
  LatticePtr qlat = all_subgroups(q);

  RingIso iso{sub_over(lattice, n), full_collection(qlat), {}, false};
  for (int c : iso.source.class_ids()) {
    Subgroup img = hom_image(pi, lattice->class_rep(c));
    int pos = iso.target.position_of_class(qlat->class_of_mask(img.mask()));
    if (pos < 0) throw VerificationFailed("image class missing from the quotient lattice");
    iso.class_map.push_back(pos);
  }
  verify_iso(iso);
  return iso;
}

RingIso surjection_iso(const GroupHom &f, const Collection &d) {
  if (!f.is_surjective()) throw NotSurjective("surjection_iso");
  if (d.lattice()->parent() != f.source()) throw ParentMismatch("surjection_iso");
  Subgroup ker = hom_kernel(f);
  LatticePtr tlat = all_subgroups(f.target());

  RingIso iso{restrict_over(d, ker), image_collection(f, d, tlat), {}, false};
  for (int c : iso.source.class_ids()) {
    Subgroup img = hom_image(f, iso.source.lattice()->class_rep(c));
    int pos = iso.target.position_of_class(tlat->class_of_mask(img.mask()));
    if (pos < 0) throw VerificationFailed("image class missing from the target collection");
    iso.class_map.push_back(pos);
  }
  verify_iso(iso);
  return iso;
}

CheckReport matsuda_44_check(const GroupHom &f, const Collection &d) {
  if (!f.is_surjective()) throw NotSurjective("matsuda_44_check");
  const LatticePtr &lat = d.lattice();
  if (lat->parent() != f.source()) throw ParentMismatch("matsuda_44_check");

  CheckReport report;
  report.claim = "unit count of B(G1,D) factors through the image collection of a surjection";

  Subgroup ker = hom_kernel(f);
  int ker_id = lat->find_subgroup(ker);
  BasicCollection s = standard_basic(lat, BasicKind::WithNormal, ker_id);
  report.add("ker_order", std::to_string(ker.order()));
  report.add("ker_in_D", d.contains_class(lat->class_of_subgroup(ker_id)) ? "true" : "false");

  Int lhs = units_bruteforce(d).order();

  LatticePtr tlat = all_subgroups(f.target());
  Collection image = image_collection(f, d, tlat);
  Int image_units = units_bruteforce(image).order();
  Int rhs = image_units;
  for (int id : s.member_ids()) {
    if (id == lat->full_subgroup_id() || id == ker_id) continue;
    Int factor = Int(nil_square_set(bs_family(d, s, id)).size());
    report.add("factor[subgroup " + std::to_string(id) + "]", factor.str());
    rhs *= factor;
  }

  report.add("lhs_units", lhs.str());
  report.add("image_units", image_units.str());
  report.add("rhs_total", rhs.str());
  if (lhs != rhs) report.fail_with("unit counts differ: " + lhs.str() + " vs " + rhs.str());
  return report;
}

FWMap fw_alpha(const LatticePtr &lattice) {
  const GroupPtr &g = lattice->parent();
  const int n = g->order();
  GroupPtr c = builtin_group("cyclic:" + std::to_string(n), std::max(n, kDefaultOrderCap));
  LatticePtr clat = all_subgroups(c);

  FWMap map{c, full_collection(clat), full_collection(lattice), {}};
  MarkMatrix mc = table_of_marks(map.source);

  // Class position in the cyclic lattice of the unique subgroup of a given order.
  auto cyclic_pos = [&](int order) {
    for (int i = 0; i < clat->class_count(); ++i)
      if (clat->class_order(i) == order) return i;
    throw InternalInconsistency("no cyclic subgroup of order " + std::to_string(order));
  };

  const int tn = map.target.size();
  const int sn = map.source.size();
  map.matrix.assign(tn, std::vector<Int>(sn, 0));
  MarkMatrix mg = table_of_marks(map.target);
  for (int j = 0; j < sn; ++j) {
    std::vector<Int> v(tn);
    for (int i = 0; i < tn; ++i)
      v[i] = mc.entries[cyclic_pos(lattice->class_order(map.target.class_ids()[i]))][j];
    auto img = unghost(mg, v);
    if (!img)
      throw InternalInconsistency("Frobenius-Wielandt image of a basis element is not integral");
    for (int i = 0; i < tn; ++i) map.matrix[i][j] = img->coeffs[i];
  }
  return map;
}

BurnsideElement fw_apply(const FWMap &map, const BurnsideElement &x) {
  if (!(x.family == map.source)) throw ParentMismatch("fw_apply");
  BurnsideElement r = zero_element(map.target);
  for (size_t i = 0; i < r.coeffs.size(); ++i)
    for (size_t j = 0; j < x.coeffs.size(); ++j)
      r.coeffs[i] += map.matrix[i][j] * x.coeffs[j];
  return r;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ids of normal subgroups with K <= N and |G:N| = target_index
std::vector<int> qualifying_normals(const SubgroupLattice &lat, const Subgroup &k,
                                    long target_index) {
  std::vector<int> out;
  for (int i = 0; i < lat.subgroup_count(); ++i) {
    if (!lat.subgroup_is_normal(i)) continue;
    const Subgroup &n = lat.subgroup(i);
    if (n.index() == target_index && n.contains_subgroup(k)) out.push_back(i);
  }
  return out;
}

} // namespace

SeminilResult is_seminilpotent(const LatticePtr &lattice, int p, int a) {
  if (!is_prime(p)) throw Error("p must be prime");
  if (a < 1) throw Error("a must be positive");
  const SubgroupLattice &lat = *lattice;
  long pa = 1;
  for (int i = 0; i < a; ++i) pa *= p;

  SeminilResult result;
  for (int id = 0; id < lat.subgroup_count(); ++id) {
    const Subgroup &k = lat.subgroup(id);
    if (k.index() % pa != 0) continue;
    int count = static_cast<int>(qualifying_normals(lat, k, pa).size());
    if (count == 0 || count % p != 1) {
      result.value = false;
      result.certificate.push_back({id, count});
    }
  }
  return result;
}

Subgroup normal_interior(const LatticePtr &lattice, const Subgroup &k) {
  if (k.parent() != lattice->parent()) throw ParentMismatch("normal_interior");
  const SubgroupLattice &lat = *lattice;
  Subgroup acc = full_subgroup(lattice->parent());
  for (int i = 0; i < lat.subgroup_count(); ++i) {
    if (!lat.subgroup_is_normal(i)) continue;
    if (lat.subgroup(i).contains_subgroup(k)) acc = intersect(acc, lat.subgroup(i));
  }
  return acc;
}

CheckReport interior_count_check(const LatticePtr &lattice, int p, int a) {
  CheckReport report;
  report.claim = "normal overgroups of index p^a of K and of its normal interior coincide";
  report.add("p", std::to_string(p));
  report.add("a", std::to_string(a));
  const SubgroupLattice &lat = *lattice;
  long pa = 1;
  for (int i = 0; i < a; ++i) pa *= p;

  for (int id = 0; id < lat.subgroup_count(); ++id) {
    const Subgroup &k = lat.subgroup(id);
    Subgroup kbar = normal_interior(lattice, k);
    std::vector<int> lhs = qualifying_normals(lat, k, pa);
    std::vector<int> rhs = qualifying_normals(lat, kbar, pa);
    if (lhs != rhs) {
      report.fail_with("subgroup " + std::to_string(id) + ": sets of normal overgroups differ");
      return report;
    }
  }
  report.add("subgroups_checked", std::to_string(lat.subgroup_count()));
  return report;
}

namespace {

bool support_is_normal(const BurnsideElement &x) {
  const SubgroupLattice &lat = *x.family.lattice();
  for (int i = 0; i < x.family.size(); ++i)
    if (x.coeffs[i] != 0 && !lat.class_is_normal(x.family.class_ids()[i])) return false;
  return true;
}

std::vector<BurnsideElement> fw_unit_images(const FWMap &map) {
  UnitGroup cyclic_units = units_bruteforce(map.source);
  std::vector<BurnsideElement> images;
  for (const BurnsideElement &u : cyclic_units.all_units) images.push_back(fw_apply(map, u));
  std::sort(images.begin(), images.end(),
            [](const BurnsideElement &a, const BurnsideElement &b) { return a.coeffs < b.coeffs; });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

} // namespace

CheckReport imgfw_check(const LatticePtr &lattice) {
  CheckReport report;
  report.claim = "Frobenius-Wielandt image of the cyclic units lands in B(G,N(G))^x "
                 "and equals <-1, prod of (1-[G/N]) over index-2 normal N>";
  const GroupPtr &g = lattice->parent();
  if (g->order() % 2 != 0) {
    report.status = CheckStatus::not_applicable;
    report.witness = "group order is odd";
    return report;
  }
  SeminilResult semi = is_seminilpotent(lattice, 2, 1);
  if (!semi.value) {
    report.status = CheckStatus::not_applicable;
    report.witness = "group is not 2-seminilpotent";
    return report;
  }

  FWMap map = fw_alpha(lattice);
  std::vector<BurnsideElement> images = fw_unit_images(map);
  report.add("cyclic_units", std::to_string(images.size()));

  MarkMatrix mg = table_of_marks(map.target);
  for (const BurnsideElement &img : images) {
    if (!support_is_normal(img)) {
      report.fail_with("image " + img.to_string() + " has support on a non-normal class");
      return report;
    }
    for (const Int &v : ghost(mg, img.coeffs))
      if (v != 1 && v != -1) {
        report.fail_with("image " + img.to_string() + " is not a unit");
        return report;
      }
  }

  // the claimed generating set
  BurnsideElement prod = one_element(map.target);
  int index2 = 0;
  for (int i = 0; i < lattice->subgroup_count(); ++i) {
    if (!lattice->subgroup_is_normal(i) || lattice->subgroup(i).index() != 2) continue;
    ++index2;
    int pos = map.target.position_of_class(lattice->class_of_subgroup(i));
    prod = multiply_cosets(prod, sub(one_element(map.target), basis_element(map.target, pos)));
  }
  report.add("index2_normals", std::to_string(index2));
  std::vector<BurnsideElement> expected =
      generated_unit_group(map.target, {neg(one_element(map.target)), prod});
  if (images.size() != expected.size() || !std::equal(images.begin(), images.end(), expected.begin()))
    report.fail_with("image group differs from the claimed generating set");
  report.add("image_order", std::to_string(images.size()));
  return report;
}

CheckReport imgfw_counterexample_check(const LatticePtr &lattice) {
  CheckReport report;
  report.claim = "containment of the Frobenius-Wielandt unit image in the normal-class span";
  FWMap map = fw_alpha(lattice);
  for (const BurnsideElement &img : fw_unit_images(map)) {
    if (!support_is_normal(img)) {
      // -1 is in the image too, so normalize the witness to have +1 on (G)
      BurnsideElement witness = img.coeffs.back() > 0 ? img : neg(img);
      report.fail_with("unit image outside the normal span: " + witness.to_string());
      report.add("witness_coeffs", [&] {
        std::string t;
        for (const Int &c : witness.coeffs) t += (t.empty() ? "" : ",") + c.str();
        return t;
      }());
      return report;
    }
  }
  report.add("contained", "true");
  return report;
}

CheckReport oddeq_corpus_check(const LatticePtr &lattice) {
  CheckReport report;
  report.claim = "for odd |G| the unit groups over sub(G), N(G) and sub(G)_{G'} have order 2";
  const GroupPtr &g = lattice->parent();
  if (g->order() % 2 == 0) {
    report.status = CheckStatus::not_applicable;
    report.witness = "group order is even";
    return report;
  }
  Int full = units_bruteforce(full_collection(lattice)).order();
  Int normal = units_bruteforce(normal_collection(lattice)).order();
  Subgroup commutator = commutator_subgroup(g);
  Int over_commutator = units_bruteforce(sub_over(lattice, commutator)).order();
  report.add("units_full", full.str());
  report.add("units_normal", normal.str());
  report.add("units_over_commutator", over_commutator.str());
  if (full != 2) report.fail_with("|B(G)^x| = " + full.str());
  else if (normal != 2) report.fail_with("|B(G,N(G))^x| = " + normal.str());
  else if (over_commutator != 2) report.fail_with("|B(G,sub_G')^x| = " + over_commutator.str());
  return report;
}

} // namespace pbr
