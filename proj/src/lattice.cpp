#include "pbr/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pbr/errors.hpp"

namespace pbr {

SubgroupLattice::SubgroupLattice(GroupPtr parent) : parent_(std::move(parent)) {
  const Group &g = *parent_;
  const int n = g.order();

  // All cyclic subgroups.
  std::set<std::vector<std::uint8_t>> masks;
  std::vector<std::vector<std::uint8_t>> cyclics;
  for (int e = 0; e < n; ++e) {
    std::vector<std::uint8_t> mask(n, 0);
    int x = e;
    mask[0] = 1;
    while (x != 0) {
      mask[x] = 1;
      x = g.mult(x, e);
    }
    if (masks.insert(mask).second) cyclics.push_back(mask);
  }

  // Close under join with cyclic subgroups until stable.
  std::vector<std::vector<std::uint8_t>> worklist(masks.begin(), masks.end());
  while (!worklist.empty()) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto &hmask : worklist) {
      for (const auto &cmask : cyclics) {
        std::vector<int> seed;
        for (int i = 0; i < n; ++i)
          if (hmask[i] || cmask[i]) seed.push_back(i);
        Subgroup j = subgroup_closure(parent_, seed);
        if (masks.insert(j.mask()).second) next.push_back(j.mask());
      }
    }
    worklist = std::move(next);
  }

  subgroups_.reserve(masks.size());
  std::vector<std::vector<std::uint8_t>> ordered(masks.begin(), masks.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto &a, const auto &b) {
    int oa = static_cast<int>(std::count(a.begin(), a.end(), 1));
    int ob = static_cast<int>(std::count(b.begin(), b.end(), 1));
    if (oa != ob) return oa < ob;
    return a < b;
  });
  for (auto &m : ordered) subgroups_.emplace_back(parent_, std::move(m));

  mask_index_.reserve(subgroups_.size());
  for (int i = 0; i < subgroup_count(); ++i) mask_index_.push_back({subgroups_[i].mask(), i});
  std::sort(mask_index_.begin(), mask_index_.end());

  normal_.resize(subgroups_.size());
  for (int i = 0; i < subgroup_count(); ++i) normal_[i] = is_normal(subgroups_[i]);

  // Conjugation orbits; orbit under the generators is the orbit under G.
  class_of_.assign(subgroups_.size(), -1);
  std::vector<std::vector<int>> raw_classes;
  for (int i = 0; i < subgroup_count(); ++i) {
    if (class_of_[i] >= 0) continue;
    std::vector<int> orbit{i};
    class_of_[i] = static_cast<int>(raw_classes.size());
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (int gi : g.generator_indices()) {
        Subgroup c = conjugate_subgroup(subgroups_[orbit[k]], gi);
        int id = find_subgroup(c.mask());
        if (id < 0) throw InternalInconsistency("conjugate subgroup missing from lattice");
        if (class_of_[id] < 0) {
          class_of_[id] = class_of_[i];
          orbit.push_back(id);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw_classes.push_back(std::move(orbit));
  }

  // Canonical class order: ascending subgroup order, then least member mask.
  std::vector<int> perm(raw_classes.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const Subgroup &ra = subgroups_[raw_classes[a][0]];
    const Subgroup &rb = subgroups_[raw_classes[b][0]];
    if (ra.order() != rb.order()) return ra.order() < rb.order();
    return ra.mask() < rb.mask();
  });
  classes_.resize(raw_classes.size());
  for (size_t c = 0; c < perm.size(); ++c) classes_[c] = raw_classes[perm[c]];
  for (int c = 0; c < class_count(); ++c)
    for (int id : classes_[c]) class_of_[id] = c;

  // Subconjugacy between classes: rep of K contained in some member of (H).
  const int nc = class_count();
  subconj_.assign(static_cast<size_t>(nc) * nc, 0);
  for (int ck = 0; ck < nc; ++ck) {
    const Subgroup &rep = class_rep(ck);
    for (int ch = 0; ch < nc; ++ch) {
      bool below = false;
      for (int id : classes_[ch])
        if (subgroups_[id].contains_subgroup(rep)) { below = true; break; }
      subconj_[ck * nc + ch] = below;
    }
  }
}

int SubgroupLattice::find_subgroup(const std::vector<std::uint8_t> &mask) const {
  auto it = std::lower_bound(mask_index_.begin(), mask_index_.end(), mask,
                             [](const auto &entry, const auto &m) { return entry.first < m; });
  if (it == mask_index_.end() || it->first != mask) return -1;
  return it->second;
}

int SubgroupLattice::class_of_mask(const std::vector<std::uint8_t> &mask) const {
  int id = find_subgroup(mask);
  if (id < 0) throw InternalInconsistency("subgroup mask not present in lattice");
  return class_of_[id];
}

LatticePtr all_subgroups(GroupPtr g) {
  return std::make_shared<SubgroupLattice>(std::move(g));
}

namespace {

// Check intersection closure; classes are conjugation-closed by construction,
// so it suffices to intersect each class representative with every member of
// every class in the family.
bool intersection_closed(const SubgroupLattice &lat, const std::vector<int> &class_ids,
                         std::string *witness) {
  std::vector<std::uint8_t> in_family(lat.class_count(), 0);
  for (int c : class_ids) in_family[c] = 1;
  for (int c1 : class_ids) {
    const Subgroup &h = lat.class_rep(c1);
    for (int c2 : class_ids) {
      for (int id : lat.class_members(c2)) {
        Subgroup meet = intersect(h, lat.subgroup(id));
        if (!in_family[lat.class_of_mask(meet.mask())]) {
          if (witness)
            *witness = "classes " + std::to_string(c1) + " and " + std::to_string(c2) +
                       " intersect into class " + std::to_string(lat.class_of_mask(meet.mask()));
          return false;
        }
      }
    }
  }
  return true;
}

} // namespace

Collection::Collection(LatticePtr lattice, std::vector<int> class_ids)
    : lattice_(std::move(lattice)), class_ids_(std::move(class_ids)) {
  std::sort(class_ids_.begin(), class_ids_.end());
  class_ids_.erase(std::unique(class_ids_.begin(), class_ids_.end()), class_ids_.end());
  for (int c : class_ids_)
    if (c < 0 || c >= lattice_->class_count())
      throw Error("class id out of range: " + std::to_string(c));
  std::string witness;
  if (!intersection_closed(*lattice_, class_ids_, &witness))
    throw NotIntersectionClosed(witness);
  is_collection_ = !class_ids_.empty() && class_ids_.back() == lattice_->full_class();
}

bool Collection::contains_class(int c) const {
  return std::binary_search(class_ids_.begin(), class_ids_.end(), c);
}

int Collection::position_of_class(int c) const {
  auto it = std::lower_bound(class_ids_.begin(), class_ids_.end(), c);
  if (it == class_ids_.end() || *it != c) return -1;
  return static_cast<int>(it - class_ids_.begin());
}

BasicCollection::BasicCollection(LatticePtr lattice, std::vector<int> member_ids)
    : lattice_(std::move(lattice)), member_ids_(std::move(member_ids)) {
  std::sort(member_ids_.begin(), member_ids_.end());
  member_ids_.erase(std::unique(member_ids_.begin(), member_ids_.end()), member_ids_.end());
  std::string why;
  if (!is_basic_collection(lattice_, member_ids_, &why)) {
    if (why.rfind("non-normal", 0) == 0) throw NotNormalMember(why);
    throw Error("not a basic collection: " + why);
  }
}

bool is_basic_collection(const LatticePtr &lattice, const std::vector<int> &member_ids,
                         std::string *why) {
  const SubgroupLattice &lat = *lattice;
  auto fail = [&](const std::string &msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<std::uint8_t> in_set(lat.subgroup_count(), 0);
  for (int id : member_ids) {
    if (id < 0 || id >= lat.subgroup_count()) return fail("member id out of range");
    in_set[id] = 1;
  }
  if (!in_set[0]) return fail("missing the trivial subgroup");
  for (int id : member_ids)
    if (!lat.subgroup_is_normal(id))
      return fail("non-normal member: subgroup " + std::to_string(id));
  for (int a : member_ids) {
    for (int b : member_ids) {
      Subgroup hk = join(lat.subgroup(a), lat.subgroup(b));
      int id = lat.find_subgroup(hk.mask());
      if (id < 0 || !in_set[id])
        return fail("join of members " + std::to_string(a) + "," + std::to_string(b) +
                    " is outside the set");
    }
  }
  return true;
}

Collection collection_from_predicate(LatticePtr lattice,
                                     const std::function<bool(int)> &class_pred) {
  std::vector<int> ids;
  for (int c = 0; c < lattice->class_count(); ++c)
    if (class_pred(c)) ids.push_back(c);
  return Collection(std::move(lattice), std::move(ids));
}

Collection full_collection(LatticePtr lattice) {
  return collection_from_predicate(std::move(lattice), [](int) { return true; });
}

Collection normal_collection(LatticePtr lattice) {
  const SubgroupLattice &lat = *lattice;
  return collection_from_predicate(std::move(lattice),
                                   [&lat](int c) { return lat.class_is_normal(c); });
}

Collection collection_closure(LatticePtr lattice, const std::vector<int> &seed_classes) {
  const SubgroupLattice &lat = *lattice;
  std::set<int> ids(seed_classes.begin(), seed_classes.end());
  ids.insert(lat.full_class());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(ids.begin(), ids.end());
    for (int c1 : cur) {
      const Subgroup &h = lat.class_rep(c1);
      for (int c2 : cur) {
        for (int id : lat.class_members(c2)) {
          int meet = lat.class_of_mask(intersect(h, lat.subgroup(id)).mask());
          if (ids.insert(meet).second) grew = true;
        }
      }
    }
  }
  return Collection(std::move(lattice), std::vector<int>(ids.begin(), ids.end()));
}

Collection sub_over(LatticePtr lattice, const Subgroup &n) {
  if (n.parent() != lattice->parent()) throw ParentMismatch("sub_over");
  if (!is_normal(n)) throw NotNormal("sub_over requires a normal subgroup");
  const SubgroupLattice &lat = *lattice;
  return collection_from_predicate(std::move(lattice), [&](int c) {
    return lat.class_rep(c).contains_subgroup(n); // class-invariant since n is normal
  });
}

Collection restrict_over(const Collection &d, const Subgroup &n) {
  if (n.parent() != d.lattice()->parent()) throw ParentMismatch("restrict_over");
  if (!is_normal(n)) throw NotNormal("restrict_over requires a normal subgroup");
  const SubgroupLattice &lat = *d.lattice();
  std::vector<int> ids;
  for (int c : d.class_ids())
    if (lat.class_rep(c).contains_subgroup(n)) ids.push_back(c);
  return Collection(d.lattice(), std::move(ids));
}

Collection image_collection(const GroupHom &f, const Collection &d, LatticePtr target_lattice) {
  if (!f.is_surjective()) throw NotSurjective("image_collection");
  if (d.lattice()->parent() != f.source()) throw ParentMismatch("image_collection");
  if (target_lattice->parent() != f.target()) throw ParentMismatch("image_collection target");
  const SubgroupLattice &lat = *d.lattice();
  Subgroup ker = hom_kernel(f);
  std::vector<int> ids;
  for (int c : d.class_ids()) {
    const Subgroup &h = lat.class_rep(c);
    if (!h.contains_subgroup(ker)) continue;
    Subgroup img = hom_image(f, h);
    ids.push_back(target_lattice->class_of_mask(img.mask()));
  }
  // The Collection constructor re-checks intersection closure; a failure here
  // would be an implementation bug, not a property of the input.
  return Collection(std::move(target_lattice), std::move(ids));
}

Collection parabolic_collection(LatticePtr lattice) {
  const GroupPtr &g = lattice->parent();
  if (!g->coxeter()) throw NotDihedral("parabolic_collection");
  const CoxeterData &cox = *g->coxeter();
  std::vector<int> ids;
  ids.push_back(lattice->trivial_class());
  ids.push_back(lattice->class_of_mask(subgroup_closure(g, {cox.tau}).mask()));
  ids.push_back(lattice->class_of_mask(subgroup_closure(g, {cox.sigma_tau}).mask()));
  ids.push_back(lattice->full_class());
  return Collection(std::move(lattice), std::move(ids));
}

BasicCollection standard_basic(LatticePtr lattice, BasicKind kind, int normal_id) {
  const SubgroupLattice &lat = *lattice;
  std::vector<int> ids;
  switch (kind) {
    case BasicKind::AllNormal:
      for (int i = 0; i < lat.subgroup_count(); ++i)
        if (lat.subgroup_is_normal(i)) ids.push_back(i);
      break;
    case BasicKind::TrivialAndFull:
      ids = {0, lat.full_subgroup_id()};
      break;
    case BasicKind::WithNormal:
      if (normal_id < 0 || normal_id >= lat.subgroup_count())
        throw Error("subgroup id out of range for basic collection");
      ids = {0, normal_id, lat.full_subgroup_id()};
      break;
  }
  return BasicCollection(std::move(lattice), std::move(ids));
}

Collection bs_family(const Collection &d, const BasicCollection &s, int member_id) {
  if (d.lattice() != s.lattice()) throw ParentMismatch("bs_family");
  const SubgroupLattice &lat = *d.lattice();
  const auto &members = s.member_ids();
  if (!std::binary_search(members.begin(), members.end(), member_id))
    throw Error("bs_family: subgroup is not a member of the basic collection");
  const Subgroup &h = lat.subgroup(member_id);
  std::vector<int> ids;
  for (int c : d.class_ids()) {
    const Subgroup &f = lat.class_rep(c); // membership is class-invariant: S-members are normal
    if (!f.contains_subgroup(h)) continue;
    bool blocked = false;
    for (int other : members) {
      if (other == member_id) continue;
      const Subgroup &hp = lat.subgroup(other);
      if (hp.contains_subgroup(h) && f.contains_subgroup(hp)) { blocked = true; break; }
    }
    if (!blocked) ids.push_back(c);
  }
  return Collection(d.lattice(), std::move(ids));
}

std::vector<int> s_upper_d(const Collection &d, const BasicCollection &s) {
  std::vector<int> out;
  for (int id : s.member_ids())
    if (bs_family(d, s, id).size() > 0) out.push_back(id);
  return out;
}

std::string class_label(const SubgroupLattice &lattice, int class_id) {
  if (class_id == lattice.trivial_class()) return "1";
  if (class_id == lattice.full_class()) return "G";
  int order = lattice.class_order(class_id);
  int nth = 0;
  for (int c = 0; c < class_id; ++c)
    if (lattice.class_order(c) == order) ++nth;
  return "C" + std::to_string(order) + "#" + std::to_string(nth + 1);
}

namespace {

std::string strip_ws(const std::string &s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

int parse_id(const std::string &s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SpecParseError("expected a subgroup id, got '" + s + "'");
  return std::stoi(s);
}

} // namespace

Collection collection_from_spec(LatticePtr lattice, const std::string &raw) {
  std::string s = strip_ws(raw);
  if (s == "all") return full_collection(std::move(lattice));
  if (s == "normal") return normal_collection(std::move(lattice));
  if (s == "parabolic") return parabolic_collection(std::move(lattice));
  if (s.rfind("over:", 0) == 0) {
    int id = parse_id(strip_ws(s.substr(5)));
    if (id < 0 || id >= lattice->subgroup_count()) throw SpecParseError("subgroup id out of range");
    Subgroup n = lattice->subgroup(id);
    return sub_over(std::move(lattice), n);
  }
  if (s.rfind("closure:[", 0) == 0) {
    if (s.back() != ']') throw SpecParseError("unterminated closure:[...]");
    std::string body = s.substr(9, s.size() - 10);
    std::vector<int> ids;
    std::string cur;
    for (char c : body + ",") {
      if (c == ',') {
        if (!strip_ws(cur).empty()) ids.push_back(parse_id(strip_ws(cur)));
        cur.clear();
      } else {
        cur += c;
      }
    }
    for (int c : ids)
      if (c < 0 || c >= lattice->class_count()) throw SpecParseError("class id out of range");
    return collection_closure(std::move(lattice), ids);
  }
  if (s.rfind("restrict(", 0) == 0) {
    if (s.back() != ')') throw SpecParseError("unterminated restrict(...)");
    std::string body = s.substr(9, s.size() - 10);
    // split on the last top-level comma: the inner spec may contain commas
    int depth = 0;
    size_t comma = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(' || body[i] == '[') ++depth;
      if (body[i] == ')' || body[i] == ']') --depth;
      if (body[i] == ',' && depth == 0) comma = i;
    }
    if (comma == std::string::npos) throw SpecParseError("restrict takes a spec and a subgroup id");
    Collection inner = collection_from_spec(lattice, body.substr(0, comma));
    int id = parse_id(strip_ws(body.substr(comma + 1)));
    if (id < 0 || id >= lattice->subgroup_count()) throw SpecParseError("subgroup id out of range");
    return restrict_over(inner, lattice->subgroup(id));
  }
  throw SpecParseError("unknown collection spec: " + s);
}

BasicCollection basic_from_spec(LatticePtr lattice, const std::string &raw) {
  std::string s = strip_ws(raw);
  if (s == "normal") return standard_basic(std::move(lattice), BasicKind::AllNormal);
  if (s == "trivial") return standard_basic(std::move(lattice), BasicKind::TrivialAndFull);
  if (s.rfind("with:", 0) == 0) {
    int id = parse_id(strip_ws(s.substr(5)));
    return standard_basic(std::move(lattice), BasicKind::WithNormal, id);
  }
  throw SpecParseError("unknown basic collection spec: " + s);
}

} // namespace pbr
