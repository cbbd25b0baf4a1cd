#ifndef PBR_LATTICE_HPP
#define PBR_LATTICE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pbr/group.hpp"

namespace pbr {

class SubgroupLattice;
using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// The full subgroup lattice of a group: every subgroup, the partition into
/// conjugacy classes, and the subconjugacy relation between classes.
/// Subgroups are canonically ordered by (order, membership mask); classes by
/// (order, least member mask), so class 0 is <1> and the last class is G.
class SubgroupLattice {
public:
  explicit SubgroupLattice(GroupPtr parent);

  const GroupPtr &parent() const { return parent_; }
  int subgroup_count() const { return static_cast<int>(subgroups_.size()); }
  int class_count() const { return static_cast<int>(classes_.size()); }

  const Subgroup &subgroup(int id) const { return subgroups_[id]; }
  const std::vector<Subgroup> &subgroups() const { return subgroups_; }

  /// Subgroup ids in class c, ascending.
  const std::vector<int> &class_members(int c) const { return classes_[c]; }
  /// Representative = member with the least mask.
  const Subgroup &class_rep(int c) const { return subgroups_[classes_[c][0]]; }
  int class_of_subgroup(int id) const { return class_of_[id]; }
  int class_order(int c) const { return class_rep(c).order(); }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  bool class_is_normal(int c) const { return class_size(c) == 1 && normal_[classes_[c][0]]; }
  bool subgroup_is_normal(int id) const { return normal_[id]; }

  int trivial_class() const { return 0; }
  int full_class() const { return class_count() - 1; }
  int full_subgroup_id() const { return classes_.back()[0]; }

  /// id of the subgroup with this mask, or -1.
  int find_subgroup(const std::vector<std::uint8_t> &mask) const;
  int find_subgroup(const Subgroup &h) const { return find_subgroup(h.mask()); }
  /// class of the subgroup with this mask (must exist).
  int class_of_mask(const std::vector<std::uint8_t> &mask) const;

  /// Subconjugacy: some conjugate of a class-k subgroup lies in a class-h one.
  bool subconjugate(int class_k, int class_h) const {
    return subconj_[class_k * class_count() + class_h] != 0;
  }

private:
  GroupPtr parent_;
  std::vector<Subgroup> subgroups_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::uint8_t> normal_;
  std::vector<std::uint8_t> subconj_;
  std::vector<std::pair<std::vector<std::uint8_t>, int>> mask_index_; // sorted
};

LatticePtr all_subgroups(GroupPtr g);

/// A conjugation- and intersection-closed family of subgroups, stored as a
/// set of conjugacy-class ids. Contains G iff is_collection() is true.
class Collection {
public:
  Collection(LatticePtr lattice, std::vector<int> class_ids); // validates intersection closure

  const LatticePtr &lattice() const { return lattice_; }
  const std::vector<int> &class_ids() const { return class_ids_; }
  int size() const { return static_cast<int>(class_ids_.size()); }
  bool is_collection() const { return is_collection_; }
  bool contains_class(int c) const;
  /// Position of a lattice class id within this family, or -1.
  int position_of_class(int c) const;

  bool operator==(const Collection &rhs) const {
    return lattice_ == rhs.lattice_ && class_ids_ == rhs.class_ids_;
  }

private:
  LatticePtr lattice_;
  std::vector<int> class_ids_; // ascending lattice class ids
  bool is_collection_ = false;
};

/// A set of normal subgroups containing <1>, closed under join.
class BasicCollection {
public:
  BasicCollection(LatticePtr lattice, std::vector<int> member_ids); // validates the axioms

  const LatticePtr &lattice() const { return lattice_; }
  const std::vector<int> &member_ids() const { return member_ids_; }
  int size() const { return static_cast<int>(member_ids_.size()); }

private:
  LatticePtr lattice_;
  std::vector<int> member_ids_; // ascending subgroup ids, all normal
};

Collection collection_from_predicate(LatticePtr lattice,
                                     const std::function<bool(int)> &class_pred);
Collection full_collection(LatticePtr lattice);
Collection normal_collection(LatticePtr lattice);
Collection collection_closure(LatticePtr lattice, const std::vector<int> &seed_classes);
Collection sub_over(LatticePtr lattice, const Subgroup &n);
Collection restrict_over(const Collection &d, const Subgroup &n);

/// {f(H) : H in D, ker f <= H} as a collection on the target lattice.
Collection image_collection(const GroupHom &f, const Collection &d, LatticePtr target_lattice);

/// Classes of <J> for J a subset of the recorded Coxeter generators.
Collection parabolic_collection(LatticePtr lattice);

enum class BasicKind { AllNormal, TrivialAndFull, WithNormal };
bool is_basic_collection(const LatticePtr &lattice, const std::vector<int> &member_ids,
                         std::string *why = nullptr);
BasicCollection standard_basic(LatticePtr lattice, BasicKind kind, int normal_id = -1);

/// bs(D,H) = { F in D : H <= F, and no H' in S with H < H' <= F }.
/// H is given as a member id of S. The result is a closed family (it may be
/// empty and need not contain G).
Collection bs_family(const Collection &d, const BasicCollection &s, int member_id);

/// { H in S : bs(D,H) nonempty }, as member ids of S.
std::vector<int> s_upper_d(const Collection &d, const BasicCollection &s);

/// Cosmetic class label, e.g. "C2#1" (order 2, first such class), "1", "G".
std::string class_label(const SubgroupLattice &lattice, int class_id);

/// Collection-spec strings: all | normal | over:<subgroup-id> | parabolic
/// | closure:[ids] | restrict(<spec>,<subgroup-id>).
Collection collection_from_spec(LatticePtr lattice, const std::string &spec);

/// Basic-collection specs: normal | trivial | with:<subgroup-id>.
BasicCollection basic_from_spec(LatticePtr lattice, const std::string &spec);

} // namespace pbr

#endif
