#ifndef PBR_GROUP_HPP
#define PBR_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pbr/perm.hpp"

namespace pbr {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

inline constexpr int kDefaultOrderCap = 128;

/// Coxeter data recorded when a group is built as dihedral:m (type I2(m)).
struct CoxeterData {
  int m = 0;
  int tau = 0;       // element index of the first Coxeter generator
  int sigma_tau = 0; // element index of the second Coxeter generator
};

/// A finite group realized as a permutation group with a full element table.
/// Elements are canonically ordered (lexicographic on image sequences), which
/// places the identity at index 0. Immutable after construction.
class Group {
public:
  Group(int degree, std::vector<Perm> generators, int order_cap);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm> &generators() const { return generators_; }
  const std::vector<Perm> &elements() const { return elements_; }
  const Perm &element(int i) const { return elements_[i]; }

  int mult(int i, int j) const { return mult_table_[i * order() + j]; }
  int inv(int i) const { return inverse_[i]; }
  int conj(int g, int x) const { return mult(mult(g, x), inv(g)); } // g x g^-1

  /// Index of a permutation in the element table, or -1.
  int index_of(const Perm &p) const;
  /// Indices of the recorded generators.
  const std::vector<int> &generator_indices() const { return generator_indices_; }

  int element_order(int i) const;
  bool is_abelian() const;

  const std::optional<CoxeterData> &coxeter() const { return coxeter_; }
  void set_coxeter(CoxeterData data) { coxeter_ = data; }

  /// Group-spec string this group was built from, when built via builtin_group.
  const std::string &spec() const { return spec_; }
  void set_spec(std::string s) { spec_ = std::move(s); }

private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<int> mult_table_;
  std::vector<int> inverse_;
  std::vector<int> generator_indices_;
  std::optional<CoxeterData> coxeter_;
  std::string spec_;
};

/// A subgroup of a fixed parent group, stored as a dense membership mask.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<std::uint8_t> mask);

  const GroupPtr &parent() const { return parent_; }
  const std::vector<std::uint8_t> &mask() const { return mask_; }
  const std::vector<int> &elems() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(int element) const { return mask_[element] != 0; }
  bool contains_subgroup(const Subgroup &other) const;

  bool operator==(const Subgroup &rhs) const { return parent_ == rhs.parent_ && mask_ == rhs.mask_; }

private:
  GroupPtr parent_;
  std::vector<std::uint8_t> mask_;
  std::vector<int> elems_;
};

/// A homomorphism stored as a full element-index map; validated at construction.
class GroupHom {
public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images);

  const GroupPtr &source() const { return source_; }
  const GroupPtr &target() const { return target_; }
  int apply(int element) const { return images_[element]; }
  const std::vector<int> &images() const { return images_; }
  bool is_surjective() const;
  bool is_bijective() const { return is_surjective() && source_->order() == target_->order(); }

private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<int> images_;
};

GroupPtr group_from_generators(int degree, const std::vector<Perm> &gens,
                               int order_cap = kDefaultOrderCap);

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup subgroup_closure(GroupPtr g, const std::vector<int> &seed);
Subgroup subgroup_from_elements(GroupPtr g, const std::vector<int> &elements);

Subgroup conjugate_subgroup(const Subgroup &h, int g);
Subgroup intersect(const Subgroup &h, const Subgroup &k);
Subgroup join(const Subgroup &h, const Subgroup &k);

bool is_normal(const Subgroup &h);
Subgroup normalizer(const Subgroup &h);
Subgroup centralizer_of_group(GroupPtr g); // the center
Subgroup commutator_subgroup(GroupPtr g);

/// Lower central series G = g1 >= g2 >= ... with g_{k+1} = [g_k, G];
/// stops when stable. A group is nilpotent iff the series reaches <1>.
std::vector<Subgroup> lower_central_series(GroupPtr g);
bool is_nilpotent(GroupPtr g);

/// G/N as the permutation group on the cosets of N (left multiplication),
/// together with the canonical surjection.
std::pair<GroupPtr, GroupHom> quotient_group(GroupPtr g, const Subgroup &n);

Subgroup hom_image(const GroupHom &f, const Subgroup &h);
Subgroup hom_kernel(const GroupHom &f);

} // namespace pbr

#endif
