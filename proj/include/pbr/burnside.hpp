#ifndef PBR_BURNSIDE_HPP
#define PBR_BURNSIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pbr/lattice.hpp"
#include "pbr/report.hpp"

namespace pbr {

using Int = boost::multiprecision::cpp_int;

inline constexpr int kDefaultSearchCap = 24;

/// The table of marks of a closed family: entry(K,H) = #{gH : K <= gHg^-1},
/// indexed by the family's classes in canonical ascending order. Upper
/// triangular with positive diagonal |N_G(H)|/|H|.
struct MarkMatrix {
  Collection family;
  std::vector<std::vector<Int>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  const Int &at(int k, int h) const { return entries[k][h]; }
  Int det() const;
};

/// An element of the (partial) Burnside ring spanned by [G/H] for classes H
/// of a closed family, as an integer coefficient vector.
struct BurnsideElement {
  Collection family;
  std::vector<Int> coeffs;

  bool is_zero() const;
  bool operator==(const BurnsideElement &rhs) const;
  bool operator!=(const BurnsideElement &rhs) const { return !(*this == rhs); }
  std::string to_string() const; // e.g. "1 + [G/H#0] - 2[G/H#1]"
};

BurnsideElement zero_element(const Collection &d);
BurnsideElement one_element(const Collection &d); // [G/G]; requires a collection
BurnsideElement basis_element(const Collection &d, int position);
BurnsideElement make_element(const Collection &d, std::vector<Int> coeffs);

BurnsideElement add(const BurnsideElement &x, const BurnsideElement &y);
BurnsideElement sub(const BurnsideElement &x, const BurnsideElement &y);
BurnsideElement neg(const BurnsideElement &x);
BurnsideElement scale(const Int &c, const BurnsideElement &x);

/// Embed an element of a subfamily into a larger family on the same lattice.
BurnsideElement embed(const BurnsideElement &x, const Collection &into);

int mark(const Subgroup &k, const Subgroup &h);
MarkMatrix table_of_marks(const Collection &d);

std::vector<Int> ghost(const BurnsideElement &x);
std::vector<Int> ghost(const MarkMatrix &m, const std::vector<Int> &coeffs);

/// Solve M c = v exactly by back-substitution; nullopt when the solution is
/// not integral.
std::optional<BurnsideElement> unghost(const Collection &d, const std::vector<Int> &v);
std::optional<BurnsideElement> unghost(const MarkMatrix &m, const std::vector<Int> &v);

BurnsideElement multiply_cosets(const BurnsideElement &x, const BurnsideElement &y);
BurnsideElement multiply_ghost(const BurnsideElement &x, const BurnsideElement &y);

/// All x with x^2 + 2x = 0, i.e. every ghost coordinate in {0,-2}; sorted by
/// coefficient vector. Always contains 0; for an empty family this is {0}.
std::vector<BurnsideElement> nil_square_set(const Collection &family);

struct UnitGroup {
  Collection family;
  std::vector<BurnsideElement> all_units; // sorted by coefficient vector
  std::vector<BurnsideElement> generators;

  Int order() const { return Int(all_units.size()); }
};

/// All u with every ghost coordinate +-1, by pruned back-substitution over
/// sign choices; generators extracted greedily over GF(2) sign patterns.
UnitGroup units_bruteforce(const Collection &d, int search_cap = kDefaultSearchCap);

Int matsuda_unit_count(const Collection &d, const BasicCollection &s);
std::vector<BurnsideElement> matsuda_unit_generators(const Collection &d, const BasicCollection &s);

/// 2^#{H <= G : |G:H| <= 2}.
Int normal_collection_unit_formula(const LatticePtr &lattice);

/// The three clauses of the direct-sum decomposition over bs families.
CheckReport decomposition_check(const Collection &d, const BasicCollection &s);

/// Closure of a unit list under multiplication, as ghost sign patterns; used
/// to compare a generated unit group against the brute-force one.
std::vector<BurnsideElement> generated_unit_group(const Collection &d,
                                                  const std::vector<BurnsideElement> &gens);

} // namespace pbr

#endif
