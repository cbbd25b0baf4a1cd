#ifndef PBR_MORPHISMS_HPP
#define PBR_MORPHISMS_HPP

#include "pbr/burnside.hpp"

namespace pbr {

/// A verified ring isomorphism between partial Burnside rings, given as a
/// bijection between the source and target class positions. Verification
/// compares mark matrices and all structure constants under the map.
struct RingIso {
  Collection source;
  Collection target;
  std::vector<int> class_map; // source position -> target position
  bool verified = false;
};

/// B(G/N) ~ B(G, sub(G)_N) via (H) -> (H/N).
RingIso quotient_iso(const LatticePtr &lattice, const Subgroup &n);

/// B(G1, D_ker f) ~ B(G2, f(D_ker f)) via (H) -> (f(H)) for surjective f.
RingIso surjection_iso(const GroupHom &f, const Collection &d);

/// |B(G1,D)^x| = |B(G2, f(D_ker f))^x| * prod of nil-square counts over
/// S \ {G, ker f} with S = {<1>, ker f, G}.
CheckReport matsuda_44_check(const GroupHom &f, const Collection &d);

/// The Frobenius-Wielandt homomorphism B(C_|G|) -> B(G), determined by
/// ghost_K(alpha(x)) = ghost_{C_|K|}(x) for every subgroup K of G.
struct FWMap {
  GroupPtr cyclic_source;
  Collection source; // full collection of the cyclic group
  Collection target; // full collection of G
  std::vector<std::vector<Int>> matrix; // column j = coefficients of alpha(basis j)
};

FWMap fw_alpha(const LatticePtr &lattice);
BurnsideElement fw_apply(const FWMap &map, const BurnsideElement &x);

struct SeminilResult {
  bool value = true;
  struct Failure {
    int subgroup_id;
    int count; // #{N normal : K <= N, |G:N| = p^a}
  };
  std::vector<Failure> certificate;
};

/// p^a-seminilpotency: every subgroup of index divisible by p^a lies in a
/// normal subgroup of index p^a, with the count of those congruent 1 mod p.
SeminilResult is_seminilpotent(const LatticePtr &lattice, int p, int a);

/// Intersection of all normal subgroups containing K (the normal closure).
Subgroup normal_interior(const LatticePtr &lattice, const Subgroup &k);

/// Set equality of {N normal : K<=N, |G:N|=p^a} and the same set over the
/// normal interior of K, for every subgroup K.
CheckReport interior_count_check(const LatticePtr &lattice, int p, int a);

/// For even-order 2-seminilpotent G: alpha(B(C)^x) lies in B(G,N(G))^x and
/// equals <-1, prod over index-2 normal N of (1 - [G/N])>.
CheckReport imgfw_check(const LatticePtr &lattice);

/// Whether alpha(B(C)^x) is contained in the span of normal classes at all;
/// reports the witness unit when it is not.
CheckReport imgfw_counterexample_check(const LatticePtr &lattice);

/// For odd |G|: the unit groups of B(G), B(G,N(G)) and B(G,sub(G)_{G'}) all
/// have order 2.
CheckReport oddeq_corpus_check(const LatticePtr &lattice);

} // namespace pbr

#endif
