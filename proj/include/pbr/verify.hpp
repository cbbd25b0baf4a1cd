#ifndef PBR_VERIFY_HPP
#define PBR_VERIFY_HPP

#include <string>
#include <vector>

#include "pbr/burnside.hpp"

namespace pbr {

struct VerifyCase {
  std::string name;
  std::string claim;
  CheckStatus status = CheckStatus::pass;
  std::string expected;
  std::string computed;
  long long elapsed_ms = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases; // sorted by case name

  bool all_passed() const;
  int failed_count() const;
};

const std::vector<std::string> &verify_suite_names();

/// Run one of: paper, lattice-oracle, ring-axioms, matsuda, morphisms, fw.
VerifyReport verify_suite(const std::string &name);

/// The shared desk-scale corpus (group-spec strings, orders <= 42).
const std::vector<std::string> &corpus_specs();
/// Cached group/lattice construction for corpus members.
GroupPtr corpus_group(const std::string &spec);
LatticePtr corpus_lattice(const std::string &spec);
/// The non-nilpotent order-42 member, (C7:C3) x C2.
const std::string &order42_spec();

/// Exhaustive-subset oracle: every subgroup of g found by scanning all
/// identity-containing subsets (requires |g| <= 24). Returns sorted masks.
std::vector<std::vector<std::uint8_t>> subset_scan_subgroups(const Group &g);

/// Collections exercised for a corpus group: sub(G), N(G), parabolic when
/// defined, and two seeded pseudo-random closures.
std::vector<std::pair<std::string, Collection>> corpus_collections(const LatticePtr &lattice);

/// Basic collections exercised: all normals, {<1>,G}, and {<1>,N,G} for
/// every normal subgroup N.
std::vector<std::pair<std::string, BasicCollection>> corpus_basics(const LatticePtr &lattice);

} // namespace pbr

#endif
