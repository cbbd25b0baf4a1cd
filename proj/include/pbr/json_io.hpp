#ifndef PBR_JSON_IO_HPP
#define PBR_JSON_IO_HPP

#include <json.hpp>

#include "pbr/burnside.hpp"
#include "pbr/morphisms.hpp"

namespace pbr {

using Json = nlohmann::ordered_json;

/// Integers are emitted as JSON numbers when they fit 64 bits, otherwise as
/// decimal strings; never as floats.
Json json_int(const Int &v);

Json json_group(const GroupPtr &g);
Json json_lattice(const SubgroupLattice &lattice);
Json json_collection(const Collection &d, const std::string &spec);
Json json_mark_matrix(const MarkMatrix &m);
Json json_element(const BurnsideElement &x);
Json json_unit_group(const UnitGroup &u);
Json json_ring_iso(const RingIso &iso);
Json json_fw_map(const FWMap &map);
Json json_check_report(const CheckReport &report);
Json json_seminil(const SeminilResult &result);

/// A small generating set of a subgroup, as 1-based cycle strings.
std::vector<std::string> subgroup_generator_strings(const Subgroup &h);

} // namespace pbr

#endif
