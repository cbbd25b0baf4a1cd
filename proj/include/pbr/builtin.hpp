#ifndef PBR_BUILTIN_HPP
#define PBR_BUILTIN_HPP

#include <string>

#include "pbr/group.hpp"

namespace pbr {

/// Build a group from a spec string:
///   cyclic:N | dihedral:M | sym:N | alt:N | quaternion:8
///   | prod(SPEC,SPEC) | perm:"(a b ...)(c d ...), ..."
/// dihedral:M is the Coxeter group of type I2(M), order 2M, with its Coxeter
/// generators recorded. Cycle notation uses 1-based points.
GroupPtr builtin_group(const std::string &spec, int order_cap = kDefaultOrderCap);

} // namespace pbr

#endif
