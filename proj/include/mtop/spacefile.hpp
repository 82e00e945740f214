#pragma once

#include "mtop/topology.hpp"

#include <iosfwd>
#include <string>

namespace mtop {

/// Reads a space document: {"domain": [...], "w": n, "ground": {x: k},
/// "opens": [{x: k}, ...]}. Validates the topology axioms on load.
MTopology load_space(std::istream &in);
MTopology load_space_file(const std::string &path);

/// Canonical serialization: zero counts omitted, keys in domain order,
/// opens in canonical family order. parse -> serialize -> parse is the
/// identity on valid files.
std::string serialize_space(const MTopology &t);

} // namespace mtop
