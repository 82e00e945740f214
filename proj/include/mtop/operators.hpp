#pragma once

#include "mtop/topology.hpp"

namespace mtop {

/// Interior of the M-complement of a.
MSet exterior(const MTopology &t, const MSet &a);

/// cl(a) ∩ cl(a^c); always closed.
MSet boundary(const MTopology &t, const MSet &a);

/// Opens whose count at p's element is at least p's multiplicity.
std::vector<MSet> neighborhoods(const MTopology &t, const MPoint &p);

/// p is a limit point of a when every neighborhood of p meets a in a point
/// other than p itself, read as (U ∩ a) ⊖ {k/x} being nonempty.
bool is_limit_point(const MTopology &t, const MSet &a, const MPoint &p);

/// All limit points k/x with 1 <= k <= C_ground(x), in domain order then
/// ascending multiplicity.
std::vector<MPoint> limit_points(const MTopology &t, const MSet &a);

bool contains_all_boundary_points(const MTopology &t, const MSet &a);
bool contains_all_limit_points(const MTopology &t, const MSet &a);

} // namespace mtop
