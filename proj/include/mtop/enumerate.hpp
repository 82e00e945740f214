#pragma once

#include "mtop/topology.hpp"

#include <cstdint>
#include <functional>

namespace mtop {

struct EnumConfig {
  std::size_t max_submsets = 12; // cap on |P*(M)| for topology enumeration
};

/// All sub-M-sets of m in canonical order; the length is the product of
/// (C_m(x)+1) over the support.
std::vector<MSet> enumerate_submsets(const MSet &m);

/// PW(m): one sub-M-set per subset of the support, with m's counts there.
std::vector<MSet> enumerate_whole_submsets(const MSet &m);

/// PF(m): all sub-M-sets whose support equals m's support.
std::vector<MSet> enumerate_full_submsets(const MSet &m);

/// Emits every M-topology on m in canonical order. The visitor returns
/// false to stop early. Throws CapExceeded when |P*(m)| is over the cap.
void enumerate_topologies(const MSet &m, const EnumConfig &cfg,
                          const std::function<bool(const MTopology &)> &visit);

std::vector<MTopology> all_topologies(const MSet &m, const EnumConfig &cfg = {});

/// Deterministic seeded topology: size_hint sub-M-sets are drawn from an
/// mt19937_64 stream (counts via modulo, no distribution objects) and closed
/// into a topology. Identical (m, seed, size_hint) give identical output.
MTopology random_topology(const MSet &m, std::uint64_t seed, int size_hint);

} // namespace mtop
