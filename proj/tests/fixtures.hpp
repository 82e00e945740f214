#pragma once

#include "mtop/topology.hpp"

namespace fixtures {

using namespace mtop;

inline MSet ms(const SpacePtr &space, std::string_view literal) {
  return parse_mset(space, literal);
}

// X={a,b}, w=3, M={2/a,3/b}, τ1={∅, M, {1/a}, {2/b}, {1/a,2/b}}
inline MTopology f1() {
  auto space = std::make_shared<const MSpace>(
      std::vector<std::string>{"a", "b"}, 3);
  MSet m = ms(space, "{2/a,3/b}");
  std::vector<MSet> opens = {MSet::empty(space), m, ms(space, "{1/a}"),
                             ms(space, "{2/b}"), ms(space, "{1/a,2/b}")};
  return MTopology::build(m, opens);
}

// X={a,b,c,d}, w=5, M={5/a,3/b,5/c,5/d}, τ2 with 7 opens
inline MTopology f2() {
  auto space = std::make_shared<const MSpace>(
      std::vector<std::string>{"a", "b", "c", "d"}, 5);
  MSet m = ms(space, "{5/a,3/b,5/c,5/d}");
  std::vector<MSet> opens = {MSet::empty(space),
                             m,
                             ms(space, "{1/a,2/b,3/c,2/d}"),
                             ms(space, "{1/a,3/c}"),
                             ms(space, "{2/b,5/d}"),
                             ms(space, "{1/a,2/b,3/c,5/d}"),
                             ms(space, "{2/b,2/d}")};
  return MTopology::build(m, opens);
}

} // namespace fixtures
