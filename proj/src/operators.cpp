#include "mtop/operators.hpp"

namespace mtop {

MSet exterior(const MTopology &t, const MSet &a) {
  return t.interior(complement_in(a, t.ground()));
}

MSet boundary(const MTopology &t, const MSet &a) {
  MSet ac = complement_in(a, t.ground());
  return mset_intersect(t.closure(a), t.closure(ac));
}

namespace {

void require_point(const MTopology &t, const MPoint &p) {
  if (p.elem >= t.ground().counts().size() || p.k < 1 ||
      p.k > t.ground().count(p.elem))
    throw Error(ErrorCode::PointNotInGround,
                "point " + std::to_string(p.k) + "/#" +
                    std::to_string(p.elem) + " is not in the ground " +
                    t.ground().to_string());
}

MSet singleton(const MTopology &t, const MPoint &p) {
  std::vector<int> counts(t.ground().counts().size(), 0);
  counts[p.elem] = p.k;
  return MSet(t.ground().space(), std::move(counts));
}

} // namespace

std::vector<MSet> neighborhoods(const MTopology &t, const MPoint &p) {
  require_point(t, p);
  std::vector<MSet> out;
  for (const auto &u : t.opens())
    if (u.count(p.elem) >= p.k)
      out.push_back(u);
  return out;
}

bool is_limit_point(const MTopology &t, const MSet &a, const MPoint &p) {
  require_point(t, p);
  if (!is_submset(a, t.ground()))
    throw Error(ErrorCode::NotASubmset,
                a.to_string() + " is not a sub-M-set of the ground");
  MSet point = singleton(t, p);
  for (const auto &u : t.opens()) {
    if (u.count(p.elem) < p.k)
      continue;
    if (mset_subtract(mset_intersect(u, a), point).is_empty())
      return false;
  }
  return true;
}

std::vector<MPoint> limit_points(const MTopology &t, const MSet &a) {
  std::vector<MPoint> out;
  const MSet &m = t.ground();
  for (std::size_t x = 0; x < m.counts().size(); ++x)
    for (int k = 1; k <= m.count(x); ++k)
      if (is_limit_point(t, a, MPoint{x, k}))
        out.push_back(MPoint{x, k});
  return out;
}

bool contains_all_boundary_points(const MTopology &t, const MSet &a) {
  return is_submset(boundary(t, a), a);
}

bool contains_all_limit_points(const MTopology &t, const MSet &a) {
  for (const auto &p : limit_points(t, a))
    if (p.k > a.count(p.elem))
      return false;
  return true;
}

} // namespace mtop
