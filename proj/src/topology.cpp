#include "mtop/topology.hpp"

#include <algorithm>

namespace mtop {

std::vector<MSet> canonicalize_family(std::vector<MSet> family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end(),
                           [](const MSet &a, const MSet &b) {
                             return a.counts() == b.counts();
                           }),
               family.end());
  return family;
}

namespace {

bool family_contains(const std::vector<MSet> &sorted, const MSet &a) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), a, canonical_less);
  return it != sorted.end() && it->counts() == a.counts();
}

} // namespace

MTopology::MTopology(MSet ground, std::vector<MSet> opens,
                     std::vector<MSet> closed)
    : ground_(std::move(ground)), opens_(std::move(opens)),
      closed_(std::move(closed)) {}

MTopology MTopology::build(MSet ground, std::vector<MSet> family) {
  auto opens = canonicalize_family(std::move(family));

  for (const auto &u : opens) {
    if (!(*u.space() == *ground.space()))
      throw Error(ErrorCode::SpaceMismatch,
                  "open " + u.to_string() + " lives in a different M-space");
    if (!is_submset(u, ground))
      throw Error(ErrorCode::NotSubmsetOfGround,
                  "family member " + u.to_string() +
                      " is not a sub-M-set of the ground " +
                      ground.to_string());
  }

  MSet empty = MSet::empty(ground.space());
  if (!family_contains(opens, empty))
    throw Error(ErrorCode::MissingEmpty, "the empty M-set is not in the family");
  if (!family_contains(opens, ground))
    throw Error(ErrorCode::MissingGround,
                "the ground M-set " + ground.to_string() +
                    " is not in the family");

  // Pairwise closure suffices: finite families make arbitrary unions reduce
  // to iterated binary ones.
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      MSet u = mset_union(opens[i], opens[j]);
      if (!family_contains(opens, u))
        throw Error(ErrorCode::NotClosedUnderUnion,
                    "not closed under union: " + opens[i].to_string() + " ∪ " +
                        opens[j].to_string() + " = " + u.to_string() +
                        " is missing");
      MSet v = mset_intersect(opens[i], opens[j]);
      if (!family_contains(opens, v))
        throw Error(ErrorCode::NotClosedUnderIntersection,
                    "not closed under intersection: " + opens[i].to_string() +
                        " ∩ " + opens[j].to_string() + " = " + v.to_string() +
                        " is missing");
    }
  }

  std::vector<MSet> closed;
  closed.reserve(opens.size());
  for (const auto &u : opens)
    closed.push_back(mset_subtract(ground, u));
  closed = canonicalize_family(std::move(closed));

  return MTopology(std::move(ground), std::move(opens), std::move(closed));
}

bool MTopology::family_is_topology(const MSet &ground,
                                   const std::vector<MSet> &family) {
  MSet empty = MSet::empty(ground.space());
  if (!family_contains(family, empty) || !family_contains(family, ground))
    return false;
  for (const auto &u : family)
    if (!is_submset(u, ground))
      return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family_contains(family, mset_union(family[i], family[j])))
        return false;
      if (!family_contains(family, mset_intersect(family[i], family[j])))
        return false;
    }
  return true;
}

namespace {

void require_sub_of_ground(const MSet &a, const MSet &ground) {
  if (!is_submset(a, ground))
    throw Error(ErrorCode::NotASubmset,
                a.to_string() + " is not a sub-M-set of the ground " +
                    ground.to_string());
}

} // namespace

bool MTopology::is_open(const MSet &a) const {
  require_sub_of_ground(a, ground_);
  return family_contains(opens_, a);
}

bool MTopology::is_closed(const MSet &a) const {
  require_sub_of_ground(a, ground_);
  return family_contains(opens_, mset_subtract(ground_, a));
}

bool MTopology::is_clopen(const MSet &a) const {
  return is_open(a) && is_closed(a);
}

MSet MTopology::interior(const MSet &a) const {
  require_sub_of_ground(a, ground_);
  MSet acc = MSet::empty(ground_.space());
  for (const auto &u : opens_)
    if (is_submset(u, a))
      acc = mset_union(acc, u);
  return acc;
}

MSet MTopology::closure(const MSet &a) const {
  require_sub_of_ground(a, ground_);
  MSet acc = ground_; // ground is always closed
  for (const auto &k : closed_)
    if (is_submset(a, k))
      acc = mset_intersect(acc, k);
  return acc;
}

MTopology MTopology::subspace(const MSet &n) const {
  require_sub_of_ground(n, ground_);
  std::vector<MSet> family;
  family.reserve(opens_.size());
  for (const auto &u : opens_)
    family.push_back(mset_intersect(n, u));
  return build(n, std::move(family));
}

bool is_basis(const MSet &m, std::span<const MSet> family) {
  for (const auto &b : family)
    if (!is_submset(b, m))
      throw Error(ErrorCode::NotASubmset,
                  b.to_string() + " is not a sub-M-set of " + m.to_string());

  // condition 1: every supported element appears in some basis element
  for (std::size_t x = 0; x < m.counts().size(); ++x) {
    if (m.count(x) == 0)
      continue;
    bool covered = false;
    for (const auto &b : family)
      if (b.count(x) > 0) {
        covered = true;
        break;
      }
    if (!covered)
      return false;
  }

  // condition 2: refinement inside every pairwise intersection
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      MSet pq = mset_intersect(family[i], family[j]);
      for (std::size_t x = 0; x < pq.counts().size(); ++x) {
        if (pq.count(x) == 0)
          continue;
        // any m with 1 <= m <= C_{P∩Q}(x) needs an R with full count at x,
        // so one witness per element suffices
        bool found = false;
        for (const auto &r : family) {
          if (is_submset(r, pq) && r.count(x) == pq.count(x)) {
            found = true;
            break;
          }
        }
        if (!found)
          return false;
      }
    }
  }
  return true;
}

MTopology generated_topology(const MSet &m, std::vector<MSet> family) {
  for (const auto &b : family)
    if (!is_submset(b, m))
      throw Error(ErrorCode::NotASubmset,
                  b.to_string() + " is not a sub-M-set of " + m.to_string());

  family.push_back(MSet::empty(m.space()));
  family.push_back(m);
  family = canonicalize_family(std::move(family));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<MSet> fresh;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        MSet u = mset_union(family[i], family[j]);
        if (!family_contains(family, u))
          fresh.push_back(u);
        MSet v = mset_intersect(family[i], family[j]);
        if (!family_contains(family, v))
          fresh.push_back(v);
      }
    if (!fresh.empty()) {
      grew = true;
      family.insert(family.end(), fresh.begin(), fresh.end());
      family = canonicalize_family(std::move(family));
    }
  }
  return MTopology::build(m, std::move(family));
}

} // namespace mtop
