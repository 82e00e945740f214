#pragma once

#include "mtop/mset.hpp"

#include <vector>

namespace mtop {

/// A validated M-topology: a ground M-set plus its family of opens, kept
/// deduplicated and in canonical order. Immutable after build.
class MTopology {
public:
  /// Validates the axioms and canonicalizes the family. Throws with the
  /// first violated axiom and a witness pair in the message.
  static MTopology build(MSet ground, std::vector<MSet> family);

  const MSet &ground() const { return ground_; }
  const std::vector<MSet> &opens() const { return opens_; }
  const std::vector<MSet> &closed_family() const { return closed_; }

  bool is_open(const MSet &a) const;
  bool is_closed(const MSet &a) const;
  bool is_clopen(const MSet &a) const;

  /// Union of all opens contained in a.
  MSet interior(const MSet &a) const;
  /// Intersection of all closed M-sets containing a.
  MSet closure(const MSet &a) const;

  /// Subspace topology {n ∩ U : U open} on n.
  MTopology subspace(const MSet &n) const;

  /// Axiom check without exceptions; family must already be deduplicated.
  static bool family_is_topology(const MSet &ground,
                                 const std::vector<MSet> &family);

private:
  MTopology(MSet ground, std::vector<MSet> opens, std::vector<MSet> closed);

  MSet ground_;
  std::vector<MSet> opens_;
  std::vector<MSet> closed_;
};

/// M-basis predicate over the ground m.
bool is_basis(const MSet &m, std::span<const MSet> family);

/// Smallest topology on m containing the family: adds ∅ and m, then closes
/// under pairwise union and intersection to a fixed point.
MTopology generated_topology(const MSet &m, std::vector<MSet> family);

/// Sorts canonically and removes duplicates.
std::vector<MSet> canonicalize_family(std::vector<MSet> family);

} // namespace mtop
