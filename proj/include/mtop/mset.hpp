#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtop {

enum class ErrorCode {
  UnknownElement,
  CountExceedsBound,
  NegativeCount,
  SpaceMismatch,
  NotASubmset,
  EmptyFamilyWithoutAmbient,
  MissingEmpty,
  MissingGround,
  NotSubmsetOfGround,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  PointNotInGround,
  ArityMismatch,
  InstanceBudgetExceeded,
  BudgetExceeded,
  CapExceeded,
  ParseError,
  UnknownTheorem,
  UnknownOperator,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// The universe [X]^w: an ordered finite domain plus a multiplicity cap.
class MSpace {
public:
  MSpace(std::vector<std::string> domain, int w);

  const std::vector<std::string> &domain() const { return domain_; }
  int w() const { return w_; }
  std::size_t size() const { return domain_.size(); }

  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const MSpace &other) const {
    return w_ == other.w_ && domain_ == other.domain_;
  }

private:
  std::vector<std::string> domain_;
  int w_;
};

using SpacePtr = std::shared_ptr<const MSpace>;

/// A point k/x: a domain element taken with positive multiplicity.
struct MPoint {
  std::size_t elem; // index into the space's domain
  int k;

  friend bool operator==(const MPoint &, const MPoint &) = default;
};

/// An M-set: a count vector over its space, immutable after construction.
class MSet {
public:
  MSet(SpacePtr space, std::vector<int> counts);

  static MSet empty(SpacePtr space);
  /// Builds from a label -> count map; rejects unknown labels, negative
  /// counts and counts above the space's cap.
  static MSet from_map(SpacePtr space,
                       std::span<const std::pair<std::string, int>> entries);

  const SpacePtr &space() const { return space_; }
  const std::vector<int> &counts() const { return counts_; }
  int count(std::size_t i) const { return counts_[i]; }
  int count_of(std::string_view label) const;

  bool is_empty() const;
  int total() const; // sum of all counts
  std::vector<std::string> support() const;

  /// Canonical rendering {k1/x1,k2/x2} in domain order, {} when empty.
  std::string to_string() const;

  bool operator==(const MSet &other) const;

private:
  SpacePtr space_;
  std::vector<int> counts_;
};

/// Strict total order on M-sets of one space: by total count, then by the
/// count vector lexicographically. Used everywhere a canonical ordering of
/// families is required.
bool canonical_less(const MSet &a, const MSet &b);

bool is_submset(const MSet &a, const MSet &b);
MSet mset_union(const MSet &a, const MSet &b);
MSet mset_intersect(const MSet &a, const MSet &b);
MSet mset_add(const MSet &a, const MSet &b);      // pointwise sum capped at w
MSet mset_subtract(const MSet &a, const MSet &b); // truncated at zero

/// M-complement of a within m; requires a to be a sub-M-set of m.
MSet complement_in(const MSet &a, const MSet &m);

/// Pointwise max over the family; the empty family yields the empty M-set.
MSet family_union(const SpacePtr &space, std::span<const MSet> family);
/// Pointwise min over the family. The empty family is only defined when an
/// ambient M is supplied, in which case it yields that M.
MSet family_intersection(std::span<const MSet> family,
                         const std::optional<MSet> &ambient = std::nullopt);

bool is_whole_submset(const MSet &n, const MSet &m);
bool is_partial_whole_submset(const MSet &n, const MSet &m);
bool is_full_submset(const MSet &n, const MSet &m);

/// Parses the canonical {k/x,...} literal; whitespace tolerant.
MSet parse_mset(SpacePtr space, std::string_view text);

/// Literal parsing without a space: yields (label, count) pairs in order of
/// appearance. Rejects repeated labels.
std::vector<std::pair<std::string, int>>
parse_mset_entries(std::string_view text);

/// Renders a point as k/x.
std::string point_to_string(const MSpace &space, const MPoint &p);

} // namespace mtop
