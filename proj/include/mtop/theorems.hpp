#pragma once

#include "mtop/operators.hpp"

#include <cstdint>
#include <optional>

namespace mtop {

enum class TheoremId {
  T3_8i,
  T3_8ii,
  T3_9i,
  T3_9ii,
  T3_9iii,
  T3_9iv,
  T3_10,
  T3_11,
  T3_12,
  T3_13i,
  T3_13ii,
  T3_14,
  T3_15i,
  T3_15ii,
  T3_16,
  T3_17,
  T3_18,
  R3_3,
  R3_6,
  R3_7,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::T3_8i,  TheoremId::T3_8ii, TheoremId::T3_9i,
    TheoremId::T3_9ii, TheoremId::T3_9iii, TheoremId::T3_9iv,
    TheoremId::T3_10,  TheoremId::T3_11,  TheoremId::T3_12,
    TheoremId::T3_13i, TheoremId::T3_13ii, TheoremId::T3_14,
    TheoremId::T3_15i, TheoremId::T3_15ii, TheoremId::T3_16,
    TheoremId::T3_17,  TheoremId::T3_18,  TheoremId::R3_3,
    TheoremId::R3_6,   TheoremId::R3_7,
};

/// Number of bound sub-M-sets (1 or 2).
int theorem_arity(TheoremId id);

/// Report name, e.g. "T3.9iii" or "R3.7".
std::string theorem_name(TheoremId id);

/// Accepts "T3.9iii", "3.9iii", "R3.3", "3.3" is ambiguous and rejected.
std::optional<TheoremId> parse_theorem_id(std::string_view text);

/// True for the identities that are provable in count semantics; a FAILS
/// verdict for one of these signals an implementation bug.
bool theorem_is_provable(TheoremId id);

enum class Direction { none, forward, backward };

struct Verdict {
  TheoremId id;
  bool holds = true;
  long instances = 0;
  // witness, present when holds is false
  std::optional<MSet> a, b, lhs, rhs;
  Direction direction = Direction::none;

  /// One report line: "<id> HOLDS n=<n>" or
  /// "<id> FAILS A=... [B=...] lhs=... rhs=... [direction=→|←]".
  std::string format() const;
};

struct CheckOptions {
  long max_instances = 20000;
  bool whole_only = false; // quantify over PW(M) instead of P*(M)
};

Verdict check_instance(const MTopology &t, TheoremId id, const MSet &a,
                       const MSet *b = nullptr);

/// Quantifies the theorem over every sub-M-set binding of the space; the
/// first failure in canonical order is the reported witness.
Verdict check_space(const MTopology &t, TheoremId id,
                    const CheckOptions &opts = {});

/// One verdict per theorem, in the fixed theorem order.
std::vector<Verdict> verify_all(const MTopology &t,
                                const CheckOptions &opts = {});

struct SearchConfig {
  int max_domain = 2;
  int max_w = 2;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  long budget = 100000; // max topologies examined in seeded mode
};

struct SearchResult {
  std::optional<MTopology> space; // present when a counterexample was found
  Verdict verdict;
  long spaces_checked = 0;
  long instances_checked = 0;
};

/// Iterates spaces (every ground M over domains {a}, {a,b}, ... up to the
/// bounds, every topology on each) and returns the first failing witness.
SearchResult search_counterexample(TheoremId id, const SearchConfig &cfg,
                                   const CheckOptions &opts = {});

} // namespace mtop
