#include "mtop/theorems.hpp"

#include "mtop/enumerate.hpp"

#include <map>
#include <random>
#include <unordered_map>

namespace mtop {

int theorem_arity(TheoremId id) {
  switch (id) {
  case TheoremId::T3_8i:
  case TheoremId::T3_8ii:
  case TheoremId::T3_13i:
  case TheoremId::T3_13ii:
    return 2;
  default:
    return 1;
  }
}

std::string theorem_name(TheoremId id) {
  switch (id) {
  case TheoremId::T3_8i: return "T3.8i";
  case TheoremId::T3_8ii: return "T3.8ii";
  case TheoremId::T3_9i: return "T3.9i";
  case TheoremId::T3_9ii: return "T3.9ii";
  case TheoremId::T3_9iii: return "T3.9iii";
  case TheoremId::T3_9iv: return "T3.9iv";
  case TheoremId::T3_10: return "T3.10";
  case TheoremId::T3_11: return "T3.11";
  case TheoremId::T3_12: return "T3.12";
  case TheoremId::T3_13i: return "T3.13i";
  case TheoremId::T3_13ii: return "T3.13ii";
  case TheoremId::T3_14: return "T3.14";
  case TheoremId::T3_15i: return "T3.15i";
  case TheoremId::T3_15ii: return "T3.15ii";
  case TheoremId::T3_16: return "T3.16";
  case TheoremId::T3_17: return "T3.17";
  case TheoremId::T3_18: return "T3.18";
  case TheoremId::R3_3: return "R3.3";
  case TheoremId::R3_6: return "R3.6";
  case TheoremId::R3_7: return "R3.7";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  static const std::map<std::string, TheoremId, std::less<>> table = [] {
    std::map<std::string, TheoremId, std::less<>> t;
    for (TheoremId id : kAllTheorems) {
      std::string name = theorem_name(id);
      t.emplace(name, id);
      if (name[0] == 'T')
        t.emplace(name.substr(1), id); // "3.8i" shorthand
    }
    return t;
  }();
  auto it = table.find(text);
  if (it == table.end())
    return std::nullopt;
  return it->second;
}

bool theorem_is_provable(TheoremId id) {
  switch (id) {
  case TheoremId::T3_8i:
  case TheoremId::T3_8ii:
  case TheoremId::T3_9i:
  case TheoremId::T3_13i:
  case TheoremId::T3_14:
  case TheoremId::T3_15i:
  case TheoremId::R3_3:
  case TheoremId::R3_7:
    return true;
  default:
    return false;
  }
}

std::string Verdict::format() const {
  std::string line = theorem_name(id);
  if (holds) {
    line += " HOLDS n=" + std::to_string(instances);
    return line;
  }
  line += " FAILS";
  if (a)
    line += " A=" + a->to_string();
  if (b)
    line += " B=" + b->to_string();
  if (lhs)
    line += " lhs=" + lhs->to_string();
  if (rhs)
    line += " rhs=" + rhs->to_string();
  if (direction == Direction::forward)
    line += " direction=→";
  else if (direction == Direction::backward)
    line += " direction=←";
  return line;
}

namespace {

struct CountsHash {
  std::size_t operator()(const std::vector<int> &v) const {
    std::size_t h = v.size();
    for (int c : v)
      h = h * 1000003u + static_cast<std::size_t>(c) + 0x9e3779b9u;
    return h;
  }
};

// Memoizes interior/closure per count vector; purely an evaluation cache,
// results are identical to calling the topology directly.
struct Eval {
  const MTopology &t;
  std::unordered_map<std::vector<int>, MSet, CountsHash> int_, cl_;

  explicit Eval(const MTopology &t) : t(t) {}

  const MSet &interior(const MSet &a) {
    auto it = int_.find(a.counts());
    if (it == int_.end())
      it = int_.emplace(a.counts(), t.interior(a)).first;
    return it->second;
  }
  const MSet &closure(const MSet &a) {
    auto it = cl_.find(a.counts());
    if (it == cl_.end())
      it = cl_.emplace(a.counts(), t.closure(a)).first;
    return it->second;
  }
  MSet comp(const MSet &a) { return mset_subtract(t.ground(), a); }
  MSet ext(const MSet &a) { return interior(comp(a)); }
  MSet bd(const MSet &a) {
    return mset_intersect(closure(a), closure(comp(a)));
  }
};

struct Outcome {
  bool holds;
  MSet lhs, rhs;
  Direction dir = Direction::none;
};

Outcome equal_check(MSet lhs, MSet rhs) {
  bool ok = lhs.counts() == rhs.counts();
  return {ok, std::move(lhs), std::move(rhs)};
}

Outcome subset_check(MSet lhs, MSet rhs) {
  bool ok = is_submset(lhs, rhs);
  return {ok, std::move(lhs), std::move(rhs)};
}

Outcome iff_check(bool p, bool q, MSet lhs, MSet rhs) {
  if (p == q)
    return {true, std::move(lhs), std::move(rhs)};
  return {false, std::move(lhs), std::move(rhs),
          p ? Direction::forward : Direction::backward};
}

Outcome evaluate(Eval &ev, TheoremId id, const MSet &a, const MSet *b) {
  const MTopology &t = ev.t;
  switch (id) {
  case TheoremId::T3_8i:
    return equal_check(ev.ext(mset_union(a, *b)),
                       mset_intersect(ev.ext(a), ev.ext(*b)));
  case TheoremId::T3_8ii:
    // ext(A∩B) ⊇ ext(A) ∪ ext(B)
    return subset_check(mset_union(ev.ext(a), ev.ext(*b)),
                        ev.ext(mset_intersect(a, *b)));
  case TheoremId::T3_9i:
    return equal_check(ev.comp(ev.bd(a)),
                       mset_union(ev.interior(a), ev.ext(a)));
  case TheoremId::T3_9ii:
    return equal_check(ev.closure(a), mset_union(ev.interior(a), ev.bd(a)));
  case TheoremId::T3_9iii:
    return equal_check(ev.bd(a), mset_subtract(ev.closure(a), ev.interior(a)));
  case TheoremId::T3_9iv:
    return equal_check(ev.interior(a), mset_subtract(a, ev.bd(a)));
  case TheoremId::T3_10: {
    MSet meet = mset_intersect(a, ev.bd(a));
    bool q = meet.is_empty();
    return iff_check(t.is_open(a), q, std::move(meet),
                     MSet::empty(a.space()));
  }
  case TheoremId::T3_11: {
    MSet bd = ev.bd(a);
    bool q = is_submset(bd, a);
    return iff_check(t.is_closed(a), q, std::move(bd), a);
  }
  case TheoremId::T3_12: {
    MSet bd = ev.bd(a);
    bool q = bd.is_empty();
    return iff_check(t.is_clopen(a), q, std::move(bd),
                     MSet::empty(a.space()));
  }
  case TheoremId::T3_13i:
    return subset_check(ev.bd(mset_union(a, *b)),
                        mset_union(ev.bd(a), ev.bd(*b)));
  case TheoremId::T3_13ii:
    return subset_check(ev.bd(mset_intersect(a, *b)),
                        mset_intersect(ev.bd(a), ev.bd(*b)));
  case TheoremId::T3_14: {
    MSet bb = ev.bd(ev.bd(a));
    return equal_check(ev.closure(bb), bb);
  }
  case TheoremId::T3_15i:
    return subset_check(ev.bd(ev.bd(a)), ev.bd(a));
  case TheoremId::T3_15ii: {
    MSet bb = ev.bd(ev.bd(a));
    return equal_check(ev.bd(bb), bb);
  }
  case TheoremId::T3_16: {
    MSet bd = ev.bd(a);
    return equal_check(bd, mset_union(ev.interior(bd), ev.bd(bd)));
  }
  case TheoremId::T3_17: {
    bool p = is_submset(ev.bd(a), a);
    bool q = contains_all_limit_points(t, a);
    return iff_check(p, q, ev.bd(a), a);
  }
  case TheoremId::T3_18: {
    MSet ext = ev.ext(a);
    bool p = ext.is_empty();
    bool q = true;
    for (const auto &u : t.opens())
      if (!u.is_empty() && mset_intersect(u, a).is_empty()) {
        q = false;
        break;
      }
    return iff_check(p, q, std::move(ext), MSet::empty(a.space()));
  }
  case TheoremId::R3_3: {
    MSet ext = ev.ext(a);
    MSet ac = ev.comp(a);
    if (!t.is_open(ext))
      return {false, ext, ev.interior(ext)};
    if (!is_submset(ext, ac))
      return {false, ext, std::move(ac)};
    for (const auto &u : t.opens())
      if (is_submset(u, ac) && !is_submset(u, ext))
        return {false, u, ext}; // an open in A^c sticking out of ext(A)
    return {true, std::move(ext), std::move(ac)};
  }
  case TheoremId::R3_6: {
    MSet bd = ev.bd(a);
    MSet ac = ev.comp(a);
    if (ev.closure(bd).counts() != bd.counts())
      return {false, ev.closure(bd), bd};
    if (!is_submset(ac, bd))
      return {false, std::move(ac), std::move(bd)};
    for (const auto &k : t.closed_family())
      if (is_submset(ac, k) && !is_submset(bd, k))
        return {false, bd, k}; // a closed superset of A^c below bd(A)
    return {true, std::move(bd), std::move(ac)};
  }
  case TheoremId::R3_7:
    return equal_check(ev.bd(a), ev.bd(ev.comp(a)));
  }
  throw Error(ErrorCode::UnknownTheorem, "unhandled theorem id");
}

Verdict run_instance(Eval &ev, TheoremId id, const MSet &a, const MSet *b) {
  if (theorem_arity(id) == 2 && b == nullptr)
    throw Error(ErrorCode::ArityMismatch,
                theorem_name(id) + " binds two sub-M-sets");
  if (theorem_arity(id) == 1 && b != nullptr)
    throw Error(ErrorCode::ArityMismatch,
                theorem_name(id) + " binds one sub-M-set");
  if (!is_submset(a, ev.t.ground()) || (b && !is_submset(*b, ev.t.ground())))
    throw Error(ErrorCode::NotASubmset,
                "binding is not a sub-M-set of the ground");

  Outcome out = evaluate(ev, id, a, b);
  Verdict v;
  v.id = id;
  v.holds = out.holds;
  v.instances = 1;
  if (!out.holds) {
    v.a = a;
    if (b)
      v.b = *b;
    v.lhs = std::move(out.lhs);
    v.rhs = std::move(out.rhs);
    v.direction = out.dir;
  }
  return v;
}

} // namespace

Verdict check_instance(const MTopology &t, TheoremId id, const MSet &a,
                       const MSet *b) {
  Eval ev(t);
  return run_instance(ev, id, a, b);
}

Verdict check_space(const MTopology &t, TheoremId id,
                    const CheckOptions &opts) {
  auto bindings = opts.whole_only ? enumerate_whole_submsets(t.ground())
                                  : enumerate_submsets(t.ground());
  const long n = static_cast<long>(bindings.size());
  const long planned = theorem_arity(id) == 2 ? n * n : n;
  if (planned > opts.max_instances)
    throw Error(ErrorCode::InstanceBudgetExceeded,
                theorem_name(id) + " needs " + std::to_string(planned) +
                    " instances, budget is " +
                    std::to_string(opts.max_instances));

  Eval ev(t);
  long done = 0;
  if (theorem_arity(id) == 1) {
    for (const auto &a : bindings) {
      ++done;
      Verdict v = run_instance(ev, id, a, nullptr);
      if (!v.holds) {
        v.instances = done;
        return v;
      }
    }
  } else {
    for (const auto &a : bindings)
      for (const auto &b : bindings) {
        ++done;
        Verdict v = run_instance(ev, id, a, &b);
        if (!v.holds) {
          v.instances = done;
          return v;
        }
      }
  }
  Verdict v;
  v.id = id;
  v.holds = true;
  v.instances = done;
  return v;
}

std::vector<Verdict> verify_all(const MTopology &t, const CheckOptions &opts) {
  std::vector<Verdict> out;
  out.reserve(std::size(kAllTheorems));
  for (TheoremId id : kAllTheorems)
    out.push_back(check_space(t, id, opts));
  return out;
}

SearchResult search_counterexample(TheoremId id, const SearchConfig &cfg,
                                   const CheckOptions &opts) {
  SearchResult res;
  res.verdict.id = id;
  res.verdict.holds = true;

  auto examine = [&](const MTopology &t) -> bool {
    ++res.spaces_checked;
    Verdict v = check_space(t, id, opts);
    res.instances_checked += v.instances;
    if (!v.holds) {
      res.verdict = std::move(v);
      res.space = t;
      return false; // stop
    }
    return true;
  };

  static const char *kLabels[] = {"a", "b", "c", "d", "e", "f"};
  if (cfg.max_domain > 6)
    throw Error(ErrorCode::CapExceeded, "max_domain is capped at 6");

  if (cfg.exhaustive) {
    for (int n = 1; n <= cfg.max_domain; ++n) {
      for (int w = 1; w <= cfg.max_w; ++w) {
        std::vector<std::string> labels(kLabels, kLabels + n);
        auto space = std::make_shared<const MSpace>(labels, w);
        MSet full(space, std::vector<int>(n, w));
        EnumConfig ec;
        ec.max_submsets = enumerate_submsets(full).size();
        bool stopped = false;
        for (const auto &ground : enumerate_submsets(full)) {
          if (res.spaces_checked >= cfg.budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "budget exhausted after " +
                            std::to_string(res.spaces_checked) +
                            " spaces, " +
                            std::to_string(res.instances_checked) +
                            " instances");
          enumerate_topologies(ground, ec, [&](const MTopology &t) {
            if (!examine(t)) {
              stopped = true;
              return false;
            }
            return true;
          });
          if (stopped)
            return res;
        }
      }
    }
    return res;
  }

  // seeded mode: random grounds and generated topologies
  std::mt19937_64 gen(cfg.seed);
  for (long i = 0; i < cfg.budget; ++i) {
    int n = 1 + static_cast<int>(gen() % cfg.max_domain);
    int w = 1 + static_cast<int>(gen() % cfg.max_w);
    std::vector<std::string> labels(kLabels, kLabels + n);
    auto space = std::make_shared<const MSpace>(labels, w);
    std::vector<int> counts(n);
    for (int x = 0; x < n; ++x)
      counts[x] = static_cast<int>(gen() % (w + 1));
    MSet ground(space, std::move(counts));
    std::uint64_t sub_seed = gen();
    int size_hint = static_cast<int>(gen() % 4);
    MTopology t = random_topology(ground, sub_seed, size_hint);
    if (!examine(t))
      return res;
  }
  return res;
}

} // namespace mtop
