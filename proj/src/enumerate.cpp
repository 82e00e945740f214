#include "mtop/enumerate.hpp"

#include <algorithm>
#include <random>

namespace mtop {

std::vector<MSet> enumerate_submsets(const MSet &m) {
  std::vector<MSet> out;
  std::vector<int> counts(m.counts().size(), 0);
  while (true) {
    out.emplace_back(m.space(), counts);
    std::size_t i = 0;
    for (; i < counts.size(); ++i) {
      if (counts[i] < m.count(i)) {
        ++counts[i];
        break;
      }
      counts[i] = 0;
    }
    if (i == counts.size())
      break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<MSet> enumerate_whole_submsets(const MSet &m) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < m.counts().size(); ++i)
    if (m.count(i) > 0)
      supp.push_back(i);

  std::vector<MSet> out;
  for (std::uint64_t mask = 0; mask < (1ull << supp.size()); ++mask) {
    std::vector<int> counts(m.counts().size(), 0);
    for (std::size_t b = 0; b < supp.size(); ++b)
      if (mask & (1ull << b))
        counts[supp[b]] = m.count(supp[b]);
    out.emplace_back(m.space(), std::move(counts));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<MSet> enumerate_full_submsets(const MSet &m) {
  std::vector<MSet> out;
  for (auto &s : enumerate_submsets(m))
    if (is_full_submset(s, m))
      out.push_back(std::move(s));
  return out;
}

void enumerate_topologies(const MSet &m, const EnumConfig &cfg,
                          const std::function<bool(const MTopology &)> &visit) {
  auto all = enumerate_submsets(m); // canonical order
  if (all.size() > cfg.max_submsets)
    throw Error(ErrorCode::CapExceeded,
                "|P*(M)| = " + std::to_string(all.size()) + " exceeds cap " +
                    std::to_string(cfg.max_submsets));

  // candidates = P*(M) minus the forced members ∅ and M
  std::vector<std::size_t> cand;
  std::size_t empty_idx = all.size(), ground_idx = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].is_empty())
      empty_idx = i;
    else if (all[i].counts() == m.counts())
      ground_idx = i;
    else
      cand.push_back(i);
  }
  if (empty_idx == ground_idx) { // ground is ∅: only the trivial topology
    visit(MTopology::build(m, {MSet::empty(m.space())}));
    return;
  }

  // index tables for union/intersection over P*(M)
  const std::size_t n = all.size();
  auto find_idx = [&](const MSet &s) {
    auto it = std::lower_bound(all.begin(), all.end(), s, canonical_less);
    return static_cast<std::size_t>(it - all.begin());
  };
  std::vector<std::vector<std::size_t>> uni(n), inter(n);
  for (std::size_t i = 0; i < n; ++i) {
    uni[i].resize(n);
    inter[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      uni[i][j] = find_idx(mset_union(all[i], all[j]));
      inter[i][j] = find_idx(mset_intersect(all[i], all[j]));
    }
  }

  const std::uint64_t forced =
      (1ull << empty_idx) | (1ull << ground_idx);
  for (std::uint64_t mask = 0; mask < (1ull << cand.size()); ++mask) {
    std::uint64_t fam = forced;
    for (std::size_t b = 0; b < cand.size(); ++b)
      if (mask & (1ull << b))
        fam |= 1ull << cand[b];

    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(fam & (1ull << i)))
        continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(fam & (1ull << j)))
          continue;
        if (!(fam & (1ull << uni[i][j])) || !(fam & (1ull << inter[i][j]))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok)
      continue;

    std::vector<MSet> family;
    for (std::size_t i = 0; i < n; ++i)
      if (fam & (1ull << i))
        family.push_back(all[i]);
    if (!visit(MTopology::build(m, std::move(family))))
      return;
  }
}

std::vector<MTopology> all_topologies(const MSet &m, const EnumConfig &cfg) {
  std::vector<MTopology> out;
  enumerate_topologies(m, cfg, [&](const MTopology &t) {
    out.push_back(t);
    return true;
  });
  return out;
}

MTopology random_topology(const MSet &m, std::uint64_t seed, int size_hint) {
  std::mt19937_64 gen(seed);
  std::vector<MSet> family;
  for (int i = 0; i < size_hint; ++i) {
    std::vector<int> counts(m.counts().size(), 0);
    for (std::size_t x = 0; x < counts.size(); ++x)
      counts[x] = static_cast<int>(gen() % (m.count(x) + 1));
    family.emplace_back(m.space(), std::move(counts));
  }
  return generated_topology(m, std::move(family));
}

} // namespace mtop
