#include "mtop/mset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace mtop {

MSpace::MSpace(std::vector<std::string> domain, int w)
    : domain_(std::move(domain)), w_(w) {
  if (w_ < 1)
    throw Error(ErrorCode::NegativeCount, "multiplicity cap w must be >= 1");
  std::set<std::string> seen;
  for (const auto &label : domain_) {
    if (label.empty())
      throw Error(ErrorCode::UnknownElement, "empty domain label");
    if (!seen.insert(label).second)
      throw Error(ErrorCode::UnknownElement,
                  "duplicate domain label '" + label + "'");
  }
}

std::optional<std::size_t> MSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (domain_[i] == label)
      return i;
  return std::nullopt;
}

MSet::MSet(SpacePtr space, std::vector<int> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {
  if (counts_.size() != space_->size())
    throw Error(ErrorCode::SpaceMismatch,
                "count vector length does not match domain size");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0)
      throw Error(ErrorCode::NegativeCount,
                  "negative count at '" + space_->domain()[i] + "'");
    if (counts_[i] > space_->w())
      throw Error(ErrorCode::CountExceedsBound,
                  "count " + std::to_string(counts_[i]) + " at '" +
                      space_->domain()[i] + "' exceeds w=" +
                      std::to_string(space_->w()));
  }
}

MSet MSet::empty(SpacePtr space) {
  std::vector<int> zeros(space->size(), 0);
  return MSet(std::move(space), std::move(zeros));
}

MSet MSet::from_map(SpacePtr space,
                    std::span<const std::pair<std::string, int>> entries) {
  std::vector<int> counts(space->size(), 0);
  for (const auto &[label, c] : entries) {
    auto idx = space->index_of(label);
    if (!idx)
      throw Error(ErrorCode::UnknownElement,
                  "element '" + label + "' is not in the domain");
    counts[*idx] = c;
  }
  return MSet(std::move(space), std::move(counts));
}

int MSet::count_of(std::string_view label) const {
  auto idx = space_->index_of(label);
  if (!idx)
    throw Error(ErrorCode::UnknownElement,
                "element '" + std::string(label) + "' is not in the domain");
  return counts_[*idx];
}

bool MSet::is_empty() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](int c) { return c == 0; });
}

int MSet::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::vector<std::string> MSet::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > 0)
      out.push_back(space_->domain()[i]);
  return out;
}

std::string MSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0)
      continue;
    if (!first)
      os << ',';
    os << counts_[i] << '/' << space_->domain()[i];
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

void require_same_space(const MSet &a, const MSet &b) {
  if (!(*a.space() == *b.space()))
    throw Error(ErrorCode::SpaceMismatch,
                "operands live in different M-spaces");
}

} // namespace

bool MSet::operator==(const MSet &other) const {
  require_same_space(*this, other);
  return counts_ == other.counts_;
}

bool canonical_less(const MSet &a, const MSet &b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb)
    return ta < tb;
  return a.counts() < b.counts();
}

bool is_submset(const MSet &a, const MSet &b) {
  require_same_space(a, b);
  for (std::size_t i = 0; i < a.counts().size(); ++i)
    if (a.count(i) > b.count(i))
      return false;
  return true;
}

namespace {

template <class F> MSet pointwise(const MSet &a, const MSet &b, F f) {
  require_same_space(a, b);
  std::vector<int> out(a.counts().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f(a.count(i), b.count(i));
  return MSet(a.space(), std::move(out));
}

} // namespace

MSet mset_union(const MSet &a, const MSet &b) {
  return pointwise(a, b, [](int x, int y) { return std::max(x, y); });
}

MSet mset_intersect(const MSet &a, const MSet &b) {
  return pointwise(a, b, [](int x, int y) { return std::min(x, y); });
}

MSet mset_add(const MSet &a, const MSet &b) {
  int w = a.space()->w();
  return pointwise(a, b, [w](int x, int y) { return std::min(w, x + y); });
}

MSet mset_subtract(const MSet &a, const MSet &b) {
  return pointwise(a, b, [](int x, int y) { return std::max(x - y, 0); });
}

MSet complement_in(const MSet &a, const MSet &m) {
  require_same_space(a, m);
  if (!is_submset(a, m))
    throw Error(ErrorCode::NotASubmset,
                a.to_string() + " is not a sub-M-set of " + m.to_string());
  return mset_subtract(m, a);
}

MSet family_union(const SpacePtr &space, std::span<const MSet> family) {
  MSet acc = MSet::empty(space);
  for (const auto &m : family)
    acc = mset_union(acc, m);
  return acc;
}

MSet family_intersection(std::span<const MSet> family,
                         const std::optional<MSet> &ambient) {
  if (family.empty()) {
    if (!ambient)
      throw Error(ErrorCode::EmptyFamilyWithoutAmbient,
                  "intersection of an empty family needs an ambient M");
    return *ambient;
  }
  MSet acc = ambient ? mset_intersect(*ambient, family[0]) : family[0];
  for (std::size_t i = 1; i < family.size(); ++i)
    acc = mset_intersect(acc, family[i]);
  return acc;
}

namespace {

void require_submset(const MSet &n, const MSet &m) {
  if (!is_submset(n, m))
    throw Error(ErrorCode::NotASubmset,
                n.to_string() + " is not a sub-M-set of " + m.to_string());
}

} // namespace

// Defs 2.7-2.9 quantify over the support of N; the standard reading of
// "full" (equal supports) is implemented, the literal one being vacuous.
bool is_whole_submset(const MSet &n, const MSet &m) {
  require_submset(n, m);
  for (std::size_t i = 0; i < n.counts().size(); ++i)
    if (n.count(i) > 0 && n.count(i) != m.count(i))
      return false;
  return true;
}

bool is_partial_whole_submset(const MSet &n, const MSet &m) {
  require_submset(n, m);
  for (std::size_t i = 0; i < n.counts().size(); ++i)
    if (n.count(i) > 0 && n.count(i) == m.count(i))
      return true;
  return false;
}

bool is_full_submset(const MSet &n, const MSet &m) {
  require_submset(n, m);
  for (std::size_t i = 0; i < n.counts().size(); ++i)
    if ((n.count(i) > 0) != (m.count(i) > 0))
      return false;
  return true;
}

std::vector<std::pair<std::string, int>>
parse_mset_entries(std::string_view text) {
  auto fail = [&](const std::string &why) -> Error {
    return Error(ErrorCode::ParseError,
                 "bad M-set literal '" + std::string(text) + "': " + why);
  };

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos >= text.size() || text[pos] != '{')
    throw fail("expected '{'");
  ++pos;
  skip_ws();

  std::vector<std::pair<std::string, int>> entries;
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start)
        throw fail("expected a count");
      int k = std::stoi(std::string(text.substr(start, pos - start)));
      if (pos >= text.size() || text[pos] != '/')
        throw fail("expected '/' after count");
      ++pos;
      start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != '}' &&
             !std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start)
        throw fail("expected an element label");
      entries.emplace_back(std::string(text.substr(start, pos - start)), k);
      skip_ws();
      if (pos >= text.size())
        throw fail("unterminated literal");
      if (text[pos] == '}') {
        ++pos;
        break;
      }
      if (text[pos] != ',')
        throw fail("expected ',' or '}'");
      ++pos;
    }
  }
  skip_ws();
  if (pos != text.size())
    throw fail("trailing characters");

  // repeated labels would silently shadow each other
  std::set<std::string> seen;
  for (const auto &[label, k] : entries) {
    (void)k;
    if (!seen.insert(label).second)
      throw fail("element '" + label + "' appears twice");
  }
  return entries;
}

MSet parse_mset(SpacePtr space, std::string_view text) {
  return MSet::from_map(std::move(space), parse_mset_entries(text));
}

std::string point_to_string(const MSpace &space, const MPoint &p) {
  return std::to_string(p.k) + "/" + space.domain()[p.elem];
}

} // namespace mtop
