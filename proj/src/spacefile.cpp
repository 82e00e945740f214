#include "mtop/spacefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mtop {

namespace {

using ordered_json = nlohmann::ordered_json;

MSet mset_from_json(const SpacePtr &space, const ordered_json &obj,
                    const std::string &where) {
  if (!obj.is_object())
    throw Error(ErrorCode::ParseError, where + ": expected an object");
  std::vector<std::pair<std::string, int>> entries;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!it.value().is_number_integer())
      throw Error(ErrorCode::ParseError,
                  where + ": count for '" + it.key() + "' must be an integer");
    entries.emplace_back(it.key(), it.value().get<int>());
  }
  return MSet::from_map(space, entries);
}

ordered_json mset_to_json(const MSet &m) {
  ordered_json obj = ordered_json::object();
  for (std::size_t i = 0; i < m.counts().size(); ++i)
    if (m.count(i) > 0)
      obj[m.space()->domain()[i]] = m.count(i);
  return obj;
}

} // namespace

MTopology load_space(std::istream &in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::ParseError, "space file must be a JSON object");
  for (const char *field : {"domain", "w", "ground", "opens"})
    if (!doc.contains(field))
      throw Error(ErrorCode::ParseError,
                  std::string("missing field '") + field + "'");

  if (!doc["domain"].is_array())
    throw Error(ErrorCode::ParseError, "'domain' must be an array of strings");
  std::vector<std::string> domain;
  for (const auto &el : doc["domain"]) {
    if (!el.is_string())
      throw Error(ErrorCode::ParseError, "'domain' must be an array of strings");
    domain.push_back(el.get<std::string>());
  }
  if (!doc["w"].is_number_integer())
    throw Error(ErrorCode::ParseError, "'w' must be an integer");

  auto space = std::make_shared<const MSpace>(domain, doc["w"].get<int>());
  MSet ground = mset_from_json(space, doc["ground"], "ground");

  if (!doc["opens"].is_array())
    throw Error(ErrorCode::ParseError, "'opens' must be an array");
  std::vector<MSet> opens;
  std::size_t i = 0;
  for (const auto &el : doc["opens"]) {
    opens.push_back(mset_from_json(space, el, "opens[" + std::to_string(i) + "]"));
    ++i;
  }
  return MTopology::build(std::move(ground), std::move(opens));
}

MTopology load_space_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return load_space(in);
}

std::string serialize_space(const MTopology &t) {
  ordered_json doc;
  doc["domain"] = t.ground().space()->domain();
  doc["w"] = t.ground().space()->w();
  doc["ground"] = mset_to_json(t.ground());
  ordered_json opens = ordered_json::array();
  for (const auto &u : t.opens())
    opens.push_back(mset_to_json(u));
  doc["opens"] = opens;
  return doc.dump(2) + "\n";
}

} // namespace mtop
