#include "mtop/enumerate.hpp"
#include "mtop/operators.hpp"
#include "mtop/spacefile.hpp"
#include "mtop/theorems.hpp"

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

using namespace mtop;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success/holds, 1 counterexample found, 2 input/usage error

ordered_json mset_json(const MSet &m) {
  ordered_json obj = ordered_json::object();
  for (std::size_t i = 0; i < m.counts().size(); ++i)
    if (m.count(i) > 0)
      obj[m.space()->domain()[i]] = m.count(i);
  return obj;
}

ordered_json verdict_json(const Verdict &v) {
  ordered_json obj;
  obj["theorem"] = theorem_name(v.id);
  obj["status"] = v.holds ? "holds" : "fails";
  obj["instances"] = v.instances;
  if (!v.holds) {
    ordered_json w;
    if (v.a)
      w["A"] = mset_json(*v.a);
    if (v.b)
      w["B"] = mset_json(*v.b);
    if (v.lhs)
      w["lhs"] = mset_json(*v.lhs);
    if (v.rhs)
      w["rhs"] = mset_json(*v.rhs);
    if (v.direction == Direction::forward)
      w["direction"] = "→";
    else if (v.direction == Direction::backward)
      w["direction"] = "←";
    obj["witness"] = w;
  }
  return obj;
}

std::string family_to_string(const std::vector<MSet> &family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i)
      out += ",";
    out += family[i].to_string();
  }
  return out + "]";
}

/// Ground literal without a space file: domain from the literal's label
/// order (or an explicit list), w from the flag or the largest count.
MSet parse_ground(const std::string &literal, int w_flag,
                  const std::vector<std::string> &domain_flag) {
  auto entries = parse_mset_entries(literal);
  std::vector<std::string> domain = domain_flag;
  if (domain.empty())
    for (const auto &[label, k] : entries) {
      (void)k;
      domain.push_back(label);
    }
  int w = w_flag;
  if (w <= 0) {
    w = 1;
    for (const auto &[label, k] : entries) {
      (void)label;
      w = std::max(w, k);
    }
  }
  auto space = std::make_shared<const MSpace>(domain, w);
  return MSet::from_map(space, entries);
}

int run(int argc, char **argv) {
  CLI::App app{"multiset topology toolkit"};
  app.require_subcommand(1);

  // validate
  std::string val_file;
  auto *validate = app.add_subcommand("validate", "check a space file");
  validate->add_option("file", val_file, "space file")->required();

  // compute
  std::string cmp_file, cmp_op, cmp_set;
  bool cmp_json = false;
  auto *compute = app.add_subcommand("compute", "apply an operator");
  compute->add_option("file", cmp_file, "space file")->required();
  compute->add_option("--op", cmp_op,
                      "interior|closure|exterior|boundary|limit-points")
      ->required();
  compute->add_option("--set", cmp_set, "M-set literal {k/x,...}")->required();
  compute->add_flag("--json", cmp_json, "machine-readable output");

  // verify
  std::string ver_file, ver_theorem;
  bool ver_all = false, ver_json = false, ver_whole = false;
  long ver_max_instances = 1000000;
  auto *verify = app.add_subcommand("verify", "check theorems on a space");
  verify->add_option("file", ver_file, "space file")->required();
  verify->add_option("--theorem", ver_theorem, "theorem id, e.g. 3.9iii");
  verify->add_flag("--all", ver_all, "check every theorem");
  verify->add_flag("--whole-only", ver_whole,
                   "quantify over whole sub-M-sets only");
  verify->add_option("--max-instances", ver_max_instances,
                     "per-theorem instance budget");
  verify->add_flag("--json", ver_json, "machine-readable output");

  // enumerate
  std::string enu_ground;
  std::vector<std::string> enu_domain;
  int enu_w = 0;
  bool enu_count = false, enu_topologies = false, enu_whole = false,
       enu_full = false, enu_json = false;
  std::size_t enu_cap = 12;
  auto *enumerate = app.add_subcommand("enumerate", "list sub-M-sets or topologies");
  enumerate->add_option("--ground", enu_ground, "ground M-set literal")->required();
  enumerate->add_option("--w", enu_w, "multiplicity cap (default: max count)");
  enumerate->add_option("--domain", enu_domain, "domain labels (default: literal order)");
  enumerate->add_flag("--count", enu_count, "print counts only");
  enumerate->add_flag("--topologies", enu_topologies, "enumerate M-topologies");
  enumerate->add_flag("--whole", enu_whole, "whole sub-M-sets (PW)");
  enumerate->add_flag("--full", enu_full, "full sub-M-sets (PF)");
  enumerate->add_option("--max-submsets", enu_cap, "topology enumeration cap");
  enumerate->add_flag("--json", enu_json, "machine-readable output");

  // search
  std::string sea_theorem;
  int sea_max_domain = 2, sea_max_w = 2;
  bool sea_exhaustive = false, sea_json = false, sea_whole = false;
  std::uint64_t sea_seed = 0;
  long sea_budget = 100000;
  bool sea_seeded = false;
  auto *search = app.add_subcommand("search", "hunt for a counterexample");
  search->add_option("--theorem", sea_theorem, "theorem id")->required();
  search->add_option("--max-domain", sea_max_domain, "largest domain size");
  search->add_option("--max-w", sea_max_w, "largest multiplicity cap");
  search->add_flag("--exhaustive", sea_exhaustive, "enumerate all spaces");
  auto *seed_opt = search->add_option("--seed", sea_seed, "seeded random mode");
  search->add_option("--budget", sea_budget, "max spaces examined");
  search->add_flag("--whole-only", sea_whole,
                   "quantify over whole sub-M-sets only");
  search->add_flag("--json", sea_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }
  sea_seeded = seed_opt->count() > 0;

  if (validate->parsed()) {
    MTopology t = load_space_file(val_file);
    std::cout << serialize_space(t);
    return 0;
  }

  if (compute->parsed()) {
    MTopology t = load_space_file(cmp_file);
    MSet a = parse_mset(t.ground().space(), cmp_set);
    if (cmp_op == "limit-points") {
      auto pts = limit_points(t, a);
      if (cmp_json) {
        ordered_json out;
        out["op"] = cmp_op;
        out["input"] = mset_json(a);
        ordered_json arr = ordered_json::array();
        for (const auto &p : pts)
          arr.push_back(point_to_string(*t.ground().space(), p));
        out["result"] = arr;
        std::cout << out.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < pts.size(); ++i)
          std::cout << (i ? " " : "")
                    << point_to_string(*t.ground().space(), pts[i]);
        std::cout << "\n";
      }
      return 0;
    }
    MSet result = [&] {
      if (cmp_op == "interior")
        return t.interior(a);
      if (cmp_op == "closure")
        return t.closure(a);
      if (cmp_op == "exterior")
        return exterior(t, a);
      if (cmp_op == "boundary")
        return boundary(t, a);
      throw Error(ErrorCode::UnknownOperator, "unknown operator '" + cmp_op + "'");
    }();
    if (cmp_json) {
      ordered_json out;
      out["op"] = cmp_op;
      out["input"] = mset_json(a);
      out["result"] = mset_json(result);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << result.to_string() << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    if (ver_all == !ver_theorem.empty())
      throw Error(ErrorCode::UnknownTheorem,
                  "pass exactly one of --theorem and --all");
    MTopology t = load_space_file(ver_file);
    CheckOptions opts;
    opts.max_instances = ver_max_instances;
    opts.whole_only = ver_whole;

    std::vector<Verdict> verdicts;
    if (ver_all) {
      verdicts = verify_all(t, opts);
    } else {
      auto id = parse_theorem_id(ver_theorem);
      if (!id)
        throw Error(ErrorCode::UnknownTheorem,
                    "unknown theorem id '" + ver_theorem + "'");
      verdicts.push_back(check_space(t, *id, opts));
    }

    bool any_fail = false;
    ordered_json arr = ordered_json::array();
    for (const auto &v : verdicts) {
      if (ver_json)
        arr.push_back(verdict_json(v));
      else
        std::cout << v.format() << "\n";
      if (!v.holds) {
        any_fail = true;
        if (theorem_is_provable(v.id))
          std::cerr << "warning: " << theorem_name(v.id)
                    << " is provable in count semantics; a failure here is an "
                       "implementation bug\n";
      }
    }
    if (ver_json)
      std::cout << arr.dump() << "\n";
    return any_fail ? 1 : 0;
  }

  if (enumerate->parsed()) {
    MSet ground = parse_ground(enu_ground, enu_w, enu_domain);
    if (enu_topologies) {
      EnumConfig cfg;
      cfg.max_submsets = enu_cap;
      auto tops = all_topologies(ground, cfg);
      if (enu_count) {
        if (enu_json)
          std::cout << ordered_json{{"topologies", tops.size()}}.dump() << "\n";
        else
          std::cout << "topologies=" << tops.size() << "\n";
      } else {
        for (const auto &t : tops) {
          if (enu_json) {
            ordered_json arr = ordered_json::array();
            for (const auto &u : t.opens())
              arr.push_back(mset_json(u));
            std::cout << arr.dump() << "\n";
          } else {
            std::cout << family_to_string(t.opens()) << "\n";
          }
        }
      }
      return 0;
    }
    const char *kind = enu_whole ? "whole_submsets"
                       : enu_full ? "full_submsets"
                                  : "submsets";
    auto subs = enu_whole  ? enumerate_whole_submsets(ground)
                : enu_full ? enumerate_full_submsets(ground)
                           : enumerate_submsets(ground);
    if (enu_count) {
      if (enu_json)
        std::cout << ordered_json{{kind, subs.size()}}.dump() << "\n";
      else
        std::cout << kind << "=" << subs.size() << "\n";
    } else {
      for (const auto &s : subs)
        std::cout << (enu_json ? mset_json(s).dump() : s.to_string()) << "\n";
    }
    return 0;
  }

  if (search->parsed()) {
    auto id = parse_theorem_id(sea_theorem);
    if (!id)
      throw Error(ErrorCode::UnknownTheorem,
                  "unknown theorem id '" + sea_theorem + "'");
    if (sea_exhaustive == sea_seeded)
      throw Error(ErrorCode::ParseError,
                  "pass exactly one of --exhaustive and --seed");
    SearchConfig cfg;
    cfg.max_domain = sea_max_domain;
    cfg.max_w = sea_max_w;
    cfg.exhaustive = sea_exhaustive;
    cfg.seed = sea_seed;
    cfg.budget = sea_budget;
    CheckOptions opts;
    opts.whole_only = sea_whole;

    SearchResult res = search_counterexample(*id, cfg, opts);
    if (res.space) {
      const MTopology &t = *res.space;
      if (sea_json) {
        ordered_json out;
        out["domain"] = t.ground().space()->domain();
        out["w"] = t.ground().space()->w();
        out["ground"] = mset_json(t.ground());
        ordered_json arr = ordered_json::array();
        for (const auto &u : t.opens())
          arr.push_back(mset_json(u));
        out["opens"] = arr;
        out["verdict"] = verdict_json(res.verdict);
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "space w=" << t.ground().space()->w()
                  << " ground=" << t.ground().to_string()
                  << " opens=" << family_to_string(t.opens()) << "\n";
        std::cout << res.verdict.format() << "\n";
      }
      return 1;
    }
    if (sea_json) {
      ordered_json out;
      out["theorem"] = theorem_name(*id);
      out["status"] = "holds";
      out["spaces"] = res.spaces_checked;
      out["instances"] = res.instances_checked;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << theorem_name(*id) << " HOLDS spaces=" << res.spaces_checked
                << " instances=" << res.instances_checked << "\n";
    }
    return 0;
  }

  return 2;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
