// binmat: exact computation with binary matroids.
//
// Exit codes: 0 success / predicate true, 1 predicate false, 2 usage error,
// 3 internal assertion failure.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "binmat/canonical.hpp"
#include "binmat/classify.hpp"
#include "binmat/compose.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/minor.hpp"
#include "binmat/verify.hpp"

using json = nlohmann::json;
using namespace binmat;

namespace {

// Resolve a matroid argument: catalog name first, then file path. Both
// existing at once is ambiguous and refused.
BinaryMatroid resolve_matroid(const std::string& arg) {
  bool named_hit = is_named(arg);
  bool file_hit = std::filesystem::exists(arg);
  if (named_hit && file_hit)
    throw CLI::ValidationError("matroid", "'" + arg + "' is both a catalog name and a file");
  if (named_hit) return named(arg);
  if (file_hit) return load_matroid_file(arg).matroid;
  // allow aliases that is_named resolves but also throw a clean error
  try {
    return named(arg);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("matroid", "'" + arg + "' is neither a catalog name nor a file");
  }
}

ElementSet parse_triangle(const BinaryMatroid& m, const std::string& csv) {
  ElementSet out;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  for (const auto& e : out) m.index_of(e);  // validates
  return out;
}

json classification_to_json(const Classification& c) {
  json j;
  j["label"] = class_name(c.label);
  json cert = json::object();
  if (c.separation) {
    json sep;
    for (const auto& e : c.separation->side_x) sep["side_x"].push_back(e.name);
    for (const auto& e : c.separation->side_y) sep["side_y"].push_back(e.name);
    sep["lambda"] = c.separation->lambda_value;
    sep["order"] = c.separation->order;
    cert["separation"] = sep;
  }
  if (c.p9_witness) {
    json w;
    for (const auto& e : c.p9_witness->deleted) w["delete"].push_back(e.name);
    for (const auto& e : c.p9_witness->contracted) w["contract"].push_back(e.name);
    cert["witness"] = w;
  }
  if (c.spike) {
    cert["spike"] = {{"r", c.spike->r}, {"variant", spike_name(*c.spike)}};
  }
  if (c.family_member) cert["member"] = *c.family_member;
  if (c.starfish)
    cert["starfish"] = {
        {"extra", c.starfish->extra}, {"n", c.starfish->n}, {"t", c.starfish->t}};
  if (c.regular_kind) cert["regular_kind"] = *c.regular_kind;
  j["certificate"] = cert;
  return j;
}

std::string name_or_key(const BinaryMatroid& m, const CanonicalKey& key) {
  for (const auto& n : catalog_names()) {
    const BinaryMatroid& cand = named(n);
    if (cand.size() == m.size() && cand.rank() == m.rank() && canonical_key(cand) == key)
      return n;
  }
  return key.hex();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with binary matroids"};
  app.require_subcommand(1);

  // show
  auto* show = app.add_subcommand("show", "print a matroid in the text matrix format");
  std::string show_arg;
  show->add_option("matroid", show_arg)->required();

  // list
  app.add_subcommand("list", "list catalog names");

  // iso
  auto* iso = app.add_subcommand("iso", "test two matroids for isomorphism");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  // minor
  auto* minor = app.add_subcommand("minor", "test for an (optionally rooted) minor");
  std::string minor_m, minor_n, minor_rooted, minor_pattern_root;
  bool minor_json = false, minor_witness = false;
  minor->add_option("m", minor_m)->required();
  minor->add_option("n", minor_n)->required();
  minor->add_option("--rooted", minor_rooted,
                    "comma-separated triangle of m; the minor must carry it onto the "
                    "pattern's root triangle");
  minor->add_option("--pattern-root", minor_pattern_root,
                    "root triangle of the pattern (default: its first triangle)");
  minor->add_flag("--witness", minor_witness, "print a replayable witness");
  minor->add_flag("--json", minor_json);

  // connectivity
  auto* conn = app.add_subcommand("connectivity", "tau, 3-connectivity, internal 4-connectivity");
  std::string conn_arg;
  bool conn_json = false;
  conn->add_option("matroid", conn_arg)->required();
  conn->add_flag("--json", conn_json);

  // classify
  auto* cls = app.add_subcommand("classify", "decide the classification clause");
  std::string cls_arg;
  bool cls_refine = false, cls_json = false;
  cls->add_option("matroid", cls_arg)->required();
  cls->add_flag("--refine-regular", cls_refine, "split the regular clause into graphic/cographic/R10");
  cls->add_flag("--json", cls_json);

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "closure under extensions/coextensions");
  std::vector<std::string> enu_seeds;
  std::vector<std::string> enu_keep;
  std::string enu_forbid;
  int enu_steps = 1;
  int enu_max_size = 0;
  bool enu_json = false;
  enu->add_option("--seed", enu_seeds, "seed matroids")->required();
  enu->add_option("--keep", enu_keep, "filters: 3connected, simple, i4c");
  enu->add_option("--forbid", enu_forbid, "excluded minor");
  enu->add_option("--steps", enu_steps, "closure depth");
  enu->add_option("--max-size", enu_max_size, "size cap");
  enu->add_flag("--json", enu_json);

  // compose
  auto* comp = app.add_subcommand("compose", "direct sum, 2-sum, parallel connection, 3-sum");
  std::string comp_op, comp_a, comp_b;
  std::string comp_lt, comp_rt, comp_p1, comp_p2;
  bool comp_json = false;
  comp->add_option("--op", comp_op, "dsum|2sum|pc|3sum")->required();
  comp->add_option("a", comp_a)->required();
  comp->add_option("b", comp_b)->required();
  comp->add_option("--left-triangle", comp_lt, "comma-separated (default: first triangle)");
  comp->add_option("--right-triangle", comp_rt);
  comp->add_option("--left-base", comp_p1, "2-sum basepoint of a");
  comp->add_option("--right-base", comp_p2, "2-sum basepoint of b");
  comp->add_flag("--json", comp_json);

  // starfish
  auto* star = app.add_subcommand("starfish", "build a starfish");
  int star_n = 2, star_extra = 2, star_t = 1;
  star->add_option("--n", star_n)->required();
  star->add_option("--extra", star_extra)->required();
  star->add_option("--t", star_t)->required();

  // key
  auto* keycmd = app.add_subcommand("key", "print the canonical key (hex)");
  std::string key_arg;
  keycmd->add_option("matroid", key_arg)->required();

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  std::string verify_case;
  verify->add_option("--case", verify_case, "run one case by id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (show->parsed()) {
      BinaryMatroid m = resolve_matroid(show_arg);
      std::optional<std::string> name;
      if (is_named(show_arg)) name = show_arg;
      std::cout << write_matrix_text(m, name);
      return 0;
    }
    if (app.get_subcommand("list")->parsed()) {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
      return 0;
    }
    if (iso->parsed()) {
      bool same = are_isomorphic(resolve_matroid(iso_a), resolve_matroid(iso_b));
      std::cout << (same ? "true" : "false") << "\n";
      return same ? 0 : 1;
    }
    if (minor->parsed()) {
      BinaryMatroid m = resolve_matroid(minor_m);
      BinaryMatroid n = resolve_matroid(minor_n);
      bool found;
      json out;
      if (!minor_rooted.empty()) {
        ElementSet t = parse_triangle(m, minor_rooted);
        ElementSet root = minor_pattern_root.empty()
                              ? first_triangle(n)
                              : parse_triangle(n, minor_pattern_root);
        found = has_rooted_minor(m, t, RootedPattern{n, root});
        out["rooted"] = minor_rooted;
      } else {
        found = has_minor(m, n);
        if (found && minor_witness) {
          auto w = find_minor_witness(m, n);
          json jw;
          for (const auto& e : w->deleted) jw["delete"].push_back(e.name);
          for (const auto& e : w->contracted) jw["contract"].push_back(e.name);
          out["witness"] = jw;
        }
      }
      out["minor"] = found;
      if (minor_json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << (found ? "true" : "false") << "\n";
      return found ? 0 : 1;
    }
    if (conn->parsed()) {
      BinaryMatroid m = resolve_matroid(conn_arg);
      auto t = tau(m);
      I4CResult i4c = internally_4_connected(m);
      if (conn_json) {
        json j;
        j["tau"] = t ? json(*t) : json("infinity");
        j["three_connected"] = is_three_connected(m);
        j["internally_4_connected"] = i4c.ok;
        if (i4c.witness) {
          json sep;
          for (const auto& e : i4c.witness->side_x) sep["side_x"].push_back(e.name);
          for (const auto& e : i4c.witness->side_y) sep["side_y"].push_back(e.name);
          sep["lambda"] = i4c.witness->lambda_value;
          j["witness"] = sep;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "tau: " << (t ? std::to_string(*t) : "infinity") << "\n";
        std::cout << "3-connected: " << (is_three_connected(m) ? "yes" : "no") << "\n";
        std::cout << "internally-4-connected: " << (i4c.ok ? "yes" : "no") << "\n";
        if (i4c.witness) {
          std::cout << "witness X:";
          for (const auto& e : i4c.witness->side_x) std::cout << " " << e.name;
          std::cout << " (lambda " << i4c.witness->lambda_value << ")\n";
        }
      }
      return 0;
    }
    if (cls->parsed()) {
      BinaryMatroid m = resolve_matroid(cls_arg);
      ClassifyOptions opts;
      opts.refine_regular = cls_refine;
      Classification c = classify(m, opts);
      if (cls_json)
        std::cout << classification_to_json(c).dump(2) << "\n";
      else {
        std::cout << class_name(c.label);
        if (c.family_member) std::cout << " (" << *c.family_member << ")";
        if (c.spike) std::cout << " (" << spike_name(*c.spike) << ")";
        if (c.starfish)
          std::cout << " (extra=" << c.starfish->extra << ", n=" << c.starfish->n
                    << ", t=" << c.starfish->t << ")";
        if (c.regular_kind) std::cout << " [" << *c.regular_kind << "]";
        std::cout << "\n";
      }
      return 0;
    }
    if (enu->parsed()) {
      SearchFilters f;
      for (const auto& k : enu_keep) {
        if (k == "3connected")
          f.three_connected = true;
        else if (k == "simple")
          f.simple_only = true;
        else if (k == "i4c")
          f.internally_4c = true;
        else
          throw CLI::ValidationError("--keep", "unknown filter: " + k);
      }
      if (!enu_forbid.empty()) f.forbidden_minor = resolve_matroid(enu_forbid);
      if (enu_max_size > 0) f.max_size = enu_max_size;
      std::vector<BinaryMatroid> seeds;
      for (const auto& s : enu_seeds) seeds.push_back(resolve_matroid(s));
      ClosureReport rep = closure_search(seeds, enu_seeds, f, enu_steps);
      json j;
      for (std::size_t i = 0; i < rep.seed_keys.size(); i++)
        j["seeds"].push_back(rep.seed_names[i]);
      j["filters"] = rep.filters_description;
      j["steps"] = rep.steps_executed;
      j["fixpoint"] = rep.reached_fixpoint;
      j["found"] = json::array();
      for (const auto& [key, entry] : rep.found) {
        json e;
        e["name_or_key"] = name_or_key(entry.matroid, key);
        e["size"] = entry.size;
        e["rank"] = entry.rank;
        e["i4c"] = is_internally_4_connected(entry.matroid);
        e["path"] = entry.path;
        j["found"].push_back(e);
      }
      if (enu_json)
        std::cout << j.dump(2) << "\n";
      else {
        std::cout << rep.found.size() << " matroids found (steps=" << rep.steps_executed
                  << (rep.reached_fixpoint ? ", fixpoint" : "") << ")\n";
        for (const auto& e : j["found"])
          std::cout << "  " << e["name_or_key"].get<std::string>() << "  size "
                    << e["size"] << " rank " << e["rank"] << "  " << e["path"].get<std::string>()
                    << "\n";
      }
      return 0;
    }
    if (comp->parsed()) {
      BinaryMatroid a = resolve_matroid(comp_a);
      BinaryMatroid b = resolve_matroid(comp_b);
      BinaryMatroid out;
      if (comp_op == "dsum") {
        out = direct_sum(a, b);
      } else if (comp_op == "2sum") {
        if (comp_p1.empty() || comp_p2.empty())
          throw CLI::ValidationError("--op", "2sum needs --left-base and --right-base");
        out = two_sum(a, b, comp_p1, comp_p2);
      } else if (comp_op == "pc" || comp_op == "3sum") {
        ElementSet lt = comp_lt.empty() ? first_triangle(a) : parse_triangle(a, comp_lt);
        ElementSet rt = comp_rt.empty() ? first_triangle(b) : parse_triangle(b, comp_rt);
        TriangleGlue glue{a, b, lt, rt};
        out = comp_op == "pc" ? parallel_connection_triangle(glue) : three_sum(glue);
      } else {
        throw CLI::ValidationError("--op", "unknown operation: " + comp_op);
      }
      std::cout << write_matrix_text(out);
      return 0;
    }
    if (star->parsed()) {
      BinaryMatroid m = build_starfish({star_extra, star_n, star_t});
      std::cout << write_matrix_text(m);
      return 0;
    }
    if (keycmd->parsed()) {
      std::cout << canonical_key(resolve_matroid(key_arg)).hex() << "\n";
      return 0;
    }
    if (verify->parsed()) {
      std::vector<CaseResult> results;
      if (!verify_case.empty()) {
        results.push_back(run_verification_case(verify_case));
      } else {
        results = run_all_verification_cases();
      }
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  ("
                  << static_cast<int>(r.seconds * 1000) << " ms)\n";
        if (!r.pass) std::cout << r.details;
        all = all && r.pass;
      }
      std::cout << (all ? "all cases passed" : "SOME CASES FAILED") << "\n";
      return all ? 0 : 3;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
