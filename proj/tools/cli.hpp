#pragma once

// nsum command-line front end. run() is the whole program; main() only
// forwards to it so tests can drive it in-process.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsum/census.hpp"
#include "nsum/families.hpp"
#include "nsum/graph.hpp"
#include "nsum/infinite_prefix.hpp"
#include "nsum/linear_oracle.hpp"
#include "nsum/ns_checker.hpp"

namespace nsum::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, negative = 1, failure = 2 };

inline constexpr const char* default_cache = "nsum-census.jsonl";

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline Json strings(const std::vector<ExtRat>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

inline Json basis_json(const KernelBasis& k) {
  Json out = Json::array();
  for (const auto& v : k.basis) out.push_back(strings(v));
  return out;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

inline std::filesystem::path cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("NSUM_CACHE"); env && *env) return env;
  return default_cache;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighbour-sum property: exact checker, kernel oracle and tree census", "nsum"};
  app.require_subcommand(1, 1);

  std::string file;
  std::optional<Vertex> root;

  auto* check = app.add_subcommand("check", "S value at every root of a tree, and a witness if one exists");
  check->add_option("file", file, "edge-list file")->required();

  auto* witness = app.add_subcommand("witness", "construct and verify a witness from a root with S = 1");
  witness->add_option("file", file, "edge-list file")->required();
  witness->add_option("--root", root, "root vertex (default: lowest vertex with S = 1)");

  auto* dim = app.add_subcommand("dim", "exact kernel of I - A for any simple graph");
  dim->add_option("file", file, "edge-list file")->required();

  std::size_t max_n = 0;
  std::size_t shards = 1;
  std::string cache;
  bool no_cache = false;
  bool recompute = false;
  bool verbose = false;
  auto* count = app.add_subcommand("count", "sigma(n) for n = 1..max over all free trees");
  count->add_option("--max", max_n, "largest tree order")->required()->check(CLI::Range(1, 40));
  count->add_option("--shards", shards, "worker threads")->check(CLI::Range(1, 256));
  count->add_option("--cache", cache, "JSON-lines cache (default: $NSUM_CACHE or ./nsum-census.jsonl)");
  count->add_flag("--no-cache", no_cache, "neither read nor write the cache");
  count->add_flag("--recompute", recompute, "ignore cached records, but still write results");
  count->add_flag("--verbose", verbose, "per-n records and the density check on stderr");

  std::string kind;
  std::vector<std::size_t> params;
  auto* family = app.add_subcommand("family", "generated graph families");
  family->require_subcommand(1, 1);
  auto* family_gen = family->add_subcommand("gen", "print the family member as an edge list");
  auto* family_check = family->add_subcommand("check", "closed form vs checker vs kernel");
  for (auto* sub : {family_gen, family_check}) {
    sub->add_option("kind", kind,
                    "path | star | spider | level-symmetric | cycle | complete | complete-bipartite | "
                    "complete-multipartite")
        ->required();
    sub->add_option("params", params, "integer parameters")->required();
  }

  std::string gen;
  std::string rules_file;
  std::size_t levels = 0;
  std::uint64_t seed = 1;
  std::string split = "even";
  auto* prefix = app.add_subcommand("prefix", "values on the first levels of an infinite tree");
  auto* gen_opt = prefix->add_option("--gen", gen, "binary | path | figure4 | random");
  auto* rules_opt = prefix->add_option("--rules", rules_file, "per-level \"internal leaves\" rule file");
  gen_opt->excludes(rules_opt);
  prefix->add_option("--levels", levels, "number of levels L")->required()->check(CLI::Range(1, 64));
  prefix->add_option("--seed", seed, "seed for --gen random");
  prefix->add_option("--split", split, "even | first")->check(CLI::IsMember({"even", "first"}));

  std::size_t window_m = 0;
  auto* window = app.add_subcommand("window", "finite window of the spine tree with pendant paths");
  window->add_option("--m", window_m, "window half-width")->required()->check(CLI::Range(2, 200));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    detail::emit(out, Json{{"error", e.what()}});
    return failure;
  }

  try {
    if (*check) {
      const Tree t(parse_edge_list(detail::read_file(file)));
      const auto s = s_at_all_roots(t);
      const auto r = t.order() > 1 ? first_ns_root(s) : std::nullopt;
      Json j;
      j["n"] = t.order();
      j["s_values"] = detail::strings(s);
      j["satisfies"] = r.has_value();
      j["witness"] = r ? detail::strings(construct_witness(t, *r).values) : Json(nullptr);
      j["root"] = r ? Json(*r) : Json(nullptr);
      detail::emit(out, j);
      return r ? ok : negative;
    }

    if (*witness) {
      const Tree t(parse_edge_list(detail::read_file(file)));
      if (!root) {
        root = t.order() > 1 ? first_ns_root(s_at_all_roots(t)) : std::nullopt;
        if (!root) {
          detail::emit(out, Json{{"n", t.order()}, {"root", nullptr}, {"witness", nullptr}});
          return negative;
        }
      }
      const Witness w = construct_witness(t, *root);
      detail::emit(out, Json{{"n", t.order()}, {"root", *root}, {"witness", detail::strings(w.values)}});
      return ok;
    }

    if (*dim) {
      const Graph g = parse_edge_list(detail::read_file(file));
      Json j;
      if (g.order() <= dense_limit) {
        const auto k = kernel_basis(g);
        j["dim"] = k.dim;
        j["basis"] = detail::basis_json(k);
      } else {
        j["dim"] = kernel_dim(g);
        j["basis"] = nullptr;
      }
      detail::emit(out, j);
      return ok;
    }

    if (*count) {
      CensusOptions options;
      options.shards = shards;
      options.reuse_cached = !recompute;
      if (!no_cache) options.cache = detail::cache_path(cache);
      const auto report = census(max_n, options, [&](const CensusRecord& r) {
        out << r.sigma << '\n' << std::flush;
        if (verbose) err << nlohmann::json(r).dump() << '\n';
      });
      if (verbose && max_n >= 5) {
        for (const auto& row : density_check(report, max_n)) {
          err << Json{{"n", row.n},
                      {"sigma", row.sigma},
                      {"tau_n_minus_4", row.tau_minus_4},
                      {"bound_holds", row.holds},
                      {"ratio", row.ratio},
                      {"reference", otter_density_reference}}
                     .dump()
              << '\n';
        }
      }
      return ok;
    }

    if (*family) {
      const FamilySpec spec = parse_family(kind, params);
      const Graph g = generate(spec);
      if (*family_gen) {
        out << to_edge_list(g);
        return ok;
      }
      const bool expected = expected_ns(spec);
      const std::size_t k = kernel_dim(g);
      Json j;
      j["kind"] = kind_name(spec);
      j["params"] = params;
      j["expected"] = expected;
      std::optional<bool> checker;
      if (is_tree_family(spec)) checker = satisfies_ns(Tree(g));
      j["checker"] = checker ? Json(*checker) : Json(nullptr);
      j["kernel_dim"] = k;
      const bool agree = (expected == (k >= 1)) && (!checker || *checker == expected);
      j["agree"] = agree;
      detail::emit(out, j);
      return agree ? ok : negative;
    }

    if (*prefix) {
      std::unique_ptr<LazyTree> tree;
      if (!rules_file.empty()) {
        tree = std::make_unique<LevelRuleLazyTree>(LevelRuleLazyTree::parse(detail::read_file(rules_file)));
      } else if (!gen.empty()) {
        tree = make_lazy_tree(gen, seed);
      } else {
        throw InvalidSpec("prefix needs --gen or --rules");
      }
      const auto a = construct_prefix(*tree, levels, split == "first" ? SplitStrategy::first : SplitStrategy::even);
      Json per_level = Json::array();
      for (const auto& level : a.by_level) {
        Json values = Json::array();
        for (auto idx : level) values.push_back(to_string(a.vertices[idx].value));
        per_level.push_back(std::move(values));
      }
      detail::emit(out, Json{{"generator", tree->name()}, {"split", split}, {"levels", std::move(per_level)}});
      return ok;
    }

    if (*window) {
      const auto w = counterexample_window(window_m);
      detail::emit(out, Json{{"m", w.m},
                             {"dim", w.kernel.dim},
                             {"labels", w.labels},
                             {"basis", detail::basis_json(w.kernel)},
                             {"interior_zero", w.interior_forced_zero()}});
      return ok;
    }
  } catch (const std::exception& e) {
    detail::emit(out, Json{{"error", e.what()}});
    return failure;
  }
  return failure;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace nsum::cli
