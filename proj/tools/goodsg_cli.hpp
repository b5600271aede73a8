#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "goodsg/goodsg.hpp"

namespace goodsg::cli {

namespace detail {

inline std::vector<ExtPoint> parse_omegas(const std::vector<std::string>& raw, std::size_t d) {
  std::vector<ExtPoint> out;
  for (const auto& r : raw) {
    ExtPoint p;
    try {
      p = parse_point(r);
    } catch (const Error& e) {
      throw Error(ErrorKind::Usage, e.detail());
    }
    if (p.dim() != d)
      throw Error(ErrorKind::Usage, "--omega " + r + " has dimension " + std::to_string(p.dim()) + ", semigroup has " +
                                        std::to_string(d));
    if (!p.is_finite()) throw Error(ErrorKind::Usage, "--omega must be finite");
    out.push_back(p);
  }
  return out;
}

inline std::uint32_t default_padding(const std::vector<ExtPoint>& gens) {
  std::uint32_t m = 0;
  for (const auto& g : gens)
    for (auto v : g) m = std::max(m, v.value());
  return m + 2;
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Good semigroups, Apery sets and their level partitions", "goodsg"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> omegas;
  bool all_small = false;
  std::uint32_t padding = 0;
  std::uint64_t seed = 1;
  std::size_t dim = 2, count = 10;
  std::uint32_t max_conductor = 8;
  std::string kind = "closure-repair", out_dir = ".";

  auto* validate = app.add_subcommand("validate", "Check the good-semigroup axioms of a .gs file");
  validate->add_option("file", file, "Semigroup file")->required();

  auto* apery_cmd = app.add_subcommand("apery", "Level partition of the Apery set of omega");
  apery_cmd->add_option("file", file, "Semigroup file")->required();
  apery_cmd->add_option("--omega", omegas, "Element of S, e.g. (1,2,3)")->required()->expected(1);

  auto* levels_cmd = app.add_subcommand("levels", "Level partition of S \\ E for the ideal generated by --omega");
  levels_cmd->add_option("file", file, "Semigroup file")->required();
  levels_cmd->add_option("--omega", omegas, "Ideal generator (repeatable)")->required();

  auto* sub_cmd = app.add_subcommand("subspaces", "Subspaces contained in each level");
  sub_cmd->add_option("file", file, "Semigroup file")->required();
  sub_cmd->add_option("--omega", omegas, "Ideal generator (repeatable)")->required();

  auto* thm_cmd = app.add_subcommand("check-theorem", "Compare N and subspace dimensions with omega");
  thm_cmd->add_option("file", file, "Semigroup file")->required();
  auto* thm_omega = thm_cmd->add_option("--omega", omegas, "Element of S")->expected(1);
  auto* thm_all = thm_cmd->add_flag("--all-small", all_small, "Every nonzero small element");
  thm_omega->excludes(thm_all);

  auto* gen_cmd = app.add_subcommand("generate", "Write a random corpus of good semigroups");
  gen_cmd->add_option("--seed", seed, "Seed")->required();
  gen_cmd->add_option("--d", dim, "Dimension")->check(CLI::Range(1, 16));
  gen_cmd->add_option("--count", count, "Number of instances");
  gen_cmd->add_option("--kind", kind, "product or closure-repair")
      ->check(CLI::IsMember({"product", "closure-repair"}));
  gen_cmd->add_option("--max-conductor", max_conductor, "Conductor bound per coordinate");
  gen_cmd->add_option("--out", out_dir, "Output directory");

  auto* diff_cmd = app.add_subcommand("oracle-diff", "Compare levels with the padded-grid oracle");
  diff_cmd->add_option("file", file, "Semigroup file")->required();
  diff_cmd->add_option("--omega", omegas, "Ideal generator (repeatable)")->required();
  diff_cmd->add_option("--padding", padding, "Grid padding beyond c_E (default max(omega)+2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*gen_cmd) {
      CorpusSpec spec;
      spec.seed = seed;
      spec.d = dim;
      spec.count = count;
      spec.kind = parse_corpus_kind(kind);
      spec.max_conductor = max_conductor;
      std::filesystem::create_directories(out_dir);
      const auto corpus = generate_corpus(spec);
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto path = std::filesystem::path(out_dir) / (std::to_string(seed) + "-" + std::to_string(k) + ".gs");
        std::ofstream f(path);
        if (!f) throw Error(ErrorKind::Usage, "cannot write " + path.string());
        f << "# " << to_string(spec.kind) << " seed=" << seed << " index=" << k << "\n" << serialize_semigroup(corpus[k]);
        out << path.string() << "\n";
      }
      return 0;
    }

    const std::string text = read_file(file);
    if (*validate) {
      const auto raw = parse_semigroup_text(text);
      const auto rep = GoodSemigroup::validate_small(raw.d, raw.elements);
      out << rep.to_text();
      if (raw.conductor && rep.conductor && *raw.conductor != *rep.conductor) {
        out << "declared-conductor: FAIL declared " << to_string(*raw.conductor) << "\n";
        return 1;
      }
      return rep.ok() ? 0 : 1;
    }

    const auto s = parse_semigroup(text);
    if (*thm_cmd) {
      std::vector<ExtPoint> ws;
      if (all_small) {
        ws.assign(s.small().begin() + 1, s.small().end());
      } else {
        if (omegas.empty()) throw Error(ErrorKind::Usage, "check-theorem needs --omega or --all-small");
        ws = detail::parse_omegas(omegas, s.dim());
      }
      bool ok = true;
      for (const auto& w : ws) {
        const auto r = theorem_main_check(apery(s, w), w);
        if (all_small) out << "omega=" << to_string(w) << " ";
        out << r.summary() << "\n";
        for (const auto& v : r.violations) out << "  " << v << "\n";
        ok = ok && r.passed();
      }
      return ok ? 0 : 1;
    }

    const auto gens = detail::parse_omegas(omegas, s.dim());
    const auto e = ideal_from_generators(s, gens);
    const auto p = compute_levels(complement(e), e);
    if (*apery_cmd || *levels_cmd) {
      out << format_levels(p);
      return 0;
    }
    if (*sub_cmd) {
      out << format_subspaces(p);
      return 0;
    }
    if (*diff_cmd) {
      const auto pad = padding ? padding : detail::default_padding(gens);
      const auto g = brute_force_partition(e, pad);
      auto diffs = oracle_diff(p, g);
      for (const auto& r : ray_constancy_violations(g)) diffs.push_back("ray: " + r);
      out << "grid " << to_string(g.box.hi()) << " N=" << g.n << "\n";
      for (const auto& dline : diffs) out << dline << "\n";
      out << (diffs.empty() ? "identical" : "DIFFERENT") << "\n";
      return diffs.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  }
  return 2;
}

}  // namespace goodsg::cli
