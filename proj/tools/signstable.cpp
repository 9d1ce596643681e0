// Command-line front end. Exit codes: 0 ok / consensus, 1 malformed input,
// 2 non-strict sign encountered, 3 no stability consensus.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "signstable/builtins.hpp"
#include "signstable/cg.hpp"
#include "signstable/io.hpp"
#include "signstable/stability.hpp"
#include "signstable/surfaces.hpp"
#include "signstable/tropical.hpp"

using namespace signstable;

namespace {

constexpr int kOk = 0, kMalformed = 1, kNonStrict = 2, kNoConsensus = 3;

struct Common {
  std::string path, example, point, seed, format = "json";
  std::vector<std::string> points;
  int n_max = 1000, window = 3, iterations = 10, k = 0, threads = 0;
  bool no_canonical = false, weak = false, side_a = false;
};

MutationPath resolve_path(const Common& c) {
  if (!c.example.empty()) return builtin_path(c.example);
  if (c.path.empty()) throw Error("give --path or --example");
  return path_from_json(load_json(c.path));
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

int exit_for(const StabilityReport& r) {
  if (r.consensus) return kOk;
  return r.any_nonstrict() ? kNonStrict : kNoConsensus;
}

std::vector<QVec> samples_for(const Common& c, const MutationPath& p) {
  std::vector<QVec> s;
  if (!c.no_canonical) {
    auto [lp, lm] = canonical_points(p.start.n_uf);
    s = {lp, lm};
  }
  for (const auto& txt : c.points) s.push_back(parse_point(txt));
  if (s.empty()) throw Error("no samples");
  return s;
}

StabilityOptions options_for(const Common& c) {
  if (c.n_max < 1 || c.window < 1) throw Error("--nmax and --window must be positive");
  StabilityOptions o;
  o.n_max = c.n_max;
  o.window = c.window;
  o.threads = c.threads;
  return o;
}

json example_json(const std::string& name) {
  Builtin b = builtin(name);
  json paths = json::array();
  for (const auto& np : b.paths) {
    json pj = path_to_json(np.path);
    json entry{{"name", np.name}, {"steps", pj["steps"]}};
    auto [lp, lm] = canonical_points(np.path.start.n_uf);
    StabilityReport r = detect_sign_stability(np.path, {lp, lm});
    entry["stable_sign"] = r.consensus ? json(sign_string(*r.consensus)) : json("none");
    paths.push_back(entry);
  }
  json j{{"name", b.name}, {"seed", seed_to_json(b.seed)}, {"paths", paths}};
  if (b.triangulation) j["triangulation"] = triangulation_to_json(*b.triangulation);
  if (!b.points.empty()) {
    json pts = json::object();
    for (const auto& np : b.points) pts[np.name] = point_to_json(np.point);
    j["points"] = pts;
  }
  return j;
}

void print_table(const StabilityReport& r) {
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    std::cout << "sample " << i + 1 << "  " << status_string(s.status) << "  n0=" << s.n0 << "  "
              << sign_string(s.terminal_sign) << "\n";
  }
  if (!r.consensus) {
    std::cout << "consensus none\n";
    return;
  }
  std::cout << "consensus " << sign_string(*r.consensus) << "\n";
  std::cout << "char_poly " << poly_string(r.char_poly) << "\n";
  std::cout << "perron_root " << format_real(r.perron->value) << "\n";
  std::cout << "cone_certificate " << cert_string(r.cone_certificate) << "\n";
  std::cout << "spectral_duality " << (r.spectral_duality ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign stability of cluster mutation loops"};
  app.require_subcommand(1);
  Common c;

  auto add_path = [&](CLI::App* sub) {
    sub->add_option("--path", c.path, "path JSON, file, or builtin name");
    sub->add_option("--example", c.example, "builtin example (name or name/path)");
  };
  auto add_stab = [&](CLI::App* sub) {
    sub->add_option("--nmax", c.n_max, "maximum loop iterations");
    sub->add_option("--window", c.window, "confirmation window K");
    sub->add_option("--threads", c.threads, "worker threads (SIGNSTABLE_THREADS caps)");
    sub->add_option("--point", c.points, "extra sample point, comma separated rationals");
    sub->add_flag("--no-canonical", c.no_canonical, "skip the canonical samples");
  };

  auto* mutate = app.add_subcommand("mutate", "mutate a seed at index k");
  mutate->add_option("--seed", c.seed, "seed JSON, file, or builtin name")->required();
  mutate->add_option("-k", c.k, "1-based unfrozen index")->required();

  auto* orbit = app.add_subcommand("orbit", "iterate a loop on a point");
  add_path(orbit);
  orbit->add_option("--point", c.point, "start point")->required();
  orbit->add_option("--iterations", c.iterations, "number of iterations");
  orbit->add_flag("--a-side", c.side_a, "treat the point as an A-point");
  orbit->add_option("--format", c.format, "json or table");

  auto* signs = app.add_subcommand("signs", "sign of a path at a point");
  add_path(signs);
  signs->add_option("--point", c.point, "point")->required();
  signs->add_flag("--a-side", c.side_a, "treat the point as an A-point");

  auto* stability = app.add_subcommand("stability", "detect sign stability");
  add_path(stability);
  add_stab(stability);
  stability->add_flag("--weak", c.weak, "weak sign stability");
  stability->add_option("--format", c.format, "json or table");

  auto* stretch = app.add_subcommand("stretch", "cluster stretch factor");
  add_path(stretch);
  add_stab(stretch);
  auto* entropy_cmd = app.add_subcommand("entropy", "algebraic entropy");
  add_path(entropy_cmd);
  add_stab(entropy_cmd);

  auto* cgmat = app.add_subcommand("cgmat", "C- and G-matrices along a path");
  add_path(cgmat);
  auto* duality = app.add_subcommand("duality", "duality checks along a path");
  add_path(duality);

  auto* surface = app.add_subcommand("surface", "triangulation tools");
  surface->require_subcommand(1);
  std::string tri;
  int edge = 0;
  auto* build_b = surface->add_subcommand("build-b", "exchange matrix of a triangulation");
  build_b->add_option("--triangulation", tri, "triangulation JSON, file, or builtin name")->required();
  auto* flip_cmd = surface->add_subcommand("flip", "flip an arc");
  flip_cmd->add_option("--triangulation", tri, "triangulation JSON, file, or builtin name")->required();
  flip_cmd->add_option("--edge", edge, "1-based interior arc")->required();

  auto* examples = app.add_subcommand("examples", "list or show builtin examples");
  std::string example_name;
  examples->add_option("name", example_name, "builtin name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (*mutate) {
      ExchangeSeed s = seed_from_json(load_json(c.seed));
      if (c.k < 1 || c.k > s.n_uf) throw Error("mutation index out of range");
      print(seed_to_json(mutate_matrix(s, c.k - 1)));
    } else if (*orbit) {
      MutationPath p = resolve_path(c);
      Side side = c.side_a ? Side::A : Side::X;
      if (c.iterations < 0) throw Error("--iterations must be nonnegative");
      for (const auto& e : apply_loop(p, parse_point(c.point), c.iterations, side)) {
        if (c.format == "table")
          std::cout << e.iter << "  " << sign_string(e.sign) << "  " << point_to_json(e.point).dump() << "\n";
        else print(json{{"iter", e.iter}, {"point", point_to_json(e.point)}, {"sign", sign_string(e.sign)}});
      }
    } else if (*signs) {
      MutationPath p = resolve_path(c);
      SignSequence s = sign_of_path(p, parse_point(c.point), c.side_a ? Side::A : Side::X);
      print(json{{"sign", sign_string(s)}, {"strict", is_strict(s)}});
      return is_strict(s) ? kOk : kNonStrict;
    } else if (*stability) {
      MutationPath p = resolve_path(c);
      auto samples = samples_for(c, p);
      if (c.weak) {
        WeakStabilityReport r = detect_weak_sign_stability(p, samples, options_for(c));
        print(weak_report_to_json(r));
        return r.weakly_stable ? kOk : kNoConsensus;
      }
      StabilityReport r = detect_sign_stability(p, samples, options_for(c));
      if (c.format == "table") print_table(r);
      else print(report_to_json(r));
      return exit_for(r);
    } else if (*stretch || *entropy_cmd) {
      MutationPath p = resolve_path(c);
      StabilityReport r = detect_sign_stability(p, samples_for(c, p), options_for(c));
      if (!r.consensus) {
        std::cerr << "no stability consensus\n";
        return exit_for(r);
      }
      std::cout << format_real(*stretch ? stretch_factor(r) : signstable::entropy(r)) << "\n";
    } else if (*cgmat) {
      print(cg_to_json(cg_run(resolve_path(c))));
    } else if (*duality) {
      MutationPath p = resolve_path(c);
      CGState st = cg_init(p.start);
      bool transpose_inverse = true, duality_ok = true;
      for (const auto& step : p.steps) {
        if (step.horizontal()) {
          int eps = row_sign(st.C[step.k]);
          QMat E = e_matrix(st.seed, step.k, eps, Side::A);
          QMat Ec = check_e_matrix(st.seed, step.k, eps, Side::A);
          transpose_inverse = transpose_inverse && transpose(E) == inverse(Ec);
        }
        st = cg_step(st, step);
        duality_ok = duality_ok && duality_check(st);
      }
      json j{{"duality", duality_ok},
             {"sign_coherent", true},
             {"transpose_inverse", transpose_inverse},
             {"tropical_signs", sign_string(st.tropical_signs)}};
      bool ok = duality_ok && transpose_inverse;
      if (is_mutation_loop(p)) {
        bool spec = spectral_duality_check(presentation_matrix(p, st.tropical_signs),
                                           check_presentation_matrix(p, st.tropical_signs));
        j["spectral_duality"] = spec;
        ok = ok && spec;
      }
      print(j);
      return ok ? kOk : kNoConsensus;
    } else if (*build_b) {
      print(seed_to_json(b_from_triangulation(triangulation_from_json(load_json(tri)))));
    } else if (*flip_cmd) {
      Triangulation t = triangulation_from_json(load_json(tri));
      if (edge < 1 || edge > t.n_interior) throw Error("flip requires an interior arc");
      print(triangulation_to_json(flip(t, edge - 1)));
    } else if (*examples) {
      if (example_name.empty()) {
        json names = json::array();
        for (const auto& n : builtin_names()) names.push_back(n);
        print(names);
      } else {
        print(example_json(example_name));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}
