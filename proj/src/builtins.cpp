#include "signstable/builtins.hpp"

#include <regex>

namespace signstable {

ExchangeSeed a2_seed() { return make_seed(2, {{0, 1}, {-1, 0}}); }

ExchangeSeed kronecker_seed(int l) {
  if (l < 0) throw Error("kronecker parameter must be nonnegative");
  return make_seed(2, {{0, -l}, {l, 0}});
}

static MutationPath path_of(const ExchangeSeed& s, std::vector<PathStep> steps) {
  MutationPath p{s, std::move(steps)};
  p.validate();
  return p;
}

static std::vector<PathStep> muts(std::initializer_list<int> ks) {
  std::vector<PathStep> out;
  for (int k : ks) out.push_back(PathStep::mut(k - 1));
  return out;
}

Builtin builtin(const std::string& name) {
  std::smatch m;
  if (name == "a2") {
    auto steps = muts({1, 2, 1, 2, 1});
    steps.push_back(PathStep::swap(0, 1));
    Builtin b{name, a2_seed(), {}, std::nullopt, {}};
    b.paths.push_back({"pentagon", path_of(b.seed, steps)});
    return b;
  }
  static const std::regex kron(R"(kronecker(?:\((\d+)\))?)");
  if (std::regex_match(name, m, kron)) {
    int l = m[1].matched ? std::stoi(m[1].str()) : 2;
    Builtin b{name, kronecker_seed(l), {}, std::nullopt, {}};
    b.paths.push_back({"gamma", path_of(b.seed, {PathStep::mut(0), PathStep::swap(0, 1)})});
    return b;
  }
  if (name == "annulus_dehn") {
    Triangulation t = builtin_triangulation("annulus_dehn");
    Builtin b{name, b_from_triangulation(t), {}, t, {}};
    b.paths.push_back({"gamma", path_of(b.seed, {PathStep::mut(0), PathStep::swap(0, 1)})});
    b.points.push_back({"curve_C", {Q(1), Q(-1)}});
    return b;
  }
  if (name == "sphere4_pa") {
    Triangulation t = builtin_triangulation("sphere4");
    Builtin b{name, b_from_triangulation(t), {}, t, {}};
    auto steps = muts({1, 5, 3, 2});
    auto sigma = Permutation::from_cycles(6, {{0, 4, 5}, {1, 3, 2}});
    for (const auto& s : permutation_steps(sigma)) steps.push_back(s);
    b.paths.push_back({"gamma", path_of(b.seed, steps)});
    return b;
  }
  if (name == "genus2_dehn") {
    Triangulation t = builtin_triangulation("genus2");
    Builtin b{name, b_from_triangulation(t), {}, t, {}};
    b.paths.push_back({"gamma", path_of(b.seed, {PathStep::mut(5), PathStep::swap(1, 5)})});
    auto steps = muts({6, 9, 9});
    steps.push_back(PathStep::swap(1, 5));
    b.paths.push_back({"gamma_prime", path_of(b.seed, steps)});
    QVec c(9, Q(0));
    c[1] = 1;
    c[5] = -1;
    b.points.push_back({"curve_C", c});
    return b;
  }
  throw Error("unknown builtin: " + name);
}

std::vector<std::string> builtin_names() {
  return {"a2", "kronecker(2)", "kronecker(3)", "annulus_dehn", "sphere4_pa", "genus2_dehn"};
}

std::pair<ExchangeSeed, std::optional<MutationPath>> builtin_seed(const std::string& name) {
  Builtin b = builtin(name);
  std::optional<MutationPath> p;
  if (!b.paths.empty()) p = b.paths.front().path;
  return {b.seed, p};
}

MutationPath builtin_path(const std::string& ref) {
  auto slash = ref.find('/');
  Builtin b = builtin(ref.substr(0, slash));
  if (b.paths.empty()) throw Error("builtin has no path: " + ref);
  if (slash == std::string::npos) return b.paths.front().path;
  std::string want = ref.substr(slash + 1);
  for (const auto& np : b.paths)
    if (np.name == want) return np.path;
  throw Error("unknown path " + want + " for builtin " + ref.substr(0, slash));
}

}  // namespace signstable
