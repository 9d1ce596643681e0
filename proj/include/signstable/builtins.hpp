#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signstable/seeds.hpp"
#include "signstable/surfaces.hpp"

namespace signstable {

struct NamedPath {
  std::string name;
  MutationPath path;
};

struct NamedPoint {
  std::string name;
  QVec point;
};

struct Builtin {
  std::string name;
  ExchangeSeed seed;
  std::vector<NamedPath> paths;  // first entry is the default
  std::optional<Triangulation> triangulation;
  std::vector<NamedPoint> points;
};

// Names: a2, kronecker (l=2), kronecker(l), annulus_dehn, sphere4_pa, genus2_dehn.
Builtin builtin(const std::string& name);
std::vector<std::string> builtin_names();
std::pair<ExchangeSeed, std::optional<MutationPath>> builtin_seed(const std::string& name);

// "name" or "name/path-name".
MutationPath builtin_path(const std::string& ref);

ExchangeSeed a2_seed();
ExchangeSeed kronecker_seed(int l);

}  // namespace signstable
