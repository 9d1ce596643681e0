#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signstable/seeds.hpp"

namespace signstable {

// edges are listed clockwise; corners[i] is the marked point where edges[i]
// meets edges[(i+1)%3]. A triangle listing an edge twice is self-folded.
struct Triangle {
  std::array<int, 3> edges{};
  std::array<int, 3> corners{};
  bool operator==(const Triangle& o) const = default;
};

struct Topology {
  int genus = 0;
  int punctures = 0;
  int boundaries = 0;
  int boundary_points = 0;
};

struct Triangulation {
  int n_edges = 0;
  int n_interior = 0;  // interior arcs are 0..n_interior-1, boundary segments follow
  int n_vertices = 0;
  std::vector<Triangle> triangles;
  std::vector<bool> is_puncture;  // per vertex
  std::optional<Topology> topology;

  void validate() const;
  // (inner edge, encircling loop) for every self-folded triangle.
  std::vector<std::pair<int, int>> self_folded() const;
  // mult[p][e]: number of ends of interior arc e at puncture p (0, 1 or 2).
  std::vector<std::vector<int>> puncture_incidence() const;
  std::vector<int> punctures() const;
  bool operator==(const Triangulation& o) const;
};

ExchangeSeed b_from_triangulation(const Triangulation& t);
Triangulation flip(const Triangulation& t, int edge);
bool can_flip(const Triangulation& t, int edge);

Triangulation builtin_triangulation(const std::string& name);
std::vector<std::string> builtin_triangulation_names();

// theta_p = sum_e mult(p, e) x_e, one entry per puncture.
QVec casimir(const Triangulation& t, const QVec& x);

}  // namespace signstable
