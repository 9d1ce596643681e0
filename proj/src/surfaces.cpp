#include "signstable/surfaces.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace signstable {

namespace {

bool self_folded_triangle(const Triangle& t) {
  return t.edges[0] == t.edges[1] || t.edges[1] == t.edges[2] || t.edges[2] == t.edges[0];
}

std::pair<int, int> endpoints(const Triangle& t, int slot) {
  int a = t.corners[(slot + 2) % 3], b = t.corners[slot];
  return {std::min(a, b), std::max(a, b)};
}

Triangle rotated(const Triangle& t, int first) {
  Triangle r;
  for (int i = 0; i < 3; ++i) {
    r.edges[i] = t.edges[(first + i) % 3];
    r.corners[i] = t.corners[(first + i) % 3];
  }
  return r;
}

Triangle canonical(const Triangle& t) {
  Triangle best = t;
  for (int i = 1; i < 3; ++i) {
    Triangle r = rotated(t, i);
    if (std::tie(r.edges, r.corners) < std::tie(best.edges, best.corners)) best = r;
  }
  return best;
}

}  // namespace

void Triangulation::validate() const {
  if (n_interior < 0 || n_interior > n_edges) throw Error("bad interior edge count");
  if (static_cast<int>(is_puncture.size()) != n_vertices) throw Error("puncture flags size mismatch");
  std::vector<int> uses(n_edges, 0);
  std::vector<std::optional<std::pair<int, int>>> ends(n_edges);
  for (const auto& t : triangles) {
    for (int s = 0; s < 3; ++s) {
      int e = t.edges[s];
      if (e < 0 || e >= n_edges) throw Error("triangle edge out of range");
      if (t.corners[s] < 0 || t.corners[s] >= n_vertices) throw Error("triangle corner out of range");
      ++uses[e];
      auto ep = endpoints(t, s);
      if (ends[e] && *ends[e] != ep)
        throw Error("inconsistent endpoints for edge " + std::to_string(e + 1));
      ends[e] = ep;
    }
  }
  for (int e = 0; e < n_edges; ++e) {
    int want = e < n_interior ? 2 : 1;
    if (uses[e] != want)
      throw Error("edge " + std::to_string(e + 1) + " appears " + std::to_string(uses[e]) +
                  " times, expected " + std::to_string(want));
  }
  if (topology) {
    const auto& g = *topology;
    int expect = 3 * (2 * g.genus - 2 + g.punctures + g.boundaries) + 2 * g.boundary_points;
    if (expect != n_edges)
      throw Error("edge count " + std::to_string(n_edges) + " does not match topology (" +
                  std::to_string(expect) + ")");
  }
}

std::vector<std::pair<int, int>> Triangulation::self_folded() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : triangles) {
    if (!self_folded_triangle(t)) continue;
    for (int s = 0; s < 3; ++s) {
      int e = t.edges[s];
      if (t.edges[(s + 1) % 3] != e && t.edges[(s + 2) % 3] != e) {
        int inner = t.edges[(s + 1) % 3];
        out.push_back({inner, e});
      }
    }
  }
  return out;
}

std::vector<int> Triangulation::punctures() const {
  std::vector<int> out;
  for (int v = 0; v < n_vertices; ++v)
    if (is_puncture[v]) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> Triangulation::puncture_incidence() const {
  std::vector<std::optional<std::pair<int, int>>> ends(n_edges);
  for (const auto& t : triangles)
    for (int s = 0; s < 3; ++s) ends[t.edges[s]] = endpoints(t, s);
  std::vector<std::vector<int>> mult;
  for (int p : punctures()) {
    std::vector<int> row(n_interior, 0);
    for (int e = 0; e < n_interior; ++e) {
      if (!ends[e]) throw Error("edge without a triangle");
      row[e] = (ends[e]->first == p) + (ends[e]->second == p);
    }
    mult.push_back(row);
  }
  return mult;
}

bool Triangulation::operator==(const Triangulation& o) const {
  if (n_edges != o.n_edges || n_interior != o.n_interior || n_vertices != o.n_vertices ||
      is_puncture != o.is_puncture || triangles.size() != o.triangles.size())
    return false;
  auto canon = [](const std::vector<Triangle>& ts) {
    std::vector<std::tuple<std::array<int, 3>, std::array<int, 3>>> v;
    for (const auto& t : ts) {
      Triangle c = canonical(t);
      v.emplace_back(c.edges, c.corners);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  return canon(triangles) == canon(o.triangles);
}

ExchangeSeed b_from_triangulation(const Triangulation& t) {
  t.validate();
  if (t.n_interior < 1) throw Error("triangulation has no interior arcs");
  std::vector<int> pi(t.n_edges);
  for (int e = 0; e < t.n_edges; ++e) pi[e] = e;
  for (auto [inner, loop] : t.self_folded()) pi[inner] = loop;
  std::vector<std::vector<int>> preimage(t.n_edges);
  for (int e = 0; e < t.n_edges; ++e) preimage[pi[e]].push_back(e);

  QMat B = zeros(t.n_edges, t.n_edges);
  for (const auto& tri : t.triangles) {
    if (self_folded_triangle(tri)) continue;
    for (int s = 0; s < 3; ++s) {
      int x = tri.edges[s], y = tri.edges[(s + 1) % 3];
      for (int a : preimage[x])
        for (int b : preimage[y]) {
          B[a][b] += 1;
          B[b][a] -= 1;
        }
    }
  }
  return make_seed(t.n_interior, B);
}

bool can_flip(const Triangulation& t, int edge) {
  if (edge < 0 || edge >= t.n_interior) return false;
  for (auto [inner, loop] : t.self_folded())
    if (inner == edge) return false;
  int count = 0;
  for (const auto& tri : t.triangles)
    if (std::find(tri.edges.begin(), tri.edges.end(), edge) != tri.edges.end()) ++count;
  return count == 2;
}

Triangulation flip(const Triangulation& t, int edge) {
  if (edge < 0 || edge >= t.n_interior) throw Error("flip requires an interior arc");
  for (auto [inner, loop] : t.self_folded())
    if (inner == edge) throw Error("tagged flip required, unsupported");
  std::vector<int> where;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const auto& e = t.triangles[i].edges;
    if (std::find(e.begin(), e.end(), edge) != e.end()) where.push_back(static_cast<int>(i));
  }
  if (where.size() != 2) throw Error("arc does not bound two distinct triangles");
  auto at_front = [&](const Triangle& tri) {
    for (int s = 0; s < 3; ++s)
      if (tri.edges[s] == edge) return rotated(tri, s);
    throw Error("unreachable");
  };
  Triangle t1 = at_front(t.triangles[where[0]]);
  Triangle t2 = at_front(t.triangles[where[1]]);
  int a = t1.edges[1], b = t1.edges[2], c = t2.edges[1], d = t2.edges[2];
  int p0 = t1.corners[0], p1 = t1.corners[1], p2 = t1.corners[2];
  int q1 = t2.corners[1];
  Triangle n1{{b, c, edge}, {p2, q1, p1}};
  Triangle n2{{d, a, edge}, {p0, p1, q1}};

  Triangulation out = t;
  out.triangles[where[0]] = n1;
  out.triangles[where[1]] = n2;
  out.validate();
  return out;
}

namespace {

// Edges and vertices are given 1-based.
Triangulation from_labels(int n_edges, int n_interior, int n_vertices,
                          const std::vector<bool>& punctures,
                          const std::vector<std::array<int, 6>>& tris, Topology topo) {
  Triangulation t;
  t.n_edges = n_edges;
  t.n_interior = n_interior;
  t.n_vertices = n_vertices;
  t.is_puncture = punctures;
  t.topology = topo;
  for (const auto& r : tris)
    t.triangles.push_back({{r[0] - 1, r[1] - 1, r[2] - 1}, {r[3] - 1, r[4] - 1, r[5] - 1}});
  t.validate();
  return t;
}

}  // namespace

Triangulation builtin_triangulation(const std::string& name) {
  if (name == "annulus_dehn") {
    // Arcs 1, 2 cross the annulus; 3 is the inner boundary segment, 4 the outer.
    // Vertex 1 sits on the inner boundary, vertex 2 on the outer.
    return from_labels(4, 2, 2, {false, false}, {{1, 3, 2, 1, 1, 2}, {2, 1, 4, 1, 2, 2}},
                       {0, 0, 2, 2});
  }
  if (name == "sphere4") {
    // Punctures: 1 top, 2 bottom, 3 left, 4 right.
    return from_labels(6, 6, 4, {true, true, true, true},
                       {{4, 2, 3, 2, 3, 1}, {6, 5, 4, 4, 2, 1}, {3, 2, 1, 3, 2, 1}, {1, 5, 6, 2, 4, 1}},
                       {0, 4, 0, 0});
  }
  if (name == "genus2") {
    // Octagon with opposite sides glued, mirror orientation; one puncture.
    return from_labels(9, 9, 1, {true},
                       {{2, 3, 6, 1, 1, 1},
                        {6, 2, 7, 1, 1, 1},
                        {7, 3, 1, 1, 1, 1},
                        {1, 8, 4, 1, 1, 1},
                        {9, 5, 8, 1, 1, 1},
                        {5, 4, 9, 1, 1, 1}},
                       {2, 1, 0, 0});
  }
  throw Error("unknown triangulation: " + name);
}

std::vector<std::string> builtin_triangulation_names() { return {"annulus_dehn", "sphere4", "genus2"}; }

QVec casimir(const Triangulation& t, const QVec& x) {
  if (static_cast<int>(x.size()) != t.n_interior) throw Error("point size does not match arcs");
  auto mult = t.puncture_incidence();
  if (mult.empty()) throw Error("triangulation has no punctures");
  QVec theta;
  for (const auto& row : mult) {
    Q s = 0;
    for (int e = 0; e < t.n_interior; ++e) s += row[e] * x[e];
    theta.push_back(s);
  }
  return theta;
}

}  // namespace signstable
