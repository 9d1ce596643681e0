#include <doctest.h>

#include "oracles.hpp"
#include "signstable/surfaces.hpp"

using namespace signstable;

TEST_CASE("builtin triangulations") {
  Triangulation ann = builtin_triangulation("annulus_dehn");
  CHECK(ann.n_edges == 4);
  CHECK(ann.n_interior == 2);
  CHECK(b_from_triangulation(ann).B[0][1] == -2);

  Triangulation sph = builtin_triangulation("sphere4");
  CHECK(sph.n_edges == 6);
  CHECK(sph.n_interior == 6);
  CHECK(sph.punctures().size() == 4);

  Triangulation g2 = builtin_triangulation("genus2");
  CHECK(g2.n_interior == 9);
  CHECK(g2.punctures().size() == 1);
  CHECK_THROWS_AS(builtin_triangulation("klein"), Error);
}

TEST_CASE("sphere exchange matrix") {
  QMat want = {{0, -1, 1, 0, 1, -1},  {1, 0, 0, -1, 0, 0}, {-1, 0, 0, 1, 0, 0},
               {0, 1, -1, 0, -1, 1},  {-1, 0, 0, 1, 0, 0}, {1, 0, 0, -1, 0, 0}};
  CHECK(b_from_triangulation(builtin_triangulation("sphere4")).B == want);
}

TEST_CASE("genus two exchange matrix") {
  QMat want = {{0, 0, -1, -1, 0, 0, 1, 1, 0},  {0, 0, 1, 0, 0, -2, 1, 0, 0},
               {1, -1, 0, 0, 0, 1, -1, 0, 0},  {1, 0, 0, 0, -1, 0, 0, -1, 1},
               {0, 0, 0, 1, 0, 0, 0, 1, -2},   {0, 2, -1, 0, 0, 0, -1, 0, 0},
               {-1, -1, 1, 0, 0, 1, 0, 0, 0},  {-1, 0, 0, 1, -1, 0, 0, 0, 1},
               {0, 0, 0, -1, 2, 0, 0, -1, 0}};
  CHECK(b_from_triangulation(builtin_triangulation("genus2")).B == want);
}

TEST_CASE("disk pieces") {
  // Quadrilateral with one diagonal: the unfrozen block is the 1x1 zero matrix.
  Triangulation q;
  q.n_edges = 5;
  q.n_interior = 1;
  q.n_vertices = 4;
  q.is_puncture = {false, false, false, false};
  q.triangles = {{{0, 1, 2}, {0, 1, 2}}, {{0, 3, 4}, {2, 3, 0}}};
  q.topology = Topology{0, 0, 1, 4};
  q.validate();
  ExchangeSeed s = b_from_triangulation(q);
  CHECK(s.n_uf == 1);
  CHECK(s.B[0][0] == 0);
  CHECK(flip(flip(q, 0), 0) == q);

  // A lone triangle has no arcs to mutate.
  Triangulation tri;
  tri.n_edges = 3;
  tri.n_interior = 0;
  tri.n_vertices = 3;
  tri.is_puncture = {false, false, false};
  tri.triangles = {{{0, 1, 2}, {0, 1, 2}}};
  tri.validate();
  CHECK_THROWS_AS(b_from_triangulation(tri), Error);
}

TEST_CASE("validation catches miscounts") {
  Triangulation t = builtin_triangulation("sphere4");
  t.triangles[0].edges[0] = 0;
  CHECK_THROWS_AS(t.validate(), Error);
  Triangulation u = builtin_triangulation("sphere4");
  u.topology->punctures = 5;
  CHECK_THROWS_AS(u.validate(), Error);
}

TEST_CASE("flip is an involution and commutes with mutation") {
  for (const auto& name : builtin_triangulation_names()) {
    Triangulation t = builtin_triangulation(name);
    ExchangeSeed s = b_from_triangulation(t);
    for (int e = 0; e < t.n_interior; ++e) {
      REQUIRE(can_flip(t, e));
      Triangulation f = flip(t, e);
      CHECK(flip(f, e) == t);
      CHECK(b_from_triangulation(f).B == mutate_matrix(s, e).B);
    }
  }
}

TEST_CASE("sphere flip at arc 1 matches the first step of the loop") {
  Triangulation t = builtin_triangulation("sphere4");
  ExchangeSeed s = b_from_triangulation(t);
  CHECK(b_from_triangulation(flip(t, 0)) == mutate_matrix(s, 0));
}

TEST_CASE("self-folded triangles") {
  // Flipping arc 2 on the sphere leaves puncture 3 with a single arc.
  Triangulation t = flip(builtin_triangulation("sphere4"), 1);
  auto sf = t.self_folded();
  REQUIRE(sf.size() == 1);
  int inner = sf[0].first;
  CHECK(inner == 2);
  CHECK_FALSE(can_flip(t, inner));
  CHECK_THROWS_WITH_AS(flip(t, inner), "tagged flip required, unsupported", Error);
  ExchangeSeed s = b_from_triangulation(t);
  CHECK(s.B == mutate_matrix(b_from_triangulation(builtin_triangulation("sphere4")), 1).B);
  // The inner arc copies the row of its encircling loop.
  CHECK(s.B[inner] == s.B[sf[0].second]);
}

TEST_CASE("casimir") {
  Triangulation sph = builtin_triangulation("sphere4");
  CHECK(casimir(sph, QVec(6, Q(0))) == QVec(4, Q(0)));
  CHECK(casimir(sph, QVec(6, Q(1))) == QVec{4, 4, 2, 2});
  auto mult = sph.puncture_incidence();
  int total = 0;
  for (const auto& row : mult)
    for (int m : row) total += m;
  CHECK(total == 2 * sph.n_interior);
  Triangulation g2 = builtin_triangulation("genus2");
  CHECK(casimir(g2, QVec(9, Q(1))) == QVec{18});
  CHECK_THROWS_AS(casimir(builtin_triangulation("annulus_dehn"), QVec(2, Q(1))), Error);
}

TEST_CASE("casimir is invariant along flip paths") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Triangulation t = builtin_triangulation("sphere4");
    QVec x = oracle::random_point(rng, 6);
    QVec theta = casimir(t, x);
    for (int step = 0; step < 8; ++step) {
      int e = static_cast<int>(rng() % 6);
      if (!can_flip(t, e)) continue;
      Triangulation f = flip(t, e);
      if (!f.self_folded().empty()) continue;
      x = trop_x_step(b_from_triangulation(t), e, x);
      t = f;
      CHECK(casimir(t, x) == theta);
    }
  }
}
