#include <doctest.h>

#include "oracles.hpp"
#include "signstable/cg.hpp"
#include "signstable/stability.hpp"

using namespace signstable;

static QMat uf_block(const QMat& M, int m) {
  QMat out(m);
  for (int i = 0; i < m; ++i) out[i] = QVec(M[i].begin(), M[i].begin() + m);
  return out;
}

TEST_CASE("first steps on A2") {
  CGState s = cg_step(cg_init(a2_seed()), PathStep::mut(0));
  CHECK(s.C[0] == QVec{-1, 0});
  CHECK(s.tropical_signs == SignSequence{1});
  CHECK(duality_check(s));
  CGState t = cg_step(s, PathStep::swap(0, 1));
  CHECK(t.C[1] == QVec{-1, 0});
  CHECK(t.G[1] == s.G[0]);
}

TEST_CASE("pentagon returns to the identity") {
  CGState s = cg_run(builtin_path("a2"));
  CHECK(s.C == identity(2));
  CHECK(s.G == identity(2));
  CHECK(s.seed == a2_seed());
}

TEST_CASE("row sign") {
  CHECK(row_sign({0, 2}) == 1);
  CHECK(row_sign({-1, 0}) == -1);
  CHECK_THROWS_WITH_AS(row_sign({1, -1}), "sign-coherence violated", Error);
  CHECK_THROWS_AS(row_sign({0, 0}), Error);
}

TEST_CASE("C and G are presentation matrices at the tropical signs") {
  std::mt19937_64 rng(51);
  std::vector<ExchangeSeed> seeds = oracle::duality_seeds();
  seeds.push_back(builtin("annulus_dehn").seed);
  for (const auto& seed : seeds)
    for (int t = 0; t < 30; ++t) {
      MutationPath p = oracle::random_path(rng, seed, 12);
      CGState s = cg_run(p);
      CHECK(duality_check(s));
      Q d = det(s.C);
      CHECK((d == 1 || d == -1));
      CHECK(s.C == presentation_matrix(p, s.tropical_signs, Side::A));
      CHECK(s.G == check_presentation_matrix(p, s.tropical_signs, Side::A));
      CHECK(uf_block(s.C, seed.n_uf) == presentation_matrix(p, s.tropical_signs));
    }
}

TEST_CASE("sphere loop") {
  MutationPath g = builtin_path("sphere4_pa");
  CGState s = cg_run(g);
  CHECK(duality_check(s));
  CHECK(s.seed == g.start);
  CHECK(s.tropical_signs.size() == 4);
  CHECK(s.G == check_presentation_matrix(g, s.tropical_signs, Side::A));
}
