#include <doctest.h>

#include "oracles.hpp"
#include "signstable/builtins.hpp"
#include "signstable/tropical.hpp"

using namespace signstable;

static QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

static MutationPath kron_path(int l) { return builtin_path("kronecker(" + std::to_string(l) + ")"); }

TEST_CASE("trop_x_step examples") {
  CHECK(trop_x_step(kronecker_seed(2), 0, qv({1, 0})) == qv({-1, 2}));
  CHECK(trop_x_step(a2_seed(), 0, qv({-1, 1})) == qv({1, 0}));
  CHECK(trop_x_step(kronecker_seed(3), 0, qv({0, 7})) == qv({0, 7}));
  CHECK_THROWS_AS(trop_x_step(a2_seed(), 0, qv({1, 2, 3})), Error);
}

TEST_CASE("trop_x_step matches the sign-free oracle") {
  std::mt19937_64 rng(21);
  for (const auto& s : oracle::duality_seeds())
    for (int t = 0; t < 100; ++t) {
      QVec w = oracle::random_point(rng, s.n_uf);
      int k = static_cast<int>(rng() % s.n_uf);
      CHECK(trop_x_step(s, k, w) == oracle::x_step(s.B, k, w));
    }
}

TEST_CASE("trop_ensemble examples") {
  CHECK(trop_ensemble(a2_seed(), qv({0, 0})) == qv({0, 0}));
  CHECK(trop_ensemble(a2_seed(), qv({1, 0})) == qv({0, -1}));
  CHECK(trop_ensemble(kronecker_seed(2), qv({1, 1})) == qv({-2, 2}));
}

TEST_CASE("trop_a_step examples and oracle") {
  CHECK(trop_a_step(a2_seed(), 0, qv({0, 0})) == qv({0, 0}));
  CHECK(trop_a_step(a2_seed(), 0, qv({1, 2})) == qv({-1, 2}));
  std::mt19937_64 rng(22);
  std::vector<ExchangeSeed> seeds = oracle::duality_seeds();
  seeds.push_back(builtin("annulus_dehn").seed);
  for (const auto& s : seeds)
    for (int t = 0; t < 100; ++t) {
      QVec a = oracle::random_point(rng, s.n);
      int k = static_cast<int>(rng() % s.n_uf);
      CHECK(trop_a_step(s, k, a) == oracle::a_step(s.B, k, a));
    }
}

TEST_CASE("sign_of_path on the sphere loop") {
  MutationPath g = builtin_path("sphere4_pa");
  QVec lp(6, Q(1));
  CHECK(sign_of_path(g, lp) == parse_sign("(+,+,+,+)"));
  CHECK(sign_of_path(g, run_path(g, lp).point) == parse_sign("(+,-,+,+)"));
  CHECK(sign_of_path(g, QVec(6, Q(0))) == SignSequence{0, 0, 0, 0});
}

TEST_CASE("sign strings") {
  CHECK(sign_string({1, -1, 0}) == "(+,-,0)");
  CHECK(parse_sign("(+,-,0)") == SignSequence{1, -1, 0});
  CHECK_THROWS_AS(parse_sign("(+,x)"), Error);
  CHECK(is_strict({1, -1}));
  CHECK_FALSE(is_strict({1, 0}));
}

TEST_CASE("elementary matrices") {
  for (int l = 0; l <= 4; ++l) {
    QMat E = e_matrix(kronecker_seed(l), 0, 1);
    CHECK(E == QMat{{-1, 0}, {l, 1}});
    QMat P = permutation_matrix(Permutation::transposition(2, 0, 1));
    CHECK(mul(P, E) == QMat{{l, 1}, {-1, 0}});
  }
  // All b_ki >= 0 with eps = + gives a pure reflection.
  ExchangeSeed s = make_seed(3, {{0, 1, 2}, {-1, 0, 0}, {-2, 0, 0}});
  CHECK(e_matrix(s, 0, 1) == QMat{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(transpose(e_matrix(a2_seed(), 0, 1)) == inverse(check_e_matrix(a2_seed(), 0, 1)));
  CHECK_THROWS_AS(e_matrix(a2_seed(), 0, 0), Error);

  ExchangeSeed ann = builtin("annulus_dehn").seed;
  CHECK(e_matrix(ann, 0, 1, Side::X).size() == 2);
  CHECK(e_matrix(ann, 0, 1, Side::A).size() == 4);
}

TEST_CASE("presentation matrices") {
  MutationPath k2 = kron_path(2);
  CHECK(presentation_matrix(k2, {1}) == QMat{{2, 1}, {-1, 0}});
  CHECK(presentation_matrix(k2, {-1}) == QMat{{0, 1}, {-1, 0}});
  CHECK_THROWS_WITH_AS(presentation_matrix(k2, {0}), "sign is not strict: entry 1 is 0", Error);
  CHECK_THROWS_AS(presentation_matrix(k2, {1, 1}), Error);

  auto sigma = Permutation::from_cycles(3, {{0, 1, 2}});
  ExchangeSeed s = make_seed(3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  MutationPath only_swaps{s, permutation_steps(sigma)};
  CHECK(presentation_matrix(only_swaps, {}) == permutation_matrix(sigma));
  QVec x = qv({5, 6, 7});
  CHECK(run_path(only_swaps, x).point == mul(permutation_matrix(sigma), x));
}

TEST_CASE("presentation determinant is a unit") {
  std::mt19937_64 rng(23);
  for (const auto& s : oracle::duality_seeds())
    for (int t = 0; t < 40; ++t) {
      MutationPath p = oracle::random_path(rng, s, 10);
      SignSequence eps;
      for (int i = 0; i < p.horizontal_count(); ++i) eps.push_back(rng() % 2 ? 1 : -1);
      Q d = det(presentation_matrix(p, eps));
      CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("apply_loop") {
  MutationPath g = builtin_path("sphere4_pa");
  auto orbit = apply_loop(g, QVec(6, Q(1)), 5);
  std::vector<std::string> plus = {"(+,+,+,+)", "(+,-,+,+)", "(+,-,-,+)", "(+,-,-,+)", "(+,-,-,+)"};
  for (int n = 0; n < 5; ++n) CHECK(sign_string(orbit[n].sign) == plus[n]);
  CHECK(orbit[0].iter == 1);

  auto zero = apply_loop(g, QVec(6, Q(0)), 4);
  for (const auto& e : zero) CHECK(e.point == QVec(6, Q(0)));

  MutationPath k2 = kron_path(2);
  auto dir = apply_loop(k2, qv({1, 0}), 200, Side::X, 0);
  QVec last = dir.back().point;
  // Directions approach (1, -1): x1 + x2 stays bounded while |x1| grows.
  CHECK(last[0] > 100);
  CHECK(abs(last[0] + last[1]) <= 1);
  CHECK_THROWS_AS(apply_loop(MutationPath{a2_seed(), {PathStep::mut(0)}}, qv({1, 1}), 3), Error);
}

TEST_CASE("renormalization keeps the projective orbit") {
  MutationPath g = builtin_path("sphere4_pa");
  auto a = apply_loop(g, QVec(6, Q(1)), 40, Side::X, 16);
  auto b = apply_loop(g, QVec(6, Q(1)), 40, Side::X, 0);
  for (int n = 0; n < 40; ++n) {
    CHECK(a[n].sign == b[n].sign);
    CHECK(normalize_max(a[n].point) == normalize_max(b[n].point));
  }
  CHECK(max_abs(a[16].point) == 1);
}

TEST_CASE("A-side loop") {
  MutationPath g = builtin_path("annulus_dehn");
  QVec a = qv({1, 2, 3, 4});
  auto orbit = apply_loop(g, a, 3, Side::A);
  CHECK(orbit.size() == 3);
  CHECK(orbit[0].sign == SignSequence{sgn(trop_ensemble(g.start, a)[0])});
}
