#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "signstable/io.hpp"

using namespace signstable;

TEST_CASE("seed round trip") {
  for (const auto& name : builtin_names()) {
    ExchangeSeed s = builtin(name).seed;
    CHECK(seed_from_json(json::parse(seed_to_json(s).dump())) == s);
  }
  QMat B = {{0, 1, -1}, {-1, 0, Q(1, 2)}, {1, Q(-1, 2), 0}};
  ExchangeSeed f = make_seed(1, B);
  json j = seed_to_json(f);
  CHECK(j["B"][1][2] == "1/2");
  CHECK(seed_from_json(j) == f);
  CHECK(seed_from_json(json("kronecker(3)")) == kronecker_seed(3));
  CHECK(seed_from_json(json::parse(R"({"n":2,"n_uf":2,"B":[[0,1],[-1,0]]})")) == a2_seed());
}

TEST_CASE("path round trip and permutation steps") {
  std::mt19937_64 rng(62);
  for (const auto& s : oracle::duality_seeds())
    for (int t = 0; t < 20; ++t) {
      MutationPath p = oracle::random_path(rng, s, 10);
      MutationPath q = path_from_json(json::parse(path_to_json(p).dump()));
      CHECK(q.start == p.start);
      CHECK(q.steps.size() == p.steps.size());
      CHECK(run_path(q, QVec(s.n_uf, Q(1))).point == run_path(p, QVec(s.n_uf, Q(1))).point);
    }
  json j = json::parse(R"({"seed":"sphere4_pa","steps":[{"mut":1},{"mut":5},{"mut":3},{"mut":2},
                           {"perm":[5,4,2,3,6,1]}]})");
  MutationPath p = path_from_json(j);
  CHECK(is_mutation_loop(p));
  CHECK(presentation_matrix(p, parse_sign("(+,-,-,+)")) ==
        presentation_matrix(builtin_path("sphere4_pa"), parse_sign("(+,-,-,+)")));
  CHECK(path_from_json(json("kronecker(2)")).steps.size() == 2);
}

TEST_CASE("malformed paths") {
  auto bad = [](const char* text) { return path_from_json(json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"seed":"a2","steps":[{"mut":3}]})"), Error);
  CHECK_THROWS_AS(bad(R"({"seed":"a2","steps":[{"mut":0}]})"), Error);
  CHECK_THROWS_AS(bad(R"({"seed":"a2","steps":[{"flip":1}]})"), Error);
  CHECK_THROWS_AS(bad(R"({"seed":"a2","steps":[{"swap":[1]}]})"), Error);
  CHECK_THROWS_AS(bad(R"({"seed":"a2","steps":[{"perm":[1,1]}]})"), Error);
  CHECK_THROWS_AS(bad(R"({"steps":[]})"), Error);
  CHECK_THROWS_AS(bad(R"({"seed":{"n":2,"n_uf":2,"B":[[0,1],[1,0]]},"steps":[]})"), Error);
  CHECK_THROWS_AS(bad(R"({"seed":{"n":2,"n_uf":2,"B":[[0,"1/0"],[0,0]]},"steps":[]})"), Error);
}

TEST_CASE("triangulation round trip") {
  for (const auto& name : builtin_triangulation_names()) {
    Triangulation t = builtin_triangulation(name);
    json j = triangulation_to_json(t);
    CHECK(triangulation_from_json(json::parse(j.dump())) == t);
  }
  Triangulation folded = flip(builtin_triangulation("sphere4"), 1);
  json j = triangulation_to_json(folded);
  CHECK(j["self_folded"].size() == 1);
  CHECK(triangulation_from_json(j) == folded);
  j["triangles"][0][0] = 99;
  CHECK_THROWS_AS(triangulation_from_json(j), Error);
}

TEST_CASE("points") {
  CHECK(parse_point("1, -2/4, +3") == QVec{1, Q(-1, 2), 3});
  CHECK(parse_point(R"(["1/3", 2])") == QVec{Q(1, 3), 2});
  CHECK(point_to_json(QVec{Q(1, 3), -2}) == json::parse(R"(["1/3","-2"])"));
  CHECK_THROWS_AS(parse_point("1,x"), Error);
  CHECK_THROWS_AS(parse_point("1/0"), Error);
  CHECK_THROWS_AS(parse_point(""), Error);
  CHECK_THROWS_AS(parse_point("1,,2"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("real formatting") {
  CHECK(format_real(1.0) == "1.000000000000");
  CHECK(format_real(-0.0) == "0.000000000000");
  CHECK(format_real(-1e-15) == "0.000000000000");
  CHECK(format_real(2.618033988749895) == "2.618033988750");
}

TEST_CASE("reports") {
  MutationPath k2 = builtin_path("kronecker(2)");
  StabilityReport r = detect_sign_stability(k2, {QVec{1, 1}, QVec{-1, -1}});
  json j = json::parse(report_to_json(r).dump());
  CHECK(j["consensus"] == "(+)");
  CHECK(j["stable_matrix"] == json::parse(R"([["2","1"],["-1","0"]])"));
  CHECK(j["perron_root"]["value"] == "1.000000000000");
  CHECK(j["samples"].size() == 2);
  StabilityReport again = detect_sign_stability(k2, {QVec{1, 1}, QVec{-1, -1}});
  CHECK(report_to_json(again).dump() == report_to_json(r).dump());

  StabilityReport none = detect_sign_stability(builtin_path("a2"), {QVec{1, 1}, QVec{-1, -1}});
  CHECK(report_to_json(none)["consensus"] == "none");

  CGState cg = cg_run(builtin_path("a2"));
  json c = cg_to_json(cg);
  CHECK(c["duality"] == true);
  CHECK(matrix_from_json(c["C"]) == identity(2));
}

TEST_CASE("load_json") {
  CHECK(load_json(R"({"a":1})")["a"] == 1);
  CHECK(load_json("sphere4_pa") == json("sphere4_pa"));
  std::string file = "io_test_tmp.json";
  {
    std::ofstream out(file);
    out << R"({"seed":"a2","steps":[{"mut":1}]})";
  }
  CHECK(path_from_json(load_json(file)).steps.size() == 1);
  std::remove(file.c_str());
  CHECK_THROWS_AS(load_json("{not json"), Error);
}
