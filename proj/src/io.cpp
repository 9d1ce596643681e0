#include "signstable/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "signstable/builtins.hpp"

namespace signstable {

namespace {

Q rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Q(Z(std::to_string(j.get<long long>())));
  throw Error("rational must be a \"p/q\" string or an integer");
}

int index_from_json(const json& j, int limit, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string(what) + " must be an integer");
  int v = j.get<int>();
  if (v < 1 || v > limit) throw Error(std::string(what) + " out of range");
  return v - 1;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json sign_json(const SignSequence& s) { return sign_string(s); }

}  // namespace

json matrix_to_json(const QMat& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& x : r) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return rows;
}

QMat matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  QMat m;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error("matrix row must be an array");
    QVec row;
    for (const auto& x : r) row.push_back(rational_from_json(x));
    m.push_back(row);
  }
  return m;
}

json seed_to_json(const ExchangeSeed& s) {
  return json{{"n", s.n}, {"n_uf", s.n_uf}, {"B", matrix_to_json(s.B)}};
}

ExchangeSeed seed_from_json(const json& j) {
  if (j.is_string()) return builtin_seed(j.get<std::string>()).first;
  ExchangeSeed s;
  if (!field(j, "n").is_number_integer() || !field(j, "n_uf").is_number_integer())
    throw Error("n and n_uf must be integers");
  s.n = j.at("n").get<int>();
  s.n_uf = j.at("n_uf").get<int>();
  s.B = matrix_from_json(field(j, "B"));
  s.validate();
  return s;
}

json path_to_json(const MutationPath& p) {
  json steps = json::array();
  for (const auto& s : p.steps) {
    if (s.horizontal()) steps.push_back({{"mut", s.k + 1}});
    else steps.push_back({{"swap", {s.i + 1, s.j + 1}}});
  }
  return json{{"seed", seed_to_json(p.start)}, {"steps", steps}};
}

MutationPath path_from_json(const json& j) {
  if (j.is_string()) return builtin_path(j.get<std::string>());
  MutationPath p;
  p.start = seed_from_json(field(j, "seed"));
  const json& steps = field(j, "steps");
  if (!steps.is_array()) throw Error("steps must be an array");
  for (const auto& s : steps) {
    if (s.contains("mut")) {
      p.steps.push_back(PathStep::mut(index_from_json(s.at("mut"), p.start.n_uf, "mutation index")));
    } else if (s.contains("swap")) {
      const json& ij = s.at("swap");
      if (!ij.is_array() || ij.size() != 2) throw Error("swap needs two indices");
      p.steps.push_back(PathStep::swap(index_from_json(ij[0], p.start.n, "swap index"),
                                       index_from_json(ij[1], p.start.n, "swap index")));
    } else if (s.contains("perm")) {
      const json& im = s.at("perm");
      if (!im.is_array() || static_cast<int>(im.size()) != p.start.n)
        throw Error("perm needs n images");
      Permutation sigma;
      for (const auto& x : im) sigma.images.push_back(index_from_json(x, p.start.n, "perm image"));
      std::vector<bool> hit(p.start.n, false);
      for (int v : sigma.images) {
        if (hit[v]) throw Error("perm is not a bijection");
        hit[v] = true;
      }
      for (const auto& t : permutation_steps(sigma)) p.steps.push_back(t);
    } else {
      throw Error("unknown step kind");
    }
  }
  p.validate();
  return p;
}

json triangulation_to_json(const Triangulation& t) {
  json tris = json::array(), corners = json::array(), punct = json::array(), folded = json::array();
  for (const auto& tr : t.triangles) {
    tris.push_back({tr.edges[0] + 1, tr.edges[1] + 1, tr.edges[2] + 1});
    corners.push_back({tr.corners[0] + 1, tr.corners[1] + 1, tr.corners[2] + 1});
  }
  for (int p : t.punctures()) punct.push_back(p + 1);
  for (auto [inner, loop] : t.self_folded()) folded.push_back({inner + 1, loop + 1});
  json j{{"n_edges", t.n_edges},      {"n_interior", t.n_interior}, {"n_vertices", t.n_vertices},
         {"triangles", tris},         {"corners", corners},         {"punctures", punct},
         {"self_folded", folded}};
  if (t.topology) {
    const auto& g = *t.topology;
    j["topology"] = {{"genus", g.genus},
                     {"punctures", g.punctures},
                     {"boundaries", g.boundaries},
                     {"boundary_points", g.boundary_points}};
  }
  return j;
}

Triangulation triangulation_from_json(const json& j) {
  if (j.is_string()) return builtin_triangulation(j.get<std::string>());
  Triangulation t;
  t.n_edges = field(j, "n_edges").get<int>();
  t.n_interior = field(j, "n_interior").get<int>();
  t.n_vertices = field(j, "n_vertices").get<int>();
  const json& tris = field(j, "triangles");
  const json& corners = field(j, "corners");
  if (!tris.is_array() || !corners.is_array() || tris.size() != corners.size())
    throw Error("triangles and corners must be arrays of equal length");
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (tris[i].size() != 3 || corners[i].size() != 3) throw Error("triangles need three entries");
    Triangle tr;
    for (int s = 0; s < 3; ++s) {
      tr.edges[s] = index_from_json(tris[i][s], t.n_edges, "edge");
      tr.corners[s] = index_from_json(corners[i][s], t.n_vertices, "vertex");
    }
    t.triangles.push_back(tr);
  }
  t.is_puncture.assign(t.n_vertices, false);
  if (j.contains("punctures"))
    for (const auto& p : j.at("punctures")) t.is_puncture[index_from_json(p, t.n_vertices, "puncture")] = true;
  if (j.contains("topology")) {
    const json& g = j.at("topology");
    t.topology = Topology{g.value("genus", 0), g.value("punctures", 0), g.value("boundaries", 0),
                          g.value("boundary_points", 0)};
  }
  t.validate();
  return t;
}

json point_to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

QVec point_from_json(const json& j) {
  if (!j.is_array()) throw Error("point must be an array");
  QVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

QVec parse_point(const std::string& csv) {
  std::string t = csv;
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) return point_from_json(json::parse(t));
  QVec v;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw Error("empty point");
  return v;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s = buf;
  if (s == "-0.000000000000") s = "0.000000000000";
  return s;
}

json report_to_json(const StabilityReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    json rec{{"start", point_to_json(s.start)}, {"status", status_string(s.status)}};
    if (s.status != SampleRecord::Status::NotStabilized) rec["n0"] = s.n0;
    if (s.status == SampleRecord::Status::NonStrict) rec["nonstrict_step"] = s.nonstrict_step;
    rec["terminal_sign"] = sign_json(s.terminal_sign);
    samples.push_back(rec);
  }
  json j{{"samples", samples}};
  if (!r.consensus) {
    j["consensus"] = "none";
    return j;
  }
  j["consensus"] = sign_json(*r.consensus);
  j["stable_matrix"] = matrix_to_json(r.stable_matrix);
  j["char_poly"] = poly_string(r.char_poly);
  if (r.perron) {
    j["perron_root"] = {{"value", format_real(r.perron->value)},
                        {"bound", r.perron->bound()},
                        {"exact", r.perron->exact},
                        {"anomaly", r.perron->anomaly}};
  }
  json ev = json::array();
  for (double x : r.eigen.vec) ev.push_back(format_real(x));
  j["eigen_direction"] = ev;
  j["eigen_residual"] = r.eigen.residual;
  j["eigen_loop_error"] = r.eigen_loop_error;
  j["sign_cone"] = matrix_to_json(r.cone.functionals);
  j["cone_certificate"] = cert_string(r.cone_certificate);
  j["certified"] = r.certified;
  j["spectral_duality"] = r.spectral_duality;
  return j;
}

json weak_report_to_json(const WeakStabilityReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"start", point_to_json(s.start)},
                       {"weak_sign", sign_json(s.weak_sign)},
                       {"n0", s.n0}});
  json j{{"samples", samples}, {"stable_sign", sign_json(r.stable_sign)},
         {"weakly_stable", r.weakly_stable}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json cg_to_json(const CGState& s) {
  return json{{"C", matrix_to_json(s.C)},
              {"G", matrix_to_json(s.G)},
              {"tropical_signs", sign_json(s.tropical_signs)},
              {"duality", duality_check(s)}};
}

json load_json(const std::string& text_or_path) {
  try {
    return json::parse(text_or_path);
  } catch (const json::parse_error&) {
  }
  std::ifstream in(text_or_path);
  if (!in) {
    // A bare builtin name is accepted as a JSON string.
    if (!text_or_path.empty() && text_or_path.find_first_of("{[") == std::string::npos)
      return json(text_or_path);
    throw Error("cannot parse or open: " + text_or_path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace signstable
