#include "signstable/tropical.hpp"

namespace signstable {

bool is_strict(const SignSequence& s) {
  for (int e : s)
    if (e == 0) return false;
  return true;
}

std::string sign_string(const SignSequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] > 0 ? "+" : (s[i] < 0 ? "-" : "0");
  }
  return out + ")";
}

SignSequence parse_sign(const std::string& s) {
  SignSequence out;
  for (char c : s) {
    if (c == '+') out.push_back(1);
    else if (c == '-') out.push_back(-1);
    else if (c == '0') out.push_back(0);
    else if (c != '(' && c != ')' && c != ',' && c != ' ') throw Error("malformed sign: " + s);
  }
  return out;
}

static void check_index(const ExchangeSeed& s, int k) {
  if (!s.is_unfrozen(k)) throw Error("mutation index out of range");
}

QVec trop_x_step(const ExchangeSeed& s, int k, const QVec& x) {
  check_index(s, k);
  if (static_cast<int>(x.size()) != s.n_uf) throw Error("X-point must have n_uf coordinates");
  QVec out = x;
  int e = sgn(x[k]);
  for (int i = 0; i < s.n_uf; ++i) {
    if (i == k) out[i] = -x[k];
    else if (e != 0) out[i] = x[i] + pos(e * s.B[i][k]) * x[k];
  }
  return out;
}

QVec trop_ensemble(const ExchangeSeed& s, const QVec& a) {
  if (static_cast<int>(a.size()) != s.n) throw Error("A-point must have n coordinates");
  QVec x(s.n_uf, Q(0));
  for (int i = 0; i < s.n_uf; ++i)
    for (int j = 0; j < s.n; ++j) x[i] += s.B[i][j] * a[j];
  return x;
}

QVec trop_a_step(const ExchangeSeed& s, int k, const QVec& a) {
  check_index(s, k);
  int e = sgn(trop_ensemble(s, a)[k]);
  if (e == 0) e = 1;
  QVec out = a;
  Q v = -a[k];
  for (int j = 0; j < s.n; ++j) v += pos(-e * s.B[k][j]) * a[j];
  out[k] = v;
  return out;
}

QVec swap_coords(const QVec& v, int i, int j) {
  QVec out = v;
  int m = static_cast<int>(v.size());
  if (i < m && j < m) std::swap(out[i], out[j]);
  return out;
}

static int coord_of(const ExchangeSeed& s, const QVec& w, int k, Side side) {
  return side == Side::X ? sgn(w[k]) : sgn(trop_ensemble(s, w)[k]);
}

PathRun run_path(const MutationPath& path, const QVec& w, Side side) {
  path.validate();
  std::size_t expect = side == Side::X ? path.start.n_uf : path.start.n;
  if (w.size() != expect) throw Error("point has the wrong number of coordinates");
  PathRun r{w, {}};
  ExchangeSeed s = path.start;
  for (const auto& step : path.steps) {
    if (step.horizontal()) {
      r.sign.push_back(coord_of(s, r.point, step.k, side));
      r.point = side == Side::X ? trop_x_step(s, step.k, r.point) : trop_a_step(s, step.k, r.point);
    } else {
      r.point = swap_coords(r.point, step.i, step.j);
    }
    s = apply_step(s, step);
  }
  return r;
}

SignSequence sign_of_path(const MutationPath& path, const QVec& w, Side side) {
  return run_path(path, w, side).sign;
}

static int dim(const ExchangeSeed& s, Side side) { return side == Side::X ? s.n_uf : s.n; }

static void check_eps(int eps) {
  if (eps != 1 && eps != -1) throw Error("sign must be + or -");
}

QMat e_matrix(const ExchangeSeed& s, int k, int eps, Side side) {
  check_index(s, k);
  check_eps(eps);
  int m = dim(s, side);
  QMat E = identity(m);
  E[k][k] = -1;
  for (int i = 0; i < m; ++i)
    if (i != k) E[i][k] = pos(-eps * s.B[k][i]);
  return E;
}

QMat check_e_matrix(const ExchangeSeed& s, int k, int eps, Side side) {
  check_index(s, k);
  check_eps(eps);
  int m = dim(s, side);
  QMat E = identity(m);
  E[k][k] = -1;
  for (int j = 0; j < m; ++j)
    if (j != k) E[k][j] = pos(eps * s.B[j][k]);
  return E;
}

QMat permutation_matrix(const Permutation& sigma) {
  QMat P = zeros(sigma.size(), sigma.size());
  for (int j = 0; j < sigma.size(); ++j) P[sigma(j)][j] = 1;
  return P;
}

static QMat path_matrix(const MutationPath& path, const SignSequence& sign, Side side,
                        bool check) {
  path.validate();
  if (static_cast<int>(sign.size()) != path.horizontal_count())
    throw Error("sign length does not match the number of mutations");
  for (std::size_t nu = 0; nu < sign.size(); ++nu)
    if (sign[nu] == 0)
      throw Error("sign is not strict: entry " + std::to_string(nu + 1) + " is 0");
  ExchangeSeed s = path.start;
  int m = dim(s, side);
  QMat M = identity(m);
  std::size_t nu = 0;
  for (const auto& step : path.steps) {
    QMat J;
    if (step.horizontal()) {
      J = check ? check_e_matrix(s, step.k, sign[nu], side) : e_matrix(s, step.k, sign[nu], side);
      ++nu;
    } else {
      Permutation t = Permutation::identity(m);
      if (step.i < m && step.j < m) t = Permutation::transposition(m, step.i, step.j);
      J = permutation_matrix(t);
    }
    M = mul(J, M);
    s = apply_step(s, step);
  }
  return M;
}

QMat presentation_matrix(const MutationPath& path, const SignSequence& sign, Side side) {
  return path_matrix(path, sign, side, false);
}

QMat check_presentation_matrix(const MutationPath& path, const SignSequence& sign, Side side) {
  return path_matrix(path, sign, side, true);
}

QVec normalize_max(const QVec& v) {
  Q m = max_abs(v);
  if (m == 0) return v;
  return scaled(v, 1 / m);
}

std::vector<OrbitEntry> apply_loop(const MutationPath& path, const QVec& w, int iterations,
                                   Side side, int renorm_period) {
  if (!is_mutation_loop(path)) throw Error("path is not a mutation loop");
  std::vector<OrbitEntry> out;
  QVec p = w;
  for (int n = 1; n <= iterations; ++n) {
    if (renorm_period > 0 && n > 1 && (n - 1) % renorm_period == 0) p = normalize_max(p);
    PathRun r = run_path(path, p, side);
    out.push_back({n, p, r.sign});
    p = std::move(r.point);
  }
  return out;
}

}  // namespace signstable
