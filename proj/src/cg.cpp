#include "signstable/cg.hpp"

namespace signstable {

CGState cg_init(const ExchangeSeed& seed) {
  seed.validate();
  return {identity(seed.n), identity(seed.n), seed, {}};
}

int row_sign(const QVec& row) {
  bool plus = false, minus = false;
  for (const auto& x : row) {
    if (x > 0) plus = true;
    if (x < 0) minus = true;
  }
  if (plus && minus) throw Error("sign-coherence violated");
  if (!plus && !minus) throw Error("zero c-vector");
  return plus ? 1 : -1;
}

CGState cg_step(const CGState& state, const PathStep& step) {
  const ExchangeSeed& s = state.seed;
  CGState out = state;
  if (!step.horizontal()) {
    QMat P = permutation_matrix(step_permutation(s.n, step));
    out.C = mul(P, state.C);
    out.G = mul(P, state.G);
    out.seed = apply_step(s, step);
    return out;
  }
  int k = step.k;
  if (!s.is_unfrozen(k)) throw Error("mutation index out of range");
  int eps = row_sign(state.C[k]);
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      const Q& ckj = state.C[k][j];
      if (i == k) out.C[i][j] = -ckj;
      else
        out.C[i][j] = state.C[i][j] + pos(ckj) * pos(s.B[i][k]) - pos(-ckj) * pos(-s.B[i][k]);
    }
  }
  if (mul(e_matrix(s, k, eps, Side::A), state.C) != out.C)
    throw Error("C-matrix update routes disagree");
  out.G = mul(check_e_matrix(s, k, eps, Side::A), state.G);
  out.seed = mutate_matrix(s, k);
  out.tropical_signs.push_back(eps);
  return out;
}

CGState cg_run(const MutationPath& path) {
  path.validate();
  CGState st = cg_init(path.start);
  for (const auto& step : path.steps) st = cg_step(st, step);
  return st;
}

bool duality_check(const CGState& state) {
  return mul(state.G, transpose(state.C)) == identity(state.seed.n);
}

}  // namespace signstable
