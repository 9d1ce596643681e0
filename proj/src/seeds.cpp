#include "signstable/seeds.hpp"

#include <algorithm>

namespace signstable {

void ExchangeSeed::validate() const {
  if (n_uf < 1 || n_uf > n) throw Error("need 1 <= n_uf <= n");
  if (static_cast<int>(B.size()) != n) throw Error("B must have n rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(B[i].size()) != n) throw Error("B must be square");
    for (int j = 0; j < n; ++j) {
      if (B[i][j] != -B[j][i]) throw Error("B is not skew-symmetric");
      bool both_frozen = i >= n_uf && j >= n_uf;
      if (!both_frozen && B[i][j].get_den() != 1)
        throw Error("B has a non-integer entry outside the frozen block");
    }
  }
}

ExchangeSeed make_seed(int n_uf, const QMat& B) {
  ExchangeSeed s{static_cast<int>(B.size()), n_uf, B};
  s.validate();
  return s;
}

ExchangeSeed make_seed(int n_uf, const std::vector<std::vector<long>>& B) {
  QMat m;
  for (const auto& row : B) {
    QVec r;
    for (long x : row) r.emplace_back(x);
    m.push_back(r);
  }
  return make_seed(n_uf, m);
}

ExchangeSeed make_seed(int n_uf, std::initializer_list<std::initializer_list<long>> B) {
  std::vector<std::vector<long>> rows;
  for (const auto& r : B) rows.emplace_back(r);
  return make_seed(n_uf, rows);
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images[i], p.images[j]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> seen(n, false);
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      int a = c[t], b = c[(t + 1) % c.size()];
      if (a < 0 || a >= n || b < 0 || b >= n) throw Error("cycle index out of range");
      if (seen[a]) throw Error("cycles are not disjoint");
      seen[a] = true;
      p.images[a] = b;
    }
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int i = 0; i < size(); ++i) p.images[images[i]] = i;
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw Error("permutation size mismatch");
  Permutation p = o;
  for (int i = 0; i < size(); ++i) p.images[i] = images[o.images[i]];
  return p;
}

bool Permutation::preserves_blocks(int n_uf) const {
  for (int i = 0; i < size(); ++i)
    if ((i < n_uf) != (images[i] < n_uf)) return false;
  return true;
}

int MutationPath::horizontal_count() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(),
                                        [](const PathStep& s) { return s.horizontal(); }));
}

void MutationPath::validate() const {
  start.validate();
  for (const auto& s : steps) {
    if (s.horizontal()) {
      if (!start.is_unfrozen(s.k)) throw Error("mutation index out of range");
    } else {
      if (s.i < 0 || s.j < 0 || s.i >= start.n || s.j >= start.n)
        throw Error("swap index out of range");
      if ((s.i < start.n_uf) != (s.j < start.n_uf))
        throw Error("swap mixes frozen and unfrozen indices");
    }
  }
}

ExchangeSeed mutate_matrix(const ExchangeSeed& s, int k) {
  if (!s.is_unfrozen(k)) throw Error("mutation index out of range");
  ExchangeSeed out = s;
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (i == k || j == k) {
        out.B[i][j] = -s.B[i][j];
      } else {
        out.B[i][j] = s.B[i][j] + pos(s.B[i][k]) * pos(s.B[k][j]) -
                      pos(-s.B[i][k]) * pos(-s.B[k][j]);
      }
    }
  }
  return out;
}

ExchangeSeed permute_matrix(const ExchangeSeed& s, const Permutation& sigma) {
  if (sigma.size() != s.n) throw Error("permutation size mismatch");
  if (!sigma.preserves_blocks(s.n_uf)) throw Error("permutation mixes frozen and unfrozen blocks");
  ExchangeSeed out = s;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) out.B[sigma(i)][sigma(j)] = s.B[i][j];
  return out;
}

Permutation step_permutation(int n, const PathStep& step) {
  return Permutation::transposition(n, step.i, step.j);
}

ExchangeSeed apply_step(const ExchangeSeed& s, const PathStep& step) {
  if (step.horizontal()) return mutate_matrix(s, step.k);
  return permute_matrix(s, step_permutation(s.n, step));
}

ExchangeSeed apply_path(const MutationPath& path) {
  path.validate();
  ExchangeSeed s = path.start;
  for (const auto& step : path.steps) s = apply_step(s, step);
  return s;
}

bool is_mutation_loop(const MutationPath& path) { return apply_path(path).B == path.start.B; }

std::vector<PathStep> permutation_steps(const Permutation& sigma) {
  // A cycle (a1 ... am) equals (a1 a2)(a2 a3)...(a_{m-1} a_m); the rightmost factor acts first.
  std::vector<PathStep> out;
  std::vector<bool> seen(sigma.size(), false);
  for (int start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int a = start; !seen[a]; a = sigma(a)) {
      seen[a] = true;
      cyc.push_back(a);
    }
    for (int t = static_cast<int>(cyc.size()) - 2; t >= 0; --t)
      out.push_back(PathStep::swap(cyc[t], cyc[t + 1]));
  }
  return out;
}

}  // namespace signstable
