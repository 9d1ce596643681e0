#pragma once

#include <initializer_list>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signstable/rational.hpp"

namespace signstable {

// Indices are 0-based here; the JSON layer shifts to 1-based.
// Unfrozen indices come first: 0..n_uf-1, frozen n_uf..n-1.
struct ExchangeSeed {
  int n = 0;
  int n_uf = 0;
  QMat B;

  void validate() const;
  bool is_unfrozen(int i) const { return i >= 0 && i < n_uf; }
  bool operator==(const ExchangeSeed& o) const { return n == o.n && n_uf == o.n_uf && B == o.B; }
};

ExchangeSeed make_seed(int n_uf, const QMat& B);
ExchangeSeed make_seed(int n_uf, const std::vector<std::vector<long>>& B);
ExchangeSeed make_seed(int n_uf, std::initializer_list<std::initializer_list<long>> B);

struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  // Cycles are 0-based, read forward: {a, b, c} sends a -> b -> c -> a.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images.at(i); }
  Permutation inverse() const;
  // (this * o)(i) = this(o(i))
  Permutation operator*(const Permutation& o) const;
  bool operator==(const Permutation& o) const { return images == o.images; }
  bool preserves_blocks(int n_uf) const;
};

struct PathStep {
  enum class Kind { Mutation, Swap };
  Kind kind = Kind::Mutation;
  int k = 0;
  int i = 0, j = 0;

  static PathStep mut(int k) { return {Kind::Mutation, k, 0, 0}; }
  static PathStep swap(int i, int j) { return {Kind::Swap, 0, i, j}; }
  bool horizontal() const { return kind == Kind::Mutation; }
  bool operator==(const PathStep& o) const = default;
};

struct MutationPath {
  ExchangeSeed start;
  std::vector<PathStep> steps;

  int horizontal_count() const;
  void validate() const;
};

ExchangeSeed mutate_matrix(const ExchangeSeed& s, int k);
ExchangeSeed permute_matrix(const ExchangeSeed& s, const Permutation& sigma);
ExchangeSeed apply_step(const ExchangeSeed& s, const PathStep& step);
ExchangeSeed apply_path(const MutationPath& path);
bool is_mutation_loop(const MutationPath& path);

// Transpositions whose successive application realizes sigma.
std::vector<PathStep> permutation_steps(const Permutation& sigma);
Permutation step_permutation(int n, const PathStep& step);

}  // namespace signstable
