#pragma once

#include <string>
#include <vector>

#include "signstable/rational.hpp"
#include "signstable/seeds.hpp"

namespace signstable {

// Entries in {-1, 0, +1}, one per horizontal step.
using SignSequence = std::vector<int>;

bool is_strict(const SignSequence& s);
std::string sign_string(const SignSequence& s);
SignSequence parse_sign(const std::string& s);

// X-points have n_uf coordinates, A-points have n.
enum class Side { X, A };

QVec trop_x_step(const ExchangeSeed& s, int k, const QVec& x);
QVec trop_a_step(const ExchangeSeed& s, int k, const QVec& a);
QVec trop_ensemble(const ExchangeSeed& s, const QVec& a);
QVec swap_coords(const QVec& v, int i, int j);

struct PathRun {
  QVec point;
  SignSequence sign;
};

PathRun run_path(const MutationPath& path, const QVec& w, Side side = Side::X);
SignSequence sign_of_path(const MutationPath& path, const QVec& w, Side side = Side::X);

QMat e_matrix(const ExchangeSeed& s, int k, int eps, Side side = Side::X);
QMat check_e_matrix(const ExchangeSeed& s, int k, int eps, Side side = Side::X);
QMat permutation_matrix(const Permutation& sigma);

// J_m ... J_1 in the column-vector convention.
QMat presentation_matrix(const MutationPath& path, const SignSequence& sign, Side side = Side::X);
QMat check_presentation_matrix(const MutationPath& path, const SignSequence& sign,
                               Side side = Side::X);

struct OrbitEntry {
  int iter = 0;  // 1-based; the point is phi^(iter-1)(w)
  QVec point;
  SignSequence sign;
};

inline constexpr int kRenormPeriod = 16;

std::vector<OrbitEntry> apply_loop(const MutationPath& path, const QVec& w, int iterations,
                                   Side side = Side::X, int renorm_period = kRenormPeriod);

QVec normalize_max(const QVec& v);

}  // namespace signstable
