#pragma once

#include <vector>

#include "signstable/seeds.hpp"
#include "signstable/tropical.hpp"

namespace signstable {

// Rows of C are c-vectors, columns of G are g-vectors.
struct CGState {
  QMat C;
  QMat G;
  ExchangeSeed seed;
  SignSequence tropical_signs;  // one per horizontal step taken so far
};

CGState cg_init(const ExchangeSeed& seed);
CGState cg_step(const CGState& state, const PathStep& step);
CGState cg_run(const MutationPath& path);
bool duality_check(const CGState& state);
// Sign of a sign-coherent row; throws if the row is zero or mixed.
int row_sign(const QVec& row);

}  // namespace signstable
