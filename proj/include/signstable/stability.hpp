#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signstable/rational.hpp"
#include "signstable/seeds.hpp"
#include "signstable/tropical.hpp"

namespace signstable {

std::pair<QVec, QVec> canonical_points(int n_uf);

// Cone {x : f . x >= 0 for every row f}; rows are primitive integer vectors.
struct ConeDescription {
  QMat functionals;
  int dim = 0;
  bool contains(const QVec& x) const;
};

ConeDescription sign_cone(const MutationPath& path, const SignSequence& eps);

enum class CertStatus { NotAttempted, Proved, Failed, Skipped };
std::string cert_string(CertStatus c);

inline constexpr std::size_t kMaxCertInequalities = 64;

CertStatus certify_invariant_cone(const QMat& E, const ConeDescription& cone);
// Exact phase-one simplex: is g a nonnegative combination of the rows of F?
bool nonneg_combination(const QMat& F, const QVec& g);

// Coefficients of det(nu I - E), leading first.
using IntPolynomial = std::vector<Z>;
IntPolynomial char_poly(const QMat& E);
std::string poly_string(const IntPolynomial& p);

struct PerronRoot {
  double value = 0;
  Q lo, hi;  // the root lies in (lo, hi]
  bool exact = false;
  bool anomaly = false;  // no real root >= 1 found
  double bound() const;
};

inline constexpr double kRootTolerance = 1e-12;
PerronRoot perron_root(const QMat& E, double tol = kRootTolerance);

// Number of distinct real roots of p in (a, b].
int count_real_roots(const IntPolynomial& p, const Q& a, const Q& b);

bool spectral_duality_check(const QMat& E, const QMat& Echeck);

struct EigenDirection {
  std::vector<double> vec;
  double residual = 0;
};

// Inverse iteration at lambda, started from `hint` when given.
EigenDirection eigen_direction(const QMat& E, double lambda, const QVec& hint = {});

struct StabilityOptions {
  int n_max = 1000;
  int window = 3;
  int renorm_period = kRenormPeriod;
  double tol = kRootTolerance;
  int threads = 0;  // 0: SIGNSTABLE_THREADS or hardware concurrency
};

struct SampleRecord {
  QVec start;
  enum class Status { Stabilized, NonStrict, NotStabilized } status = Status::NotStabilized;
  int n0 = 0;  // first iteration of the confirming window
  SignSequence terminal_sign;
  int nonstrict_step = 0;  // 1-based entry of the first zero
  QVec final_point;        // point whose sign is terminal_sign
};

std::string status_string(SampleRecord::Status s);

struct StabilityReport {
  std::vector<SampleRecord> samples;
  std::optional<SignSequence> consensus;
  QMat stable_matrix;
  QMat stable_check_matrix;
  IntPolynomial char_poly;
  std::optional<PerronRoot> perron;
  EigenDirection eigen;
  double eigen_loop_error = 0;  // max |phi(v) - lambda v| over coordinates
  ConeDescription cone;
  CertStatus cone_certificate = CertStatus::NotAttempted;
  bool certified = false;
  bool spectral_duality = false;
  bool any_nonstrict() const;
};

StabilityReport detect_sign_stability(const MutationPath& path, const std::vector<QVec>& samples,
                                      const StabilityOptions& opts = {});

double stretch_factor(const StabilityReport& r);
double entropy(const StabilityReport& r);

bool sign_leq(const SignSequence& a, const SignSequence& b);

struct WeakSample {
  QVec start;
  SignSequence weak_sign;
  int n0 = 0;  // signs dominate weak_sign from this iteration on
};

struct WeakStabilityReport {
  std::vector<WeakSample> samples;
  SignSequence stable_sign;
  bool weakly_stable = false;
  std::string error;
};

WeakStabilityReport detect_weak_sign_stability(const MutationPath& path,
                                               const std::vector<QVec>& samples,
                                               const StabilityOptions& opts = {});

bool hereditary_check(const MutationPath& path, const std::vector<QVec>& generators,
                      const SignSequence& stable_sign);

int thread_cap(int requested = 0);

}  // namespace signstable
