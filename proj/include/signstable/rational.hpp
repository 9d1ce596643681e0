#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace signstable {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

// Raised for malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Q pos(const Q& a) { return a > 0 ? a : Q(0); }
inline int sgn(const Q& a) { return mpq_sgn(a.get_mpq_t()); }

Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

QMat zeros(std::size_t rows, std::size_t cols);
QMat identity(std::size_t n);
QMat transpose(const QMat& a);
QMat mul(const QMat& a, const QMat& b);
QVec mul(const QMat& a, const QVec& v);
QVec row_times(const QVec& f, const QMat& a);
QMat inverse(const QMat& a);
Q det(const QMat& a);
Q dot(const QVec& a, const QVec& b);
bool is_integral(const QMat& a);
QMat leading_block(const QMat& a, std::size_t n);
QVec scaled(const QVec& v, const Q& s);
Q max_abs(const QVec& v);

// Primitive integer representative of a nonzero rational row.
QVec primitive(const QVec& v);

}  // namespace signstable
