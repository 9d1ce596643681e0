#include "signstable/rational.hpp"

#include <algorithm>

namespace signstable {

Q parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw Error("empty rational");
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  auto digits = [](const std::string& u, bool allow_sign) {
    if (u.empty()) return false;
    std::size_t i = (allow_sign && u[0] == '-') ? 1 : 0;
    if (i == u.size()) return false;
    return std::all_of(u.begin() + i, u.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!digits(t, true)) throw Error("malformed rational: " + s);
    return Q(Z(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw Error("malformed rational: " + s);
  Z d(den);
  if (d == 0) throw Error("zero denominator: " + s);
  Q q(Z(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

QMat zeros(std::size_t rows, std::size_t cols) { return QMat(rows, QVec(cols, Q(0))); }

QMat identity(std::size_t n) {
  QMat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMat mul(const QMat& a, const QMat& b) {
  std::size_t r = a.size(), inner = b.size(), c = b.empty() ? 0 : b[0].size();
  QMat m = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].size() != inner) throw Error("matrix size mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  }
  return m;
}

QVec mul(const QMat& a, const QVec& v) {
  QVec out(a.size(), Q(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw Error("matrix-vector size mismatch");
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0) out[i] += a[i][j] * v[j];
  }
  return out;
}

QVec row_times(const QVec& f, const QMat& a) {
  if (f.size() != a.size()) throw Error("row-matrix size mismatch");
  std::size_t c = a.empty() ? 0 : a[0].size();
  QVec out(c, Q(0));
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    for (std::size_t j = 0; j < c; ++j) out[j] += f[k] * a[k][j];
  }
  return out;
}

QMat inverse(const QMat& a) {
  std::size_t n = a.size();
  QMat m = a, inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Q p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Q f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Q det(const QMat& a) {
  std::size_t n = a.size();
  QMat m = a;
  Q d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Q f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return d;
}

Q dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dot size mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integral(const QMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x.get_den() != 1) return false;
  return true;
}

QMat leading_block(const QMat& a, std::size_t n) {
  QMat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  return m;
}

QVec scaled(const QVec& v, const Q& s) {
  QVec out = v;
  for (auto& x : out) x *= s;
  return out;
}

Q max_abs(const QVec& v) {
  Q m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

QVec primitive(const QVec& v) {
  Z l = 1;
  for (const auto& x : v) l = lcm(l, Z(x.get_den()));
  std::vector<Z> ints;
  Z g = 0;
  for (const auto& x : v) {
    Z i = Z(x.get_num()) * (l / Z(x.get_den()));
    ints.push_back(i);
    g = gcd(g, i);
  }
  if (g == 0) return v;
  QVec out;
  for (const auto& i : ints) out.push_back(Q(Z(i / g)));
  return out;
}

}  // namespace signstable
