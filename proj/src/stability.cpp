#include "signstable/stability.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

namespace signstable {

std::pair<QVec, QVec> canonical_points(int n_uf) {
  if (n_uf < 1) throw Error("n_uf must be positive");
  return {QVec(n_uf, Q(1)), QVec(n_uf, Q(-1))};
}

bool ConeDescription::contains(const QVec& x) const {
  for (const auto& f : functionals)
    if (dot(f, x) < 0) return false;
  return true;
}

ConeDescription sign_cone(const MutationPath& path, const SignSequence& eps) {
  path.validate();
  if (static_cast<int>(eps.size()) != path.horizontal_count())
    throw Error("sign length does not match the number of mutations");
  if (!is_strict(eps)) throw Error("sign cone needs a strict sign");
  ExchangeSeed s = path.start;
  ConeDescription cone;
  cone.dim = s.n_uf;
  QMat M = identity(s.n_uf);
  std::size_t nu = 0;
  for (const auto& step : path.steps) {
    if (step.horizontal()) {
      cone.functionals.push_back(primitive(scaled(M[step.k], Q(eps[nu]))));
      M = mul(e_matrix(s, step.k, eps[nu]), M);
      ++nu;
    } else if (step.i < s.n_uf && step.j < s.n_uf) {
      std::swap(M[step.i], M[step.j]);
    }
    s = apply_step(s, step);
  }
  return cone;
}

std::string cert_string(CertStatus c) {
  switch (c) {
    case CertStatus::NotAttempted: return "not attempted";
    case CertStatus::Proved: return "proved";
    case CertStatus::Failed: return "failed";
    case CertStatus::Skipped: return "skipped";
  }
  return "?";
}

bool nonneg_combination(const QMat& F, const QVec& g) {
  std::size_t m = F.size(), d = g.size();
  if (m == 0) {
    for (const auto& x : g)
      if (x != 0) return false;
    return true;
  }
  // Tableau for A y = b, y >= 0 with A = F^T, plus one artificial per row.
  std::size_t cols = m + d + 1, rhs = m + d;
  QMat T = zeros(d + 1, cols);
  for (std::size_t i = 0; i < d; ++i) {
    int flip = g[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) T[i][j] = flip * F[j][i];
    T[i][m + i] = 1;
    T[i][rhs] = flip * g[i];
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i) T[d][j] -= T[i][j];
  for (std::size_t i = 0; i < d; ++i) T[d][rhs] -= T[i][rhs];
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) basis[i] = m + i;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j)
      if (T[d][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = d;
    Q best;
    for (std::size_t i = 0; i < d; ++i) {
      if (T[i][enter] <= 0) continue;
      Q ratio = T[i][rhs] / T[i][enter];
      if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == d) break;  // unbounded direction cannot occur in phase one
    Q p = T[leave][enter];
    for (auto& x : T[leave]) x /= p;
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Q f = T[i][enter];
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return T[d][rhs] == 0;
}

CertStatus certify_invariant_cone(const QMat& E, const ConeDescription& cone) {
  if (cone.functionals.size() > kMaxCertInequalities) return CertStatus::Skipped;
  for (const auto& f : cone.functionals)
    if (!nonneg_combination(cone.functionals, row_times(f, E))) return CertStatus::Failed;
  return CertStatus::Proved;
}

IntPolynomial char_poly(const QMat& E) {
  std::size_t n = E.size();
  // Faddeev-LeVerrier: M_k = E M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(E M_k) / k.
  std::vector<Q> c(n + 1, Q(0));
  c[n] = 1;
  QMat M = zeros(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMat next = mul(E, M);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    M = std::move(next);
    QMat EM = mul(E, M);
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += EM[i][i];
    c[n - k] = -tr / Q(static_cast<long>(k));
  }
  IntPolynomial p;
  for (std::size_t i = n + 1; i-- > 0;) {
    if (c[i].get_den() != 1) throw Error("characteristic polynomial is not integral");
    p.push_back(c[i].get_num());
  }
  return p;
}

std::string poly_string(const IntPolynomial& p) {
  std::string out;
  std::size_t deg = p.size() - 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    std::size_t e = deg - i;
    Z a = abs(p[i]);
    out += out.empty() ? (p[i] < 0 ? "-" : "") : (p[i] < 0 ? " - " : " + ");
    if (a != 1 || e == 0) out += a.get_str();
    if (e >= 1) out += "x";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Ascending coefficients over Q.
using Poly = std::vector<Q>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly from_int(const IntPolynomial& p) {
  Poly out(p.rbegin(), p.rend());
  trim(out);
  return out;
}

Q eval(const Poly& p, const Q& x) {
  Q v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Q(static_cast<long>(i)));
  trim(d);
  return d;
}

// Returns {quotient, remainder}.
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, Q(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Q f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Q lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

Poly square_free(const Poly& p) {
  Poly g = gcd(p, derivative(p));
  return g.size() <= 1 ? p : divide(p, g).first;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    Poly r = divide(chain[chain.size() - 2], chain.back()).second;
    for (auto& x : r) x = -x;
    if (r.empty()) break;
    chain.push_back(r);
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int variations(const std::vector<Poly>& chain, const Q& x) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Q cauchy_bound(const Poly& p) {
  Q m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Q(abs(p[i] / p.back())));
  return m + 1;
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const Q& a, const Q& b) {
  Poly sf = square_free(from_int(p));
  if (sf.size() <= 1) return 0;
  auto chain = sturm_chain(sf);
  return variations(chain, a) - variations(chain, b);
}

double PerronRoot::bound() const { return exact ? 0.0 : Q(hi - lo).get_d(); }

PerronRoot perron_root(const QMat& E, double tol) {
  PerronRoot r;
  Poly sf = square_free(from_int(char_poly(E)));
  Q M = cauchy_bound(sf);
  r.lo = -M;
  r.hi = M;
  if (sf.size() <= 1) {
    r.anomaly = true;
    return r;
  }
  auto chain = sturm_chain(sf);
  if (variations(chain, r.lo) - variations(chain, r.hi) < 1) {
    r.anomaly = true;
    return r;
  }
  Q width(tol);
  while (r.hi - r.lo > width) {
    Q mid = (r.lo + r.hi) / 2;
    if (variations(chain, mid) - variations(chain, r.hi) >= 1) r.lo = mid;
    else r.hi = mid;
  }
  // Exact check for an integer root.
  Z cand = Z(floor(r.hi.get_d()));
  for (Z c = cand - 1; c <= cand + 1; ++c) {
    Q cq(c);
    if (cq > r.lo && cq <= r.hi && eval(sf, cq) == 0) {
      r.lo = r.hi = cq;
      r.exact = true;
    }
  }
  r.value = r.exact ? r.hi.get_d() : Q((r.lo + r.hi) / 2).get_d();
  if (r.value < 1 - tol) r.anomaly = true;
  return r;
}

bool spectral_duality_check(const QMat& E, const QMat& Echeck) {
  IntPolynomial p = char_poly(E), q = char_poly(Echeck);
  IntPolynomial rev(p.rbegin(), p.rend()), neg_rev = rev, neg_q = q;
  for (auto& x : neg_rev) x = -x;
  for (auto& x : neg_q) x = -x;
  bool palin = p == rev || p == neg_rev;
  bool same = p == q || p == neg_q;
  return palin && same;
}

EigenDirection eigen_direction(const QMat& E, double lambda, const QVec& hint) {
  int n = static_cast<int>(E.size());
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = E[i][j].get_d();
  Eigen::MatrixXd shifted = A - (lambda + 1e-7) * Eigen::MatrixXd::Identity(n, n);
  auto lu = shifted.fullPivLu();
  Eigen::VectorXd v(n), h(n);
  for (int i = 0; i < n; ++i) {
    h(i) = hint.empty() ? 1.0 : hint[i].get_d();
    v(i) = h(i) + 1e-3 * (i + 1);
  }
  for (int it = 0; it < 200; ++it) {
    v = lu.solve(v);
    v /= v.cwiseAbs().maxCoeff();
  }
  if (v.dot(h) < 0) v = -v;
  EigenDirection out;
  out.vec.assign(v.data(), v.data() + n);
  out.residual = (A * v - lambda * v).cwiseAbs().maxCoeff();
  return out;
}

int thread_cap(int requested) {
  int cap = requested;
  if (cap <= 0) {
    if (const char* env = std::getenv("SIGNSTABLE_THREADS")) cap = std::atoi(env);
  }
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (cap <= 0) cap = hw > 0 ? hw : 1;
  return std::max(1, cap);
}

namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t t = std::min<std::size_t>(count, static_cast<std::size_t>(threads));
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += t) fn(i);
    });
  for (auto& th : pool) th.join();
}

SampleRecord run_sample(const MutationPath& path, const QVec& w, const StabilityOptions& o) {
  SampleRecord rec;
  rec.start = w;
  QVec p = w;
  SignSequence prev;
  int run = 0, run_start = 0;
  for (int n = 1; n <= o.n_max; ++n) {
    if (o.renorm_period > 0 && n > 1 && (n - 1) % o.renorm_period == 0) p = normalize_max(p);
    PathRun r = run_path(path, p);
    if (n > 1 && r.sign == prev) {
      ++run;
    } else {
      run = 1;
      run_start = n;
    }
    prev = r.sign;
    rec.terminal_sign = r.sign;
    rec.final_point = p;
    if (run >= o.window) {
      rec.n0 = run_start;
      if (is_strict(r.sign)) {
        rec.status = SampleRecord::Status::Stabilized;
      } else {
        rec.status = SampleRecord::Status::NonStrict;
        rec.nonstrict_step =
            static_cast<int>(std::find(r.sign.begin(), r.sign.end(), 0) - r.sign.begin()) + 1;
      }
      return rec;
    }
    p = std::move(r.point);
  }
  return rec;
}

}  // namespace

std::string status_string(SampleRecord::Status s) {
  switch (s) {
    case SampleRecord::Status::Stabilized: return "stabilized";
    case SampleRecord::Status::NonStrict: return "non-strict";
    case SampleRecord::Status::NotStabilized: return "not stabilized";
  }
  return "?";
}

bool StabilityReport::any_nonstrict() const {
  return std::any_of(samples.begin(), samples.end(), [](const SampleRecord& s) {
    return s.status == SampleRecord::Status::NonStrict;
  });
}

StabilityReport detect_sign_stability(const MutationPath& path, const std::vector<QVec>& samples,
                                      const StabilityOptions& opts) {
  if (!is_mutation_loop(path)) throw Error("path is not a mutation loop");
  if (samples.empty()) throw Error("no samples");
  if (opts.n_max < 1 || opts.window < 1) throw Error("n_max and window must be positive");
  for (const auto& w : samples)
    if (static_cast<int>(w.size()) != path.start.n_uf) throw Error("sample has the wrong size");

  StabilityReport rep;
  rep.samples.resize(samples.size());
  parallel_for(samples.size(), thread_cap(opts.threads),
               [&](std::size_t i) { rep.samples[i] = run_sample(path, samples[i], opts); });

  const auto& first = rep.samples.front();
  bool agree = std::all_of(rep.samples.begin(), rep.samples.end(), [&](const SampleRecord& s) {
    return s.status == SampleRecord::Status::Stabilized && s.terminal_sign == first.terminal_sign;
  });
  if (!agree) return rep;

  rep.consensus = first.terminal_sign;
  rep.stable_matrix = presentation_matrix(path, *rep.consensus);
  rep.stable_check_matrix = check_presentation_matrix(path, *rep.consensus);
  rep.char_poly = char_poly(rep.stable_matrix);
  rep.perron = perron_root(rep.stable_matrix, opts.tol);
  rep.spectral_duality = spectral_duality_check(rep.stable_matrix, rep.stable_check_matrix);

  rep.eigen = eigen_direction(rep.stable_matrix, rep.perron->value, first.final_point);
  QVec v;
  for (double x : rep.eigen.vec) v.emplace_back(x);
  QVec image = run_path(path, v).point;
  for (std::size_t i = 0; i < v.size(); ++i)
    rep.eigen_loop_error = std::max(
        rep.eigen_loop_error, std::abs(image[i].get_d() - rep.perron->value * rep.eigen.vec[i]));

  rep.cone = sign_cone(path, *rep.consensus);
  rep.cone_certificate = certify_invariant_cone(rep.stable_matrix, rep.cone);
  rep.certified = rep.cone_certificate == CertStatus::Proved &&
                  std::all_of(rep.samples.begin(), rep.samples.end(),
                              [&](const SampleRecord& s) { return rep.cone.contains(s.final_point); });
  return rep;
}

double stretch_factor(const StabilityReport& r) {
  if (!r.consensus || !r.perron) throw Error("no stability consensus");
  return r.perron->value;
}

double entropy(const StabilityReport& r) { return std::log(stretch_factor(r)); }

bool sign_leq(const SignSequence& a, const SignSequence& b) {
  if (a.size() != b.size()) throw Error("sign sequences differ in length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && a[i] != b[i]) return false;
  return true;
}

WeakStabilityReport detect_weak_sign_stability(const MutationPath& path,
                                               const std::vector<QVec>& samples,
                                               const StabilityOptions& opts) {
  if (!is_mutation_loop(path)) throw Error("path is not a mutation loop");
  if (samples.empty()) throw Error("no samples");
  if (opts.n_max < 1) throw Error("n_max must be positive");
  WeakStabilityReport rep;
  rep.samples.resize(samples.size());
  int h = path.horizontal_count();
  parallel_for(samples.size(), thread_cap(opts.threads), [&](std::size_t idx) {
    std::vector<SignSequence> signs;
    for (const auto& e : apply_loop(path, samples[idx], opts.n_max, Side::X, opts.renorm_period))
      signs.push_back(e.sign);
    int tail = std::max(1, opts.n_max / 2);
    SignSequence weak(h, 0);
    for (int nu = 0; nu < h; ++nu) {
      int v = signs.back()[nu];
      bool constant = true;
      for (int n = opts.n_max - tail; n < opts.n_max; ++n)
        if (signs[n][nu] != v) constant = false;
      weak[nu] = constant ? v : 0;
    }
    int n0 = opts.n_max;
    while (n0 > 1 && sign_leq(weak, signs[n0 - 2])) --n0;
    rep.samples[idx] = {samples[idx], weak, n0};
  });
  rep.stable_sign = rep.samples.front().weak_sign;
  for (const auto& s : rep.samples)
    for (int nu = 0; nu < h; ++nu)
      if (s.weak_sign[nu] != rep.stable_sign[nu]) rep.stable_sign[nu] = 0;
  rep.weakly_stable = std::any_of(rep.stable_sign.begin(), rep.stable_sign.end(),
                                  [](int e) { return e != 0; });
  if (!rep.weakly_stable) rep.error = "not weakly sign-stable";
  return rep;
}

bool hereditary_check(const MutationPath& path, const std::vector<QVec>& generators,
                      const SignSequence& stable_sign) {
  path.validate();
  if (static_cast<int>(stable_sign.size()) != path.horizontal_count())
    throw Error("stable sign length does not match the number of mutations");
  if (generators.empty()) return true;
  std::vector<QVec> pts = generators;
  ExchangeSeed s = path.start;
  std::size_t nu = 0;
  for (const auto& step : path.steps) {
    if (step.horizontal()) {
      bool vanishes = std::all_of(pts.begin(), pts.end(),
                                  [&](const QVec& x) { return x[step.k] == 0; });
      if (vanishes && stable_sign[nu] == 0) return false;
      for (auto& x : pts) x = trop_x_step(s, step.k, x);
      ++nu;
    } else {
      for (auto& x : pts) x = swap_coords(x, step.i, step.j);
    }
    s = apply_step(s, step);
  }
  return true;
}

}  // namespace signstable
