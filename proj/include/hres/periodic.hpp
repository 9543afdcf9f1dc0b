#pragma once

#include "hres/numeric.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <span>
#include <string>
#include <vector>

namespace hres {

// Even, mean-zero function of period M taking +c on the classes of +-k1,
// -c on the classes of +-k2 and 0 elsewhere.
class PeriodicFunction {
 public:
  PeriodicFunction() = default;

  const Rational& scale() const { return c_; }
  int period() const { return M_; }
  // Canonical residues in 0..M/2; the construction is invariant under k -> +-k + jM.
  int k1() const { return k1_; }
  int k2() const { return k2_; }

  // +1, -1 or 0 at n (any integer).
  int sign_at(long long n) const {
    long long r = n % M_;
    if (r < 0) r += M_;
    return signs_[static_cast<std::size_t>(r)];
  }
  Rational value(long long n) const { return c_ * sign_at(n); }
  std::span<const int> signs() const { return signs_; }

  PeriodicFunction scaled(const Rational& factor) const;

  friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
    return a.M_ == b.M_ && a.c_ == b.c_ && a.signs_ == b.signs_;
  }

 private:
  friend PeriodicFunction make_periodic(const Rational&, int, long long, long long);
  Rational c_{1};
  int M_ = 0;
  int k1_ = 0;
  int k2_ = 0;
  std::vector<int> signs_;
};

PeriodicFunction make_periodic(const Rational& c, int M, long long k1, long long k2);

struct IndexPair {
  int n = 0;
  int m = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct ChiParams {
  int s = 2;
  int t = 3;
  int n = 1;
  int m = 1;
};

// chi_{2st}^{(n,m)} with unit scale.
PeriodicFunction chi_function(const ChiParams& p);

// f~(l) = (-1)^l sin((k2-k1) l pi/M) sin((M-k1-k2) l pi/M); the scale c is not included.
class TildeFunction {
 public:
  explicit TildeFunction(const PeriodicFunction& base);

  const PeriodicFunction& base() const { return base_; }
  int period() const { return period_; }  // minimal period dividing 2M

  // Exact zero test by divisibility.
  bool is_zero(long long l) const {
    long long M = base_.period();
    return (diff_ * l) % M == 0 || (comp_ * l) % M == 0;
  }

  template <class Real>
  Real value(long long l) const {
    if (is_zero(l)) return Real(0);
    Real v = sin_pi_frac<Real>(diff_ * l) * sin_pi_frac<Real>(comp_ * l);
    return (l % 2 == 0) ? v : Real(-v);
  }

  // Values over one full period 0..period-1.
  template <class Real>
  std::vector<Real> table() const {
    std::vector<Real> out(static_cast<std::size_t>(period_));
    for (int l = 0; l < period_; ++l) out[static_cast<std::size_t>(l)] = value<Real>(l);
    return out;
  }

 private:
  // sin(pi r / M) with r reduced mod 2M first.
  template <class Real>
  Real sin_pi_frac(long long r) const {
    long long M = base_.period();
    long long red = r % (2 * M);
    if (red < 0) red += 2 * M;
    using std::sin;
    return sin(pi<Real>() * Real(red) / Real(M));
  }

  PeriodicFunction base_;
  long long diff_ = 0;
  long long comp_ = 0;
  int period_ = 0;
};

inline TildeFunction tilde_transform(const PeriodicFunction& f) { return TildeFunction(f); }

struct PairSet {
  int s = 0;
  int t = 0;
  std::vector<IndexPair> pairs;
};

// D(s,t); odd-odd pairs return D1.
PairSet pair_set(int s, int t);
// The D2 variant, used to exercise the D1 <-> D2 bijection for odd-odd (s,t).
PairSet alternative_pair_set(int s, int t);
// (n,m) -> (n,m) if m <= (t-1)/2, else (s-n, t-m).
IndexPair biject(int s, int t, IndexPair p);

// {+-(nt - ms), +-(nt + ms)} over D(s,t); throws ConsistencyError on a duplicate.
std::vector<long long> support_set(int s, int t);

void require_coprime(int s, int t);

template <class Real>
Real s_matrix_entry(int s, int t, IndexPair a, IndexPair b) {
  auto sin_pi = [](long long num, long long den) {
    long long red = num % (2 * den);
    if (red < 0) red += 2 * den;
    using std::sin;
    return sin(pi<Real>() * Real(red) / Real(den));
  };
  using std::sqrt;
  Real norm = sqrt(Real(8) / Real(s * t));
  long long parity = static_cast<long long>(a.n) * b.m + static_cast<long long>(a.m) * b.n + 1;
  Real sign = (parity % 2 == 0) ? Real(1) : Real(-1);
  return norm * sign * sin_pi(static_cast<long long>(a.n) * b.n * t, s) *
         sin_pi(static_cast<long long>(a.m) * b.m * s, t);
}

template <class Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <class Real>
Matrix<Real> s_matrix(int s, int t) {
  PairSet d = pair_set(s, t);
  auto n = static_cast<Eigen::Index>(d.pairs.size());
  Matrix<Real> S(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      S(i, j) = s_matrix_entry<Real>(s, t, d.pairs[static_cast<std::size_t>(i)],
                                     d.pairs[static_cast<std::size_t>(j)]);
  return S;
}

struct ResidueMismatch {
  long long k = 0;
  double lhs = 0;
  double rhs = 0;
};

struct DecompositionReport {
  int s = 0;
  int t = 0;
  IndexPair pair;
  double max_residual = 0;
  bool support_ok = true;
  std::vector<ResidueMismatch> failures;
  bool passed() const { return failures.empty() && support_ok; }
};

// chi~^{(n,m)}(k) = -sqrt(st/8) sum_{(n',m')} S chi^{(n',m')}(k) over all k mod 2st.
template <class Real>
DecompositionReport verify_decomposition(int s, int t, IndexPair p, double tolerance = 1e-12) {
  require_coprime(s, t);
  PairSet d = pair_set(s, t);
  TildeFunction lhs_fn(chi_function({s, t, p.n, p.m}));
  std::vector<PeriodicFunction> basis;
  std::vector<Real> weights;
  using std::sqrt;
  Real pref = -sqrt(Real(s * t) / Real(8));
  for (const auto& q : d.pairs) {
    basis.push_back(chi_function({s, t, q.n, q.m}));
    weights.push_back(pref * s_matrix_entry<Real>(s, t, q, p));
  }
  DecompositionReport rep{s, t, p, 0, true, {}};
  using std::abs;
  for (long long k = 0; k < 2LL * s * t; ++k) {
    Real lhs = lhs_fn.value<Real>(k);
    Real rhs = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) rhs += weights[j] * Real(basis[j].sign_at(k));
    Real diff = abs(lhs - rhs);
    double dd = static_cast<double>(diff);
    if (dd > rep.max_residual) rep.max_residual = dd;
    if (dd > tolerance)
      rep.failures.push_back({k, static_cast<double>(lhs), static_cast<double>(rhs)});
    if (k % s == 0 || k % t == 0) {
      if (abs(lhs) > Real(tolerance) || abs(rhs) > Real(tolerance)) rep.support_ok = false;
    }
  }
  return rep;
}

}  // namespace hres
