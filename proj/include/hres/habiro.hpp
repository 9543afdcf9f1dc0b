#pragma once

#include "hres/exact.hpp"
#include "hres/numeric.hpp"
#include "hres/qseries.hpp"

#include <string>
#include <vector>

namespace hres {

// zeta = e^{2 pi i j/N} with gcd(j, N) = 1; powers are reduced mod N before any trigonometry,
// so factors like 1 - q^N vanish exactly.
class RootOfUnity {
 public:
  RootOfUnity(long long j, long long N);
  static RootOfUnity from_alpha(const Rational& alpha);

  long long numerator() const { return j_; }
  long long order() const { return N_; }
  // j k mod N in [0, N): q^k = zeta_N^{exponent(k)}.
  long long exponent(long long k) const;

  template <class Real>
  Complex<Real> power(long long k) const;
  template <class Real>
  Complex<Real> value() const {
    return power<Real>(1);
  }

 private:
  long long j_;
  long long N_;
};

// e^{2 pi i r/N} for integer r, exact at the quarter points.
template <class Real>
Complex<Real> unit_root(long long r, long long N);

// Element of Z[X]/(X^N - 1) with X standing for zeta_N = e^{2 pi i/N}.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(long long N = 1);
  CyclotomicInteger(long long N, long long constant);
  static CyclotomicInteger monomial(long long N, long long k);

  long long order() const { return static_cast<long long>(c_.size()); }
  const std::vector<BigInt>& coefficients() const { return c_; }

  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);

  // Canonical form: remainder modulo the N-th cyclotomic polynomial, degree < phi(N).
  // Two elements are equal as numbers iff their reductions coincide.
  std::vector<BigInt> reduced() const;
  friend bool same_value(const CyclotomicInteger& a, const CyclotomicInteger& b) { return (a - b).reduced_is_zero(); }

  template <class Real>
  Complex<Real> evaluate() const;

  // Reduced form as a polynomial in z = zeta_N, e.g. "5 - z".
  std::string str() const;

 private:
  bool reduced_is_zero() const;
  std::vector<BigInt> c_;
};

// Integer coefficients of Phi_N, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(long long N);

// (q^a; q)_n = prod_{k=1}^n (1 - q^{a+k-1}).
template <class Real>
Complex<Real> q_pochhammer(const RootOfUnity& q, long long a_exp, long long n);
template <class Real>
Complex<Real> q_pochhammer(const Complex<Real>& a, const Complex<Real>& q, long long n);
CyclotomicInteger q_pochhammer_exact(const RootOfUnity& q, long long a_exp, long long n);

// Gaussian binomial by the Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]; zero outside 0 <= k <= n.
template <class Real>
Complex<Real> q_binomial(long long top, long long bottom, const RootOfUnity& q);
template <class Real>
Complex<Real> q_binomial(long long top, long long bottom, const Complex<Real>& q);
CyclotomicInteger q_binomial_exact(long long top, long long bottom, const RootOfUnity& q);

// sum_{n <= n_max} (q;q)_n; n_max < 0 means N - 1, past which every term vanishes.
template <class Real>
Complex<Real> kontsevich_zagier_eval(const RootOfUnity& q, long long n_max = -1);
CyclotomicInteger kontsevich_zagier_exact(const RootOfUnity& q, long long n_max = -1);

// J_N(3_1; q) = q^{1-N} sum_n q^{-nN} (q^{1-N}; q)_n evaluated literally at q = zeta_N.
template <class Real>
Complex<Real> colored_jones_trefoil(long long N);
CyclotomicInteger colored_jones_trefoil_exact(long long N);

enum class LoopOrder {
  top_down,   // k_u outermost, each k_i bounded above by k_{i+1} + delta_{i,l}
  bottom_up,  // k_1 outermost, each k_{i+1} bounded below by k_i - delta_{i,l}
};

struct HikamiOptions {
  LoopOrder order = LoopOrder::top_down;
  double budget = 2e8;  // cap on the estimated u (N+1)^u term count
};

// X_u^{(l)}(q) = sum (q)_{k_u} q^{k_1^2+...+k_{u-1}^2 + k_{l+1}+...+k_{u-1}} prod_{i<u} [k_{i+1}+delta_{i,l}, k_i].
template <class Real>
Complex<Real> hikami_x(int u, int l, const RootOfUnity& q, const HikamiOptions& opts = {});
CyclotomicInteger hikami_x_exact(int u, int l, const RootOfUnity& q, const HikamiOptions& opts = {});

struct StrangeConfig {
  enum class Family { trefoil, hikami };
  Family family = Family::trefoil;
  int u = 1;
  int l = 0;
};

// The partial theta series matched by the Habiro element: trefoil a=1, b=24, -chi_12/2;
// hikami a=(2u-2l-1)^2, b=8(2u+1), -chi^{(1,l+1)}_{4(2u+1)}/2.
ThetaSpec strange_theta_spec(const StrangeConfig& cfg);

// Habiro side at e^{2 pi i alpha} (exact ring for N <= 8) against the radial limit of the theta side.
template <class Real>
IdentityCheck<Real> verify_strange(const StrangeConfig& cfg, const Rational& alpha);

// C_0..C_{count-1} of the trefoil series from the Kontsevich-Zagier side: e^{-t/24} sum_n (q)_n at
// q = e^{-t} is fitted by a polynomial in t/24 at small t, and C_k = k! times its k-th coefficient.
template <class Real>
std::vector<Real> trefoil_small_t_coefficients(int count);

}  // namespace hres
