#pragma once

#include "hres/exact.hpp"
#include "hres/numeric.hpp"
#include "hres/periodic.hpp"

#include <vector>

namespace hres {

class SingularProximityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BranchAmbiguityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Which boundary value to take on the cut p in (min N, infinity).
enum class CutSide { none, above, below };

// Coefficient of p^n in G(p) = sum a_{n+1} p^n / n!, n < count.
std::vector<Rational> borel_coefficients(const FormalSeries& series, int count);

// The same coefficients from the rearranged Bernoulli form (second line of the
// coefficient series); kept as an independent regression route.
std::vector<Rational> borel_coefficients_rearranged(const FormalSeries& series, int count);

// Taylor coefficients in p of -p^{-3/2}(2c sin(Ay/2) sin(By/2)/sin(My/2) + C_M y), y = sqrt(p),
// from exact power-series division.
std::vector<Rational> g1_coefficients(const FormalSeries& series, int count);
// Taylor coefficients of (6/b)(1 - 4p/b)^{-5/2} by the binomial series.
std::vector<Rational> g2_coefficients(long long b, int count);
// Termwise product g1 * g2; throws ConsistencyError if it differs from borel_coefficients.
std::vector<Rational> hadamard_oracle(const FormalSeries& series, int count);

// Exact coefficients of 2c sin(Ay/2) sin(By/2)/sin(My/2) in powers of y (index = power).
std::vector<Rational> sine_ratio_series(const PeriodicFunction& f, int max_power);

class SingularitySet {
 public:
  SingularitySet(const TildeFunction& tilde, long long b) : tilde_(tilde), b_(b) {}

  bool contains_index(long long l) const { return l >= 1 && !tilde_.is_zero(l); }
  long long first_index() const;
  // The first `count` indices l with nonzero f~(l), increasing.
  std::vector<long long> indices(int count) const;

  template <class Real>
  Real position(long long l) const {
    Real r = pi<Real>() * Real(l) / Real(tilde_.base().period());
    return Real(b_) * r * r;
  }

  const TildeFunction& tilde() const { return tilde_; }
  long long b() const { return b_; }

 private:
  TildeFunction tilde_;
  long long b_;
};

SingularitySet singularity_set(const FormalSeries& series);

// sum_{l>=1} f~(l)/l^s by period blocks with the bound sum r|f~(r)| / (P^{s+1} (J-1)^s).
template <class Real>
Estimate<Real> tilde_dirichlet_sum(const TildeFunction& tilde, int s, const PrecisionContext<Real>& ctx);

// The same sum restricted to l >= L.
template <class Real>
Estimate<Real> tilde_dirichlet_tail(const TildeFunction& tilde, int s, long long L, const PrecisionContext<Real>& ctx);

// G_f(p) from the closed form sum (3 pi c/(M^2 b)) sum l f~(l) (l^2 pi^2/M^2 - p/b)^{-5/2}.
template <class Real>
Estimate<Real> borel_eval(const FormalSeries& series, const Complex<Real>& p, const PrecisionContext<Real>& ctx,
                          CutSide side = CutSide::none);

// Taylor coefficients of the closed form, expanded termwise in p.
template <class Real>
std::vector<Estimate<Real>> borel_closed_form_taylor(const FormalSeries& series, int count,
                                                     const PrecisionContext<Real>& ctx);

}  // namespace hres
