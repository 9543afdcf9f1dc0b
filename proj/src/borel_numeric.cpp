#include "hres/borel.hpp"

#include <cmath>

namespace hres {

template <class Real>
Estimate<Real> tilde_dirichlet_tail(const TildeFunction& tilde, int s, long long L, const PrecisionContext<Real>& ctx) {
  if (s < 2) throw DomainError("tilde Dirichlet sums need s >= 2 for block convergence");
  if (L < 1) throw DomainError("tilde Dirichlet tail starts at l >= 1");
  using std::abs;
  using std::ceil;
  using std::pow;
  const long long P = tilde.period();
  std::vector<Real> vals(static_cast<std::size_t>(P) + 1);
  Real W = 0;
  for (long long r = 1; r <= P; ++r) {
    vals[static_cast<std::size_t>(r)] = tilde.value<Real>(r);
    W += Real(r) * abs(vals[static_cast<std::size_t>(r)]);
  }
  // Blocks j cover l = jP + 1 .. (j+1)P; block j0 may be partial and is summed directly.
  const long long j0 = (L - 1) / P;
  Real tol = ctx.tolerance / 2;
  Real ratio = W / (pow(Real(P), s + 1) * tol);
  Real Jreal = 1 + ceil(pow(ratio, Real(1) / Real(s)));
  long long J = std::max<long long>({static_cast<long long>(static_cast<double>(Jreal)), j0 + 1, 2});
  Estimate<Real> out;
  long long cap = j0 + std::max<long long>(2, ctx.max_terms / P);
  if (J > cap) {
    J = cap;
    out.converged = false;
  }
  CompensatedSum<Real, Real> sum;
  for (long long j = j0; j < J; ++j) {
    for (long long r = 1; r <= P; ++r) {
      const Real& v = vals[static_cast<std::size_t>(r)];
      long long l = j * P + r;
      if (v == 0 || l < L) continue;
      sum.add(v / pow(Real(l), s));
    }
  }
  Real tail = W / (pow(Real(P), s + 1) * pow(Real(J - 1), s));
  out.value = Complex<Real>(sum.value());
  out.error = tail + sum.rounding_error();
  if (out.error > ctx.tolerance) out.converged = false;
  return out;
}

template <class Real>
Estimate<Real> tilde_dirichlet_sum(const TildeFunction& tilde, int s, const PrecisionContext<Real>& ctx) {
  return tilde_dirichlet_tail(tilde, s, 1, ctx);
}

template <class Real>
Estimate<Real> borel_eval(const FormalSeries& series, const Complex<Real>& p, const PrecisionContext<Real>& ctx,
                          CutSide side) {
  using std::abs;
  using std::pow;
  using std::sqrt;
  SingularitySet sing = singularity_set(series);
  const TildeFunction& tilde = sing.tilde();
  const Real b = Real(series.b());
  const Real M = Real(series.period());
  const Real pie = pi<Real>();
  const Real a = pie * pie / (M * M);
  const Real prefactor = 3 * pie * to_real<Real>(series.scale()) / (M * M * b);
  const Real guard = Real(1e-6) * sing.position<Real>(sing.first_index());
  const Complex<Real> pb = p / b;
  const Real q = abs(pb);

  // Tail of sum_{l>L} l (a l^2 - q)^{-5/2} is at most (a L^2 - q)^{-3/2}/(3a).
  Real budget = ctx.tolerance / (2 * abs(prefactor));
  Real need = q + pow(1 / (3 * a * budget), Real(2) / Real(3));
  long long L = static_cast<long long>(static_cast<double>(sqrt(need / a))) + 1;
  Estimate<Real> out;
  if (L > ctx.max_terms) {
    L = ctx.max_terms;
    out.converged = false;
  }

  CompensatedSum<Complex<Real>, Real> sum;
  for (long long l = 1; l <= L; ++l) {
    if (tilde.is_zero(l)) continue;
    Complex<Real> w = Complex<Real>(a * Real(l) * Real(l)) - pb;
    if (abs(w) * b < guard)
      throw SingularProximityError("p is within the guard distance of the singularity at l = " + std::to_string(l));
    Complex<Real> root;
    if (p.imag() == 0 && w.real() < 0) {
      if (side == CutSide::none)
        throw BranchAmbiguityError("p lies on the cut beyond the first singularity; choose a side");
      Real r = sqrt(-w.real());
      root = side == CutSide::above ? Complex<Real>(0, -r) : Complex<Real>(0, r);
    } else {
      root = sqrt(w);
    }
    sum.add(Real(l) * tilde.value<Real>(l) / (w * w * root));
  }
  Real tail = a * Real(L) * Real(L) > q ? pow(a * Real(L) * Real(L) - q, Real(-1.5)) / (3 * a) : Real(0);
  out.value = prefactor * sum.value();
  out.error = abs(prefactor) * (tail + sum.rounding_error());
  if (out.error > ctx.tolerance) out.converged = false;
  return out;
}

template <class Real>
std::vector<Estimate<Real>> borel_closed_form_taylor(const FormalSeries& series, int count,
                                                     const PrecisionContext<Real>& ctx) {
  using std::abs;
  using std::pow;
  SingularitySet sing = singularity_set(series);
  const TildeFunction& tilde = sing.tilde();
  const Real b = Real(series.b());
  const Real M = Real(series.period());
  const Real pie = pi<Real>();
  const long long lstar = sing.first_index();
  Real base = 3 * pie * to_real<Real>(series.scale()) / (M * M * b) * pow(M / pie, 5);
  Real poch = 1;  // (5/2)_n / (n! b^n)
  std::vector<Estimate<Real>> out;
  for (int n = 0; n < count; ++n) {
    const int s = 4 + 2 * n;
    // ctx.tolerance is relative to the leading l* contribution here.
    PrecisionContext<Real> local = ctx;
    local.tolerance = ctx.tolerance * abs(tilde.value<Real>(lstar)) / pow(Real(lstar), s) / 2;
    Estimate<Real> d = tilde_dirichlet_sum(tilde, s, local);
    Real scale = base * poch * pow(M / pie, 2 * n);
    Estimate<Real> e;
    e.value = scale * d.value;
    e.error = abs(scale) * d.error;
    e.converged = d.converged;
    out.push_back(e);
    poch *= Real(2 * n + 5) / Real(2) / Real(n + 1) / b;
  }
  return out;
}

#define HRES_INSTANTIATE_BOREL(Real)                                                                             \
  template Estimate<Real> tilde_dirichlet_tail<Real>(const TildeFunction&, int, long long,                        \
                                                     const PrecisionContext<Real>&);                             \
  template Estimate<Real> tilde_dirichlet_sum<Real>(const TildeFunction&, int, const PrecisionContext<Real>&);  \
  template Estimate<Real> borel_eval<Real>(const FormalSeries&, const Complex<Real>&,                            \
                                           const PrecisionContext<Real>&, CutSide);                             \
  template std::vector<Estimate<Real>> borel_closed_form_taylor<Real>(const FormalSeries&, int,                 \
                                                                      const PrecisionContext<Real>&);

HRES_INSTANTIATE_BOREL(double)
HRES_INSTANTIATE_BOREL(Real128)
HRES_INSTANTIATE_BOREL(Real256)

}  // namespace hres
