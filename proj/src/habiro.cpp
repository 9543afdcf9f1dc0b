#include "hres/habiro.hpp"

#include "hres/qseries.hpp"
#include "hres/rational.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace hres {

RootOfUnity::RootOfUnity(long long j, long long N) {
  if (N < 1) throw ConfigError("root of unity needs order N >= 1");
  long long r = j % N;
  if (r < 0) r += N;
  if (gcd_ll(r == 0 ? N : r, N) != 1) throw ConfigError("root of unity exponent must be coprime to its order");
  j_ = r;
  N_ = N;
}

RootOfUnity RootOfUnity::from_alpha(const Rational& alpha) {
  BigInt den = mp::denominator(alpha);
  BigInt num = mp::numerator(alpha);
  if (den > BigInt(1'000'000)) throw ConfigError("root of unity order too large");
  long long N = den.convert_to<long long>();
  BigInt r = num % den;
  if (r < 0) r += den;
  return {r.convert_to<long long>(), N};
}

long long RootOfUnity::exponent(long long k) const {
  __int128 e = static_cast<__int128>(j_) * k % N_;
  if (e < 0) e += N_;
  return static_cast<long long>(e);
}

template <class Real>
Complex<Real> unit_root(long long r, long long N) {
  r %= N;
  if (r < 0) r += N;
  if (r == 0) return Complex<Real>(1);
  if (2 * r == N) return Complex<Real>(-1);
  if (4 * r == N) return Complex<Real>(0, 1);
  if (4 * r == 3 * N) return Complex<Real>(0, -1);
  return exp_2pi_i<Real>(r, N);
}

template <class Real>
Complex<Real> RootOfUnity::power(long long k) const {
  return unit_root<Real>(exponent(k), N_);
}

// ---- Z[X]/(X^N - 1) ----

CyclotomicInteger::CyclotomicInteger(long long N) : c_(static_cast<std::size_t>(N)) {
  if (N < 1) throw ConfigError("cyclotomic ring needs N >= 1");
}

CyclotomicInteger::CyclotomicInteger(long long N, long long constant) : CyclotomicInteger(N) {
  c_[0] = constant;
}

CyclotomicInteger CyclotomicInteger::monomial(long long N, long long k) {
  CyclotomicInteger out(N);
  k %= N;
  if (k < 0) k += N;
  out.c_[static_cast<std::size_t>(k)] = 1;
  return out;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  if (o.order() != order()) throw ConsistencyError("cyclotomic orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  if (o.order() != order()) throw ConsistencyError("cyclotomic orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.order() != b.order()) throw ConsistencyError("cyclotomic orders differ");
  const std::size_t N = a.c_.size();
  CyclotomicInteger out(static_cast<long long>(N));
  for (std::size_t i = 0; i < N; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (b.c_[j] == 0) continue;
      out.c_[(i + j) % N] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

namespace {

// Exact quotient of integer polynomials by a monic divisor; lowest degree first.
std::vector<BigInt> divide_monic(std::vector<BigInt> num, const std::vector<BigInt>& den, std::vector<BigInt>* rem) {
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> quot(num.size() > dn ? num.size() - dn : 1);
  for (std::size_t i = num.size(); i-- > dn;) {
    BigInt lead = num[i];
    if (lead == 0) continue;
    quot[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  if (rem) {
    num.resize(dn);
    *rem = std::move(num);
  }
  return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(long long N) {
  if (N < 1) throw ConfigError("cyclotomic polynomial needs N >= 1");
  std::vector<BigInt> p(static_cast<std::size_t>(N) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(N)] = 1;
  for (long long d = 1; d < N; ++d)
    if (N % d == 0) p = divide_monic(p, cyclotomic_polynomial(d), nullptr);
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

std::vector<BigInt> CyclotomicInteger::reduced() const {
  std::vector<BigInt> rem;
  divide_monic(c_, cyclotomic_polynomial(order()), &rem);
  return rem;
}

bool CyclotomicInteger::reduced_is_zero() const {
  for (const BigInt& v : reduced())
    if (v != 0) return false;
  return true;
}

template <class Real>
Complex<Real> CyclotomicInteger::evaluate() const {
  Complex<Real> sum{};
  const long long N = order();
  for (long long k = 0; k < N; ++k) {
    const BigInt& v = c_[static_cast<std::size_t>(k)];
    if (v != 0) sum += to_real<Real>(v) * unit_root<Real>(k, N);
  }
  return sum;
}

std::string CyclotomicInteger::str() const {
  std::vector<BigInt> r = reduced();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    BigInt mag = r[k] < 0 ? BigInt(-r[k]) : r[k];
    if (first)
      os << (r[k] < 0 ? "-" : "");
    else
      os << (r[k] < 0 ? " - " : " + ");
    if (k == 0 || mag != 1) os << mag.str();
    if (k > 0) os << (mag != 1 ? " " : "") << "z" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

// ---- generic evaluation over a ring holding q ----

namespace {

template <class Real>
struct FloatRing {
  using Elem = Complex<Real>;
  RootOfUnity q;
  std::vector<Elem> powers;  // zeta_N^r
  explicit FloatRing(const RootOfUnity& root) : q(root) {
    for (long long r = 0; r < q.order(); ++r) powers.push_back(unit_root<Real>(r, q.order()));
  }
  Elem zero() const { return {}; }
  Elem one() const { return Elem(1); }
  Elem qpow(long long k) const { return powers[static_cast<std::size_t>(q.exponent(k))]; }
};

struct ExactRing {
  using Elem = CyclotomicInteger;
  RootOfUnity q;
  Elem zero() const { return Elem(q.order()); }
  Elem one() const { return Elem(q.order(), 1); }
  Elem qpow(long long k) const { return Elem::monomial(q.order(), q.exponent(k)); }
};

template <class Ring>
typename Ring::Elem pochhammer(const Ring& R, long long a, long long n) {
  if (n < 0) throw DomainError("q-Pochhammer needs n >= 0");
  auto out = R.one();
  for (long long k = 1; k <= n; ++k) out = out * (R.one() - R.qpow(a + k - 1));
  return out;
}

template <class Ring>
std::vector<std::vector<typename Ring::Elem>> pascal(const Ring& R, long long top) {
  std::vector<std::vector<typename Ring::Elem>> C(static_cast<std::size_t>(top) + 1);
  for (long long n = 0; n <= top; ++n) {
    auto& row = C[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, R.one());
    for (long long k = 1; k < n; ++k)
      row[static_cast<std::size_t>(k)] = C[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                                         R.qpow(k) * C[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
  }
  return C;
}

template <class Ring>
typename Ring::Elem binomial(const Ring& R, long long top, long long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return R.zero();
  return pascal(R, top)[static_cast<std::size_t>(top)][static_cast<std::size_t>(bottom)];
}

template <class Ring>
typename Ring::Elem kontsevich_zagier(const Ring& R, long long n_max) {
  if (n_max < 0) n_max = R.q.order() - 1;
  auto sum = R.zero();
  auto term = R.one();
  for (long long n = 0; n <= n_max; ++n) {
    if (n > 0) term = term * (R.one() - R.qpow(n));
    sum += term;
  }
  return sum;
}

template <class Ring>
typename Ring::Elem jones_trefoil(const Ring& R) {
  const long long N = R.q.order();
  auto sum = R.zero();
  auto poch = R.one();  // (q^{1-N}; q)_n
  for (long long n = 0; n <= N; ++n) {
    if (n > 0) poch = poch * (R.one() - R.qpow(1 - N + n - 1));
    sum += R.qpow(-n * N) * poch;
  }
  return R.qpow(1 - N) * sum;
}

void check_hikami(int u, int l, const RootOfUnity& q, const HikamiOptions& opts) {
  if (u < 1) throw ConfigError("hikami_x needs u >= 1");
  if (l < 0 || l >= u) throw ConfigError("hikami_x needs 0 <= l < u");
  double est = u * std::pow(static_cast<double>(q.order() + 1), u);
  if (est > opts.budget)
    throw ConfigError("hikami_x: estimated " + std::to_string(static_cast<long long>(est)) +
                      " terms exceed the budget");
}

template <class Ring>
typename Ring::Elem hikami(const Ring& R, int u, int l, LoopOrder order) {
  using Elem = typename Ring::Elem;
  const long long N = R.q.order();
  std::vector<Elem> poch{R.one()};
  for (long long k = 1; k < N; ++k) poch.push_back(poch.back() * (R.one() - R.qpow(k)));
  const auto C = pascal(R, N + 1);
  auto binom = [&](long long top, long long bottom) -> const Elem& {
    return C[static_cast<std::size_t>(top)][static_cast<std::size_t>(bottom)];
  };
  auto delta = [&](int i) -> long long { return i == l ? 1 : 0; };
  // q-exponent contributed by k_i, i < u
  auto weight = [&](int i, long long k) { return R.qpow(k * k + (i > l ? k : 0)); };
  std::vector<long long> k(static_cast<std::size_t>(u) + 1);
  Elem total = R.zero();

  if (order == LoopOrder::top_down) {
    std::function<void(int, const Elem&)> rec = [&](int i, const Elem& partial) {
      if (i == 0) {
        total += partial;
        return;
      }
      if (i == u) {
        for (long long ku = 0; ku < N; ++ku) {
          k[static_cast<std::size_t>(u)] = ku;
          rec(i - 1, poch[static_cast<std::size_t>(ku)]);
        }
        return;
      }
      long long top = k[static_cast<std::size_t>(i) + 1] + delta(i);
      for (long long ki = 0; ki <= top; ++ki) {
        k[static_cast<std::size_t>(i)] = ki;
        rec(i - 1, partial * binom(top, ki) * weight(i, ki));
      }
    };
    rec(u, R.one());
  } else {
    std::function<void(int, const Elem&)> rec = [&](int i, const Elem& partial) {
      long long lo = i == 1 ? 0 : std::max<long long>(0, k[static_cast<std::size_t>(i) - 1] - delta(i - 1));
      long long hi = i == u ? N - 1 : N;
      for (long long ki = lo; ki <= hi; ++ki) {
        k[static_cast<std::size_t>(i)] = ki;
        Elem next = partial;
        if (i > 1) next = next * binom(ki + delta(i - 1), k[static_cast<std::size_t>(i) - 1]);
        if (i < u) {
          rec(i + 1, next * weight(i, ki));
        } else {
          total += next * poch[static_cast<std::size_t>(ki)];
        }
      }
    };
    rec(1, R.one());
  }
  return total;
}

}  // namespace

template <class Real>
Complex<Real> q_pochhammer(const RootOfUnity& q, long long a_exp, long long n) {
  return pochhammer(FloatRing<Real>(q), a_exp, n);
}

template <class Real>
Complex<Real> q_pochhammer(const Complex<Real>& a, const Complex<Real>& q, long long n) {
  if (n < 0) throw DomainError("q-Pochhammer needs n >= 0");
  Complex<Real> out(1);
  Complex<Real> qk = a;
  for (long long k = 1; k <= n; ++k) {
    out *= Complex<Real>(1) - qk;
    qk *= q;
  }
  return out;
}

CyclotomicInteger q_pochhammer_exact(const RootOfUnity& q, long long a_exp, long long n) {
  return pochhammer(ExactRing{q}, a_exp, n);
}

template <class Real>
Complex<Real> q_binomial(long long top, long long bottom, const RootOfUnity& q) {
  return binomial(FloatRing<Real>(q), top, bottom);
}

template <class Real>
Complex<Real> q_binomial(long long top, long long bottom, const Complex<Real>& q) {
  if (bottom < 0 || top < 0 || bottom > top) return {};
  // one Pascal row in place, right to left; entries beyond the previous row start at zero
  std::vector<Complex<Real>> qpow(static_cast<std::size_t>(bottom) + 1, Complex<Real>(1));
  for (long long k = 1; k <= bottom; ++k) qpow[static_cast<std::size_t>(k)] = qpow[static_cast<std::size_t>(k - 1)] * q;
  std::vector<Complex<Real>> row(static_cast<std::size_t>(bottom) + 1);
  row[0] = 1;
  for (long long n = 1; n <= top; ++n)
    for (long long k = std::min(n, bottom); k >= 1; --k) {
      auto i = static_cast<std::size_t>(k);
      row[i] = row[i - 1] + qpow[i] * row[i];
    }
  return row[static_cast<std::size_t>(bottom)];
}

CyclotomicInteger q_binomial_exact(long long top, long long bottom, const RootOfUnity& q) {
  return binomial(ExactRing{q}, top, bottom);
}

template <class Real>
Complex<Real> kontsevich_zagier_eval(const RootOfUnity& q, long long n_max) {
  return kontsevich_zagier(FloatRing<Real>(q), n_max);
}

CyclotomicInteger kontsevich_zagier_exact(const RootOfUnity& q, long long n_max) {
  return kontsevich_zagier(ExactRing{q}, n_max);
}

template <class Real>
Complex<Real> colored_jones_trefoil(long long N) {
  if (N < 2) throw ConfigError("colored Jones needs N >= 2");
  return jones_trefoil(FloatRing<Real>(RootOfUnity(1, N)));
}

CyclotomicInteger colored_jones_trefoil_exact(long long N) {
  if (N < 2) throw ConfigError("colored Jones needs N >= 2");
  return jones_trefoil(ExactRing{RootOfUnity(1, N)});
}

template <class Real>
Complex<Real> hikami_x(int u, int l, const RootOfUnity& q, const HikamiOptions& opts) {
  check_hikami(u, l, q, opts);
  return hikami(FloatRing<Real>(q), u, l, opts.order);
}

CyclotomicInteger hikami_x_exact(int u, int l, const RootOfUnity& q, const HikamiOptions& opts) {
  check_hikami(u, l, q, opts);
  return hikami(ExactRing{q}, u, l, opts.order);
}

ThetaSpec strange_theta_spec(const StrangeConfig& cfg) {
  const Rational half(-1, 2);
  if (cfg.family == StrangeConfig::Family::trefoil) return {1, 24, 1, make_periodic(half, 12, 1, 5)};
  if (cfg.u < 1 || cfg.l < 0 || cfg.l >= cfg.u) throw ConfigError("hikami family needs u >= 1 and 0 <= l < u");
  long long t = 2LL * cfg.u + 1;
  long long a = 2LL * cfg.u - 2LL * cfg.l - 1;
  return {a * a, 8 * t, 1, chi_function({2, static_cast<int>(t), 1, cfg.l + 1}).scaled(half)};
}

template <class Real>
IdentityCheck<Real> verify_strange(const StrangeConfig& cfg, const Rational& alpha) {
  RootOfUnity q = RootOfUnity::from_alpha(alpha);
  const bool exact = q.order() <= 8;
  const bool tref = cfg.family == StrangeConfig::Family::trefoil;
  IdentityCheck<Real> out;
  if (exact) {
    CyclotomicInteger v = tref ? kontsevich_zagier_exact(q) : hikami_x_exact(cfg.u, cfg.l, q);
    // the ring generator is zeta_N; q = zeta_N^j is folded in by the exponent map
    out.lhs = v.evaluate<Real>();
    out.note = "Habiro side exact in Z[zeta_" + std::to_string(q.order()) + "]: " + v.str();
  } else {
    out.lhs = tref ? kontsevich_zagier_eval<Real>(q) : hikami_x<Real>(cfg.u, cfg.l, q);
    out.note = "Habiro side in floating point";
  }
  out.rhs = theta_radial_limit(make_theta<Real>(strange_theta_spec(cfg)), alpha);
  using std::abs;
  out.residual = abs(out.lhs - out.rhs);
  out.error = 64 * eps<Real>() * (abs(out.lhs) + abs(out.rhs) + 1);
  return out;
}

template <class Real>
std::vector<Real> trefoil_small_t_coefficients(int count) {
  if (count < 1 || count > 3) throw ConfigError("trefoil_small_t_coefficients recovers 1..3 coefficients");
  const int degree = 7;
  std::vector<Real> ts;
  std::vector<Complex<Real>> ys;
  using std::exp;
  using std::pow;
  for (int j = 0; j <= degree + 2; ++j) {
    // below t = 0.02 the neglected (q)_inf D(q) is under e^{-80}
    Real t = Real(0.02) * pow(Real(0.8), j);
    Real q = exp(-t);
    Real term = 1, qn = 1, sum = 0;
    for (long n = 0; n < 1'000'000 && term > eps<Real>() * 1e-6; ++n) {
      sum += term;
      qn *= q;
      term *= 1 - qn;
    }
    ts.push_back(t / 24);
    ys.emplace_back(exp(-t / 24) * sum);
  }
  auto coef = polynomial_fit(ts, ys, degree);
  std::vector<Real> out;
  Real fact = 1;
  for (int k = 0; k < count; ++k) {
    if (k > 0) fact *= k;
    out.push_back(coef[static_cast<std::size_t>(k)].real() * fact);
  }
  return out;
}

#define HRES_INSTANTIATE_HABIRO(Real)                                                                    \
  template Complex<Real> unit_root<Real>(long long, long long);                                         \
  template Complex<Real> RootOfUnity::power<Real>(long long) const;                                     \
  template Complex<Real> CyclotomicInteger::evaluate<Real>() const;                                     \
  template Complex<Real> q_pochhammer<Real>(const RootOfUnity&, long long, long long);                   \
  template Complex<Real> q_pochhammer<Real>(const Complex<Real>&, const Complex<Real>&, long long);       \
  template Complex<Real> q_binomial<Real>(long long, long long, const RootOfUnity&);                     \
  template Complex<Real> q_binomial<Real>(long long, long long, const Complex<Real>&);                    \
  template Complex<Real> kontsevich_zagier_eval<Real>(const RootOfUnity&, long long);                   \
  template Complex<Real> colored_jones_trefoil<Real>(long long);                                        \
  template Complex<Real> hikami_x<Real>(int, int, const RootOfUnity&, const HikamiOptions&);             \
  template IdentityCheck<Real> verify_strange<Real>(const StrangeConfig&, const Rational&);            \
  template std::vector<Real> trefoil_small_t_coefficients<Real>(int);

HRES_INSTANTIATE_HABIRO(double)
HRES_INSTANTIATE_HABIRO(Real128)
HRES_INSTANTIATE_HABIRO(Real256)

}  // namespace hres
