#pragma once

// Arbitrary-precision kernels: Gamma, digamma, Bernoulli numbers, the
// generalized binomial coefficient, the scaled Bessel function e^{-2t} I0(2t)
// and the Riemann zeta function.

#include <zetakit/rational.hpp>
#include <zetakit/types.hpp>

#include <mutex>
#include <vector>

namespace zetakit {

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace detail {

class BernoulliTable {
 public:
  BigRational get(unsigned long k) {
    std::lock_guard<std::mutex> lock(mutex_);
    extend_to(k);
    return table_[k];
  }

 private:
  // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j, skipping the odd zeros.
  void extend_to(unsigned long k) {
    if (table_.empty()) {
      table_.emplace_back(1);
      table_.emplace_back(-1, 2);
    }
    for (unsigned long n = table_.size(); n <= k; ++n) {
      if (n % 2 == 1) {
        table_.emplace_back(0);
        continue;
      }
      BigRational acc = table_[0] + BigRational(binomial(n + 1, 1)) * table_[1];
      for (unsigned long j = 2; j < n; j += 2) acc += BigRational(binomial(n + 1, j)) * table_[j];
      acc /= BigRational(static_cast<long>(n + 1));
      table_.push_back(-acc);
    }
  }

  std::mutex mutex_;
  std::vector<BigRational> table_;
};

inline BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace detail

/// Exact Bernoulli number B_k with B_1 = -1/2. Memoized and thread-safe.
inline BigRational bernoulli(unsigned long k) { return detail::bernoulli_table().get(k); }

// ---------------------------------------------------------------------------
// Gamma

namespace detail {

inline Real arg_of(const Real& x) { return x.sign() < 0 ? const_pi() : Real(0); }
inline Real arg_of(const Complex& z) { return arg(z); }

/// Stirling shift target: below this real part the recurrence is applied.
inline long stirling_threshold(long bits) { return static_cast<long>(0.3 * bits) + 10; }

/// log Gamma(z) by the Stirling series for Re z past the threshold. The
/// remainder bound is stored in `remainder`.
template <class T>
T log_gamma_stirling(const T& z, long bits, Real& remainder) {
  const Real eps = epsilon(bits);
  T zinv = T(1) / z;
  T zinv2 = zinv * zinv;
  T sum = (z - Real(1) / 2) * log(z) - z + log(2 * const_pi()) / 2;
  T power = zinv;  // z^{-(2k-1)}
  const long max_k = 4 * stirling_threshold(bits) + 40;
  // The remainder after k terms is bounded by the next term times
  // sec^{2k+2}(arg z / 2).
  Real sec = 1 / cos(arg_of(z) / 2);
  for (long k = 1; k <= max_k; ++k) {
    Real coef = Real(bernoulli(2 * k)) / ((2 * k) * (2 * k - 1));
    T term = power * coef;
    Real bound = abs(term) * pow(sec, 2 * k);
    if (bound < eps) {
      remainder = bound;
      return sum;
    }
    sum += term;
    power *= zinv2;
  }
  throw NoConvergence("Stirling series did not reach working precision");
}

/// Gamma(s) by upward recurrence and the Stirling series. `relerr` receives a
/// relative error estimate.
template <class T>
T gamma_core(const T& s, long bits, Real& relerr) {
  const Real r = Real(stirling_threshold(bits));
  T z = s;
  T prod = T(1);
  long shifts = 0;
  while (real_part(z) < r) {
    prod *= z;
    z += T(1);
    ++shifts;
  }
  Real rem;
  T lg = log_gamma_stirling(z, bits, rem);
  relerr = rem + epsilon(bits) * (shifts + 40);
  return exp(lg) / prod;
}

}  // namespace detail

inline HPComplex gamma(const Complex& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Real radius = ctx.snap_radius();
  if (detail::near_real(s, radius)) {
    if (auto k = detail::snap_integer(s.re, radius); k && *k <= 0)
      throw PoleError("Gamma has a pole at " + std::to_string(*k));
  }
  Real relerr;
  Complex g = s.is_real() ? Complex(detail::gamma_core(s.re, ctx.work_bits(), relerr))
                          : detail::gamma_core(s, ctx.work_bits(), relerr);
  HPComplex out{std::move(g), 0};
  out.err = detail::to_err(relerr * abs(out.value)) + detail::to_err(abs(out.value) * epsilon(ctx.precision_bits));
  out.value.re.round_to(ctx.precision_bits);
  out.value.im.round_to(ctx.precision_bits);
  return out;
}

inline HPReal gamma(const Real& s, const PrecisionContext& ctx) {
  HPComplex g = gamma(Complex(s), ctx);
  return {std::move(g.value.re), g.err, false};
}

// ---------------------------------------------------------------------------
// Digamma

inline HPReal digamma(const Real& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  if (auto k = detail::snap_integer(s, ctx.snap_radius()); k && *k <= 0)
    throw PoleError("digamma has a pole at " + std::to_string(*k));
  const long bits = ctx.work_bits();
  const Real r = Real(detail::stirling_threshold(bits));
  const Real eps = epsilon(bits);
  Real x = s;
  Real shift_sum = 0;
  Real magnitude = 0;
  long shifts = 0;
  while (x < r) {
    Real t = 1 / x;
    shift_sum -= t;
    magnitude += abs(t);
    x += 1;
    ++shifts;
  }
  // psi(x) ~ log x - 1/(2x) - sum B_{2k} / (2k x^{2k})
  Real sum = log(x) - 1 / (2 * x);
  Real xinv2 = 1 / (x * x);
  Real power = xinv2;
  bool converged = false;
  for (long k = 1; k < 4 * r.to_long() + 40; ++k) {
    Real term = Real(bernoulli(2 * k)) * power / (2 * k);
    if (abs(term) < eps) {
      converged = true;
      break;
    }
    sum -= term;
    power *= xinv2;
  }
  if (!converged) throw NoConvergence("digamma asymptotic series did not converge");
  HPReal out{sum + shift_sum, 0, false};
  out.err = detail::to_err((magnitude + abs(sum) + 1) * eps * (shifts + 40)) +
            detail::to_err(abs(out.value) * epsilon(ctx.precision_bits));
  out.value.round_to(ctx.precision_bits);
  return out;
}

// ---------------------------------------------------------------------------
// Generalized binomial coefficient

struct BinomialValue {
  HPReal value;
  /// Set when the result is an exact zero produced by surplus poles in the
  /// denominator, e.g. C(-2n, -n).
  bool zero_by_pole_cancellation = false;
};

/// Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1)) with pole bookkeeping.
///
/// More denominator poles than numerator poles gives an exact zero. A single
/// matched pair (a+1 and a-b+1 both poles) is resolved as the limit a -> a+eps
/// with b fixed, which reproduces the Pascal-triangle extension to negative a.
inline BinomialValue binomial_real(const Real& a, const Real& b, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Real radius = ctx.snap_radius();
  auto pole = [&](const Real& x) -> std::optional<long> {
    auto k = detail::snap_integer(x, radius);
    if (k && *k <= 0) return k;
    return std::nullopt;
  };
  auto p_num = pole(a + 1);
  auto p_b = pole(b + 1);
  auto p_ab = pole(a - b + 1);
  int num_poles = p_num ? 1 : 0;
  int den_poles = (p_b ? 1 : 0) + (p_ab ? 1 : 0);

  if (den_poles > num_poles) return {{Real(0), 0, true}, true};
  if (num_poles > den_poles) throw IndeterminateError("binomial: numerator pole is not cancelled");

  if (num_poles == 0) {
    HPReal ga = gamma(a + 1, ctx), gb = gamma(b + 1, ctx), gab = gamma(a - b + 1, ctx);
    Real v = ga.value / (gb.value * gab.value);
    double rel = ga.err / std::max(1e-300, std::fabs(ga.value.to_double())) +
                 gb.err / std::max(1e-300, std::fabs(gb.value.to_double())) +
                 gab.err / std::max(1e-300, std::fabs(gab.value.to_double()));
    HPReal out{v, rel * std::fabs(v.to_double()), false};
    if (a.is_integer() && b.is_integer() && a >= 0) {
      out.value = round(out.value);
      out.err = 0;
      out.exact = true;
    }
    out.value.round_to(ctx.precision_bits);
    return {out, false};
  }

  if (!p_ab) throw IndeterminateError("binomial: pole pairing is ambiguous");
  // Gamma(-m + e) / Gamma(-k + e) -> (-1)^(m-k) k! / m!
  long m = -*p_num, k = -*p_ab;
  BigRational ratio = make_rational(factorial(static_cast<unsigned long>(k)), factorial(static_cast<unsigned long>(m)));
  if ((m - k) % 2 != 0) ratio = -ratio;
  HPReal gb = gamma(b + 1, ctx);
  Real v = Real(ratio) / gb.value;
  HPReal out{v, gb.err * std::fabs(v.to_double() / gb.value.to_double()), false};
  if (b.is_integer()) {
    out.value = round(out.value);
    out.err = 0;
    out.exact = true;
  }
  out.value.round_to(ctx.precision_bits);
  return {out, false};
}

// ---------------------------------------------------------------------------
// Scaled Bessel function

/// Argument above which the asymptotic expansion replaces the power series.
inline double bessel_switch_point(const PrecisionContext& ctx) {
  return std::max(30.0, ctx.precision_bits / 2.0);
}

/// e^{-2t} I0(2t) for t >= 0.
inline HPReal bessel_i0_scaled(const Real& t, const PrecisionContext& ctx) {
  if (t.sign() < 0) throw DomainError("bessel_i0_scaled requires t >= 0");
  PrecisionScope scope(ctx.work_bits());
  const Real eps = epsilon(ctx.work_bits());
  if (t.is_zero()) return {Real(1), 0, true};

  if (t.to_double() <= bessel_switch_point(ctx)) {
    // I0(2t) = sum t^{2k} / (k!)^2, all terms positive.
    Real t2 = t * t;
    Real term = 1, sum = 1;
    long k = 1;
    for (; k <= ctx.max_terms; ++k) {
      term *= t2;
      term /= k * k;
      sum += term;
      if (Real(k) > t && term < sum * eps) break;
    }
    if (k > ctx.max_terms) throw NoConvergence("Bessel power series exceeded max_terms");
    HPReal out{sum * exp(-2 * t), 0, false};
    out.err = detail::to_err(out.value * eps * (k + 10));
    out.value.round_to(ctx.precision_bits);
    return out;
  }

  // e^{-z} I0(z) ~ (2 pi z)^{-1/2} sum ((2k-1)!!)^2 / (k! (8z)^k), z = 2t.
  // Terms decrease until k ~ 2z; the exponentially small companion term is
  // of order e^{-2z}.
  Real z = 2 * t;
  Real inv8z = 1 / (8 * z);
  Real term = 1, sum = 1;
  long k = 1;
  const long kmax = static_cast<long>(2 * z.to_double());
  for (; k <= kmax; ++k) {
    Real next = term * (2 * k - 1) * (2 * k - 1) / k * inv8z;
    if (next > term) throw NoConvergence("Bessel asymptotic series diverged before reaching precision");
    term = std::move(next);
    sum += term;
    if (term < sum * eps) break;
  }
  Real scale = 1 / sqrt(2 * const_pi() * z);
  HPReal out{sum * scale, 0, false};
  out.err = detail::to_err(scale * (2 * term + exp(-2 * z)) + out.value * eps * 10);
  if (!ctx.accepts(out.err, 1.0)) throw NoConvergence("Bessel asymptotic remainder above tolerance");
  out.value.round_to(ctx.precision_bits);
  return out;
}

// ---------------------------------------------------------------------------
// Riemann zeta

namespace detail {

/// Euler-Maclaurin summation for zeta(s); valid for Re s > -1/2 here.
inline HPComplex zeta_euler_maclaurin(const Complex& s, const PrecisionContext& ctx) {
  const long bits = ctx.work_bits();
  const Real eps = epsilon(bits);
  const double sabs = abs(s).to_double();
  const long n = static_cast<long>(0.15 * bits + sabs + 10);
  const Real sigma = s.re;

  Complex sum(0);
  Real magnitude = 0;
  for (long k = 1; k < n; ++k) {
    Complex t = s.is_real() ? Complex(pow(Real(k), -s.re)) : exp(-s * log(Real(k)));
    magnitude += abs(t);
    sum += t;
  }
  Real big_n(n);
  Complex n_pow = s.is_real() ? Complex(pow(big_n, -s.re)) : exp(-s * log(big_n));  // N^{-s}
  sum += n_pow * big_n / (s - 1);
  sum += n_pow / 2;

  // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  Complex poch = s;
  Complex npow = n_pow / big_n;
  Real inv_n2 = 1 / (big_n * big_n);
  Real fact = 2;  // (2j)!
  Real remainder;
  bool converged = false;
  for (long j = 1; j <= ctx.max_terms; ++j) {
    Complex term = poch * npow * (Real(bernoulli(2 * j)) / fact);
    // Remainder after the terms below j: |T_j| |s + 2j - 1| / (sigma + 2j - 1).
    Real denom = sigma + (2 * j - 1);
    if (denom.sign() > 0) {
      Real bound = abs(term) * abs(s + (2 * j - 1)) / denom;
      if (bound < eps * max(abs(sum), Real(1))) {
        remainder = bound;
        converged = true;
        break;
      }
    }
    sum += term;
    poch *= (s + (2 * j - 1)) * (s + 2 * j);
    npow = npow * inv_n2;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  if (!converged) throw NoConvergence("Euler-Maclaurin series for zeta did not converge");
  HPComplex out{sum, 0};
  out.err = to_err(remainder + (magnitude + abs(sum)) * eps * 4);
  return out;
}

}  // namespace detail

/// Riemann zeta(s) near the real axis. Euler-Maclaurin for Re s >= -1/2, the
/// functional equation zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
/// below.
inline HPComplex riemann_zeta_numeric(const Complex& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Real radius = ctx.snap_radius();
  if (detail::near_real(s, radius) && abs(s.re - 1) <= radius) throw PoleError("zeta has a pole at s = 1");

  HPComplex out;
  if (s.re >= Real(-1) / 2) {
    out = detail::zeta_euler_maclaurin(s, ctx);
  } else {
    if (detail::near_real(s, radius)) {
      if (auto k = detail::snap_integer(s.re, radius); k && *k % 2 == 0) {
        out = HPComplex{Complex(0), 0};
        return out;
      }
    }
    Complex one_minus = 1 - s;
    HPComplex reflected = detail::zeta_euler_maclaurin(one_minus, ctx);
    HPComplex g = gamma(one_minus, ctx);
    Real pi = const_pi();
    Complex sine = s.is_real() ? Complex(sin_pi(s.re / 2)) : sin(s * pi / 2);
    Complex factor = pow(Complex(Real(2)), s) * pow(Complex(pi), s - 1) * sine;
    out.value = factor * g.value * reflected.value;
    Real fabs_ = abs(factor);
    out.err = detail::to_err(fabs_ * (Real(g.err) * abs(reflected.value) + abs(g.value) * Real(reflected.err))) +
              detail::to_err(abs(out.value) * epsilon(ctx.work_bits()) * 16);
  }
  out.value.re.round_to(ctx.precision_bits);
  out.value.im.round_to(ctx.precision_bits);
  return out;
}

inline HPReal riemann_zeta_numeric(const Real& s, const PrecisionContext& ctx) {
  HPComplex z = riemann_zeta_numeric(Complex(s), ctx);
  return {std::move(z.value.re), z.err, false};
}

}  // namespace zetakit
