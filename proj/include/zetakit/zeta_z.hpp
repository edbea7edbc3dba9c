#pragma once

// Spectral zeta function of the integers,
//
//   zeta_Z(s) = 4^{-s} pi^{-1/2} Gamma(1/2 - s) / Gamma(1 - s) = C(-2s, -s),
//
// evaluated by the Gamma closed form, the infinite product
// prod_k (k - s)^2 / (k (k - 2s)), and the Mellin transform of the heat
// kernel e^{-2t} I0(2t). Also the completed function Z(s) = pi 2^s zeta_Z(s/2)
// and the derivative values.

#include <zetakit/numerics.hpp>
#include <zetakit/quadrature.hpp>

#include <algorithm>
#include <cmath>

namespace zetakit {

namespace detail {

inline void round_result(EvalResult& r, long bits) {
  r.value.re.round_to(bits);
  r.value.im.round_to(bits);
}

inline double rel(const HPComplex& x) {
  double m = abs(x.value).to_double();
  return m > 0 ? x.err / m : x.err;
}

/// zeta_Z(-n + 1/2) = 4^{2n} / (2 pi n) / C(2n, n), n >= 1.
inline Real zeta_z_negative_half_integer_value(long n) {
  Real num = ldexp(Real(1), 4 * n);
  return num / (2 * const_pi() * n * Real(central_binomial(static_cast<unsigned long>(n))));
}

}  // namespace detail

/// zeta_Z(s) through the Gamma quotient only: no lattice shortcuts beyond
/// pole detection. This is the "Gamma route" for checking the exact paths.
inline EvalResult zeta_z_gamma_route(const Complex& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Real radius = ctx.snap_radius();
  if (detail::near_real(s, radius)) {
    if (auto k = detail::snap_half_integer(s.re, radius); k && *k > 0 && *k % 2 != 0)
      throw PoleError("zeta_Z has a pole at s = " + std::to_string(*k) + "/2");
  }
  Complex half_minus = Complex(Real(1) / 2) - s;
  Complex one_minus = 1 - s;
  HPComplex num = gamma(half_minus, ctx);
  EvalResult out;
  out.method = Method::ClosedForm;
  Complex scale = pow(Complex(Real(4)), -s) / sqrt(const_pi());
  // Gamma(1 - s) is infinite at positive integers: zeta_Z vanishes there.
  if (detail::near_real(s, radius)) {
    if (auto k = detail::snap_integer(s.re, radius); k && *k >= 1) {
      out.value = Complex(0);
      out.zero_note = true;
      return out;
    }
  }
  HPComplex den = gamma(one_minus, ctx);
  out.value = scale * num.value / den.value;
  out.err = detail::to_err(abs(out.value) * Real(detail::rel(num) + detail::rel(den))) +
            detail::to_err(abs(out.value) * epsilon(ctx.precision_bits) * 4);
  detail::round_result(out, ctx.precision_bits);
  return out;
}

/// Closed form with exact paths: C(2n, n) at s = -n, exact zeros at the
/// positive integers, and the binomial expression at s = -n + 1/2.
inline EvalResult zeta_z_closed(const Complex& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Real radius = ctx.snap_radius();
  if (detail::near_real(s, radius)) {
    if (auto k = detail::snap_half_integer(s.re, radius)) {
      EvalResult out;
      out.method = Method::ClosedForm;
      if (*k > 0 && *k % 2 != 0) throw PoleError("zeta_Z has a pole at s = " + std::to_string(*k) + "/2");
      if (*k > 0) {
        out.value = Complex(0);
        out.exact = BigRational(0);
        out.zero_note = true;
        return out;
      }
      if (*k % 2 == 0) {
        BigInt c = central_binomial(static_cast<unsigned long>(-*k / 2));
        out.value = Complex(Real(c));
        out.exact = BigRational(c);
        detail::round_result(out, ctx.precision_bits);
        return out;
      }
      long n = (1 - *k) / 2;
      out.value = Complex(detail::zeta_z_negative_half_integer_value(n));
      out.err = detail::to_err(abs(out.value) * epsilon(ctx.precision_bits) * 4);
      detail::round_result(out, ctx.precision_bits);
      return out;
    }
  }
  return zeta_z_gamma_route(s, ctx);
}

inline EvalResult zeta_z_closed(const Real& s, const PrecisionContext& ctx) { return zeta_z_closed(Complex(s), ctx); }

/// Exact partial product prod_{k=1}^{K} (k+m)^2 / (k (k+2m)) at s = -m.
inline BigRational zeta_z_partial_product_exact(long m, long terms) {
  BigRational p(1);
  for (long k = 1; k <= terms; ++k) {
    BigInt a = k + m;
    p *= make_rational(a * a, BigInt(k) * BigInt(k + 2 * m));
  }
  return p;
}

/// Infinite product prod_{k>=1} (k - s)^2 / (k (k - 2s)).
///
/// The first K factors are multiplied out; the logarithm of the remaining
/// tail is summed by Euler-Maclaurin applied to
/// g(x) = 2 log(x - s) - log x - log(x - 2s), whose antiderivative
/// G(x) = 2(x-s)log(x-s) - x log x - (x-2s)log(x-2s) vanishes at infinity.
/// The remainder bound 8 |B_{2m}| / (2m(2m-1)) (K - 2|s|)^{1-2m} is rigorous.
inline EvalResult zeta_z_product(const Complex& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Real radius = ctx.snap_radius();
  if (detail::near_real(s, radius)) {
    if (auto k = detail::snap_half_integer(s.re, radius); k && *k > 0)
      throw NeedsLimitInterpretation("product formula needs a limit at positive integers and half-integers");
  }
  const long bits = ctx.work_bits();
  const Real eps = epsilon(bits);
  const double sabs = abs(s).to_double();
  const Real target = min(Real(ctx.target_tol) / 16, epsilon(ctx.precision_bits));

  long terms = std::max<long>({64, static_cast<long>(8 * sabs) + 8, bits / 4});
  long em_terms = 0;
  Real remainder;
  for (;;) {
    if (terms > ctx.max_terms) throw NoConvergence("product route needs more than max_terms factors");
    Real gap = Real(terms) - 2 * Real(sabs);
    Real inv_gap = 1 / gap;
    Real gap_pow = inv_gap;  // gap^{1-2m}
    bool ok = false;
    for (long m = 1; m < 4 * bits; ++m) {
      Real bound = 8 * abs(Real(bernoulli(2 * m))) / ((2 * m) * (2 * m - 1)) * gap_pow;
      if (bound < target) {
        remainder = bound;
        em_terms = m;
        ok = true;
        break;
      }
      gap_pow *= inv_gap * inv_gap;
    }
    if (ok) break;
    terms *= 2;
  }

  Complex prod(1);
  Complex two_s = 2 * s;
  for (long k = 1; k <= terms; ++k) {
    Complex a = k - s;
    prod *= a * a / (Complex(Real(k)) * (k - two_s));
  }

  Real big_k(terms);
  Complex x_s = big_k - s, x_2s = big_k - two_s;
  Complex log_xs = log(x_s), log_x2s = log(x_2s);
  Real log_x = log(big_k);
  Complex antider = 2 * x_s * log_xs - big_k * log_x - x_2s * log_x2s;
  Complex g_at_k = 2 * log_xs - log_x - log_x2s;
  Complex tail = -antider - g_at_k / 2;
  // g^{(2j-1)}(K) B_{2j}/(2j)! = B_{2j}/(2j(2j-1)) [2(K-s)^{1-2j} - K^{1-2j} - (K-2s)^{1-2j}]
  Complex inv_xs = 1 / x_s, inv_x2s = 1 / x_2s;
  Real inv_x = 1 / big_k;
  Complex p_xs = inv_xs, p_x2s = inv_x2s;
  Real p_x = inv_x;
  Complex inv_xs2 = inv_xs * inv_xs, inv_x2s2 = inv_x2s * inv_x2s;
  Real inv_x2 = inv_x * inv_x;
  for (long j = 1; j < em_terms; ++j) {
    Real coef = Real(bernoulli(2 * j)) / ((2 * j) * (2 * j - 1));
    tail -= (2 * p_xs - Complex(p_x) - p_x2s) * coef;
    p_xs *= inv_xs2;
    p_x2s *= inv_x2s2;
    p_x *= inv_x2;
  }

  EvalResult out;
  out.method = Method::Product;
  out.certified = true;
  out.value = prod * exp(tail);
  Real mag = abs(out.value);
  out.err = detail::to_err(mag * (remainder * 2 + eps * (4 * terms + 64))) +
            detail::to_err(mag * epsilon(ctx.precision_bits) * 2);
  detail::round_result(out, ctx.precision_bits);
  return out;
}

inline EvalResult zeta_z_product(const Real& s, const PrecisionContext& ctx) { return zeta_z_product(Complex(s), ctx); }

namespace detail {

/// Split point beyond which the heat kernel is replaced by its asymptotic
/// expansion; the expansion's smallest term is about e^{-4T}.
inline double mellin_split(const PrecisionContext& ctx) {
  return std::max(20.0, std::log(1 / ctx.target_tol) / 4 + 10);
}

/// Integral of t^{s-1} e^{-2t} I0(2t) over [T, inf) from
/// e^{-2t} I0(2t) ~ (4 pi t)^{-1/2} sum_k c_k (16 t)^{-k}, c_k = ((2k-1)!!)^2 / k!.
inline HPComplex mellin_tail(const Complex& s, const Real& split, const PrecisionContext& ctx) {
  const Real negligible = Real(ctx.target_tol) * Real(1e-6);
  Complex exponent = s - Complex(Real(1) / 2);
  Complex lead = exp(exponent * log(split)) / sqrt(4 * const_pi());
  Real a = 1;
  Real inv16t = 1 / (16 * split);
  Complex sum(0);
  Real last = 1;
  for (long k = 0;; ++k) {
    sum += Complex(a) / (Complex(Real(k)) - exponent);
    Real next = a * (2 * k + 1) * (2 * k + 1) / (k + 1) * inv16t;
    if (next > a) throw NoConvergence("heat-kernel tail expansion diverged before tolerance");
    a = std::move(next);
    if (a < negligible) {
      last = a;
      break;
    }
  }
  HPComplex out{lead * sum, 0};
  Real lead_abs = abs(lead);
  // The expansion's own exponentially small companion is bounded by e^{-4T}.
  out.err = to_err(lead_abs * (2 * last + exp(-4 * split)));
  return out;
}

}  // namespace detail

/// zeta_Z(s) = Gamma(s)^{-1} int_0^inf e^{-2t} I0(2t) t^{s-1} dt, 0 < Re s < 1/2.
///
/// Tanh-sinh on (0, 1] and [1, T]; the tail beyond T uses the asymptotic
/// expansion of the kernel. Error estimates are heuristic (level differences).
inline EvalResult zeta_z_mellin(const Complex& s, const PrecisionContext& ctx) {
  if (!(s.re.sign() > 0 && s.re < Real(1) / 2))
    throw DomainError("Mellin route requires 0 < Re(s) < 1/2");
  PrecisionScope scope(ctx.work_bits());
  const Real split(detail::mellin_split(ctx));
  const Complex sm1 = s - 1;

  auto integrand = [&](const Real& t, const Real& /*da*/, const Real& /*db*/) -> Complex {
    HPReal k = bessel_i0_scaled(t, ctx);
    Complex p = s.is_real() ? Complex(pow(t, sm1.re)) : exp(sm1 * log(t));
    return p * k.value;
  };
  const double tol = ctx.target_tol / 4;
  QuadratureResult head = tanh_sinh(integrand, Real(0), Real(1), tol, ctx);
  QuadratureResult mid = tanh_sinh(integrand, Real(1), split, tol, ctx);
  HPComplex tail = detail::mellin_tail(s, split, ctx);
  HPComplex g = gamma(s, ctx);

  EvalResult out;
  out.method = Method::Quadrature;
  out.certified = false;
  Complex integral = head.value + mid.value + tail.value;
  out.value = integral / g.value;
  Real gabs = abs(g.value);
  out.err = detail::to_err(Real(head.err + mid.err + tail.err) / gabs) +
            detail::to_err(abs(out.value) * Real(detail::rel(g))) +
            detail::to_err(abs(out.value) * epsilon(ctx.precision_bits) * 4);
  detail::round_result(out, ctx.precision_bits);
  return out;
}

inline EvalResult zeta_z_mellin(const Real& s, const PrecisionContext& ctx) { return zeta_z_mellin(Complex(s), ctx); }

/// Z(s) = pi 2^s zeta_Z(s/2).
inline EvalResult big_z(const Complex& s, const PrecisionContext& ctx) {
  EvalResult inner = zeta_z_closed(s / 2, ctx);
  PrecisionScope scope(ctx.work_bits());
  Complex factor = const_pi() * pow(Complex(Real(2)), s);
  EvalResult out;
  out.method = Method::ClosedForm;
  out.zero_note = inner.zero_note;
  out.value = factor * inner.value;
  out.err = detail::to_err(abs(factor) * Real(inner.err)) +
            detail::to_err(abs(out.value) * epsilon(ctx.precision_bits) * 2);
  // At s = 1 - 2m the pi cancels: Z = 2^{1-2m} 4^{2m} / (2m C(2m, m)).
  if (detail::near_real(s, ctx.snap_radius())) {
    if (auto k = detail::snap_integer(s.re, ctx.snap_radius()); k && *k < 0 && *k % 2 != 0) {
      long m = (1 - *k) / 2;
      BigRational q = make_rational(BigInt(1) << static_cast<mp_bitcnt_t>(2 * m + 1),
                                    BigInt(2 * m) * central_binomial(static_cast<unsigned long>(m)));
      out.exact = q;
      out.value = Complex(Real(q));
      out.err = 0;
    }
  }
  detail::round_result(out, ctx.precision_bits);
  return out;
}

inline EvalResult big_z(const Real& s, const PrecisionContext& ctx) { return big_z(Complex(s), ctx); }

// ---------------------------------------------------------------------------
// Derivative values

/// zeta_Z'(n) = 1 / (n C(2n, n)) for positive integers n.
inline BigRational zeta_z_deriv_at_positive_integer(long n) {
  if (n < 1) throw DomainError("zeta_z_deriv_at_positive_integer requires n >= 1");
  return BigRational(BigInt(1), BigInt(n) * central_binomial(static_cast<unsigned long>(n)));
}

/// zeta_Z'(-n) = C(2n, n) sum_{k=1}^{n} (1/k - 2/(2k-1)), n >= 0.
inline BigRational zeta_z_deriv_at_negative_integer(long n) {
  if (n < 0) throw DomainError("zeta_z_deriv_at_negative_integer requires n >= 0");
  BigRational sum(0);
  for (long k = 1; k <= n; ++k) sum += BigRational(1, k) - BigRational(2, 2 * k - 1);
  return BigRational(central_binomial(static_cast<unsigned long>(n))) * sum;
}

/// zeta_Z'(-n + 1/2) for n >= 1: (8/pi)(1 - 2 log 2) at n = 1, otherwise
/// 4^{2n}/(2 pi n) C(2n,n)^{-1} (-4 log 2 - sum_{k<n} 1/k + 2 sum_{k<=n} 1/(2k-1)).
inline HPReal zeta_z_deriv_at_negative_half_integer(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("zeta_z_deriv_at_negative_half_integer requires n >= 1");
  PrecisionScope scope(ctx.work_bits());
  Real value;
  if (n == 1) {
    value = 8 / const_pi() * (1 - 2 * const_log2());
  } else {
    BigRational harmonic(0), odd(0);
    for (long k = 1; k < n; ++k) harmonic += BigRational(1, k);
    for (long k = 1; k <= n; ++k) odd += BigRational(1, 2 * k - 1);
    Real bracket = -4 * const_log2() + Real(BigRational(2 * odd - harmonic));
    value = detail::zeta_z_negative_half_integer_value(n) * bracket;
  }
  HPReal out{value, detail::to_err(abs(value) * epsilon(ctx.precision_bits) * 8), false};
  out.value.round_to(ctx.precision_bits);
  return out;
}

/// zeta_Z'(s) = zeta_Z(s) (psi(1 - s) - psi(1/2 - s) - 2 log 2), evaluated
/// literally. Fails at the poles of either digamma.
inline EvalResult zeta_z_deriv_digamma(const Real& s, const PrecisionContext& ctx) {
  EvalResult z = zeta_z_gamma_route(Complex(s), ctx);
  PrecisionScope scope(ctx.work_bits());
  HPReal a = digamma(Real(1) / 2 - s, ctx);
  HPReal b = digamma(1 - s, ctx);
  Real bracket = b.value - a.value - 2 * const_log2();
  EvalResult out;
  out.method = Method::ClosedForm;
  out.value = Complex(z.value.re * bracket);
  out.err = detail::to_err(abs(z.value.re) * Real(a.err + b.err)) + detail::to_err(abs(bracket) * Real(z.err)) +
            detail::to_err(abs(out.value) * epsilon(ctx.precision_bits) * 4);
  detail::round_result(out, ctx.precision_bits);
  return out;
}

/// zeta_Z'(s) for real s. Lattice points use the exact special-value
/// formulas; everything else the digamma expression.
inline EvalResult zeta_z_deriv(const Real& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  if (auto k = detail::snap_half_integer(s, ctx.snap_radius())) {
    EvalResult out;
    out.method = Method::ClosedForm;
    if (*k > 0 && *k % 2 != 0) throw DomainError("zeta_Z' is undefined at the poles s = k + 1/2");
    if (*k > 0 || *k % 2 == 0) {
      BigRational q = *k > 0 ? zeta_z_deriv_at_positive_integer(*k / 2) : zeta_z_deriv_at_negative_integer(-*k / 2);
      out.value = Complex(Real(q));
      out.exact = q;
      detail::round_result(out, ctx.precision_bits);
      return out;
    }
    HPReal v = zeta_z_deriv_at_negative_half_integer((1 - *k) / 2, ctx);
    out.value = Complex(v.value);
    out.err = v.err;
    return out;
  }
  return zeta_z_deriv_digamma(s, ctx);
}

}  // namespace zetakit
