#pragma once

// Large-n behaviour of sine-power sums and the Riemann zeta values it
// encodes:
//
//   sum_{k=1}^{n-1} sin^{-s}(k pi / n)
//     = pi^{-1/2} Gamma(1/2 - s/2) / Gamma(1 - s/2) n
//       + 2 pi^{-s} zeta(s) n^s + (s/3) pi^{2-s} zeta(s-2) n^{s-2} + ...

#include <zetakit/zeta_z.hpp>
#include <zetakit/zeta_zn.hpp>

#include <array>
#include <cmath>
#include <vector>

namespace zetakit {

enum class TermTag { Leading, ZetaS, ZetaSMinus2, Higher };

inline const char* term_tag_name(TermTag t) {
  switch (t) {
    case TermTag::Leading: return "leading";
    case TermTag::ZetaS: return "zeta(s)";
    case TermTag::ZetaSMinus2: return "zeta(s-2)";
    case TermTag::Higher: return "higher";
  }
  return "unknown";
}

struct ExpansionTerm {
  Complex coefficient;
  Complex power_of_n;
  TermTag tag = TermTag::Leading;
  double err = 0;
};

/// The three displayed terms of the expansion at s.
inline std::vector<ExpansionTerm> expansion_terms(const Complex& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  Real radius = ctx.snap_radius();
  std::optional<long> integer_s;
  if (detail::near_real(s, radius)) integer_s = detail::snap_integer(s.re, radius);
  if (integer_s && (*integer_s == 1 || *integer_s == 3))
    throw PoleError("expansion has a pole at s = " + std::to_string(*integer_s));

  std::vector<ExpansionTerm> terms;
  const Real pi = const_pi();

  ExpansionTerm lead;
  lead.tag = TermTag::Leading;
  lead.power_of_n = Complex(1);
  if (integer_s && *integer_s > 0 && *integer_s % 2 == 1) {
    throw PoleError("leading coefficient has a pole at s = " + std::to_string(*integer_s));
  } else if (integer_s && *integer_s > 0 && *integer_s % 2 == 0) {
    lead.coefficient = Complex(0);  // 1/Gamma(1 - s/2) vanishes
  } else {
    HPComplex num = gamma(Complex(Real(1) / 2) - s / 2, ctx);
    HPComplex den = gamma(1 - s / 2, ctx);
    lead.coefficient = num.value / den.value / sqrt(pi);
    lead.err = detail::to_err(abs(lead.coefficient) * Real(detail::rel(num) + detail::rel(den)));
  }
  terms.push_back(std::move(lead));

  auto pi_pow = [&](const Complex& e) { return s.is_real() ? Complex(pow(pi, e.re)) : exp(e * log(pi)); };

  ExpansionTerm second;
  second.tag = TermTag::ZetaS;
  second.power_of_n = s;
  HPComplex z1 = riemann_zeta_numeric(s, ctx);
  Complex f1 = 2 * pi_pow(-s);
  second.coefficient = f1 * z1.value;
  second.err = detail::to_err(abs(f1) * Real(z1.err));
  terms.push_back(std::move(second));

  ExpansionTerm third;
  third.tag = TermTag::ZetaSMinus2;
  third.power_of_n = s - 2;
  if (integer_s && *integer_s == 0) {
    third.coefficient = Complex(0);
  } else {
    HPComplex z2 = riemann_zeta_numeric(s - 2, ctx);
    Complex f2 = s / 3 * pi_pow(2 - s);
    third.coefficient = f2 * z2.value;
    third.err = detail::to_err(abs(f2) * Real(z2.err));
  }
  terms.push_back(std::move(third));
  return terms;
}

inline Complex evaluate_expansion(const std::vector<ExpansionTerm>& terms, long n) {
  PrecisionScope scope(working_bits());
  Real big_n(n);
  Real log_n = log(big_n);
  Complex sum(0);
  for (const auto& t : terms) {
    if (t.coefficient.re.is_zero() && t.coefficient.im.is_zero()) continue;
    sum += t.coefficient * exp(t.power_of_n * log_n);
  }
  return sum;
}

/// Taylor coefficients a_0..a_order of (x / sin x)^p in powers of x^2, for
/// integer p >= 0. a_1 = p/6 reproduces the (s/3) coefficient of the third
/// displayed term; a_j multiplies 2 pi^{2j-s} zeta(s-2j) n^{s-2j} in general.
inline std::vector<BigRational> csc_power_taylor(long p, long order) {
  if (p < 0 || order < 0) throw DomainError("csc_power_taylor requires p >= 0 and order >= 0");
  // x / sin x = sum (-1)^{k+1} (2^{2k} - 2) B_{2k} / (2k)! x^{2k}
  std::vector<BigRational> base(order + 1);
  for (long k = 0; k <= order; ++k) {
    BigInt pow4 = BigInt(1) << static_cast<mp_bitcnt_t>(2 * k);
    BigRational c = BigRational(pow4 - 2) * bernoulli(2 * k) / BigRational(factorial(2 * k));
    base[k] = (k % 2 == 1) ? c : BigRational(-c);
  }
  std::vector<BigRational> result(order + 1, BigRational(0));
  result[0] = 1;
  for (long r = 0; r < p; ++r) {
    std::vector<BigRational> next(order + 1, BigRational(0));
    for (long i = 0; i <= order; ++i)
      for (long j = 0; i + j <= order; ++j) next[i + j] += result[i] * base[j];
    result = std::move(next);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Euler's values and the functional equation

/// zeta(-m) = (-1)^m B_{m+1} / (m+1) for m >= 1.
inline BigRational euler_zeta_negative(long m) {
  if (m < 1) throw DomainError("euler_zeta_negative requires m >= 1");
  BigRational v = bernoulli(static_cast<unsigned long>(m + 1)) / BigRational(m + 1);
  return m % 2 == 0 ? v : BigRational(-v);
}

/// zeta(2m) from zeta(1 - 2m) through the functional equation
/// zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s). At s = 2m the
/// product sin(pi s/2) Gamma(1-s) is a removable singularity; with
/// Gamma(1-s) = pi / (sin(pi s) Gamma(s)) it equals pi / (2 cos(pi s/2) Gamma(s)),
/// so zeta(2m) = (2 pi)^{2m} / (2 (-1)^m (2m-1)!) zeta(1-2m).
inline EvalResult zeta_even_from_functional_eq(long m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("zeta_even_from_functional_eq requires m >= 1");
  PrecisionScope scope(ctx.work_bits());
  BigRational reflected = euler_zeta_negative(2 * m - 1);
  BigRational factor = reflected / BigRational(2 * factorial(static_cast<unsigned long>(2 * m - 1)));
  if (m % 2 == 1) factor = -factor;
  EvalResult out;
  out.method = Method::FunctionalEquation;
  out.value = Complex(Real(factor) * pow(2 * const_pi(), 2 * m));
  out.err = detail::to_err(abs(out.value.re) * epsilon(ctx.precision_bits) * 4);
  out.value.re.round_to(ctx.precision_bits);
  return out;
}

/// zeta(2k) / pi^{2k} = (-1)^{k+1} B_{2k} 2^{2k-1} / (2k)! for k >= 1, and
/// zeta(0) = -1/2 for k = 0.
inline BigRational zeta_even_over_pi_power(long k) {
  if (k == 0) return BigRational(-1, 2);
  BigRational v = bernoulli(static_cast<unsigned long>(2 * k)) *
                  BigRational(BigInt(1) << static_cast<mp_bitcnt_t>(2 * k - 1)) /
                  BigRational(factorial(static_cast<unsigned long>(2 * k)));
  return k % 2 == 1 ? v : BigRational(-v);
}

// ---------------------------------------------------------------------------
// Cotangent route

inline constexpr long kCotOrderCap = 12;

/// Coefficients c_i (i = 0..order-1) of
///   sum_{k=1}^{n-1} sin^{2m+1}(k pi / n) = sum_i c_i x^{2i-1},  x = pi / 2n,
/// from the cotangent-sum identity and cot z = sum (-1)^i 4^i B_{2i} / (2i)! z^{2i-1}.
inline std::vector<BigRational> cot_expansion_route(long m, long order) {
  if (m < 0) throw DomainError("cot_expansion_route requires m >= 0");
  if (order < 1 || order > kCotOrderCap)
    throw DomainError("cot_expansion_route order must be in 1.." + std::to_string(kCotOrderCap));
  std::vector<BigRational> coeffs(order, BigRational(0));
  const BigRational scale(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(2 * m));
  for (long i = 0; i < order; ++i) {
    BigRational cot_coef = bernoulli(static_cast<unsigned long>(2 * i)) *
                           BigRational(BigInt(1) << static_cast<mp_bitcnt_t>(2 * i)) /
                           BigRational(factorial(static_cast<unsigned long>(2 * i)));
    if (i % 2 == 1) cot_coef = -cot_coef;
    BigRational acc(0);
    for (long j = 0; j <= m; ++j) {
      long r = 2 * m + 1 - 2 * j;
      BigRational rp(1);
      // r^{2i-1}
      if (2 * i - 1 >= 0) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(2 * i - 1));
        rp = BigRational(p);
      } else {
        rp = BigRational(1, r);
      }
      BigRational t = BigRational(binomial(static_cast<unsigned long>(2 * m + 1), static_cast<unsigned long>(j))) * rp;
      acc += ((m - j) % 2 == 0) ? t : BigRational(-t);
    }
    coeffs[i] = scale * cot_coef * acc;
  }
  return coeffs;
}

/// zeta(-2m-1) read off the cotangent route: matching the n^{-2m-1}
/// coefficient against 2 pi^{2m+1} zeta(-2m-1) gives c_{m+1} / 2^{2m+2}.
inline BigRational zeta_negative_odd_from_cot(long m) {
  auto c = cot_expansion_route(m, m + 2);
  return c[m + 1] / BigRational(BigInt(1) << static_cast<mp_bitcnt_t>(2 * m + 2));
}

// ---------------------------------------------------------------------------
// Numerical extraction

struct ZetaExtraction {
  Real s;
  Real estimate;
  Real reference;
  Real abs_error;
  std::vector<long> n_grid;
  /// Largest scaled fit residual |D(n) n^{-s} - (c1 + c2 n^{-2})|.
  Real max_residual;
};

namespace detail {

inline std::vector<long> log_spaced_grid(long n_min, long n_max, int points) {
  std::vector<long> grid;
  double lo = std::log(static_cast<double>(n_min)), hi = std::log(static_cast<double>(n_max));
  for (int i = 0; i < points; ++i) {
    long n = std::lround(std::exp(lo + (hi - lo) * i / (points - 1)));
    if (grid.empty() || n > grid.back()) grid.push_back(n);
  }
  return grid;
}

/// D(n) = sum_{k=1}^{n-1} sin^{-s}(k pi/n) - (leading coefficient) n.
inline Real expansion_defect(const Real& s, long n, const Real& leading) {
  Real minus_s = -s;
  Real sum = 0;
  for (long k = 1; 2 * k < n; ++k) sum += 2 * pow(sin_pi_fraction(k, n), minus_s);
  if (n % 2 == 0) sum += 1;
  return sum - leading * n;
}

inline Real reference_zeta(const Real& s, const PrecisionContext& ctx) {
  if (auto k = snap_integer(s, ctx.snap_radius())) {
    if (*k == 0) return Real(BigRational(-1, 2));
    if (*k < 0) return Real(euler_zeta_negative(-*k));
  }
  return riemann_zeta_numeric(s, ctx).value;
}

}  // namespace detail

inline constexpr long kExtractDefaultNMin = 100;
inline constexpr long kExtractDefaultNMax = 10000;
inline constexpr int kExtractDefaultPoints = 16;

/// Estimates zeta(s), s <= 0, by fitting D(n) = c1 n^s + c2 n^{s-2} over a
/// log-spaced grid (least squares on the rows scaled by n^{-s}) and returning
/// c1 / (2 pi^{-s}).
inline ZetaExtraction extract_zeta(const Real& s, long n_min, long n_max, const PrecisionContext& ctx,
                                   int points = kExtractDefaultPoints) {
  if (s > 0) throw DomainError("extract_zeta requires s <= 0");
  if (n_min < 4 || n_max <= n_min) throw DomainError("extract_zeta requires n_max > n_min >= 4");
  if (points < 3) throw DomainError("extract_zeta needs at least 3 grid points");
  PrecisionScope scope(ctx.work_bits());
  const Real pi = const_pi();

  auto terms = expansion_terms(Complex(s), ctx);
  const Real leading = terms[0].coefficient.re;

  ZetaExtraction out;
  out.s = s;
  out.n_grid = detail::log_spaced_grid(n_min, n_max, points);
  if (out.n_grid.size() < 3) throw IllConditioned("n grid has fewer than 3 distinct points");

  // Normal equations for y = c1 + c2 u, u = n^{-2}.
  Real s00 = 0, s01 = 0, s11 = 0, b0 = 0, b1 = 0;
  std::vector<std::array<Real, 2>> rows;
  for (long n : out.n_grid) {
    Real y = detail::expansion_defect(s, n, leading) * pow(Real(n), -s);
    Real u = 1 / (Real(n) * n);
    s00 += 1;
    s01 += u;
    s11 += u * u;
    b0 += y;
    b1 += u * y;
    rows.push_back({std::move(y), std::move(u)});
  }
  Real det = s00 * s11 - s01 * s01;
  if (det <= epsilon(ctx.precision_bits / 2) * s00 * s11) throw IllConditioned("least-squares system is singular");
  Real c1 = (b0 * s11 - b1 * s01) / det;
  Real c2 = (s00 * b1 - s01 * b0) / det;

  Real max_res = 0, scale = abs(c1);
  for (auto& [y, u] : rows) max_res = max(max_res, abs(y - c1 - c2 * u));
  out.max_residual = max_res;
  if (max_res > Real(1e-6) * max(scale, Real(1e-30)) && max_res > Real(ctx.target_tol))
    throw IllConditioned("fit residual " + max_res.to_string(6) + " exceeds tolerance");

  out.estimate = c1 / (2 * pow(pi, -s));
  out.reference = detail::reference_zeta(s, ctx);
  out.abs_error = abs(out.estimate - out.reference);
  return out;
}

/// D(n) - 2 pi^{-s} zeta(s) n^s: what remains after the two leading terms.
inline Real extraction_residual(const Real& s, long n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  auto terms = expansion_terms(Complex(s), ctx);
  Real d = detail::expansion_defect(s, n, terms[0].coefficient.re);
  return d - terms[1].coefficient.re * pow(Real(n), s);
}

// ---------------------------------------------------------------------------
// zeta_{Z/nZ}(m) from the expansion

/// zeta_{Z/nZ}(m) for m in {1, 2} assembled from the expansion at s = 2m,
/// where it terminates because zeta vanishes at the negative even integers.
/// The value is summed from the numeric terms; `exact` holds the same
/// assembly done with the rational values zeta(2k)/pi^{2k}.
inline EvalResult zeta_zn_positive_from_asymptotics(long n, long m, const PrecisionContext& ctx) {
  if (m < 1 || m > 2) throw DomainError("zeta_zn_positive_from_asymptotics supports m in {1, 2}");
  DiscreteCircle circle(n);
  PrecisionScope scope(ctx.work_bits());
  const long s = 2 * m;
  const Real pi = const_pi();

  auto terms = expansion_terms(Complex(Real(s)), ctx);
  const auto taylor = csc_power_taylor(s, m);
  // For m = 2 the n^0 term is the next one after the displayed three:
  // 2 pi^{4-s} a_2(s) zeta(s-4) n^{s-4}.
  if (m == 2) {
    ExpansionTerm next;
    next.tag = TermTag::Higher;
    next.power_of_n = Complex(Real(s - 4));
    HPComplex z = riemann_zeta_numeric(Complex(Real(s - 4)), ctx);
    next.coefficient = Complex(2 * Real(taylor[2]) * pow(pi, 4 - s) * z.value.re);
    terms.push_back(std::move(next));
  }
  Complex total = evaluate_expansion(terms, circle.n());

  BigRational exact(0);
  for (long j = 0; j <= m; ++j) {
    BigInt npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s - 2 * j));
    exact += 2 * taylor[j] * zeta_even_over_pi_power(m - j) * BigRational(npow);
  }
  BigRational scale(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(2 * m));
  exact *= scale;

  EvalResult out;
  out.method = Method::Asymptotic;
  out.value = Complex(total.re * Real(scale));
  out.exact = exact;
  double err = 0;
  for (const auto& t : terms) err += t.err * std::pow(static_cast<double>(n), static_cast<double>(s));
  out.err = err + detail::to_err(abs(out.value.re) * epsilon(ctx.precision_bits) * 8);
  out.value.re.round_to(ctx.precision_bits);
  return out;
}

}  // namespace zetakit
