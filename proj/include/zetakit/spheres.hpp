#pragma once

#include <zetakit/asymptotics.hpp>
#include <zetakit/zeta_z.hpp>

namespace zetakit {

enum class VolumeRoute { GammaClosedForm, ZProduct };

struct SphereVolume {
  long n = 0;
  EvalResult value;
  VolumeRoute route = VolumeRoute::GammaClosedForm;
};

/// vol(S^n) = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
inline EvalResult sphere_volume_gamma(long n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("sphere dimension must be nonnegative");
  PrecisionScope scope(ctx.work_bits());
  Real half = Real(n + 1) / 2;
  HPReal g = gamma(half, ctx);
  EvalResult out;
  out.method = Method::ClosedForm;
  out.value = Complex(2 * pow(const_pi(), half) / g.value);
  out.err = detail::to_err(abs(out.value.re) * (Real(g.err) / abs(g.value) + epsilon(ctx.precision_bits) * 4));
  out.certified = true;
  detail::round_result(out, ctx.precision_bits);
  return out;
}

/// vol(S^n) = 2 Z(0) Z(-1) ... Z(-n+1); the empty product gives vol(S^0) = 2.
inline EvalResult sphere_volume_zproduct(long n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("sphere dimension must be nonnegative");
  PrecisionScope scope(ctx.work_bits());
  Real prod = 2;
  Real rel = 0;
  for (long j = 0; j < n; ++j) {
    EvalResult z = big_z(Real(-j), ctx);
    prod *= z.value.re;
    rel += Real(z.err) / abs(z.value.re);
  }
  EvalResult out;
  out.method = Method::Product;
  out.value = Complex(prod);
  out.err = detail::to_err(abs(prod) * (rel + epsilon(ctx.precision_bits) * (n + 1)));
  out.certified = true;
  detail::round_result(out, ctx.precision_bits);
  return out;
}

inline SphereVolume sphere_volume(long n, VolumeRoute route, const PrecisionContext& ctx) {
  SphereVolume v;
  v.n = n;
  v.route = route;
  v.value = route == VolumeRoute::GammaClosedForm ? sphere_volume_gamma(n, ctx) : sphere_volume_zproduct(n, ctx);
  return v;
}

struct SphereRatio {
  long n = 0;
  EvalResult gamma_ratio;
  EvalResult z_value;
  bool agrees = false;
};

/// vol(S^n) / vol(S^{n-1}) by the Gamma route next to Z(-n+1).
inline SphereRatio sphere_ratio(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("sphere_ratio requires n >= 1");
  PrecisionScope scope(ctx.work_bits());
  EvalResult hi = sphere_volume_gamma(n, ctx);
  EvalResult lo = sphere_volume_gamma(n - 1, ctx);
  SphereRatio out;
  out.n = n;
  out.gamma_ratio.method = Method::ClosedForm;
  out.gamma_ratio.value = Complex(hi.value.re / lo.value.re);
  out.gamma_ratio.err =
      detail::to_err(abs(out.gamma_ratio.value.re) * Real(hi.err / hi.value.re.to_double() + lo.err / lo.value.re.to_double())) +
      detail::to_err(abs(out.gamma_ratio.value.re) * epsilon(ctx.precision_bits) * 4);
  out.z_value = big_z(Real(1 - n), ctx);
  Real diff = abs(out.gamma_ratio.value.re - out.z_value.value.re);
  out.agrees = diff.to_double() <= out.gamma_ratio.err + out.z_value.err + ctx.target_tol;
  return out;
}

// ---------------------------------------------------------------------------
// Catalan numbers

inline BigInt catalan(long m) {
  if (m < 0) throw DomainError("catalan requires m >= 0");
  return central_binomial(static_cast<unsigned long>(m)) / BigInt(m + 1);
}

/// C_m = prod_{k=2}^{m} (m+k)/k, in exact rationals.
inline BigRational catalan_product_form(long m) {
  if (m < 0) throw DomainError("catalan requires m >= 0");
  BigRational p(1);
  for (long k = 2; k <= m; ++k) p *= make_rational(m + k, k);
  p.canonicalize();
  return p;
}

/// C_m = zeta_Z(-m) / (m + 1), through the exact path of the closed form.
inline BigRational catalan_from_zeta_z(long m, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("catalan requires m >= 0");
  EvalResult z = zeta_z_closed(Real(-m), ctx);
  if (!z.exact) throw NumericalError("closed form did not take the exact path at s = " + std::to_string(-m));
  return *z.exact / BigRational(m + 1);
}

// ---------------------------------------------------------------------------
// Minkowski / Siegel products

enum class Group { SL, Sp };

inline const char* group_name(Group g) { return g == Group::SL ? "SL" : "Sp"; }

/// zeta(2) zeta(3) ... zeta(n) for SL, zeta(2) zeta(4) ... zeta(2n) for Sp.
/// No measure normalisation is applied.
inline EvalResult arithmetic_volume_demo(Group group, long n, const PrecisionContext& ctx) {
  if (group == Group::SL && n < 2) throw DomainError("SL demo requires n >= 2");
  if (group == Group::Sp && n < 1) throw DomainError("Sp demo requires n >= 1");
  PrecisionScope scope(ctx.work_bits());
  std::vector<long> args;
  if (group == Group::SL)
    for (long k = 2; k <= n; ++k) args.push_back(k);
  else
    for (long k = 1; k <= n; ++k) args.push_back(2 * k);

  Real prod = 1, rel = 0;
  for (long a : args) {
    if (a % 2 == 0) {
      EvalResult z = zeta_even_from_functional_eq(a / 2, ctx);
      prod *= z.value.re;
      rel += Real(z.err) / z.value.re;
    } else {
      HPReal z = riemann_zeta_numeric(Real(a), ctx);
      prod *= z.value;
      rel += Real(z.err) / z.value;
    }
  }
  EvalResult out;
  out.method = Method::Product;
  out.value = Complex(prod);
  out.err = detail::to_err(prod * (rel + epsilon(ctx.precision_bits) * static_cast<long>(args.size() + 1)));
  detail::round_result(out, ctx.precision_bits);
  return out;
}

}  // namespace zetakit
