#pragma once

#include <zetakit/types.hpp>

#include <cmath>

namespace zetakit {

struct QuadratureResult {
  Complex value;
  double err = 0;
  long evaluations = 0;
  int levels = 0;
};

/// Tanh-sinh (double exponential) quadrature of f over [a, b].
///
/// The integrand is called as f(t, da, db) where da = t - a and db = b - t are
/// computed without cancellation, so endpoint singularities such as t^{s-1}
/// at t = a can be evaluated accurately. The error estimate is the difference
/// between the last two levels, which overstates the true error once the
/// rule has entered its quadratic convergence regime.
template <class F>
QuadratureResult tanh_sinh(F&& f, const Real& a, const Real& b, double tol, const PrecisionContext& ctx,
                           int max_level = 12) {
  const Real width = b - a;
  const Real half_pi = const_pi() / 2;
  const Real negligible = Real(tol) * Real(1e-6);
  QuadratureResult out;

  auto node = [&](const Real& u) -> Complex {
    Real v = half_pi * sinh(u);
    Real c = cosh(v);
    Real w = width / 2 * half_pi * cosh(u) / (c * c);
    Real da, db;
    if (u.sign() >= 0) {
      db = width / (1 + exp(2 * v));
      da = width - db;
    } else {
      da = width / (1 + exp(-2 * v));
      db = width - da;
    }
    ++out.evaluations;
    return f(a + da, da, db) * w;
  };

  // Sum one side of the rule starting at u = start, stepping by `step`,
  // until terms are negligible.
  auto side = [&](const Real& start, const Real& step) -> Complex {
    Complex acc(0);
    Real u = start;
    int small_run = 0;
    for (long i = 0; i < ctx.max_terms; ++i) {
      Complex term = node(u);
      acc += term;
      if (abs(term) < negligible) {
        if (++small_run >= 2) break;
      } else {
        small_run = 0;
      }
      if (u > Real(12) || u < Real(-12)) break;
      u += step;
    }
    return acc;
  };

  Real h = 1;
  Complex sum = node(Real(0)) + side(Real(1), Real(1)) + side(Real(-1), Real(-1));
  Complex estimate = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    Complex odd = side(h, 2 * h) + side(-h, -2 * h);
    sum += odd;
    Complex next = sum * h;
    Real diff = abs(next - estimate);
    estimate = std::move(next);
    out.levels = level;
    out.err = detail::to_err(diff);
    if (level >= 3 && out.err < tol) break;
  }
  out.value = std::move(estimate);
  out.err += detail::to_err(abs(out.value) * epsilon(ctx.precision_bits) * 8);
  return out;
}

}  // namespace zetakit
