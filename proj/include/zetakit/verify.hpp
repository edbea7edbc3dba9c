#pragma once

// Property suites run by `zetakit verify` and by the test binaries.

#include <zetakit/asymptotics.hpp>
#include <zetakit/spheres.hpp>
#include <zetakit/zeta_z.hpp>
#include <zetakit/zeta_zn.hpp>

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace zetakit {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  double max_error() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.max_error);
    return m;
  }
};

struct VerifyOptions {
  /// Perturb the constant term of the m = 2 polynomial (negative test).
  bool corrupt_poly = false;
  std::uint64_t seed = 20170101;
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"numerics", "zeta-z", "zeta-zn", "spheres", "asymptotics"};
  return names;
}

namespace detail {

/// Collects the largest violation of `err <= allowed` over a check.
class Tally {
 public:
  void add(double err, double allowed) {
    max_error_ = std::max(max_error_, err);
    if (!(err <= allowed)) ok_ = false;
  }
  void add(const Real& err, double allowed) { add(to_err(err), allowed); }
  void fail(std::string why) {
    ok_ = false;
    if (detail_.empty()) detail_ = std::move(why);
  }
  CheckResult result(std::string name) const { return {std::move(name), ok_, max_error_, detail_}; }

 private:
  bool ok_ = true;
  double max_error_ = 0;
  std::string detail_;
};

inline CheckResult run_check(const std::string& name, const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  return t.result(name);
}

inline double mixed_tol(const PrecisionContext& ctx, const Real& magnitude) {
  return ctx.target_tol * std::max(1.0, abs(magnitude).to_double());
}

inline double fd_step_exponent(const PrecisionContext& ctx) { return -static_cast<double>(ctx.precision_bits) / 3; }

// ---------------------------------------------------------------------------

inline SuiteReport verify_numerics(const PrecisionContext& ctx, const VerifyOptions& opt) {
  SuiteReport rep{"numerics", {}};
  std::mt19937_64 rng(opt.seed);

  rep.checks.push_back(run_check("gamma recurrence (1000 random points)", [&](Tally& t) {
    std::uniform_real_distribution<double> re(-10, 10), im(-5, 5);
    int done = 0;
    while (done < 1000) {
      double x = re(rng), y = im(rng);
      if (std::abs(y) < 0.25 && x < 0.25 && std::abs(x - std::round(x)) < 0.25) continue;
      PrecisionScope scope(ctx.work_bits());
      Complex s{Real(x), Real(y)};
      HPComplex g1 = gamma(s + 1, ctx);
      HPComplex g0 = gamma(s, ctx);
      t.add(abs(g1.value - s * g0.value), 4 * mixed_tol(ctx, abs(g1.value)));
      ++done;
    }
  }));

  rep.checks.push_back(run_check("gamma reflection", [&](Tally& t) {
    std::uniform_real_distribution<double> re(-6, 6), im(-2, 2);
    for (int i = 0; i < 100; ++i) {
      double x = re(rng), y = im(rng);
      if (std::abs(y) < 0.1 && std::abs(x - std::round(x)) < 0.1) continue;
      PrecisionScope scope(ctx.work_bits());
      Complex z{Real(x), Real(y)};
      Complex lhs = gamma(z, ctx).value * gamma(1 - z, ctx).value;
      Complex rhs = const_pi() / sin(const_pi() * z);
      t.add(abs(lhs - rhs), mixed_tol(ctx, abs(rhs)));
    }
  }));

  rep.checks.push_back(run_check("odd Bernoulli numbers vanish", [&](Tally& t) {
    for (unsigned long k = 1; k <= 60; ++k)
      if (bernoulli(2 * k + 1) != 0) t.fail("B_" + std::to_string(2 * k + 1) + " is nonzero");
  }));

  rep.checks.push_back(run_check("digamma reflection (100-point grid)", [&](Tally& t) {
    for (int i = 0; i < 100; ++i) {
      PrecisionScope scope(ctx.work_bits());
      // z = -4.95, -4.85, ..., 4.95: never an integer.
      Real z = Real(2 * i - 99) / 20;
      Real lhs = digamma(1 - z, ctx).value;
      Real rhs = digamma(z, ctx).value + const_pi() * cot(const_pi() * z);
      t.add(abs(lhs - rhs), mixed_tol(ctx, rhs));
    }
  }));

  rep.checks.push_back(run_check("zeta trivial zeros", [&](Tally& t) {
    for (long m = 1; m <= 5; ++m) t.add(abs(riemann_zeta_numeric(Real(-2 * m), ctx).value), ctx.target_tol);
  }));
  return rep;
}

inline SuiteReport verify_zeta_z(const PrecisionContext& ctx, const VerifyOptions& opt) {
  SuiteReport rep{"zeta-z", {}};
  std::mt19937_64 rng(opt.seed + 1);

  rep.checks.push_back(run_check("route agreement (50 points in the strip)", [&](Tally& t) {
    std::uniform_real_distribution<double> re(0.02, 0.48), im(-1, 1);
    for (int i = 0; i < 50; ++i) {
      PrecisionScope scope(ctx.work_bits());
      Complex s(Real(re(rng)), Real(im(rng)));
      EvalResult c = zeta_z_closed(s, ctx);
      EvalResult p = zeta_z_product(s, ctx);
      EvalResult m = zeta_z_mellin(s, ctx);
      t.add(abs(c.value - p.value), c.err + p.err + ctx.target_tol);
      t.add(abs(c.value - m.value), c.err + m.err + ctx.target_tol);
    }
  }));

  rep.checks.push_back(run_check("Catalan numbers from zeta_Z(-m)", [&](Tally& t) {
    for (long m = 0; m <= 30; ++m)
      if (catalan_from_zeta_z(m, ctx) != BigRational(catalan(m))) t.fail("mismatch at m = " + std::to_string(m));
  }));

  rep.checks.push_back(run_check("telescoping partial products", [&](Tally& t) {
    for (long m = 0; m <= 10; ++m) {
      BigRational target(central_binomial(static_cast<unsigned long>(m)));
      BigRational prev(0);
      for (long k = 2 * m; k <= 2 * m + 40; ++k) {
        BigRational p = zeta_z_partial_product_exact(m, k);
        // (K+m)!^2 / (K! (K+2m)!) is the exact correction factor.
        BigRational corr(factorial(k + m) * factorial(k + m), factorial(k) * factorial(k + 2 * m));
        corr.canonicalize();
        if (p != target * corr) t.fail("partial product identity fails at m = " + std::to_string(m));
        if (m > 0 && !(p > prev && p < target)) t.fail("partial products not monotone at m = " + std::to_string(m));
        prev = p;
      }
    }
  }));

  rep.checks.push_back(run_check("simple zeros at positive integers", [&](Tally& t) {
    for (long n = 1; n <= 10; ++n) {
      EvalResult z = zeta_z_closed(Real(n), ctx);
      if (!z.value.re.is_zero() || !z.value.im.is_zero() || !z.zero_note) t.fail("nonzero at " + std::to_string(n));
    }
  }));

  rep.checks.push_back(run_check("derivative vs central differences", [&](Tally& t) {
    std::uniform_real_distribution<double> dist(-10, 0.4);
    for (int i = 0; i < 20; ++i) {
      PrecisionScope scope(ctx.work_bits());
      Real s(dist(rng));
      Real h = pow(Real(2), Real(fd_step_exponent(ctx)));
      Real fd = (zeta_z_closed(s + h, ctx).value.re - zeta_z_closed(s - h, ctx).value.re) / (2 * h);
      Real d = zeta_z_deriv(s, ctx).value.re;
      t.add(abs(fd - d), 1e-15 * std::max(1.0, abs(d).to_double()));
    }
  }));
  return rep;
}

inline SuiteReport verify_zeta_zn(const PrecisionContext& ctx, const VerifyOptions& opt) {
  SuiteReport rep{"zeta-zn", {}};
  std::mt19937_64 rng(opt.seed + 2);

  rep.checks.push_back(run_check("negative integers: binomial sum vs direct", [&](Tally& t) {
    for (long n = 2; n <= 20; ++n)
      for (long m = 1; m <= 12; ++m) {
        DiscreteCircle c(n);
        Real exact(zeta_zn_negative_int(c, m));
        EvalResult d = zeta_zn_direct(c, Real(-m), ctx);
        t.add(abs(d.value.re - exact), mixed_tol(ctx, exact));
      }
  }));

  rep.checks.push_back(run_check("odd sine powers: cotangent formula vs direct", [&](Tally& t) {
    for (long n = 2; n <= 50; ++n)
      for (long m = 0; m <= 8; ++m) {
        DiscreteCircle c(n);
        PrecisionScope scope(ctx.work_bits());
        Real direct = ldexp(sine_power_sum_direct(c, 2 * m + 1, ctx).value, 2 * m + 1);
        EvalResult cot = sine_odd_power_sum(c, m, ctx);
        t.add(abs(cot.value.re - direct), mixed_tol(ctx, direct));
      }
  }));

  rep.checks.push_back(run_check("closed polynomials vs direct sums", [&](Tally& t) {
    PrecisionScope scope(ctx.work_bits());
    for (long m = 1; m <= 4; ++m) {
      RationalPolynomial p = zeta_zn_closed_poly(m);
      if (opt.corrupt_poly && m == 2) {
        auto coeffs = p.coeffs();
        coeffs[0] += make_rational(22, 720);
        p = RationalPolynomial(coeffs);
      }
      for (long n = 2; n <= 12; ++n) {
        Real poly(p(n));
        Real direct = zeta_zn_direct(DiscreteCircle(n), Real(m), ctx).value.re;
        t.add(abs(poly - direct) / max(Real(1), abs(direct)), epsilon(ctx.precision_bits / 2).to_double());
      }
    }
  }));

  rep.checks.push_back(run_check("folded and unfolded sums agree", [&](Tally& t) {
    std::uniform_real_distribution<double> dist(-6, 6);
    for (int i = 0; i < 40; ++i) {
      long n = 2 + i;
      Real s(dist(rng));
      EvalResult a = zeta_zn_direct(DiscreteCircle(n), s, ctx, true);
      EvalResult b = zeta_zn_direct(DiscreteCircle(n), s, ctx, false);
      t.add(abs(a.value.re - b.value.re), a.err + b.err);
    }
  }));

  rep.checks.push_back(run_check("positivity", [&](Tally& t) {
    std::uniform_real_distribution<double> dist(-10, 10);
    for (int i = 0; i < 100; ++i) {
      long n = 2 + i % 30;
      EvalResult a = zeta_zn_direct(DiscreteCircle(n), Real(dist(rng)), ctx);
      if (a.value.re.sign() <= 0) t.fail("nonpositive value at n = " + std::to_string(n));
    }
  }));
  return rep;
}

inline SuiteReport verify_spheres(const PrecisionContext& ctx, const VerifyOptions&) {
  SuiteReport rep{"spheres", {}};

  rep.checks.push_back(run_check("Z-product volumes vs Gamma volumes", [&](Tally& t) {
    for (long n = 1; n <= 50; ++n) {
      EvalResult a = sphere_volume_zproduct(n, ctx);
      EvalResult b = sphere_volume_gamma(n, ctx);
      t.add(abs(a.value.re - b.value.re), mixed_tol(ctx, b.value.re));
    }
  }));

  rep.checks.push_back(run_check("telescoping volume ratios", [&](Tally& t) {
    PrecisionScope scope(ctx.work_bits());
    Real prod = sphere_volume_gamma(0, ctx).value.re;
    for (long n = 1; n <= 30; ++n) {
      SphereRatio r = sphere_ratio(n, ctx);
      if (!r.agrees) t.fail("ratio and Z value disagree at n = " + std::to_string(n));
      prod *= r.gamma_ratio.value.re;
      Real v = sphere_volume_gamma(n, ctx).value.re;
      t.add(abs(prod - v), mixed_tol(ctx, v));
    }
  }));

  rep.checks.push_back(run_check("Catalan binomial, product and zeta_Z forms", [&](Tally& t) {
    for (long m = 0; m <= 30; ++m) {
      BigRational a(catalan(m));
      if (a != catalan_product_form(m) || a != catalan_from_zeta_z(m, ctx))
        t.fail("Catalan forms disagree at m = " + std::to_string(m));
    }
  }));

  rep.checks.push_back(run_check("volumes peak at n = 6 and decay", [&](Tally& t) {
    std::vector<Real> v;
    for (long n = 0; n <= 20; ++n) v.push_back(sphere_volume_gamma(n, ctx).value.re);
    for (long n = 1; n <= 20; ++n) {
      bool rising = v[n] > v[n - 1];
      if (rising != (n <= 6)) t.fail("sequence is not unimodal with peak at 6 (n = " + std::to_string(n) + ")");
    }
    if (!(v[20] < Real(1))) t.fail("vol(S^20) is not small");
  }));
  return rep;
}

inline SuiteReport verify_asymptotics(const PrecisionContext& ctx, const VerifyOptions&) {
  SuiteReport rep{"asymptotics", {}};

  rep.checks.push_back(run_check("expansion exact at s = 0", [&](Tally& t) {
    auto terms = expansion_terms(Complex(0), ctx);
    for (long n = 2; n <= 200; n += 7) {
      Complex v = evaluate_expansion(terms, n);
      t.add(abs(v - Complex(Real(n - 1))), ctx.target_tol);
    }
  }));

  rep.checks.push_back(run_check("remainder decays like n^-3 at s = -1", [&](Tally& t) {
    PrecisionScope scope(ctx.work_bits());
    std::vector<long> grid = detail::log_spaced_grid(100, 10000, 8);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (long n : grid) {
      double x = std::log(static_cast<double>(n));
      double y = std::log(abs(extraction_residual(Real(-1), n, ctx)).to_double());
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double k = static_cast<double>(grid.size());
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    t.add(std::abs(slope + 3), 0.2);
  }));

  rep.checks.push_back(run_check("Euler values vanish at even m", [&](Tally& t) {
    for (long k = 1; k <= 10; ++k)
      if (euler_zeta_negative(2 * k) != 0) t.fail("zeta(-" + std::to_string(2 * k) + ") nonzero");
  }));

  rep.checks.push_back(run_check("functional equation vs Euler-Maclaurin", [&](Tally& t) {
    for (long m = 1; m <= 6; ++m) {
      Real a = zeta_even_from_functional_eq(m, ctx).value.re;
      Real b = riemann_zeta_numeric(Real(2 * m), ctx).value;
      t.add(abs(a - b), 1e-20);
    }
  }));

  rep.checks.push_back(run_check("zeta_{Z/nZ}(1), (2) from the expansion", [&](Tally& t) {
    for (long n = 2; n <= 30; ++n)
      for (long m = 1; m <= 2; ++m) {
        EvalResult a = zeta_zn_positive_from_asymptotics(n, m, ctx);
        EvalResult d = zeta_zn_direct(DiscreteCircle(n), Real(m), ctx);
        t.add(abs(a.value.re - d.value.re), mixed_tol(ctx, d.value.re));
        if (*a.exact != zeta_zn_closed_poly(m)(n)) t.fail("exact assembly disagrees with P_m at n = " + std::to_string(n));
      }
  }));
  return rep;
}

}  // namespace detail

inline SuiteReport run_verify_suite(const std::string& suite, const PrecisionContext& ctx,
                                    const VerifyOptions& opt = {}) {
  if (suite == "numerics") return detail::verify_numerics(ctx, opt);
  if (suite == "zeta-z") return detail::verify_zeta_z(ctx, opt);
  if (suite == "zeta-zn") return detail::verify_zeta_zn(ctx, opt);
  if (suite == "spheres") return detail::verify_spheres(ctx, opt);
  if (suite == "asymptotics") return detail::verify_asymptotics(ctx, opt);
  throw DomainError("unknown verify suite '" + suite + "'");
}

/// Runs one suite, or every suite for "all".
inline std::vector<SuiteReport> run_verify(const std::string& suite, const PrecisionContext& ctx,
                                           const VerifyOptions& opt = {}) {
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& name : verify_suite_names()) out.push_back(run_verify_suite(name, ctx, opt));
  } else {
    out.push_back(run_verify_suite(suite, ctx, opt));
  }
  return out;
}

}  // namespace zetakit
