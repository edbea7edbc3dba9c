// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <zetakit/verify.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace zetakit;

namespace {

// Tolerances and time limits, fixed here rather than read from anywhere.
constexpr double kSpecialTol = 1e-25;
constexpr double kRouteTol = 1e-10;
constexpr double kVolumeTol = 1e-20;
constexpr double kPrintedTol = 1e-70;
constexpr double kDerivTol = 1e-25;
constexpr double kFiniteDiffTol = 1e-15;
constexpr double kNegIntTol = 1e-25;
constexpr double kSineTol = 1e-20;
constexpr double kZeta0Tol = 1e-6;
constexpr double kZetaM1Tol = 1e-5;
constexpr double kZetaM3Tol = 1e-4;
constexpr double kBridgeTol = 1e-20;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

double absdiff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.ok = false;
    o.note << " (over time limit " << limit_s << " s)";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-44s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.note.str().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const PrecisionContext ctx(256, 1e-30);

  criterion(1, "special values of zeta_Z", 5, [&](Outcome& o) {
    EvalResult z0 = zeta_z_closed(Real(0), ctx);
    o.require(z0.exact && *z0.exact == 1, "zeta_Z(0) = 1");
    PrecisionScope scope(ctx.work_bits());
    for (long n = 1; n <= 30; ++n) {
      BigInt c = central_binomial(n);
      EvalResult e = zeta_z_closed(Real(-n), ctx);
      o.require(e.exact && *e.exact == BigRational(c), "exact zeta_Z(-" + std::to_string(n) + ")");
      EvalResult g = zeta_z_gamma_route(Complex(Real(-n)), ctx);
      o.require(absdiff(g.value.re, Real(c)) < kSpecialTol, "Gamma route at -" + std::to_string(n));
    }
    for (long n = 1; n <= 10; ++n) {
      Real expect = pow(Real(4), 2 * n) / (2 * const_pi() * n) / Real(central_binomial(n));
      EvalResult h = zeta_z_closed(Real(-n) + Real(1) / 2, ctx);
      o.require(absdiff(h.value.re, expect) < kSpecialTol, "half-integer n=" + std::to_string(n));
    }
  });

  criterion(2, "closed form, product and Mellin agree", 60, [&](Outcome& o) {
    PrecisionScope scope(ctx.work_bits());
    double worst = 0;
    for (long k = 1; k <= 25; ++k) {
      Real s = Real(k) / 52;
      EvalResult c = zeta_z_closed(s, ctx);
      EvalResult p = zeta_z_product(s, ctx);
      EvalResult q = zeta_z_mellin(s, ctx);
      double cp = absdiff(c.value.re, p.value.re), cq = absdiff(c.value.re, q.value.re),
             pq = absdiff(p.value.re, q.value.re);
      worst = std::max({worst, cp, cq, pq});
      std::string at = " at s=" + std::to_string(k) + "/52";
      o.require(p.certified, "product tail certified" + at);
      o.require(cp <= c.err + p.err && cp <= kRouteTol, "closed vs product" + at);
      o.require(cq <= c.err + q.err && cq <= kRouteTol, "closed vs Mellin" + at);
      o.require(pq <= p.err + q.err && pq <= kRouteTol, "product vs Mellin" + at);
    }
    o.note << "max pairwise " << worst << " ";
  });

  criterion(3, "sphere volumes by both routes", 5, [&](Outcome& o) {
    PrecisionScope scope(ctx.work_bits());
    for (long n = 1; n <= 50; ++n)
      o.require(absdiff(sphere_volume_zproduct(n, ctx).value.re, sphere_volume_gamma(n, ctx).value.re) < kVolumeTol,
                "n=" + std::to_string(n));
    Real pi = const_pi();
    Real first[] = {Real(2), 2 * pi, 4 * pi, 2 * pi * pi};
    for (long n = 0; n < 4; ++n)
      o.require(absdiff(sphere_volume_zproduct(n, ctx).value.re, first[n]) < kPrintedTol,
                "printed value n=" + std::to_string(n));
  });

  criterion(4, "derivative values and finite differences", 10, [&](Outcome& o) {
    PrecisionScope scope(ctx.work_bits());
    o.require(abs(zeta_z_deriv(Real(0), ctx).value.re).to_double() < kDerivTol, "zeta_Z'(0)");
    Real half = 8 / const_pi() * (1 - 2 * const_log2());
    o.require(absdiff(zeta_z_deriv(Real(-1) / 2, ctx).value.re, half) < kDerivTol, "zeta_Z'(-1/2)");
    for (long n = 1; n <= 10; ++n) {
      Real expect = Real(1) / (Real(n) * Real(central_binomial(n)));
      o.require(absdiff(zeta_z_deriv(Real(n), ctx).value.re, expect) < kDerivTol, "zeta_Z'(" + std::to_string(n) + ")");
    }
    // every formula path against a central difference of zeta_Z
    Real h("1e-20");
    std::vector<Real> points;
    for (long n = 0; n <= 6; ++n) points.push_back(Real(n));
    for (long n = 1; n <= 6; ++n) points.push_back(Real(-n));
    for (long n = 1; n <= 6; ++n) points.push_back(Real(-n) + Real(1) / 2);
    for (const char* s : {"0.25", "-2.3", "1.3", "4.9", "-5.75"}) points.push_back(Real(s));
    double worst = 0;
    for (const Real& s : points) {
      Real fd = (zeta_z_closed(s + h, ctx).value.re - zeta_z_closed(s - h, ctx).value.re) / (2 * h);
      Real d = zeta_z_deriv(s, ctx).value.re;
      double e = absdiff(fd, d) / std::max(1.0, std::fabs(d.to_double()));
      worst = std::max(worst, e);
      o.require(e < kFiniteDiffTol, "finite difference at s=" + s.to_string(6));
    }
    o.note << "max fd gap " << worst << " ";
  });

  criterion(5, "zeta_{Z/nZ} at negative integers", 30, [&](Outcome& o) {
    PrecisionScope scope(ctx.work_bits());
    for (long n = 2; n <= 20; ++n)
      for (long m = 1; m <= 12; ++m) {
        DiscreteCircle c(n);
        BigRational exact = zeta_zn_negative_int(c, m);
        Real direct = zeta_zn_direct(c, Real(-m), ctx).value.re;
        std::string at = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
        o.require(absdiff(direct, Real(exact)) < kNegIntTol, "direct sum " + at);
        if (m < n) o.require(exact == BigRational(BigInt(n) * central_binomial(m)), "n C(2m,m) " + at);
      }
  });

  criterion(6, "cotangent form of odd sine-power sums", 30, [&](Outcome& o) {
    PrecisionScope scope(ctx.work_bits());
    double worst = 0;
    for (long n = 2; n <= 50; ++n)
      for (long m = 0; m <= 8; ++m) {
        DiscreteCircle c(n);
        Real direct = ldexp(sine_power_sum_direct(c, 2 * m + 1, ctx).value, 2 * m + 1);
        double e = absdiff(sine_odd_power_sum(c, m, ctx).value.re, direct);
        worst = std::max(worst, e);
        o.require(e < kSineTol, "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")");
      }
    o.note << "max gap " << worst << " ";
  });

  criterion(7, "closed polynomials P1, P2", 20, [&](Outcome& o) {
    RationalPolynomial p1 = zeta_zn_closed_poly(1);
    o.require(p1.to_string() == "(n^2 - 1)/12", "P1 = " + p1.to_string());
    RationalPolynomial p2 = zeta_zn_closed_poly(2);
    RationalPolynomial expect({BigRational(-11, 720), 0, BigRational(1, 72), 0, BigRational(1, 720)});
    o.require(p2.coeffs() == expect.coeffs(), "P2 = " + p2.to_string());
    PrecisionScope scope(ctx.work_bits());
    for (long n = 2; n <= 12; ++n) {
      Real direct = zeta_zn_direct(DiscreteCircle(n), Real(2), ctx).value.re;
      auto q = rational_reconstruct(direct, BigInt(720), ldexp(Real(1), -200));
      o.require(q && *q == p2(n), "P2 vs direct at n=" + std::to_string(n));
    }
    o.note << "P2 = " << p2.to_string() << " ";
  });

  criterion(8, "zeta(0), zeta(-1), zeta(-3) from sine sums", 120, [&](Outcome& o) {
    ZetaExtraction e0 = extract_zeta(Real(0), 100, 10000, ctx);
    ZetaExtraction e1 = extract_zeta(Real(-1), 100, 10000, ctx);
    ZetaExtraction e3 = extract_zeta(Real(-3), 100, 10000, ctx);
    o.require(absdiff(e0.estimate, Real(-1) / 2) < kZeta0Tol, "zeta(0)");
    o.require(absdiff(e1.estimate, Real(-1) / 12) < kZetaM1Tol, "zeta(-1)");
    o.require(absdiff(e3.estimate, Real(1) / 120) < kZetaM3Tol, "zeta(-3)");
    o.note << "errors " << e0.abs_error.to_double() << ", " << e1.abs_error.to_double() << ", "
           << e3.abs_error.to_double() << " ";
  });

  criterion(9, "functional equation gives zeta(2), zeta(4)", 5, [&](Outcome& o) {
    PrecisionScope scope(ctx.work_bits());
    Real pi = const_pi();
    Real z2 = zeta_even_from_functional_eq(1, ctx).value.re;
    Real z4 = zeta_even_from_functional_eq(2, ctx).value.re;
    o.require(absdiff(z2, pi * pi / 6) < kBridgeTol, "zeta(2)");
    o.require(absdiff(z4, pow(pi, 4) / 90) < kBridgeTol, "zeta(4)");
    o.require(absdiff(z2, riemann_zeta_numeric(Real(2), ctx).value) < kBridgeTol, "zeta(2) vs EM");
    o.require(absdiff(z4, riemann_zeta_numeric(Real(4), ctx).value) < kBridgeTol, "zeta(4) vs EM");
  });

  criterion(10, "property suites at 128 and 256 bits", 300, [&](Outcome& o) {
    for (long bits : {128L, 256L})
      for (const SuiteReport& r : run_verify("all", PrecisionContext(bits, 1e-30)))
        for (const CheckResult& c : r.checks)
          o.require(c.passed, r.suite + "/" + c.name + " at " + std::to_string(bits) + " bits");
    std::string cmd = std::string(ZETAKIT_BIN) + " verify all >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    o.require(status == 0, "`verify all` exit status " + std::to_string(status));
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
