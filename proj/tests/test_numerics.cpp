#include "support.hpp"

#include <cmath>
#include <vector>

using namespace zetakit;
using testing_support::ctx256;
using testing_support::gap;
using testing_support::R;

namespace {

// Akiyama-Tanigawa: an algorithm unrelated to the defining recurrence. It
// yields B_1 = +1/2, which is irrelevant for the even indices compared.
std::vector<BigRational> akiyama_tanigawa(int n) {
  std::vector<BigRational> a(n + 1), out(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = BigRational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out[m] = a[0];
  }
  return out;
}

Real legendre_half_gamma(unsigned long n) {
  // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
  BigRational q(factorial(2 * n), factorial(n) * (BigInt(1) << static_cast<mp_bitcnt_t>(2 * n)));
  q.canonicalize();
  return Real(q) * sqrt(const_pi());
}

}  // namespace

TEST(PrecisionContext, RejectsBadSettings) {
  EXPECT_THROW(PrecisionContext(32, 1e-10), DomainError);
  EXPECT_THROW(PrecisionContext(128, 0), DomainError);
  EXPECT_THROW(PrecisionContext(128, 1e-10, 0), DomainError);
  EXPECT_NO_THROW(PrecisionContext(64, 1e-10, 1));
}

TEST(Gamma, ClassicalValues) {
  auto ctx = ctx256();
  EXPECT_LT(gap(gamma(Real(1) / 2, ctx).value, sqrt(const_pi())), 1e-70);
  EXPECT_LT(gap(gamma(Real(6), ctx).value, Real(120)), 1e-70);
}

TEST(Gamma, HalfIntegersMatchDuplicationFormula) {
  auto ctx = ctx256();
  for (unsigned long n = 0; n <= 20; ++n) {
    Real g = gamma(Real(2 * n + 1) / 2, ctx).value;
    Real expect = legendre_half_gamma(n);
    EXPECT_LT((abs(g - expect) / expect).to_double(), 1e-70) << "n = " << n;
  }
  // gamma(1/2 + 3) = 15 sqrt(pi) / 8
  EXPECT_LT(gap(gamma(Real(7) / 2, ctx).value, 15 * sqrt(const_pi()) / 8), 1e-70);
}

TEST(Gamma, FrozenReferenceValues) {
  auto ctx = ctx256();
  EXPECT_LT(gap(gamma(Real("3.7"), ctx).value, "4.17065178379660316539360299861798372794044558098982929457225"), 1e-55);
  EXPECT_LT(gap(gamma(Real("-2.5"), ctx).value, "-9.45308720482941881225689324448610764158693043265273135047364e-1"),
            1e-55);
  HPComplex g = gamma(Complex(Real(1), Real(2)), ctx);
  EXPECT_LT(gap(g.value.re, "1.51904002670036137448160950545001503668186264185950905743776e-1"), 1e-55);
  EXPECT_LT(gap(g.value.im, "1.98048801618549819719101316709638945480161262246215921013585e-2"), 1e-55);
  HPComplex h = gamma(Complex(Real(1) / 2, Real(3)), ctx);
  EXPECT_LT(gap(h.value.re, "2.14456705524306460595528022516044672013383107390743465527679e-2"), 1e-55);
  EXPECT_LT(gap(h.value.im, "6.86536483726167791423849381986300220771098030822136733910541e-3"), 1e-55);
  Real g50 = gamma(Real(50), ctx).value;
  Real expect50 = Real(factorial(49));
  EXPECT_LT((abs(g50 - expect50) / expect50).to_double(), 1e-70);
}

TEST(Gamma, ReportsErrorWithinTolerance) {
  auto ctx = ctx256();
  for (double x : {0.3, 2.5, 7.25, -3.4}) {
    HPReal g = gamma(Real(x), ctx);
    EXPECT_TRUE(ctx.accepts(g.err, g.value.to_double())) << x;
  }
}

TEST(Gamma, PolesRaise) {
  auto ctx = ctx256();
  EXPECT_THROW(gamma(Real(0), ctx), PoleError);
  EXPECT_THROW(gamma(Real(-3), ctx), PoleError);
  EXPECT_THROW(gamma(Real(-3) + ldexp(Real(1), -200), ctx), PoleError);
  EXPECT_THROW(gamma(Complex(Real(-2)), ctx), PoleError);
  EXPECT_NO_THROW(gamma(Real(-3) + Real("1e-10"), ctx));
}

TEST(Digamma, KnownValues) {
  auto ctx = ctx256();
  Real g = const_euler();
  EXPECT_LT(gap(digamma(Real(1), ctx).value, -g), 1e-70);
  EXPECT_LT(gap(digamma(Real(1) / 2, ctx).value, -g - 2 * const_log2()), 1e-70);
  Real expect = -g - 2 * const_log2() + 2 * (Real(1) + Real(1) / 3 + Real(1) / 5);
  EXPECT_LT(gap(digamma(Real(7) / 2, ctx).value, expect), 1e-70);
}

TEST(Digamma, FrozenReferenceValues) {
  auto ctx = ctx256();
  EXPECT_LT(gap(digamma(Real("0.3"), ctx).value, "-3.50252422220013298896449450737198159953790828840450209566492"),
            1e-55);
  EXPECT_LT(gap(digamma(Real("-2.7"), ctx).value, "-1.11534712914068698834202329666547677538602531299211491857186"),
            1e-55);
  EXPECT_THROW(digamma(Real(-2), ctx), PoleError);
}

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli(0), BigRational(1));
  EXPECT_EQ(bernoulli(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli(4), BigRational(-1, 30));
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
}

TEST(Bernoulli, AgreesWithAkiyamaTanigawa) {
  auto ref = akiyama_tanigawa(60);
  for (unsigned long k = 0; k <= 60; ++k) {
    if (k == 1) continue;
    EXPECT_EQ(bernoulli(k), ref[k]) << "k = " << k;
  }
}

TEST(Bernoulli, SatisfiesDefiningRecurrence) {
  for (unsigned long k = 1; k <= 40; ++k) {
    BigRational sum(0);
    for (unsigned long j = 0; j <= k; ++j) sum += BigRational(binomial(k + 1, j)) * bernoulli(j);
    EXPECT_EQ(sum, 0) << "k = " << k;
  }
}

TEST(BinomialReal, IntegerAndPoleCases) {
  auto ctx = ctx256();
  BinomialValue six = binomial_real(Real(4), Real(2), ctx);
  EXPECT_EQ(six.value.value, Real(6));
  EXPECT_TRUE(six.value.exact);

  BinomialValue zero = binomial_real(Real(-6), Real(-3), ctx);
  EXPECT_TRUE(zero.value.value.is_zero());
  EXPECT_TRUE(zero.zero_by_pole_cancellation);

  // Gamma(2) / Gamma(3/2)^2 by direct evaluation
  Real g = gamma(Real(3) / 2, ctx).value;
  Real direct = gamma(Real(2), ctx).value / (g * g);
  EXPECT_LT(gap(binomial_real(Real(1), Real(1) / 2, ctx).value.value, direct), 1e-70);
  EXPECT_LT(gap(direct, 4 / const_pi()), 1e-70);

  EXPECT_THROW(binomial_real(Real(-1), Real(1) / 2, ctx), IndeterminateError);
}

TEST(BesselI0Scaled, KnownValues) {
  auto ctx = ctx256();
  EXPECT_EQ(bessel_i0_scaled(Real(0), ctx).value, Real(1));

  // power series sum t^{2k} / (k!)^2 at t = 1, times e^{-2}
  Real sum = 0, term = 1;
  for (int k = 0; k < 80; ++k) {
    sum += term;
    term /= Real((k + 1) * (k + 1));
  }
  EXPECT_LT(gap(bessel_i0_scaled(Real(1), ctx).value, sum * exp(Real(-2))), 1e-70);

  double t = 1e4;
  double lead = 1 / std::sqrt(4 * M_PI * t);
  EXPECT_NEAR(bessel_i0_scaled(Real(t), ctx).value.to_double(), lead, 0.01 * lead);
}

TEST(BesselI0Scaled, AgreesWithIntegralRepresentation) {
  auto ctx = ctx256();
  // e^{-2t} I0(2t) = (1/pi) int_0^pi e^{2t (cos th - 1)} dth; the trapezoid
  // rule is spectrally accurate for this periodic integrand.
  for (double t : {0.5, 3.0, 25.0, 60.0}) {
    const int n = 4000;
    double acc = 0;
    for (int i = 0; i <= n; ++i) {
      double th = M_PI * i / n;
      double w = (i == 0 || i == n) ? 0.5 : 1.0;
      acc += w * std::exp(2 * t * (std::cos(th) - 1));
    }
    acc /= n;
    EXPECT_NEAR(bessel_i0_scaled(Real(t), ctx).value.to_double(), acc, 1e-13) << "t = " << t;
  }
}

TEST(BesselI0Scaled, FrozenReferenceValuesAcrossSwitchPoint) {
  auto ctx = ctx256();
  EXPECT_LT(gap(bessel_i0_scaled(Real(10), ctx).value, "8.97803118848260215959446536697109920791821926373014130627897e-2"),
            1e-55);
  EXPECT_LT(gap(bessel_i0_scaled(Real(100), ctx).value, "2.82271599491119156703406259398794485625616807002000123218723e-2"),
            1e-55);
  EXPECT_LT(gap(bessel_i0_scaled(Real(1000), ctx).value, "8.92117827643967027309303250725191090210954004570127251310192e-3"),
            1e-55);
  EXPECT_LT(gap(bessel_i0_scaled(Real(10000), ctx).value, "2.82096554915916288181646983474683033081580300680945381760143e-3"),
            1e-55);
  EXPECT_THROW(bessel_i0_scaled(Real(-1), ctx), DomainError);
}

TEST(RiemannZeta, KnownValues) {
  auto ctx = ctx256();
  EXPECT_LT(gap(riemann_zeta_numeric(Real(0), ctx).value, Real(-1) / 2), 1e-70);
  EXPECT_LT(gap(riemann_zeta_numeric(Real(2), ctx).value, const_pi() * const_pi() / 6), 1e-70);
  EXPECT_LT(gap(riemann_zeta_numeric(Real(-1), ctx).value, Real(-1) / 12), 1e-70);
  EXPECT_THROW(riemann_zeta_numeric(Real(1), ctx), PoleError);
}

TEST(RiemannZeta, FrozenReferenceValues) {
  auto ctx = ctx256();
  EXPECT_LT(gap(riemann_zeta_numeric(Real(3), ctx).value, "1.20205690315959428539973816151144999076498629234049888179227"),
            1e-55);
  EXPECT_LT(gap(riemann_zeta_numeric(Real("0.5"), ctx).value,
                "-1.46035450880958681288949915251529801246722933101258149054289"),
            1e-55);
  EXPECT_LT(gap(riemann_zeta_numeric(Real("-2.5"), ctx).value,
                "8.51692877785033054235856702834448693627599022007447776588885e-3"),
            1e-55);
  EXPECT_LT(gap(riemann_zeta_numeric(Real("-7.5"), ctx).value,
                "3.26903957260022002171739531646884318591172089171654242920597e-3"),
            1e-55);
  HPComplex z = riemann_zeta_numeric(Complex(Real(2), Real(1)), ctx);
  EXPECT_LT(gap(z.value.re, "1.15035570325490267174284993474486671557285464013052747066013"), 1e-55);
  EXPECT_LT(gap(z.value.im, "-4.37530865919607881117527898592843059867157009917017488157348e-1"), 1e-55);
}

TEST(RiemannZeta, TrivialZerosAndEulerValues) {
  auto ctx = ctx256();
  for (long m = 1; m <= 5; ++m) EXPECT_LT(abs(riemann_zeta_numeric(Real(-2 * m), ctx).value).to_double(), 1e-30);
  for (long m = 1; m <= 15; m += 2) {
    Real expect(euler_zeta_negative(m));
    EXPECT_LT((abs(riemann_zeta_numeric(Real(-m), ctx).value - expect) / abs(expect)).to_double(), 1e-60) << m;
  }
}
