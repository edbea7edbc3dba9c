#pragma once

// Spectral zeta function of the discrete circle Z/nZ,
//
//   zeta_{Z/nZ}(s) = 4^{-s} sum_{k=1}^{n-1} sin^{-2s}(pi k / n).

#include <zetakit/numerics.hpp>

#include <map>
#include <mutex>
#include <vector>

namespace zetakit {

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Cycle graph on n >= 2 vertices.
class DiscreteCircle {
 public:
  explicit DiscreteCircle(long n) : n_(n) {
    if (n < 2) throw DomainError("discrete circle needs n >= 2, got " + std::to_string(n));
  }
  long n() const { return n_; }

 private:
  long n_;
};

/// Polynomial in n with exact rational coefficients; coeffs[i] multiplies n^i.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigRational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

  BigRational operator()(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  BigRational operator()(long x) const { return (*this)(BigRational(x)); }

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Common denominator of the coefficients.
  BigInt denominator() const {
    BigInt d = 1;
    for (const auto& c : coeffs_) d = lcm(d, BigInt(c.get_den()));
    return d;
  }

  /// "(n^4 + 10*n^2 - 11)/720" style rendering.
  std::string to_string(const std::string& var = "n") const {
    if (coeffs_.empty()) return "0";
    BigInt d = denominator();
    std::string body;
    for (long i = degree(); i >= 0; --i) {
      BigInt c = BigRational(coeffs_[i] * d).get_num();
      if (c == 0) continue;
      bool neg = c < 0;
      BigInt mag = neg ? BigInt(-c) : c;
      if (body.empty()) {
        if (neg) body += "-";
      } else {
        body += neg ? " - " : " + ";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty())
        body += mag.get_str();
      else if (mag == 1)
        body += mono;
      else
        body += mag.get_str() + "*" + mono;
    }
    if (d == 1) return body;
    return "(" + body + ")/" + d.get_str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigRational> coeffs_;
};

namespace detail {

/// sin(pi k / n) with k reduced exactly to an angle in [0, pi/2] first.
inline Real sin_pi_fraction(long k, long n) {
  long two_n = 2 * n;
  long r = ((k % two_n) + two_n) % two_n;
  int sign = 1;
  if (r >= n) {
    sign = -1;
    r -= n;
  }
  if (2 * r > n) r = n - r;
  if (r == 0) return Real(0);
  Real v = sin(const_pi() * r / n);
  return sign < 0 ? -v : v;
}

/// cot(pi k / n) with k reduced exactly modulo n, to an angle in (0, pi/2].
inline Real cot_pi_fraction(long k, long n) {
  long r = ((k % n) + n) % n;
  if (r == 0) throw PoleError("cotangent pole");
  int sign = 1;
  if (2 * r > n) {
    r = n - r;
    sign = -1;
  }
  if (2 * r == n) return Real(0);
  Real v = cot(const_pi() * r / n);
  return sign < 0 ? -v : v;
}

}  // namespace detail

/// Direct finite sum. With `fold` the k <-> n-k symmetry is used so each
/// distinct sine is evaluated once.
inline EvalResult zeta_zn_direct(const DiscreteCircle& circle, const Complex& s, const PrecisionContext& ctx,
                                 bool fold = true) {
  PrecisionScope scope(ctx.work_bits());
  const long n = circle.n();
  Complex minus_two_s = -2 * s;
  auto term = [&](long k) -> Complex {
    Real sine = detail::sin_pi_fraction(k, n);
    return s.is_real() ? Complex(pow(sine, minus_two_s.re)) : exp(minus_two_s * log(sine));
  };
  Complex sum(0);
  Real magnitude = 0;
  if (fold) {
    for (long k = 1; 2 * k < n; ++k) {
      Complex t = term(k);
      magnitude += 2 * abs(t);
      sum += 2 * t;
    }
    if (n % 2 == 0) {
      Complex t = term(n / 2);
      magnitude += abs(t);
      sum += t;
    }
  } else {
    for (long k = 1; k < n; ++k) {
      Complex t = term(k);
      magnitude += abs(t);
      sum += t;
    }
  }
  Complex scale = pow(Complex(Real(4)), -s);
  EvalResult out;
  out.method = Method::DirectSum;
  out.value = scale * sum;
  out.err = detail::to_err(abs(scale) * magnitude * epsilon(ctx.work_bits()) * (n + 8)) +
            detail::to_err(abs(out.value) * epsilon(ctx.precision_bits));
  out.value.re.round_to(ctx.precision_bits);
  out.value.im.round_to(ctx.precision_bits);
  return out;
}

inline EvalResult zeta_zn_direct(const DiscreteCircle& circle, const Real& s, const PrecisionContext& ctx,
                                 bool fold = true) {
  return zeta_zn_direct(circle, Complex(s), ctx, fold);
}

/// sum_{k=1}^{n-1} sin^p(pi k / n) by direct summation.
inline HPReal sine_power_sum_direct(const DiscreteCircle& circle, long p, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.work_bits());
  const long n = circle.n();
  Real sum = 0;
  for (long k = 1; k < n; ++k) sum += pow(detail::sin_pi_fraction(k, n), p);
  HPReal out{sum, detail::to_err(abs(sum) * epsilon(ctx.work_bits()) * (n + 8)), false};
  out.value.round_to(ctx.precision_bits);
  return out;
}

/// zeta_{Z/nZ}(-m) = n sum_{|k| <= m/n} (-1)^{kn} C(2m, m + kn), exact.
inline BigRational zeta_zn_negative_int(const DiscreteCircle& circle, long m) {
  if (m < 1) throw DomainError("zeta_zn_negative_int requires m >= 1");
  const long n = circle.n();
  const long reach = m / n;
  BigInt sum = 0;
  for (long k = -reach; k <= reach; ++k) {
    BigInt c = binomial_or_zero(2 * m, m + k * n);
    if ((k * n) % 2 != 0)
      sum -= c;
    else
      sum += c;
  }
  return BigRational(BigInt(n) * sum);
}

/// zeta_{Z/nZ}(-1/2 - m) = 2^{2m+1} sum sin^{2m+1}(pi k/n)
///                      = 2 sum_{j=0}^{m} (-1)^{m-j} C(2m+1, j) cot((2m+1-2j) pi / 2n).
///
/// The cotangent arguments have odd numerators over 2n, so they never hit a
/// multiple of pi.
inline EvalResult sine_odd_power_sum(const DiscreteCircle& circle, long m, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("sine_odd_power_sum requires m >= 0");
  PrecisionScope scope(ctx.work_bits());
  const long n = circle.n();
  Real sum = 0;
  Real magnitude = 0;
  for (long j = 0; j <= m; ++j) {
    Real c = Real(binomial(static_cast<unsigned long>(2 * m + 1), static_cast<unsigned long>(j)));
    Real t = c * detail::cot_pi_fraction(2 * m + 1 - 2 * j, 2 * n);
    magnitude += abs(t);
    if ((m - j) % 2 == 0)
      sum += t;
    else
      sum -= t;
  }
  EvalResult out;
  out.method = Method::ClosedForm;
  out.value = Complex(2 * sum);
  out.err = detail::to_err(magnitude * epsilon(ctx.work_bits()) * (4 * m + 16)) +
            detail::to_err(abs(out.value.re) * epsilon(ctx.precision_bits));
  out.value.re.round_to(ctx.precision_bits);
  return out;
}

/// Continued-fraction reconstruction of a rational with denominator at most
/// `max_den` from a high-precision approximation. Returns nullopt when the
/// best candidate is not within `tol` of x.
inline std::optional<BigRational> rational_reconstruct(const Real& x, const BigInt& max_den, const Real& tol) {
  BigRational y = x.to_rational();
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    BigRational frac = y - BigRational(a);
    if (frac == 0) break;
    y = 1 / frac;
  }
  if (q1 == 0) return std::nullopt;
  BigRational candidate(p1, q1);
  candidate.canonicalize();
  if (abs(x - Real(candidate)) > tol) return std::nullopt;
  return candidate;
}

namespace detail {

/// Exact interpolating polynomial through (x_i, y_i).
inline RationalPolynomial lagrange_interpolate(const std::vector<long>& xs, const std::vector<BigRational>& ys) {
  const std::size_t count = xs.size();
  std::vector<BigRational> result(count, BigRational(0));
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom(1);
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= BigRational(xs[i] - xs[j]);
    }
    BigRational w = ys[i] / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * w;
  }
  return RationalPolynomial(std::move(result));
}

inline constexpr long kClosedPolyCap = 8;

/// Closed-form polynomial P_m by exact interpolation of reconstructed values.
inline RationalPolynomial build_closed_poly(long m, long base_bits) {
  PrecisionContext hi(4 * base_bits, 1e-30);
  PrecisionScope scope(hi.work_bits());
  // Denominators of the values divide 4^m ((2m+1)!)^2.
  BigInt bound = factorial(static_cast<unsigned long>(2 * m + 1));
  bound *= bound;
  bound <<= static_cast<mp_bitcnt_t>(2 * m);
  Real recon_tol = epsilon(hi.precision_bits / 2);

  std::vector<long> xs;
  std::vector<BigRational> ys;
  for (long n = 2; n <= 2 * m + 2; ++n) {
    EvalResult v = zeta_zn_direct(DiscreteCircle(n), Real(m), hi);
    auto q = rational_reconstruct(v.value.re, bound, recon_tol);
    if (!q) throw ReconstructionError("no rational within bound for zeta_{Z/" + std::to_string(n) + "Z}(" +
                                      std::to_string(m) + ")");
    xs.push_back(n);
    ys.push_back(*q);
  }
  RationalPolynomial p = lagrange_interpolate(xs, ys);
  const Real check_tol = epsilon(base_bits / 2);
  for (long n = 2 * m + 3; n <= 2 * m + 7; ++n) {
    EvalResult v = zeta_zn_direct(DiscreteCircle(n), Real(m), hi);
    Real pv(p(n));
    if (abs(pv - v.value.re) > check_tol * max(Real(1), abs(pv)))
      throw ReconstructionError("closed polynomial for m = " + std::to_string(m) + " fails verification at n = " +
                                std::to_string(n));
  }
  return p;
}

class ClosedPolyCache {
 public:
  RationalPolynomial get(long m, long base_bits) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    RationalPolynomial p = build_closed_poly(m, base_bits);
    cache_.emplace(m, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<long, RationalPolynomial> cache_;
};

inline ClosedPolyCache& closed_poly_cache() {
  static ClosedPolyCache cache;
  return cache;
}

}  // namespace detail

/// Polynomial P_m of degree 2m with P_m(n) = zeta_{Z/nZ}(m) for every n >= 2,
/// for 1 <= m <= 8. Cached.
inline RationalPolynomial zeta_zn_closed_poly(long m) {
  if (m < 1 || m > detail::kClosedPolyCap)
    throw DomainError("zeta_zn_closed_poly supports 1 <= m <= " + std::to_string(detail::kClosedPolyCap));
  return detail::closed_poly_cache().get(m, 256);
}

}  // namespace zetakit
