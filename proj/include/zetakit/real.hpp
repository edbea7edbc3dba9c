#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

namespace zetakit {

namespace detail {
inline thread_local mpfr_prec_t g_working_bits = 256;
}

/// Precision (in bits) used for every freshly created Real on this thread.
inline mpfr_prec_t working_bits() { return detail::g_working_bits; }

/// RAII override of the thread's working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits) : saved_(detail::g_working_bits) {
    detail::g_working_bits = static_cast<mpfr_prec_t>(bits);
  }
  ~PrecisionScope() { detail::g_working_bits = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Arbitrary-precision binary float. Results of arithmetic carry the working
/// precision of the calling thread; copies keep the precision of the source.
class Real {
 public:
  Real() { init(); mpfr_set_zero(v_, 1); }
  Real(int x) { init(); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long x) { init(); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long long x) { init(); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }
  Real(unsigned long x) { init(); mpfr_set_ui(v_, x, MPFR_RNDN); }
  explicit Real(double x) { init(); mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(const mpz_class& z) { init(); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  explicit Real(const mpq_class& q) { init(); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  explicit Real(const std::string& s) {
    init();
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) mpfr_set_nan(v_);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  /// Rounds the value to `bits` of precision in place.
  void round_to(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  mpq_class to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }
  /// Nearest integer as an arbitrary-size integer.
  mpz_class round_to_integer() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

  Real operator-() const {
    Real r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const {
    if (is_nan()) return "nan";
    if (!is_finite()) return sign() > 0 ? "inf" : "-inf";
    if (digits < 1) digits = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  void init() { mpfr_init2(v_, working_bits()); }
  mpfr_t v_;
};

#define ZETAKIT_REAL_BINOP(op, fn, fn_si, si_fn)                              \
  inline Real operator op(const Real& a, const Real& b) {                     \
    Real r;                                                                   \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                                 \
    return r;                                                                 \
  }                                                                           \
  inline Real operator op(const Real& a, long b) {                            \
    Real r;                                                                   \
    fn_si(r.get(), a.get(), b, MPFR_RNDN);                                    \
    return r;                                                                 \
  }                                                                           \
  inline Real operator op(long a, const Real& b) {                            \
    Real r;                                                                   \
    si_fn(r.get(), a, b.get(), MPFR_RNDN);                                    \
    return r;                                                                 \
  }                                                                           \
  inline Real operator op(const Real& a, int b) { return a op static_cast<long>(b); } \
  inline Real operator op(int a, const Real& b) { return static_cast<long>(a) op b; }

namespace detail {
inline int add_si_rev(mpfr_ptr r, long a, mpfr_srcptr b, mpfr_rnd_t rnd) { return mpfr_add_si(r, b, a, rnd); }
inline int mul_si_rev(mpfr_ptr r, long a, mpfr_srcptr b, mpfr_rnd_t rnd) { return mpfr_mul_si(r, b, a, rnd); }
}  // namespace detail

ZETAKIT_REAL_BINOP(+, mpfr_add, mpfr_add_si, detail::add_si_rev)
ZETAKIT_REAL_BINOP(-, mpfr_sub, mpfr_sub_si, mpfr_si_sub)
ZETAKIT_REAL_BINOP(*, mpfr_mul, mpfr_mul_si, detail::mul_si_rev)
ZETAKIT_REAL_BINOP(/, mpfr_div, mpfr_div_si, mpfr_si_div)

#undef ZETAKIT_REAL_BINOP

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) == 0; }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) >= 0; }

#define ZETAKIT_REAL_UNARY(name, fn)      \
  inline Real name(const Real& x) {       \
    Real r;                               \
    fn(r.get(), x.get(), MPFR_RNDN);      \
    return r;                             \
  }

ZETAKIT_REAL_UNARY(abs, mpfr_abs)
ZETAKIT_REAL_UNARY(sqrt, mpfr_sqrt)
ZETAKIT_REAL_UNARY(exp, mpfr_exp)
ZETAKIT_REAL_UNARY(log, mpfr_log)
ZETAKIT_REAL_UNARY(log1p, mpfr_log1p)
ZETAKIT_REAL_UNARY(sin, mpfr_sin)
ZETAKIT_REAL_UNARY(cos, mpfr_cos)
ZETAKIT_REAL_UNARY(tan, mpfr_tan)
ZETAKIT_REAL_UNARY(cot, mpfr_cot)
ZETAKIT_REAL_UNARY(sinh, mpfr_sinh)
ZETAKIT_REAL_UNARY(cosh, mpfr_cosh)
ZETAKIT_REAL_UNARY(tanh, mpfr_tanh)
ZETAKIT_REAL_UNARY(atan, mpfr_atan)

#undef ZETAKIT_REAL_UNARY

inline Real floor(const Real& x) { Real r; mpfr_floor(r.get(), x.get()); return r; }
inline Real round(const Real& x) { Real r; mpfr_round(r.get(), x.get()); return r; }
inline Real pow(const Real& x, const Real& y) { Real r; mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN); return r; }
inline Real pow(const Real& x, long n) { Real r; mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN); return r; }
inline Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN); return r; }
inline Real hypot(const Real& x, const Real& y) { Real r; mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN); return r; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
/// 2^e exactly.
inline Real ldexp(const Real& x, long e) { Real r; mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN); return r; }

/// sin(pi x) and cos(pi x) with the argument reduced modulo 2 before scaling by pi.
inline Real sin_pi(const Real& x) {
  Real t = x - 2 * floor(x / 2);
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return sin(r * t);
}
inline Real cos_pi(const Real& x) {
  Real t = x - 2 * floor(x / 2);
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return cos(r * t);
}

inline Real const_pi() { Real r; mpfr_const_pi(r.get(), MPFR_RNDN); return r; }
inline Real const_log2() { Real r; mpfr_const_log2(r.get(), MPFR_RNDN); return r; }
inline Real const_euler() { Real r; mpfr_const_euler(r.get(), MPFR_RNDN); return r; }

/// 2^-bits as a Real.
inline Real epsilon(long bits) { return ldexp(Real(1), -bits); }

inline std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_string(static_cast<int>(std::ceil(x.precision() * 0.30103)));
}

}  // namespace zetakit
