#pragma once

#include <gmpxx.h>

#include <string>

namespace zetakit {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Binomial coefficient with C(n, k) = 0 for k < 0 or k > n (n >= 0).
inline BigInt binomial_or_zero(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt central_binomial(unsigned long n) { return binomial(2 * n, n); }

/// "num/den", or just "num" for integers.
inline std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "a", "a/b", or a terminating decimal such as "-0.25" or "1e-3".
/// Returns false on malformed input.
inline bool parse_rational(const std::string& text, BigRational& out) {
  if (text.empty()) return false;
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash), 10), den(text.substr(slash + 1), 10);
      if (den == 0) return false;
      out = BigRational(num, den);
      out.canonicalize();
      return true;
    }
    std::string mant = text;
    long exp10 = 0;
    auto e = mant.find_first_of("eE");
    if (e != std::string::npos) {
      std::size_t used = 0;
      exp10 = std::stol(mant.substr(e + 1), &used);
      if (used != mant.size() - e - 1) return false;
      mant = mant.substr(0, e);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return false;
    BigInt num(digits, 10);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    out = exp10 < 0 ? BigRational(num, scale) : BigRational(num * scale);
    out.canonicalize();
    if (neg) out = -out;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace zetakit
