#pragma once

#include <zetakit/complex.hpp>
#include <zetakit/errors.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace zetakit {

/// Evaluation settings shared by every numeric operation.
struct PrecisionContext {
  long precision_bits = 256;
  double target_tol = 1e-30;
  long max_terms = 1'000'000;

  PrecisionContext() = default;
  PrecisionContext(long bits, double tol, long terms = 1'000'000)
      : precision_bits(bits), target_tol(tol), max_terms(terms) {
    validate();
  }

  void validate() const {
    if (precision_bits < 64) throw DomainError("precision_bits must be at least 64");
    if (!(target_tol > 0)) throw DomainError("target_tol must be positive");
    if (max_terms < 1) throw DomainError("max_terms must be at least 1");
  }

  /// Precision used for intermediate work.
  long work_bits() const { return precision_bits + 64; }

  /// Arguments closer than this to a pole or zero lattice point are snapped to it.
  Real snap_radius() const { return epsilon(precision_bits / 2); }

  /// Tolerance check for an error bound; values of large magnitude are
  /// judged relatively.
  bool accepts(double err, double magnitude) const {
    return err <= target_tol * std::max(1.0, std::fabs(magnitude));
  }
};

/// Real value with an absolute error estimate.
struct HPReal {
  Real value;
  double err = 0;
  bool exact = false;
};

/// Complex value with an absolute error estimate.
struct HPComplex {
  Complex value;
  double err = 0;

  const Real& re() const { return value.re; }
  const Real& im() const { return value.im; }
};

enum class Method {
  ClosedForm,
  Product,
  Quadrature,
  DirectSum,
  Exact,
  Asymptotic,
  FunctionalEquation,
  EulerMaclaurin,
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Product: return "product";
    case Method::Quadrature: return "quadrature";
    case Method::DirectSum: return "direct-sum";
    case Method::Exact: return "exact";
    case Method::Asymptotic: return "asymptotic";
    case Method::FunctionalEquation: return "functional-equation";
    case Method::EulerMaclaurin: return "euler-maclaurin";
  }
  return "unknown";
}

/// Result of a routed evaluation. `certified` is set only when `err` comes
/// from a proved remainder bound.
struct EvalResult {
  Complex value;
  double err = 0;
  bool certified = false;
  Method method = Method::ClosedForm;
  std::optional<mpq_class> exact;
  /// The argument is one of the function's zeros.
  bool zero_note = false;

  bool is_exact() const { return exact.has_value(); }
  const Real& re() const { return value.re; }
  const Real& im() const { return value.im; }
};

namespace detail {

inline double to_err(const Real& x) {
  double d = abs(x).to_double();
  return std::isfinite(d) ? d : HUGE_VAL;
}

/// Nearest integer k with |x - k| below the radius, if any.
inline std::optional<long> snap_integer(const Real& x, const Real& radius) {
  Real k = round(x);
  if (abs(x - k) <= radius && abs(k) < Real(1L << 62)) return k.to_long();
  return std::nullopt;
}

/// Nearest k with |x - k/2| below the radius, if any.
inline std::optional<long> snap_half_integer(const Real& x, const Real& radius) {
  return snap_integer(x * 2, radius * 2);
}

inline bool near_real(const Complex& s, const Real& radius) { return abs(s.im) <= radius; }

}  // namespace detail

}  // namespace zetakit
