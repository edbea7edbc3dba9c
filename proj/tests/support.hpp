#pragma once

#include <zetakit/verify.hpp>

#include <gtest/gtest.h>

#include <string>

namespace zt = zetakit;

namespace testing_support {

inline zt::Real R(const std::string& digits) { return zt::Real(digits); }

/// |a - b| as a double, computed at the current working precision.
inline double gap(const zt::Real& a, const zt::Real& b) { return zt::abs(a - b).to_double(); }
inline double gap(const zt::Real& a, const std::string& b) { return gap(a, R(b)); }

inline zt::PrecisionContext ctx256() { return zt::PrecisionContext(256, 1e-30); }
inline zt::PrecisionContext ctx128() { return zt::PrecisionContext(128, 1e-30); }

}  // namespace testing_support
