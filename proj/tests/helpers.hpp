#pragma once

#include <string>

#include "bogodiag/linalg.hpp"
#include "bogodiag/types.hpp"

namespace bogodiag::test {

inline double dev(const cmat& a, const cmat& b) { return maxabs(a - b); }

inline cmat scalar_mat(double re, double im = 0.0) {
  cmat m(1, 1);
  m(0, 0) = complexd(re, im);
  return m;
}

// scalar golden values for (h, k) = (1, 0.6)
inline constexpr double kXiScalar = 0.8;
inline constexpr double kEnergyScalar = -0.1;
inline constexpr double kUScalar = 1.0606601717798212;   // sqrt(9/8)
inline constexpr double kVScalar = -0.35355339059327373; // -sqrt(1/8)
inline constexpr double kGammaScalar = 0.125;
inline constexpr double kAlphaScalar = -0.375;
inline constexpr double kNormVScalar = 1.4142135623730951;

}  // namespace bogodiag::test
