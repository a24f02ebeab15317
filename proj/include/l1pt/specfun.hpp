#pragma once

// Scalar special functions. erfcx is the workhorse: every expression of the
// form y*e^{y^2}*erfc(+-y) that appears in the transition and rate formulas
// is evaluated through it so the e^{y^2} factor never materializes alone.
namespace l1pt::specfun {

// Error function; rejects non-finite input.
double erf(double x);

// Complementary error function; rejects non-finite input.
double erfc(double x);

// Scaled complementary error function e^{x^2} erfc(x).
// Relative accuracy ~1e-13 on [-6, 30]; overflows (+inf) below x ~ -26.6.
double erfcx(double x);

// Inverse of erf on (-1, 1): rational first guess polished by Newton
// iterations on erf. Throws std::domain_error for |p| >= 1.
double erf_inv(double p);

}  // namespace l1pt::specfun
