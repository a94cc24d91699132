#ifndef BORELSUM_SPECIAL_FN_HPP
#define BORELSUM_SPECIAL_FN_HPP

#include <complex>

#include "borelsum/rational.hpp"

namespace borelsum {

using Complex = std::complex<double>;

// Complex Gamma function, Lanczos rational approximation plus the reflection
// formula for Re z < 1/2.  Throws PoleOfGamma within 1e-12 of a nonpositive
// integer.  Relative accuracy is ~1e-14 on |Re z|,|Im z| <= 50.
Complex gamma(Complex z);

// Entire reciprocal 1/Gamma.  Exactly 0 at nonpositive integers (detected to
// 1e-12); real arguments take a real-axis path shared with the kernel table
// so that kernel_C(alpha, 0) == recip_gamma(1 - 1/alpha) bitwise.
Complex recip_gamma(Complex z);

// Rational-argument overload with exact pole detection; this is the routine
// the kernel series is built from.
double recip_gamma(const Rational& x);

// Parameters of the summation kernel C_alpha.
struct KernelParams {
  Rational alpha;       // q/p, > 1
  Rational beta;        // conjugate exponent, 1/alpha + 1/beta = 1
  double tol = 1e-12;   // absolute truncation tolerance
  int max_terms = 2000;

  static KernelParams for_alpha(Rational alpha, double tol = 1e-12, int max_terms = 2000);
};

struct KernelEval {
  Complex value;
  double abs_err = 0.0;        // roundoff + truncation estimate
  bool low_confidence = false; // |tau| > 30: cancellation exceeds headroom
};

// C_alpha(tau) = sum_n (-tau)^n / (n! Gamma(1 - (n+1)/alpha)).  Terms whose
// Gamma argument is a nonpositive integer contribute exactly 0.  deriv > 0
// evaluates the termwise-differentiated series
//   C_alpha^(d)(tau) = (-1)^d sum_m (-tau)^m / (m! Gamma(1 - (m+d+1)/alpha)).
KernelEval kernel_series(const KernelParams& params, Complex tau, int deriv = 0);

Complex kernel_C(const KernelParams& params, Complex tau);

// Decay-rate constant of Lemma-type bounds |C_alpha(x e^{i psi})| <=
// A1 exp(-b cos(beta psi) x^beta); used only for tail estimates, never as an
// evaluation path.
double kernel_decay_rate(const Rational& alpha);

}  // namespace borelsum

#endif
