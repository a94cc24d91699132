#include "borelsum/special_fn.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "borelsum/errors.hpp"

namespace borelsum {

namespace {

using CLD = std::complex<long double>;
constexpr long double kPiL = std::numbers::pi_v<long double>;

// Lanczos rational approximation, N=13, g=6.024680040776729583740234375.
// The numerator already carries the sqrt(2*pi) factor; denominator
// coefficients are those of z(z+1)...(z+11).
constexpr long double kLanczosG = 6.024680040776729583740234375L;
constexpr long double kLanczosNum[13] = {
    23531376880.41075968857200767445163675473L,
    42919803642.64909876895789904700198885093L,
    35711959237.35566804944018545154716670596L,
    17921034426.03720969991975575445893111267L,
    6039542586.35202800506429164430729792107L,
    1439720407.311721673663223072794912393972L,
    248874557.8620541565114603864132294232163L,
    31426415.58540019438061423162831820536287L,
    2876370.628935372441225409051620849613599L,
    186056.2653952234950402949897160456992822L,
    8071.672002365816210638002902272250613822L,
    210.8242777515793458725097339207133627117L,
    2.506628274631000270164908177133837338626L,
};
constexpr long double kLanczosDen[13] = {
    0.0L,       39916800.0L, 120543840.0L, 150917976.0L, 105258076.0L,
    45995730.0L, 13339535.0L, 2637558.0L,   357423.0L,    32670.0L,
    1925.0L,     66.0L,       1.0L,
};

CLD lanczos_sum(CLD z) {
  // Rational evaluation; |z| stays moderate (reflection handles Re z < 1/2).
  CLD num(0.0L), den(0.0L);
  if (std::abs(z) <= 13.0L) {
    for (int i = 12; i >= 0; --i) {
      num = num * z + kLanczosNum[i];
      den = den * z + kLanczosDen[i];
    }
  } else {
    const CLD iz = 1.0L / z;
    for (int i = 0; i <= 12; ++i) {
      num = num * iz + kLanczosNum[i];
      den = den * iz + kLanczosDen[i];
    }
  }
  return num / den;
}

CLD gamma_core(CLD z) {
  // Re z >= 1/2 branch.
  const CLD zgh = z + (kLanczosG - 0.5L);
  return lanczos_sum(z) * std::exp((z - 0.5L) * std::log(zgh) - zgh);
}

bool near_nonpositive_integer(Complex z, double tol) {
  const double r = std::round(z.real());
  if (r > 0.5) return false;
  return std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

// sin(pi * n/d) with the argument reduced exactly in integer arithmetic.
long double sinpi_rational(std::int64_t n, std::int64_t d) {
  if (d < 0) { n = -n; d = -d; }
  std::int64_t r = n % (2 * d);
  if (r < 0) r += 2 * d;
  long double sign = 1.0L;
  if (r >= d) { sign = -1.0L; r -= d; }      // sin(pi + x) = -sin(x)
  if (2 * r > d) r = d - r;                  // sin(pi - x) = sin(x)
  return sign * std::sin(kPiL * static_cast<long double>(r) / static_cast<long double>(d));
}

// 1/Gamma at an exact rational, in long double.  Poles map to exact 0.
long double recip_gamma_rational_ld(const Rational& x) {
  if (x.is_nonpositive_integer()) return 0.0L;
  const long double xv = x.value_ld();
  if (xv > 0.0L) {
    const long double lg = std::lgamma(static_cast<double>(xv)) +
                           0.0L;  // double lgamma; refined below
    (void)lg;
    return std::exp(-lgammal(xv));
  }
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, and 1-x >= 1 here.
  const long double g1mx = std::exp(lgammal(1.0L - xv));  // Gamma(1-x) > 0
  return sinpi_rational(x.num, x.den) * g1mx / kPiL;
}

long double recip_gamma_real_ld(long double x) {
  const long double r = std::floorl(x + 0.5L);
  if (r <= 0.5L && std::fabsl(x - r) <= 1e-12L) return 0.0L;
  if (x > 0.0L) return std::exp(-lgammal(x));
  const long double s = std::sin(kPiL * (x - 2.0L * std::floorl(x / 2.0L)));
  return s * std::exp(lgammal(1.0L - x)) / kPiL;
}

// Cached table of 1/Gamma(1 - (m+1)/alpha), m = 0..n-1, per alpha = A/B with
// gcd(A,B) = 1.  Seeds are computed at rational arguments; each residue class
// m mod A advances by the exact integer recurrence
//   1/Gamma(x - B) = 1/Gamma(x) * (x-1)(x-2)...(x-B).
class LatticeTable {
 public:
  std::shared_ptr<const std::vector<long double>> get(const Rational& alpha, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(alpha.num, alpha.den);
    auto it = cache_.find(key);
    if (it != cache_.end() && static_cast<int>(it->second->size()) >= n) return it->second;
    auto tab = std::make_shared<std::vector<long double>>(build(alpha, n));
    cache_[key] = tab;
    return tab;
  }

 private:
  static std::vector<long double> build(const Rational& alpha, int n) {
    const std::int64_t A = alpha.num, B = alpha.den;
    std::vector<long double> tab(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(n); ++m) {
      if (m < A) {
        tab[static_cast<std::size_t>(m)] =
            recip_gamma_rational_ld(Rational(A - (m + 1) * B, A));
      } else {
        // x = 1 - (m-A+1)B/A is the argument one lattice period up.
        const long double x =
            static_cast<long double>(A - (m - A + 1) * B) / static_cast<long double>(A);
        long double prod = 1.0L;
        for (std::int64_t i = 1; i <= B; ++i) prod *= (x - static_cast<long double>(i));
        tab[static_cast<std::size_t>(m)] = tab[static_cast<std::size_t>(m - A)] * prod;
      }
    }
    return tab;
  }

  std::mutex mu_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<std::vector<long double>>>
      cache_;
};

LatticeTable& lattice_table() {
  static LatticeTable t;
  return t;
}

}  // namespace

Complex gamma(Complex z) {
  if (near_nonpositive_integer(z, 1e-12))
    throw PoleOfGamma("gamma: argument within 1e-12 of a nonpositive integer");
  const CLD zl(z.real(), z.imag());
  if (z.real() >= 0.5) {
    const CLD g = gamma_core(zl);
    return Complex(static_cast<double>(g.real()), static_cast<double>(g.imag()));
  }
  // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
  const CLD s = std::sin(kPiL * zl);
  const CLD g = kPiL / (s * gamma_core(1.0L - zl));
  return Complex(static_cast<double>(g.real()), static_cast<double>(g.imag()));
}

Complex recip_gamma(Complex z) {
  if (near_nonpositive_integer(z, 1e-12)) return Complex(0.0, 0.0);
  if (z.imag() == 0.0) {
    return Complex(static_cast<double>(recip_gamma_real_ld(static_cast<long double>(z.real()))),
                   0.0);
  }
  return 1.0 / gamma(z);
}

double recip_gamma(const Rational& x) {
  return static_cast<double>(recip_gamma_rational_ld(x));
}

KernelParams KernelParams::for_alpha(Rational alpha, double tol, int max_terms) {
  if (!(alpha > Rational(1)))
    throw std::invalid_argument("KernelParams: alpha must exceed 1");
  if (!(tol > 0.0) || max_terms < 1)
    throw std::invalid_argument("KernelParams: tol > 0 and max_terms >= 1 required");
  KernelParams kp;
  kp.alpha = alpha;
  kp.beta = alpha / (alpha - Rational(1));  // 1/alpha + 1/beta = 1 exactly
  kp.tol = tol;
  kp.max_terms = max_terms;
  return kp;
}

KernelEval kernel_series(const KernelParams& params, Complex tau, int deriv) {
  if (deriv < 0) throw std::invalid_argument("kernel_series: deriv >= 0");
  const auto tab = lattice_table().get(params.alpha, params.max_terms + deriv + 1);

  const CLD mt(-tau.real(), -tau.imag());
  const long double abs_tau = std::abs(mt);
  CLD pow_term(1.0L, 0.0L);  // (-tau)^m / m!
  CLD acc(0.0L, 0.0L), comp(0.0L, 0.0L);
  long double abs_sum = 0.0L;
  int consecutive_small = 0;
  int used = 0;
  bool converged = false;

  for (int m = 0; m < params.max_terms; ++m) {
    const CLD term = pow_term * (*tab)[static_cast<std::size_t>(m + deriv)];
    // Kahan-compensated accumulation; the series cancels heavily for large |tau|.
    const CLD y = term - comp;
    const CLD t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    abs_sum += std::abs(term);

    const long double tmag = std::abs(term);
    consecutive_small = (tmag < static_cast<long double>(params.tol) / 10.0L)
                            ? consecutive_small + 1
                            : 0;
    used = m + 1;
    if (consecutive_small >= 3 && static_cast<long double>(m) > 2.0L * abs_tau) {
      converged = true;
      break;
    }
    pow_term *= mt / static_cast<long double>(m + 1);
  }
  if (!converged)
    throw SeriesNotConverged("kernel_series: tail bound not reached within max_terms");

  if (deriv % 2 == 1) acc = -acc;
  KernelEval out;
  out.value = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  // Roundoff scales with the total term mass (cancellation); truncation with tol.
  const double roundoff =
      static_cast<double>(abs_sum) * 2.2e-19 * (2.0 + std::sqrt(static_cast<double>(used)));
  out.abs_err = roundoff + 0.5 * params.tol + 1.1e-16 * std::abs(out.value);
  out.low_confidence = std::abs(tau) > 30.0;
  return out;
}

Complex kernel_C(const KernelParams& params, Complex tau) {
  return kernel_series(params, tau, 0).value;
}

double kernel_decay_rate(const Rational& alpha) {
  const double a = alpha.value();
  return (1.0 - 1.0 / a) * std::pow(a, -1.0 / (a - 1.0));
}

}  // namespace borelsum
