#include "dac/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dac {
namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Halley iteration on f(w) = w*exp(w) - z. Returns the refined w; the caller
// checks the residual.
cplx halley(cplx w, cplx z) {
  for (int it = 0; it < 100; ++it) {
    const cplx ew = std::exp(w);
    const cplx f = w * ew - z;
    const cplx wp1 = w + 1.0;
    const cplx denom = ew * wp1 - f * (w + 2.0) / (2.0 * wp1);
    if (denom == 0.0) break;
    const cplx step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-14 * (1.0 + std::abs(w))) break;
  }
  return w;
}

// Series around the branch point z = -1/e, p = +/- sqrt(2(e z + 1)).
cplx branch_point_guess(cplx z, double sign) {
  const cplx p = sign * std::sqrt(2.0 * (std::exp(1.0) * z + 1.0));
  return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
}

cplx initial_guess(int k, cplx z) {
  const double e_inv = std::exp(-1.0);
  if (k == 0) {
    if (std::abs(z + e_inv) < 0.25) return branch_point_guess(z, +1.0);
    if (std::abs(z) < 1.0) return z * (1.0 - z + 1.5 * z * z);
    const cplx l = std::log(z);
    return l - std::log(l);
  }
  if (k == -1) {
    if (z.imag() == 0.0 && z.real() < 0.0 && z.real() > -e_inv) {
      // Real segment of branch -1.
      const double lz = std::log(-z.real());
      return cplx(lz - std::log(-lz), 0.0);
    }
    if (std::abs(z + e_inv) < 0.25) return branch_point_guess(z, -1.0);
  }
  const cplx l = std::log(z) + cplx(0.0, 2.0 * kPi * k);
  return l - std::log(l);
}

bool in_branch_strip(int k, cplx w) {
  const double im = w.imag();
  const double tol = 1e-9;
  if (k == -1 && std::abs(im) <= tol) return true;  // real segment of W_{-1}
  // Branch regions are bounded by curved separatrices, not exact horizontal
  // lines: after the half-plane reduction the only direct case that can
  // leave the nominal strip is a negative branch evaluated above the cut,
  // which may reach up to one extra pi toward the real axis.
  const double hi = (k < 0 ? 2 * k + 2 : 2 * k + 1) * kPi;
  return im > (2 * k - 1) * kPi - tol && im <= hi + tol;
}

}  // namespace

cplx lambert_w(int branch, cplx z) {
  if (!finite(z)) throw std::domain_error("lambert_w: non-finite argument");

  if (z == 0.0) {
    if (branch == 0) return 0.0;
    throw std::domain_error("lambert_w: z = 0 is a singularity of branch k != 0");
  }

  const double e_inv = std::exp(-1.0);

  // Reduce to the closed upper half-plane through the conjugate symmetry
  // W_k(conj z) = conj(W_{-k}(z)). On the negative real axis (the branch
  // cut) the negative branches close from above, which shifts the pairing
  // by one: W_k(x) = conj(W_{-k-1}(x)) for x < 0, k <= -1. That closure
  // makes branches 0 and -1 conjugates on (-inf, -1/e), so their real
  // parts tie there. The real segment of branch -1 stays direct.
  if (z.imag() < 0.0) return std::conj(lambert_w(-branch, std::conj(z)));
  if (z.imag() == 0.0 && branch < 0) {
    if (z.real() > 0.0) return std::conj(lambert_w(-branch, z));
    if (!(branch == -1 && z.real() >= -e_inv))
      return std::conj(lambert_w(-branch - 1, z));
  }
  // Branch point: W_0(-1/e) = W_{-1}(-1/e) = -1 exactly.
  if ((branch == 0 || branch == -1) && z.imag() == 0.0 &&
      std::abs(z.real() + e_inv) <= 4.0 * std::numeric_limits<double>::epsilon()) {
    return cplx(-1.0, 0.0);
  }

  cplx w = halley(initial_guess(branch, z), z);

  const double res_tol = 1e-11 * (1.0 + std::abs(z));
  if (std::abs(w * std::exp(w) - z) > res_tol || !in_branch_strip(branch, w)) {
    // Branch-targeted fallback: with arg z in [0, pi] (after the half-plane
    // reduction above) the root on branch k satisfies
    //   w + Log w = Log z + 2 pi i k,
    // which pins the branch index explicitly. Newton on that form cannot
    // hop branches; a final Halley pass restores full residual accuracy.
    const cplx l = std::log(z) + cplx(0.0, 2.0 * kPi * branch);
    cplx v = l - std::log(l + cplx(1e-30, 0.0));
    for (int it = 0; it < 100; ++it) {
      const cplx f = v + std::log(v) - l;
      const cplx step = f / (1.0 + 1.0 / v);
      v -= step;
      if (std::abs(step) <= 1e-14 * (1.0 + std::abs(v))) break;
    }
    w = halley(v, z);
  }

  // Branch 0 on [-1/e, inf) and branch -1 on [-1/e, 0) are real; the
  // iteration preserves zero imaginary part when the guess is real, so any
  // residual imaginary dust here is roundoff.
  if (z.imag() == 0.0 &&
      ((branch == 0 && z.real() >= -e_inv) ||
       (branch == -1 && z.real() < 0.0 && z.real() >= -e_inv))) {
    w = cplx(w.real(), 0.0);
  }
  return w;
}

cplx lambert_w_derivative(int branch, cplx z) {
  const cplx w = lambert_w(branch, z);
  const cplx denom = z + std::exp(w);
  if (std::abs(denom) < 1e-12 * (1.0 + std::abs(z)))
    throw std::domain_error("lambert_w_derivative: branch-point singularity");
  return 1.0 / denom;
}

}  // namespace dac
