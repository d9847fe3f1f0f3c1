#ifndef FCD_QUADRATURE_HPP
#define FCD_QUADRATURE_HPP

#include <functional>

namespace fcd {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // estimate, not a rigorous bound
  bool converged = true;
};

// Adaptive Gauss-Kronrod 15(7) on [a, b]. Bisects until the summed error
// estimate drops below abs_tol or the interval budget runs out; in the latter
// case the result is still returned with converged = false.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int max_intervals = 2000);

enum class Oscillator { cosine, sine };

// Integral of trig(freq * x) * exp(-tcoef * x^alpha) * x^power over (0, inf).
// The exponential factor fixes an effective cutoff; past it the integrand is
// below 1e-18 of scale and is dropped. For small freq the truncated integral
// is handled by one adaptive pass; otherwise it is split at the trig zeros
// and the (alternating, decaying) piece integrals are summed directly.
// Accuracy target is abs_tol, default tuned for profile evaluation.
QuadResult oscillatory_integral(Oscillator trig, double freq, double power, double alpha,
                                double tcoef, double abs_tol = 1e-11);

}  // namespace fcd

#endif
