#ifndef FCD_INTERP_HPP
#define FCD_INTERP_HPP

#include <vector>

namespace fcd {

// Shape-preserving cubic interpolant (Fritsch-Carlson slopes). Monotone data
// stays monotone between nodes; no overshoot near steep transitions, which
// matters when resampling solution profiles with sharp fronts.
class PchipInterpolant {
 public:
  PchipInterpolant() = default;
  // Nodes must be strictly increasing and at least two.
  PchipInterpolant(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;  // throws outside [front, back]
  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

  // Exact integral of the piecewise cubic over [a, b] within the node range.
  double integrate(double a, double b) const;

 private:
  double piece_integral(std::size_t i, double a, double b) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> slope_;
};

}  // namespace fcd

#endif
