#include "fcd/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcd {

void validate_model_params(const ModelParams& params) {
  if (!std::isfinite(params.alpha) || !std::isfinite(params.q) || !std::isfinite(params.mass)) {
    throw std::invalid_argument("model parameters must be finite");
  }
  if (!(params.mass > 0.0)) {
    throw std::invalid_argument("mass must be positive, got " + std::to_string(params.mass));
  }
  if (!(params.q > 1.0)) {
    throw std::invalid_argument("convection exponent q must exceed 1, got " +
                                std::to_string(params.q));
  }
  if (params.relaxed) {
    if (!(params.alpha > 0.0) || !(params.alpha <= 2.0)) {
      throw std::invalid_argument("relaxed mode requires alpha in (0, 2], got " +
                                  std::to_string(params.alpha));
    }
    return;
  }
  if (!(params.q < params.alpha) || !(params.alpha < 2.0)) {
    throw std::invalid_argument("subcritical mode requires 1 < q < alpha < 2, got q = " +
                                std::to_string(params.q) + ", alpha = " +
                                std::to_string(params.alpha) +
                                " (pass relaxed mode to lift the ordering)");
  }
}

ModelParams make_model_params(double alpha, double q, double mass, bool relaxed) {
  ModelParams params{alpha, q, mass, relaxed};
  validate_model_params(params);
  return params;
}

}  // namespace fcd
