#ifndef FCD_PARAMS_HPP
#define FCD_PARAMS_HPP

namespace fcd {

// Physical parameters of u_t + (-Delta)^(alpha/2) u + (|u|^(q-1) u / q)_x = 0.
// Default validation enforces the subcritical ordering 1 < q < alpha < 2;
// relaxed mode only requires q > 1 and alpha in (0, 2].
struct ModelParams {
  double alpha = 1.5;
  double q = 1.2;
  double mass = 1.0;
  bool relaxed = false;
};

ModelParams make_model_params(double alpha, double q, double mass, bool relaxed = false);
void validate_model_params(const ModelParams& params);

}  // namespace fcd

#endif
