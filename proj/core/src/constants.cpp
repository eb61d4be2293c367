#include "riesz/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace riesz {

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("gamma_fn: argument must be positive");
  return std::tgamma(x);
}

double unit_sphere_measure(int d) {
  if (d < 1) throw std::invalid_argument("unit_sphere_measure: d must be >= 1");
  return 2.0 * std::pow(pi, 0.5 * d) / gamma_fn(0.5 * d);
}

double unit_ball_volume(int d) {
  if (d < 1) throw std::invalid_argument("unit_ball_volume: d must be >= 1");
  return unit_sphere_measure(d) / d;
}

}  // namespace riesz
