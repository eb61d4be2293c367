#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

namespace riesz {

/// Gauss-Legendre rule on [-1, 1]. Nodes/weights are computed once per order
/// and cached; orders up to 64 are supported.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  static const GaussLegendre& get(int order);
};

/// Integrate f over [a, b] with an n-point Gauss rule (no error control).
double integrate_gauss(const std::function<double(double)>& f, double a, double b, int order);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b]. Splits the worst interval until
/// the global error estimate drops below abs_tol + rel_tol * |value|.
/// Integrable endpoint singularities are fine; they just cost more splits.
/// Throws std::runtime_error if max_intervals is exhausted before convergence.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol = 1e-12,
                                    int max_intervals = 40000);

/// Quadrature rule on the unit sphere S^{d-1} integrating against the surface
/// measure (total weight |S^{d-1}|). d = 2 uses the periodic trapezoid rule
/// (exact for trigonometric polynomials of degree < n); d = 3 a product
/// Gauss-in-cos(theta) x trapezoid-in-phi grid.
struct SphereRule {
  int dim = 0;  // ambient dimension d, sphere is S^{d-1}
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> weights;

  /// d = 2: `points` nodes (default 32). d = 3: product grid with ~`points`
  /// nodes (default 110: 10 polar x 11 azimuthal).
  static SphereRule make(int dim, int points = 0);

  double integrate(const std::function<double(const Eigen::VectorXd&)>& f) const;
  std::size_t size() const { return nodes.size(); }
};

}  // namespace riesz
