#include "riesz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

#include "riesz/constants.hpp"

namespace riesz {

namespace {

GaussLegendre compute_gauss(int n) {
  // Newton iteration on P_n with the usual cosine initial guess.
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendre& GaussLegendre::get(int order) {
  if (order < 1 || order > 64) throw std::invalid_argument("GaussLegendre: order out of range");
  static std::map<int, GaussLegendre> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
  return it->second;
}

double integrate_gauss(const std::function<double(double)>& f, double a, double b, int order) {
  const auto& rule = GaussLegendre::get(order);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

namespace {

// Kronrod-15 extension of Gauss-7 (QUADPACK constants).
constexpr double kK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double fc = f(mid);
  double gauss = fc * kG7Weights[3];
  double kron = fc * kK15Weights[7];
  for (int i = 0; i < 7; ++i) {
    double dx = half * kK15Nodes[i];
    double fsum = f(mid - dx) + f(mid + dx);
    kron += fsum * kK15Weights[i];
    if (i % 2 == 1) gauss += fsum * kG7Weights[i / 2];
  }
  kron *= half;
  gauss *= half;
  double err = std::abs(kron - gauss);
  // QUADPACK-style sharpening of the raw difference.
  err = err * std::min(1.0, std::pow(200.0 * err / (std::abs(kron) + 1e-300), 1.5));
  return {a, b, kron, std::max(err, std::abs(kron) * 1e-16)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals) {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0))
    throw std::invalid_argument("integrate_adaptive: tolerances must be non-negative");
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Interval> queue;
  queue.push(gk15(f, a, b));
  double total = queue.top().value;
  double total_err = queue.top().error;
  int n = 1;
  while (total_err > abs_tol + rel_tol * std::abs(total)) {
    if (n >= max_intervals)
      throw std::runtime_error("integrate_adaptive: failed to converge (interval budget exhausted)");
    Interval worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval narrowed to machine resolution; accept its estimate.
      queue.push({worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    Interval left = gk15(f, worst.a, mid);
    Interval right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n;
  }
  return {total, total_err, n};
}

SphereRule SphereRule::make(int dim, int points) {
  SphereRule rule;
  rule.dim = dim;
  if (dim == 1) {
    // S^0 = {-1, +1} with unit weights.
    for (double s : {-1.0, 1.0}) {
      Eigen::VectorXd v(1);
      v << s;
      rule.nodes.push_back(v);
      rule.weights.push_back(1.0);
    }
  } else if (dim == 2) {
    int n = points > 0 ? points : 32;
    double w = 2.0 * pi / n;
    for (int j = 0; j < n; ++j) {
      double th = 2.0 * pi * j / n;
      Eigen::VectorXd v(2);
      v << std::cos(th), std::sin(th);
      rule.nodes.push_back(v);
      rule.weights.push_back(w);
    }
  } else if (dim == 3) {
    int target = points > 0 ? points : 110;
    int n_polar = std::max(2, static_cast<int>(std::round(std::sqrt(target / 1.1))));
    int n_az = std::max(3, (target + n_polar - 1) / n_polar);
    const auto& gl = GaussLegendre::get(n_polar);
    double waz = 2.0 * pi / n_az;
    for (int i = 0; i < n_polar; ++i) {
      double u = gl.nodes[i];  // cos(theta)
      double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (int j = 0; j < n_az; ++j) {
        double phi = 2.0 * pi * j / n_az;
        Eigen::VectorXd v(3);
        v << s * std::cos(phi), s * std::sin(phi), u;
        rule.nodes.push_back(v);
        rule.weights.push_back(gl.weights[i] * waz);
      }
    }
  } else {
    throw std::invalid_argument("SphereRule: only d = 1, 2, 3 supported");
  }
  return rule;
}

double SphereRule::integrate(const std::function<double(const Eigen::VectorXd&)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

}  // namespace riesz
