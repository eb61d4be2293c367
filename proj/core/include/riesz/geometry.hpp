#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>
#include <vector>

namespace riesz {

enum class DomainKind { ball, ellipsoid, box };

/// A finite-measure convex domain in R^d, immutable after construction.
/// Balls and ellipsoids are the strictly convex smooth kinds eligible for the
/// lower-bound machinery; boxes are admitted for upper-bound experiments only.
class ConvexDomain {
 public:
  static ConvexDomain ball(int dim, double radius);
  static ConvexDomain ellipsoid(std::vector<double> semi_axes);
  static ConvexDomain box(std::vector<double> sides);

  DomainKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  /// Shape parameters: radius (ball), semi-axes (ellipsoid), side lengths (box).
  const std::vector<double>& parameters() const { return params_; }

  double measure() const;
  /// R_Omega: diameter of the largest ball inscribed in the domain.
  double inner_diameter() const;
  double diameter() const;
  bool strictly_convex_smooth() const { return kind_ != DomainKind::box; }

  bool contains(const Eigen::VectorXd& x) const;

  /// Boundary function P with P = 0 and |grad P| = 1 on the boundary,
  /// positive inside. Only available for the smooth kinds.
  double boundary_fn(const Eigen::VectorXd& x) const;

  std::pair<Eigen::VectorXd, Eigen::VectorXd> bounding_box() const;

 private:
  ConvexDomain(DomainKind kind, int dim, std::vector<double> params);

  DomainKind kind_;
  int dim_;
  std::vector<double> params_;
};

/// Overlap function eta(z) = |Omega intersect (Omega + z)|, exact closed form.
/// Balls: lens volume; ellipsoids: affine reduction to the unit ball; boxes:
/// product of clipped side overlaps.
double overlap(const ConvexDomain& domain, const Eigen::VectorXd& z);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Monte-Carlo estimate of eta(z) by uniform sampling of the bounding box.
/// Deterministic for a fixed seed: the sample budget is split across 64 fixed
/// shards with independent streams and integer hit counts, so the reduction
/// does not depend on evaluation order. Throws if samples == 0.
McEstimate overlap_mc(const ConvexDomain& domain, const Eigen::VectorXd& z,
                      std::uint64_t samples = 1000000, std::uint64_t seed = 12345);

struct DerivativeFit {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Boundary coefficient A_Omega(direction): the one-sided derivative of
/// r -> eta(r * direction) at r = 0+, extracted by a 3-level Richardson
/// scheme with base step inner_diameter()/64. Requires a strictly convex
/// smooth domain; throws if the extrapolation error exceeds
/// rel_tol * |value|.
DerivativeFit boundary_coefficient(const ConvexDomain& domain, const Eigen::VectorXd& direction,
                                   double rel_tol = 1e-2);

/// Closed form for the ball of radius R: -R^{d-1} |S^{d-2}| / (d-1).
double ball_boundary_coefficient(int d, double radius);

/// First-order overlap expansion eta(r, dir) ~ measure + r * A(dir), sampled
/// over a set of directions.
struct OverlapExpansion {
  double measure = 0.0;
  std::vector<Eigen::VectorXd> directions;
  std::vector<double> a_samples;
  std::vector<double> a_errors;
  double r_max = 0.0;
};

OverlapExpansion expansion(const ConvexDomain& domain,
                           const std::vector<Eigen::VectorXd>& directions);

}  // namespace riesz
