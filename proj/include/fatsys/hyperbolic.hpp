#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace fatsys::hyperbolic {

/// Height m of P(l, kl, kl) with respect to the waist of length l:
///   cosh l' = (cosh(l/2) cosh(kl/2) + cosh(kl/2)) / (sinh(l/2) sinh(kl/2))
///   cosh(m/2) = sinh(kl/2) sinh l'
double pants_height(double l, double k);

/// Height of P(l, l, l) in the cosh form:
///   cosh l' = (cosh^2(l/2) + cosh(l/2)) / sinh(l/2)
///   cosh(m/2) = sinh(l/2) cosh l'
double pants_height_equilateral(double l);

/// Distance between two boundary components of P(l, l, l):
/// asinh(1 / (2 sinh(l/4))).
double pants_boundary_distance(double l);

/// Multiplicative quasi-geodesic constant for two geodesic segments meeting
/// at interior angle alpha in (0, pi).
double quasi_constant(double alpha);

struct QuasiParams {
  double alpha = 0;
  double k_alpha = 0;
  double corridor_width = 0;
  /// Additive constant of the global quasi-geodesic; no closed form.
  std::optional<double> epsilon_quasi;
};

QuasiParams quasi_params(double alpha, double corridor_width);

struct Bounds {
  double lower = 0;
  double upper = 0;
};

/// Ratio bounds for a segment crossing a corridor of width W along a
/// geodesic of length gamma_length: (1, 1 + 2W / gamma_length).
Bounds corridor_bounds(double width, double gamma_length);

/// First branch of a(l): 2 asinh(1 / (2 sinh(l/2))).
double gap_branch_distance(double l);
/// Second branch of a(l): acosh(1 + (1 + cosh(l/2)) / sinh^2 l).
double gap_branch_height(double l);
/// a(l), the minimum of the two branches.
double capping_gap(double l);
/// t(l) = floor(l / a(l)) + 1.
long capping_girth(double l);

struct Point {
  double x = 0;
  double y = 1;
};

/// Upper half-plane distance acosh(1 + |p - q|^2 / (2 y_p y_q)).
double hyp_distance(Point p, Point q);

struct TwoSegmentReport {
  double alpha = 0;
  double k_alpha = 0;
  std::size_t samples = 0;
  /// min of k(alpha) * d_E(B, C) / (t1 + t2) over samples
  double min_euclidean_ratio = 0;
  /// min of k(alpha) * d_H(P, Q) / (t1 + t2) over samples
  double min_hyperbolic_ratio = 0;
};

/// Samples (t1, t2) in (0, l1] x (0, l2] and checks the two-segment claim
/// in the Euclidean comparison triangle and for geodesic segments in the
/// upper half-plane. alpha = pi (a straight line) uses k = 1.
TwoSegmentReport twoseg_quasi_check(double l1, double l2, double alpha, std::size_t samples,
                                    unsigned long long seed = 1);

struct PantsInventory {
  std::size_t terminal = 0;  // P(l, 2l, 2l)
  std::size_t interior = 0;  // P(2l, 2l, 2l)
};

struct CapPlanEntry {
  double l = 0;
  double gap = 0;
  long girth_required = 0;   // t(l)
  int girth_used = 0;        // max(t(l), 4)
  std::size_t vertex_count = 0;
  /// Girth measured on the generated graph; unset when the graph was too
  /// large to materialize.
  std::optional<std::size_t> girth_measured;
  PantsInventory pants;
  double branch_distance = 0;  // 2 asinh(1 / (2 sinh(l/2)))
  double branch_height = 0;    // acosh(1 + (1 + cosh(l/2)) / sinh^2 l)
};

struct CappingPlan {
  std::vector<CapPlanEntry> entries;
};

/// Plans the capping surfaces; graphs with girth above
/// `max_materialized_girth` are counted by formula instead of generated.
CappingPlan cap_plan(const std::vector<double>& boundary_lengths, int max_materialized_girth = 40);

}  // namespace fatsys::hyperbolic
