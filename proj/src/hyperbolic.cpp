#include "fatsys/hyperbolic.hpp"

#include "fatsys/errors.hpp"
#include "fatsys/generators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

namespace fatsys::hyperbolic {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

double checked_acosh(double x) {
  if (!(x >= 1)) throw DomainError("acosh argument below 1: " + std::to_string(x));
  return std::acosh(x);
}

}  // namespace

double pants_height(double l, double k) {
  require_positive(l, "waist length");
  require_positive(k, "multiplier");
  const double kl2 = k * l / 2;
  const double cosh_lp = (std::cosh(l / 2) * std::cosh(kl2) + std::cosh(kl2)) / (std::sinh(l / 2) * std::sinh(kl2));
  const double lp = checked_acosh(cosh_lp);
  return 2 * checked_acosh(std::sinh(kl2) * std::sinh(lp));
}

double pants_height_equilateral(double l) {
  require_positive(l, "waist length");
  const double c = std::cosh(l / 2);
  const double cosh_lp = (c * c + c) / std::sinh(l / 2);
  return 2 * checked_acosh(std::sinh(l / 2) * cosh_lp);
}

double pants_boundary_distance(double l) {
  require_positive(l, "boundary length");
  return std::asinh(1 / (2 * std::sinh(l / 4)));
}

double quasi_constant(double alpha) {
  if (!(alpha > 0 && alpha < std::numbers::pi)) throw DomainError("angle must lie in (0, pi)");
  if (alpha <= std::numbers::pi / 2) return 1 / std::sin(alpha) + std::cos(alpha) / std::sin(alpha) + 1;
  return 1 / std::sin(alpha) + 1;
}

QuasiParams quasi_params(double alpha, double corridor_width) {
  require_positive(corridor_width, "corridor width");
  return {alpha, quasi_constant(alpha), corridor_width, std::nullopt};
}

Bounds corridor_bounds(double width, double gamma_length) {
  require_positive(width, "corridor width");
  require_positive(gamma_length, "corridor length");
  return {1.0, 1.0 + 2 * width / gamma_length};
}

double gap_branch_distance(double l) {
  require_positive(l, "boundary length");
  return 2 * std::asinh(1 / (2 * std::sinh(l / 2)));
}

double gap_branch_height(double l) {
  require_positive(l, "boundary length");
  const double s = std::sinh(l);
  return checked_acosh(1 + (1 + std::cosh(l / 2)) / (s * s));
}

double capping_gap(double l) { return std::min(gap_branch_distance(l), gap_branch_height(l)); }

long capping_girth(double l) { return static_cast<long>(std::floor(l / capping_gap(l))) + 1; }

double hyp_distance(Point p, Point q) {
  if (!(p.y > 0) || !(q.y > 0)) throw DomainError("upper half-plane points need positive height");
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  // 2 asinh(|p - q| / (2 sqrt(y_p y_q))) is the cancellation-free form
  return 2 * std::asinh(std::sqrt(dx * dx + dy * dy) / (2 * std::sqrt(p.y * q.y)));
}

namespace {

// Point at hyperbolic distance t from i, leaving i at angle theta from the
// upward vertical (disc model, then Cayley map).
Point from_base(double t, double theta) {
  const std::complex<double> w = std::tanh(t / 2) * std::polar(1.0, theta);
  const std::complex<double> z = std::complex<double>(0, 1) * (1.0 + w) / (1.0 - w);
  return {z.real(), z.imag()};
}

}  // namespace

TwoSegmentReport twoseg_quasi_check(double l1, double l2, double alpha, std::size_t samples,
                                    unsigned long long seed) {
  require_positive(l1, "segment length");
  require_positive(l2, "segment length");
  if (samples == 0) throw BadParameter("samples must be positive");
  if (!(alpha > 0 && alpha <= std::numbers::pi)) throw DomainError("angle must lie in (0, pi]");
  const double k = alpha == std::numbers::pi ? 1.0 : quasi_constant(alpha);

  TwoSegmentReport r{alpha, k, samples, std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < samples; ++i) {
    // (0, l] including the endpoints of the segments
    const double t1 = i == 0 ? l1 : l1 * (1.0 - unit(rng));
    const double t2 = i == 0 ? l2 : l2 * (1.0 - unit(rng));
    const double euclid = std::sqrt(std::max(0.0, t1 * t1 + t2 * t2 - 2 * t1 * t2 * std::cos(alpha)));
    const double hyper = hyp_distance(from_base(t1, 0.0), from_base(t2, alpha));
    r.min_euclidean_ratio = std::min(r.min_euclidean_ratio, k * euclid / (t1 + t2));
    r.min_hyperbolic_ratio = std::min(r.min_hyperbolic_ratio, k * hyper / (t1 + t2));
  }
  return r;
}

CappingPlan cap_plan(const std::vector<double>& boundary_lengths, int max_materialized_girth) {
  CappingPlan plan;
  for (double l : boundary_lengths) {
    require_positive(l, "boundary length");
    CapPlanEntry e;
    e.l = l;
    e.branch_distance = gap_branch_distance(l);
    e.branch_height = gap_branch_height(l);
    e.gap = std::min(e.branch_distance, e.branch_height);
    e.girth_required = capping_girth(l);
    if (e.girth_required > std::numeric_limits<int>::max() / 4) {
      throw BadParameter("boundary length " + std::to_string(l) + " needs an unrepresentable girth");
    }
    e.girth_used = std::max<int>(static_cast<int>(e.girth_required), 4);
    e.vertex_count = unitrivalent_vertex_count(e.girth_used);
    if (e.girth_used <= max_materialized_girth) {
      const auto g = gen_unitrivalent_girth(e.girth_used);
      e.vertex_count = g.vertex_count();
      e.girth_measured = girth(g);
    }
    // one pair of pants per trivalent vertex; the leaf's neighbour carries
    // the boundary of length l
    e.pants.terminal = 1;
    e.pants.interior = e.vertex_count - 2;
    plan.entries.push_back(e);
  }
  return plan;
}

}  // namespace fatsys::hyperbolic
