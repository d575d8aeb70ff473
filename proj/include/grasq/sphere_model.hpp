#pragma once

#include <array>
#include <vector>

#include "grasq/grassmann.hpp"

namespace grasq {

/// Point of the complexified sphere x^2 + y^2 + z^2 = 1 in C^3. The real
/// locus is S^2; the disk locus (x, y purely imaginary, z real >= 1) is the
/// hyperboloid model of the unit disk.
struct SpherePoint {
  Complex x, y, z;

  SpherePoint(Complex x, Complex y, Complex z, double tol = 1e-10);
  static SpherePoint real_locus(double theta, double phi);
  /// Hyperboloid point (i a, i b, sqrt(1 + a^2 + b^2)).
  static SpherePoint disk_locus(double a, double b);

  bool on_real_locus(double tol = 1e-12) const;
  bool on_disk_locus(double tol = 1e-12) const;
  SpherePoint conjugated() const;
};

/// Trace-1 idempotent realizing the point: q = (1 + x s1 + y s2 + z s3)/2 in
/// the Pauli representation. Hermitian iff the point is real.
ProjectionPoint sphere_projection(const SpherePoint& p);

/// Complexified cross product J(a,b,c) = (x,y,z) x (a,b,c) on the tangent
/// plane x a + y b + z c = 0; squares to -1 there.
std::array<Complex, 3> sphere_J(const SpherePoint& p,
                                const std::array<Complex, 3>& tangent,
                                double tol = 1e-10);

/// Stereographic chart pair: u is the chart coordinate, utilde the
/// independent continuation of its conjugate. North pole is u = 0.
struct ChartPoint {
  Complex u;
  Complex utilde;
};

ChartPoint to_chart(const SpherePoint& p);
SpherePoint from_chart(const ChartPoint& c);

/// Sphere kernel P(z1, z2) = (1 + utilde1 u2) / (1 + utilde1 u1); on the
/// real locus this is (1 + conj(z1) z2)/(1 + |z1|^2). Throws ChartError at
/// the chart pole 1 + utilde1 u1 = 0.
Complex sphere_kernel(const ChartPoint& z1, const ChartPoint& z2);

/// Disk kernel family (1 - utilde1 u2)/(1 - utilde1 u1), continued the same
/// way.
Complex disk_kernel(const ChartPoint& z1, const ChartPoint& z2);

/// | quadrature of  P(z1,u) P(u,z2) dmu(u)  -  P(z1,z2) | over the real
/// locus, dmu = 2 x (Fubini-Study probability measure): Gauss-Legendre in
/// cos(theta) times trapezoid in phi, total mass 2 = dim H.
double sphere_idempotency_residual(const ChartPoint& z1, const ChartPoint& z2,
                                   int n_theta = 32, int n_phi = 64);

/// Knobs of the disk<->sphere identification that the product identity is
/// sensitive to; the paper does not pin them down, so results are reported,
/// not asserted.
struct DeltaProductConfig {
  Complex chart_factor{0.0, -1.0};  ///< v = chart_factor * u
  bool reverse_cycle = false;
  bool conjugate_kernel = true;     ///< use the conjugate-continued disk kernel
};

struct DeltaProductResult {
  Complex delta_sphere;
  Complex delta_disk;
  Complex product;
};

DeltaProductResult delta_product_explorer(const SpherePoint& p1,
                                          const SpherePoint& p2,
                                          const SpherePoint& p3,
                                          const DeltaProductConfig& config);

/// All 8 combinations of the identification knobs.
std::vector<std::pair<DeltaProductConfig, DeltaProductResult>>
delta_product_sweep(const SpherePoint& p1, const SpherePoint& p2,
                    const SpherePoint& p3);

}  // namespace grasq
