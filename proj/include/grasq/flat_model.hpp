#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "grasq/core.hpp"

namespace grasq {

/// Point of the flat model C^2 (coordinates z and the independent
/// continuation zbar of its conjugate) with model parameter hbar. On the
/// Kahler slice x2 = y2 = 0, zbar is the honest conjugate of z.
struct FlatPoint {
  Complex z;
  Complex zbar;
  double hbar;

  /// z = (x1 + i x2) + i (y1 + i y2), zbar = (x1 + i x2) - i (y1 + i y2).
  static FlatPoint from_coords(double x1, double x2, double y1, double y2,
                               double hbar);
  static FlatPoint continued(Complex z, Complex zbar, double hbar);

  bool on_real_locus(double tol = 1e-12) const {
    return std::abs(zbar - std::conj(z)) <= tol;
  }
};

/// Real 4-coordinates (x1, x2, y1, y2) of a point of R^4 = C^2.
struct FlatCoords {
  double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;
};

/// Idempotent kernel P(p,w) = exp(-(z zbar_p + w wbar_w - 2 zbar_p w)/(4 hbar));
/// equals 1 on the diagonal of the real locus.
Complex flat_kernel(const FlatPoint& p, const FlatPoint& w);

/// Gauss-Hermite (order-per-axis) evaluation of
/// | integral_M P(p,u) P(u,w) du1 du2 / (2 pi hbar)  -  P(p,w) |
/// over the slice M = {x2 = y2 = 0}. Throws QuadratureDomainError when the
/// continued endpoints violate the Gaussian-decay condition Re(z zbar) > 0
/// or the integrand overflows at the outer nodes.
double flat_idempotency_residual(const FlatPoint& p, const FlatPoint& w,
                                 int order);

enum class FlatSlice { kKahler, kRealPolarized };

/// Covariant derivative (connection form
/// A = (i/2hbar)((x1+ix2) d(y1+iy2) - (y1+iy2) d(x1+ix2)), nabla = d - A)
/// of u -> P(p0, u) at w along the slice's polarized direction:
/// dx1 + i dy1 on the Kahler slice, dx1 + dy2 on the real-polarized one.
/// Returns the modulus.
double flat_polarization_residual(const FlatPoint& p0, const FlatCoords& w,
                                  FlatSlice slice, double hbar,
                                  double fd_step = 1e-4);

/// Same derivative along an arbitrary complexified coordinate direction;
/// used for the not-polarized sanity direction.
double flat_direction_residual(const FlatPoint& p0, const FlatCoords& w,
                               const std::array<Complex, 4>& direction,
                               double hbar, double fd_step = 1e-4);

/// Exact integer-matrix identities of the R^4 tessarine frame: the I/J/K
/// table, compatibility with Omega = d(x1+ix2) ^ d(y1+iy2), the two slices'
/// Kahler/Lagrangian splits, and the anticommuting J' table. Returns named
/// residuals (zero tolerance applies to all of them).
std::vector<std::pair<std::string, double>> tessarine_flat_check();

}  // namespace grasq
