#include "grasq/sphere_model.hpp"

#include <cmath>

#include "grasq/quadrature.hpp"

namespace grasq {

SpherePoint::SpherePoint(Complex x_, Complex y_, Complex z_, double tol)
    : x(x_), y(y_), z(z_) {
  const Complex c = x * x + y * y + z * z;
  if (std::abs(c - 1.0) > tol)
    throw ContractViolation("SpherePoint: constraint residual " +
                            std::to_string(std::abs(c - 1.0)));
}

SpherePoint SpherePoint::real_locus(double theta, double phi) {
  return SpherePoint(std::sin(theta) * std::cos(phi),
                     std::sin(theta) * std::sin(phi), std::cos(theta));
}

SpherePoint SpherePoint::disk_locus(double a, double b) {
  return SpherePoint(kImag * a, kImag * b, std::sqrt(1.0 + a * a + b * b));
}

bool SpherePoint::on_real_locus(double tol) const {
  return std::abs(std::imag(x)) <= tol && std::abs(std::imag(y)) <= tol &&
         std::abs(std::imag(z)) <= tol;
}

bool SpherePoint::on_disk_locus(double tol) const {
  return std::abs(std::real(x)) <= tol && std::abs(std::real(y)) <= tol &&
         std::abs(std::imag(z)) <= tol && std::real(z) >= 1.0 - tol;
}

SpherePoint SpherePoint::conjugated() const {
  return SpherePoint(std::conj(x), std::conj(y), std::conj(z));
}

ProjectionPoint sphere_projection(const SpherePoint& p) {
  Matrix q(2, 2);
  q << 0.5 * (1.0 + p.z), 0.5 * (p.x - kImag * p.y),
       0.5 * (p.x + kImag * p.y), 0.5 * (1.0 - p.z);
  return ProjectionPoint::trusted(std::move(q), 1);
}

std::array<Complex, 3> sphere_J(const SpherePoint& p,
                                const std::array<Complex, 3>& t, double tol) {
  const Complex pairing = p.x * t[0] + p.y * t[1] + p.z * t[2];
  if (std::abs(pairing) > tol)
    throw ContractViolation("sphere_J: input not tangent, <p,t> = " +
                            std::to_string(std::abs(pairing)));
  return {p.y * t[2] - p.z * t[1], p.z * t[0] - p.x * t[2],
          p.x * t[1] - p.y * t[0]};
}

ChartPoint to_chart(const SpherePoint& p) {
  if (std::abs(1.0 + p.z) < 1e-12)
    throw ChartError("to_chart: chart pole z = -1");
  return ChartPoint{(p.x + kImag * p.y) / (1.0 + p.z),
                    (p.x - kImag * p.y) / (1.0 + p.z)};
}

SpherePoint from_chart(const ChartPoint& c) {
  const Complex denom = 1.0 + c.u * c.utilde;
  if (std::abs(denom) < 1e-12)
    throw ChartError("from_chart: chart pole 1 + u utilde = 0");
  return SpherePoint((c.u + c.utilde) / denom,
                     (c.u - c.utilde) / (kImag * denom),
                     (1.0 - c.u * c.utilde) / denom);
}

Complex sphere_kernel(const ChartPoint& z1, const ChartPoint& z2) {
  const Complex denom = 1.0 + z1.utilde * z1.u;
  if (std::abs(denom) < 1e-12)
    throw ChartError("sphere_kernel: chart pole 1 + utilde1 u1 = 0");
  return (1.0 + z1.utilde * z2.u) / denom;
}

Complex disk_kernel(const ChartPoint& z1, const ChartPoint& z2) {
  const Complex denom = 1.0 - z1.utilde * z1.u;
  if (std::abs(denom) < 1e-12)
    throw ChartError("disk_kernel: pole 1 - utilde1 u1 = 0");
  return (1.0 - z1.utilde * z2.u) / denom;
}

double sphere_idempotency_residual(const ChartPoint& z1, const ChartPoint& z2,
                                   int n_theta, int n_phi) {
  const Quadrature1D gl = gauss_legendre(n_theta);
  Complex acc(0.0, 0.0);
  for (int i = 0; i < n_theta; ++i) {
    const double c = gl.nodes(i);  // cos(theta)
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * M_PI * j / n_phi;
      const SpherePoint u(s * std::cos(phi), s * std::sin(phi), c);
      const ChartPoint cu = to_chart(u);
      // uniform probability weight (1/2) d cos(theta) d phi / (2 pi),
      // scaled to total mass 2.
      const double w = 2.0 * gl.weights(i) / (2.0 * n_phi);
      acc += w * sphere_kernel(z1, cu) * sphere_kernel(cu, z2);
    }
  }
  return std::abs(acc - sphere_kernel(z1, z2));
}

DeltaProductResult delta_product_explorer(const SpherePoint& p1,
                                          const SpherePoint& p2,
                                          const SpherePoint& p3,
                                          const DeltaProductConfig& config) {
  const std::array<ChartPoint, 3> sp = {to_chart(p1), to_chart(p2),
                                        to_chart(p3)};
  std::array<ChartPoint, 3> dk;
  for (int i = 0; i < 3; ++i)
    dk[i] = ChartPoint{config.chart_factor * sp[i].u,
                       std::conj(config.chart_factor) * sp[i].utilde};

  auto cycle = [&](auto&& kernel, const std::array<ChartPoint, 3>& pts,
                   bool reverse) {
    const int a = 0, b = reverse ? 2 : 1, c = reverse ? 1 : 2;
    return kernel(pts[a], pts[b]) * kernel(pts[b], pts[c]) *
           kernel(pts[c], pts[a]);
  };

  DeltaProductResult out;
  out.delta_sphere = cycle(sphere_kernel, sp, false);
  if (config.conjugate_kernel) {
    // Conjugate-continued disk kernel: swap which slot carries the tilde.
    auto conj_disk = [](const ChartPoint& a, const ChartPoint& b) {
      const Complex denom = 1.0 - a.u * a.utilde;
      if (std::abs(denom) < 1e-12)
        throw ChartError("conjugate disk kernel: pole");
      return (1.0 - a.u * b.utilde) / denom;
    };
    out.delta_disk = cycle(conj_disk, dk, config.reverse_cycle);
  } else {
    out.delta_disk = cycle(disk_kernel, dk, config.reverse_cycle);
  }
  out.product = out.delta_sphere * out.delta_disk;
  return out;
}

std::vector<std::pair<DeltaProductConfig, DeltaProductResult>>
delta_product_sweep(const SpherePoint& p1, const SpherePoint& p2,
                    const SpherePoint& p3) {
  std::vector<std::pair<DeltaProductConfig, DeltaProductResult>> out;
  for (const Complex factor : {Complex(0.0, -1.0), Complex(0.0, 1.0)}) {
    for (const bool reverse : {false, true}) {
      for (const bool conj : {true, false}) {
        DeltaProductConfig cfg;
        cfg.chart_factor = factor;
        cfg.reverse_cycle = reverse;
        cfg.conjugate_kernel = conj;
        out.emplace_back(cfg, delta_product_explorer(p1, p2, p3, cfg));
      }
    }
  }
  return out;
}

}  // namespace grasq
