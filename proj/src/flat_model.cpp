#include "grasq/flat_model.hpp"

#include <array>
#include <cmath>

#include "grasq/quadrature.hpp"

namespace grasq {

FlatPoint FlatPoint::from_coords(double x1, double x2, double y1, double y2,
                                 double hbar) {
  const Complex zeta(x1, x2);
  const Complex eta(y1, y2);
  return FlatPoint{zeta + kImag * eta, zeta - kImag * eta, hbar};
}

FlatPoint FlatPoint::continued(Complex z, Complex zbar, double hbar) {
  return FlatPoint{z, zbar, hbar};
}

Complex flat_kernel(const FlatPoint& p, const FlatPoint& w) {
  if (p.hbar != w.hbar)
    throw ContractViolation("flat_kernel: mismatched hbar");
  const double h4 = 4.0 * p.hbar;
  return std::exp(-(p.z * p.zbar + w.z * w.zbar - 2.0 * p.zbar * w.z) / h4);
}

double flat_idempotency_residual(const FlatPoint& p, const FlatPoint& w,
                                 int order) {
  if (p.hbar != w.hbar)
    throw ContractViolation("flat_idempotency_residual: mismatched hbar");
  const double hbar = p.hbar;
  if (std::real(p.z * p.zbar) <= 0.0 || std::real(w.z * w.zbar) <= 0.0)
    throw QuadratureDomainError(
        "flat_idempotency_residual: Re(z zbar) <= 0, Gaussian decay violated");
  const Quadrature1D gh = gauss_hermite(order);
  const double scale = std::sqrt(2.0 * hbar);
  const Complex head = p.z * p.zbar + w.z * w.zbar;
  Complex acc(0.0, 0.0);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const Complex u(scale * gh.nodes(i), scale * gh.nodes(j));
      const Complex ubar = std::conj(u);
      const Complex expo =
          -(head - 2.0 * p.zbar * u - 2.0 * ubar * w.z) / (4.0 * hbar);
      if (std::real(expo) > 600.0)
        throw QuadratureDomainError(
            "flat_idempotency_residual: integrand overflow at outer nodes "
            "(imaginary parts too large)");
      acc += gh.weights(i) * gh.weights(j) * std::exp(expo);
    }
  }
  acc /= M_PI;
  return std::abs(acc - flat_kernel(p, w));
}

namespace {

Complex connection_term(const FlatCoords& w, const std::array<Complex, 4>& dir,
                        double hbar) {
  const Complex zeta(w.x1, w.x2);
  const Complex eta(w.y1, w.y2);
  const Complex dzeta = dir[0] + kImag * dir[1];
  const Complex deta = dir[2] + kImag * dir[3];
  return kImag / (2.0 * hbar) * (zeta * deta - eta * dzeta);
}

}  // namespace

double flat_direction_residual(const FlatPoint& p0, const FlatCoords& w,
                               const std::array<Complex, 4>& direction,
                               double hbar, double fd_step) {
  auto eval = [&](const FlatCoords& c) {
    return flat_kernel(p0, FlatPoint::from_coords(c.x1, c.x2, c.y1, c.y2, hbar));
  };
  Complex derivative(0.0, 0.0);
  for (int k = 0; k < 4; ++k) {
    if (direction[k] == Complex(0.0, 0.0)) continue;
    FlatCoords plus = w, minus = w;
    double* pc = k == 0 ? &plus.x1 : k == 1 ? &plus.x2 : k == 2 ? &plus.y1
                                                                : &plus.y2;
    double* mc = k == 0 ? &minus.x1 : k == 1 ? &minus.x2 : k == 2 ? &minus.y1
                                                                  : &minus.y2;
    *pc += fd_step;
    *mc -= fd_step;
    derivative += direction[k] * (eval(plus) - eval(minus)) / (2.0 * fd_step);
  }
  const Complex s = eval(w);
  const Complex nabla = derivative - connection_term(w, direction, hbar) * s;
  return std::abs(nabla);
}

double flat_polarization_residual(const FlatPoint& p0, const FlatCoords& w,
                                  FlatSlice slice, double hbar,
                                  double fd_step) {
  if (slice == FlatSlice::kKahler) {
    if (w.x2 != 0.0 || w.y2 != 0.0)
      throw ContractViolation("flat_polarization_residual: w not on x2=y2=0");
    return flat_direction_residual(p0, w, {Complex(1, 0), 0.0, kImag, 0.0},
                                   hbar, fd_step);
  }
  if (w.x2 != 0.0 || w.y1 != 0.0)
    throw ContractViolation("flat_polarization_residual: w not on x2=y1=0");
  return flat_direction_residual(
      p0, w, {Complex(1, 0), 0.0, 0.0, Complex(1, 0)}, hbar, fd_step);
}

std::vector<std::pair<std::string, double>> tessarine_flat_check() {
  using R4 = Eigen::Matrix4d;
  using C4 = Eigen::Matrix4cd;
  // Basis order (dx1, dx2, dy1, dy2); columns are images.
  R4 mi = R4::Zero(), mj = R4::Zero(), mk = R4::Zero(), mjp = R4::Zero();
  mi(1, 0) = 1; mi(0, 1) = -1; mi(3, 2) = 1; mi(2, 3) = -1;
  mj(2, 0) = 1; mj(3, 1) = 1; mj(0, 2) = -1; mj(1, 3) = -1;
  mk(3, 0) = 1; mk(2, 1) = -1; mk(1, 2) = -1; mk(0, 3) = 1;
  mjp(2, 0) = 1; mjp(3, 1) = -1; mjp(0, 2) = -1; mjp(1, 3) = 1;

  C4 om = C4::Zero();
  om(0, 2) = 1.0; om(0, 3) = kImag; om(1, 2) = kImag; om(1, 3) = -1.0;
  om -= C4(om.transpose()).eval();

  const R4 id = R4::Identity();
  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("I^2 = -1", (mi * mi + id).norm());
  out.emplace_back("J^2 = -1", (mj * mj + id).norm());
  out.emplace_back("K^2 = +1", (mk * mk - id).norm());
  out.emplace_back("IJ = JI", (mi * mj - mj * mi).norm());
  out.emplace_back("IJ = K", (mi * mj - mk).norm());
  out.emplace_back("Omega(J.,J.) = Omega",
                   (mj.transpose() * om * mj - om).norm());
  out.emplace_back("Omega(K.,K.) = -Omega",
                   (mk.transpose() * om * mk + om).norm());
  out.emplace_back("Omega(dx1,dy1) = 1", std::abs(om(0, 2) - 1.0));

  // Kahler slice x2 = y2 = 0 spans (dx1, dy1): real part symplectic,
  // imaginary part vanishes.
  Eigen::Matrix2d re_k;
  re_k << std::real(om(0, 0)), std::real(om(0, 2)), std::real(om(2, 0)),
      std::real(om(2, 2));
  Eigen::Matrix2d im_k;
  im_k << std::imag(om(0, 0)), std::imag(om(0, 2)), std::imag(om(2, 0)),
      std::imag(om(2, 2));
  out.emplace_back("kahler slice: Re Omega nondegenerate",
                   std::abs(re_k.determinant() - 1.0));
  out.emplace_back("kahler slice: Im Omega = 0", im_k.norm());

  // Real-polarized slice x2 = y1 = 0 spans (dx1, dy2): real part vanishes,
  // imaginary part symplectic.
  Eigen::Matrix2d re_r;
  re_r << std::real(om(0, 0)), std::real(om(0, 3)), std::real(om(3, 0)),
      std::real(om(3, 3));
  Eigen::Matrix2d im_r;
  im_r << std::imag(om(0, 0)), std::imag(om(0, 3)), std::imag(om(3, 0)),
      std::imag(om(3, 3));
  out.emplace_back("real slice: Re Omega = 0", re_r.norm());
  out.emplace_back("real slice: Im Omega nondegenerate",
                   std::abs(im_r.determinant() - 1.0));

  out.emplace_back("J'^2 = -1", (mjp * mjp + id).norm());
  out.emplace_back("IJ' = -J'I", (mi * mjp + mjp * mi).norm());
  return out;
}

}  // namespace grasq
