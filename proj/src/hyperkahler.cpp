#include "grasq/hyperkahler.hpp"

#include <cmath>

namespace grasq {

TangentVector hyperkahler_Jprime(const TangentVector& v) {
  const ProjectionPoint& base = v.base();
  if (base.dim() != 2 || base.rank() != 1)
    throw ContractViolation("hyperkahler_Jprime: defined on T*P^1 (d=2, n=1)");
  const Matrix& q = base.matrix();
  const Matrix& a = v.matrix();
  const double denom_sq = 2.0 * std::real((q.adjoint() * q).trace()) - 1.0;
  if (denom_sq <= 1e-12)
    throw ContractViolation("hyperkahler_Jprime: degenerate denominator " +
                            std::to_string(denom_sq));
  const Matrix ad = a.adjoint();
  return TangentVector::trusted(
      base, kImag * (ad * q - q * ad) / std::sqrt(denom_sq));
}

}  // namespace grasq
