#include "grasq/symplectic.hpp"

namespace grasq {

namespace {

void require_same_base(const TangentVector& u, const TangentVector& v) {
  if ((u.base().matrix() - v.base().matrix()).norm() >
      1e-12 * u.base().dim())
    throw ContractViolation("omega: tangent vectors based at different points");
}

}  // namespace

Complex omega(const TangentVector& u, const TangentVector& v) {
  require_same_base(u, v);
  const Matrix& q = u.base().matrix();
  const Matrix& a = u.matrix();
  const Matrix& b = v.matrix();
  return kImag * u.base().tau(q * (a * b - b * a));
}

TangentVector hamiltonian_field(const ProjectionPoint& q, const Matrix& m) {
  if (m.rows() != q.dim() || m.cols() != q.dim())
    throw DimensionError("hamiltonian_field: observable shape mismatch");
  const Matrix& p = q.matrix();
  return TangentVector::trusted(q, kImag * (m * p - p * m));
}

Complex poisson_bracket(const Matrix& m, const Matrix& n,
                        const ProjectionPoint& q) {
  // Orientation fixed by the morphism identity <[M,N]> = i {<M>,<N>}
  // together with Omega(X_M, B) = tau(MB): the bracket pairs the fields in
  // the order below.
  return omega(hamiltonian_field(q, n), hamiltonian_field(q, m));
}

std::vector<TangentVector> tangent_basis(const ProjectionPoint& q) {
  const Index d = q.dim();
  const Index n = q.rank();
  const Matrix qv = decompose_cotangent(q).base_orthogonal.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(qv);
  // Eigenvalues ascend, so the image block is the last n columns.
  const Matrix& u = eig.eigenvectors();
  std::vector<TangentVector> basis;
  basis.reserve(4 * n * (d - n));
  for (Index a = d - n; a < d; ++a) {
    for (Index b = 0; b < d - n; ++b) {
      const Matrix unit_ab = u.col(a) * u.col(b).adjoint();
      const Matrix unit_ba = u.col(b) * u.col(a).adjoint();
      for (const Matrix* unit : {&unit_ab, &unit_ba}) {
        basis.push_back(tangent_component(q, *unit));
        basis.push_back(tangent_component(q, kImag * (*unit)));
      }
    }
  }
  return basis;
}

double nondegeneracy_certificate(const ProjectionPoint& q) {
  const std::vector<TangentVector> basis = tangent_basis(q);
  const Index m = static_cast<Index>(basis.size());
  Eigen::MatrixXd gram(m, m);
  for (Index j = 0; j < m; ++j) {
    gram(j, j) = 0.0;
    for (Index k = j + 1; k < m; ++k) {
      const double w = std::real(omega(basis[j], basis[k]));
      gram(j, k) = w;
      gram(k, j) = -w;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
  return svd.singularValues()(m - 1);
}

KahlerCheck kahler_zero_section_check(const ProjectionPoint& q,
                                      const TangentVector& u,
                                      const TangentVector& v) {
  if (!q.is_hermitian())
    throw ContractViolation("kahler_zero_section_check: base not Hermitian");
  auto hermitian = [](const Matrix& a) {
    return (a - a.adjoint()).norm() <= 1e-10 * std::max(1.0, a.norm());
  };
  if (!hermitian(u.matrix()) || !hermitian(v.matrix()))
    throw ContractViolation("kahler_zero_section_check: tangents not Hermitian");
  const Complex w = omega(u, v);
  const Matrix jb = apply_J(v).matrix();
  return KahlerCheck{w, q.tau(u.matrix() * jb)};
}

}  // namespace grasq
