#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grasq/grassmann.hpp"
#include "grasq/parallel.hpp"

namespace grasq {

/// Observables are plain d x d complex matrices. The expectation symbol is
/// <M>(q) = tau(qM) = Tr(qM)/n; unit-preserving: <1> == 1.
Complex expectation(const Matrix& m, const ProjectionPoint& q);

/// A symbol function q -> tau(q M), carried by its operator representative.
/// At desk scale the complex span of rank-n idempotents is all of B(H), so
/// the representative doubles as the lift used by the star products; see
/// symbol_span_residual for the runtime check guarding that assumption.
class Symbol {
 public:
  explicit Symbol(Matrix representative);
  Complex operator()(const ProjectionPoint& q) const;
  const Matrix& representative() const { return rep_; }

  Symbol operator+(const Symbol& o) const { return Symbol(rep_ + o.rep_); }
  Symbol operator*(Complex c) const { return Symbol(c * rep_); }

 private:
  Matrix rep_;
};

using SymbolFn = std::function<Complex(const ProjectionPoint&)>;

/// Integration cycle plus normalization. The Haar cycle carries total mass
/// d/n, which makes the quantization of the constant 1 equal the identity
/// and realizes dim H = n Vol M under the normalized trace.
class CycleSampler {
 public:
  enum class Kind { kHaarZeroSection, kFixedQuadrature, kGroupOrbit };

  static CycleSampler haar_zero_section(Index d, Index n);
  static CycleSampler fixed_quadrature(std::vector<ProjectionPoint> points,
                                       std::vector<double> weights);
  /// Orbit sampling by random words in exponentials of the generators;
  /// an ergodic surrogate for the invariant measure, with total mass d/n.
  static CycleSampler group_orbit(std::vector<Matrix> skew_generators,
                                  Matrix subspace_frame, int word_length = 50,
                                  int pool_size = 4096);

  Kind kind() const { return kind_; }
  Index dim() const { return d_; }
  Index rank() const { return n_; }
  double total_mass() const { return mass_; }
  bool stochastic() const { return kind_ != Kind::kFixedQuadrature; }

  /// Draws one point (stochastic kinds). For the orbit kind the caller must
  /// have invoked prepare(rng) once to build the factor pool.
  ProjectionPoint draw(RngState& rng) const;
  void prepare(RngState& rng);

  const std::vector<ProjectionPoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  CycleSampler() = default;
  Kind kind_ = Kind::kHaarZeroSection;
  Index d_ = 0, n_ = 0;
  double mass_ = 0.0;
  std::vector<ProjectionPoint> points_;
  std::vector<double> weights_;
  std::vector<Matrix> generators_;
  Matrix frame_;
  int word_length_ = 50;
  std::vector<Matrix> pool_;
};

struct McResidual {
  double residual = 0.0;
  double bound = 0.0;
  bool pass() const { return residual <= bound; }
};

/// Q_f = integral of f(q) q over the cycle: (d/n) * mean(f q) for sampled
/// cycles, the weighted sum for quadratures. Throws EvaluationError if the
/// integrand produces a non-finite value.
Matrix berezin_quantize(const SymbolFn& f, const CycleSampler& sampler,
                        std::int64_t samples, RngState& rng,
                        unsigned workers = 1);

/// ||(d/n) mean(q) - 1||_F with its 3-sigma CLT companion bound.
McResidual overcompleteness_residual(const CycleSampler& sampler,
                                     std::int64_t samples, RngState& rng,
                                     unsigned workers = 1, double sigmas = 3.0);

struct DualityResidual {
  double same_sample = 0.0;   ///< |tau(A Q_f) - cycle-mean(<A> f)|, shared samples
  double independent = 0.0;   ///< same with independent sample sets
  double bound = 0.0;         ///< CLT bound for the independent difference
};

/// tau(A Q_f) versus the cycle integral of <A> f. On a shared sample set the
/// two sides are the same finite sum rearranged.
DualityResidual duality_residual(const Matrix& a, const SymbolFn& f,
                                 const CycleSampler& sampler,
                                 std::int64_t samples, RngState& rng,
                                 unsigned workers = 1, double sigmas = 3.0);

/// Same-sample difference of tau(T^dagger Q_f) and <(<T>), f>_{L2}; an exact
/// rearrangement on zero-section samples, so ~1e-12.
double adjointness_residual(const Matrix& t, const SymbolFn& f,
                            const CycleSampler& sampler, std::int64_t samples,
                            RngState& rng, unsigned workers = 1);

/// f * g = <FG> on operator representatives.
Symbol star_expectation(const Symbol& f, const Symbol& g);

struct StarQResult {
  Symbol symbol;
  double condition = 0.0;
  /// Propagated 3-sigma Monte Carlo error bound on the representative.
  double noise_bound = 0.0;
};

/// f *_Q g = Q^{-1}(Q_f Q_g): quantize both symbols by Monte Carlo, multiply,
/// and pull the product back through the sampled linear system defining Q on
/// the matrix-unit symbol span (ridge-damped least squares). Throws
/// ConditioningError when that system has condition > 1e6.
StarQResult star_q(const Symbol& f, const Symbol& g,
                   const CycleSampler& sampler, std::int64_t samples,
                   RngState& rng, unsigned workers = 1);

enum class OrbitVerdict { kConsistent, kReducible };

struct OrbitResult {
  double residual = 0.0;
  double bound = 0.0;
  OrbitVerdict verdict = OrbitVerdict::kConsistent;
};

/// Schur check over a group orbit: ||(d/n) mean(q) - 1|| with CLT bound.
/// A persistent deviation beyond 10 sigma is reported as reducible rather
/// than thrown.
OrbitResult orbit_overcompleteness(const std::vector<Matrix>& skew_generators,
                                   const Matrix& subspace_frame,
                                   std::int64_t samples, RngState& rng,
                                   unsigned workers = 1);

/// Smallest relative singular value of the span of vectorized sampled
/// points; bounded away from zero exactly when the sampled idempotents span
/// all of B(H) (the no-op-lift assumption behind Symbol).
double symbol_span_residual(Index d, Index n, RngState& rng,
                            int extra_samples = 8);

}  // namespace grasq
