#pragma once

#include "grasq/grassmann.hpp"

namespace grasq {

/// The anticommuting almost complex structure of T*P^1 (d = 2, n = 1):
/// (q, A) -> i[A^dagger, q] / sqrt(2 Tr(q^dagger q) - 1).
/// Squares to -1, anticommutes with I, and restricts to J on tangents to
/// the zero section at Hermitian points. The denominator is >= 1, with
/// equality exactly on the zero section.
TangentVector hyperkahler_Jprime(const TangentVector& v);

}  // namespace grasq
