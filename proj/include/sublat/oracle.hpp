#pragma once

#include <set>
#include <vector>

#include "sublat/normal_forms.hpp"

namespace sublat {

/// The box [-radius, radius]^n. Oracle work is capped at n <= 3; these
/// verifiers exist to validate, not to scale.
struct PointBox {
  int n = 0;
  long radius = 1;
};

/// The exact set { z*B : z integer row vector } intersected with the box,
/// by ranging each coefficient z_i over a provably sufficient window:
/// z = x * B^(-1) = x * adj(B) / det(B), so for x in the box
/// |z_i| <= radius * sum_j |adj(B)_ji| / |det(B)|, and the floor of that
/// bound suffices since z_i is an integer.
std::set<std::vector<Int>> lattice_points_in_box(const IntMatrix& b,
                                                 const PointBox& box);

/// True iff the two row lattices have identical point sets inside the box.
/// With a radius at least the largest diagonal entry of either canonical
/// form this decides true lattice equality for these inputs.
bool oracle_equal(const IntMatrix& a, const IntMatrix& b, const PointBox& box);

/// Determinantal-divisor characterization of the invariant chain: with
/// D_k the gcd of all k x k minors (D_0 = 1), the ascending invariant
/// factors are s_k = D_k / D_{k-1}; returned largest-first. Minors are
/// evaluated by Laplace cofactor expansion, independent of the elimination
/// used by snf_reduce.
InvariantChain oracle_snf(const IntMatrix& a);

}  // namespace sublat
