#pragma once

#include <optional>

#include "sublat/normal_forms.hpp"

namespace sublat {

/// A full-rank sublattice of Z^n, held by its unique canonical basis.
/// The ambient lattice is always Z^n: rows are coordinates relative to a
/// fixed ambient basis, which makes every statement here exact.
class Sublattice {
 public:
  explicit Sublattice(HnfBasis canonical)
      : canonical_(std::move(canonical)) {}

  Eigen::Index dim() const { return canonical_.dim(); }
  const HnfBasis& canonical() const { return canonical_; }
  const Int& index() const { return canonical_.index(); }

 private:
  HnfBasis canonical_;
};

/// Canonicalizes a row basis; index = |det|. Throws singular_matrix_error
/// when the rows do not generate a rank-n sublattice.
Sublattice sublattice_from_rows(const IntMatrix& rows);

/// Identity of point sets, decided on canonical forms.
bool equals(const Sublattice& a, const Sublattice& b);

/// Unimodular equivalence (a linear map fixing Z^n carries one onto the
/// other), decided by equal invariant chains.
bool equivalent(const Sublattice& a, const Sublattice& b);

/// The acceptance predicate for an equivalence witness: m is unimodular
/// (so it fixes Z^n) and right-multiplying a's basis by m yields b's
/// lattice. Row-vector convention: the map sends x to x*m.
bool is_equivalence_witness(const Sublattice& a, const Sublattice& b,
                            const IntMatrix& m);

/// A verified unimodular witness when the sublattices are equivalent,
/// std::nullopt otherwise. Built from the two Smith decompositions
/// La*A*Ra = S = Lb*B*Rb as M = Ra*Rb^(-1); the predicate above is checked
/// before returning (std::logic_error if it ever failed).
std::optional<IntMatrix> equivalence_witness(const Sublattice& a,
                                             const Sublattice& b);

}  // namespace sublat
