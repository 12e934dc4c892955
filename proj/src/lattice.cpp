#include "sublat/lattice.hpp"

#include <stdexcept>
#include <string>

namespace sublat {

namespace {

void require_same_dim(const Sublattice& a, const Sublattice& b, const char* who) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

Sublattice sublattice_from_rows(const IntMatrix& rows) {
  return Sublattice(hnf_reduce(rows));
}

bool equals(const Sublattice& a, const Sublattice& b) {
  require_same_dim(a, b, "equals");
  return a.canonical() == b.canonical();
}

bool equivalent(const Sublattice& a, const Sublattice& b) {
  require_same_dim(a, b, "equivalent");
  return snf_chain(a.canonical().matrix()) == snf_chain(b.canonical().matrix());
}

bool is_equivalence_witness(const Sublattice& a, const Sublattice& b,
                            const IntMatrix& m) {
  require_same_dim(a, b, "is_equivalence_witness");
  if (!is_square(m) || m.rows() != a.dim()) return false;
  if (!is_unimodular(m)) return false;
  return hnf_reduce(a.canonical().matrix() * m) == b.canonical();
}

std::optional<IntMatrix> equivalence_witness(const Sublattice& a,
                                             const Sublattice& b) {
  require_same_dim(a, b, "equivalence_witness");
  const SnfResult sa = snf_reduce(a.canonical().matrix());
  const SnfResult sb = snf_reduce(b.canonical().matrix());
  if (!(sa.chain == sb.chain)) return std::nullopt;
  // La*A*Ra = S = Lb*B*Rb, so A * (Ra*Rb^-1) = La^-1*Lb * B: a left-
  // unimodular multiple of B, i.e. the same row lattice.
  IntMatrix witness = sa.right * inverse_unimodular(sb.right);
  if (!is_equivalence_witness(a, b, witness))
    throw std::logic_error("equivalence_witness: constructed witness rejected");
  return witness;
}

}  // namespace sublat
