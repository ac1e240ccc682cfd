#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "bmparity/based_matrix.hpp"
#include "bmparity/gauss_code.hpp"
#include "bmparity/parity.hpp"
#include "bmparity/partition.hpp"

namespace bmparity {

// b(c, c') = D^l_c . D^l_c' and b(c, s) = D^l_c . D on the Carter surface.
// Labels are s followed by the crossing ids in increasing order.
BasedMatrix based_matrix_of_diagram(const GaussCode& code, Ring ring);

// Every invariant the tools report for one based matrix.
struct InvariantBundle {
  std::optional<std::size_t> genus;  // present when built from a code
  BasedMatrix matrix;
  StablePartition stable;
  ReducedParity reduced;
  ParityMatrix parity_matrix;

  const BasedMatrix& primitive() const { return reduced.tags.primitive; }
  std::size_t aut_order() const { return reduced.automorphisms.size(); }
  const CanonicalAbelianGroup& group() const { return reduced.parity.group; }
};

InvariantBundle matrix_invariant_bundle(const BasedMatrix& t);
InvariantBundle knot_invariant_bundle(const GaussCode& code, Ring ring);

}  // namespace bmparity
