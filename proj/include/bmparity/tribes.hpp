#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bmparity/based_matrix.hpp"
#include "bmparity/isomorphism.hpp"
#include "bmparity/partition.hpp"

namespace bmparity {

// The stable partition of a based matrix with its distinguished tribes.
struct TribeTags {
  Partition partition;                       // the stable partition
  std::vector<std::size_t> primitive_blocks;  // block indices meeting the survivors
  std::optional<std::size_t> zero_block;      // absent when the zero tribe is empty
  BasedMatrix primitive;                       // deterministic primitive reduction
  ReductionTrace trace;

  bool is_primitive_block(std::size_t b) const;
  bool zero_block_is_primitive() const { return zero_block && is_primitive_block(*zero_block); }
};

// Primitive blocks are those meeting the survivor set of reduce_to_primitive.
// The zero tribe is found by adjoining a fresh annihilating element and
// restricting its stable block back to G.
TribeTags tag_tribes(const BasedMatrix& t);

// Finest coarsening of the stable partition of `primitive` whose blocks are
// fixed setwise by every automorphism in `auts`.
Partition aut_coarsening(const BasedMatrix& primitive, const std::vector<Isomorphism>& auts);

// Primitive tribes of T paired with the tribes C meet G_bullet in.
struct TribeCorrespondence {
  std::vector<std::pair<LabelSet, LabelSet>> pairs;  // (tribe of T, tribe of T_bullet)
};

// Throws std::logic_error if a primitive tribe misses the survivors or its
// intersection is not a stable tribe of the reduced matrix.
TribeCorrespondence transport_tribes(const BasedMatrix& t, const ReductionTrace& trace);

}  // namespace bmparity
