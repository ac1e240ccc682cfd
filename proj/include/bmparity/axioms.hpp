#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmparity/based_matrix.hpp"
#include "bmparity/parity.hpp"
#include "bmparity/random_moves.hpp"

namespace bmparity {

struct Violation {
  std::string axiom;                    // "P0".."P3", or "s" for a nonzero basepoint value
  std::vector<std::string> witnesses;   // element labels
  std::string detail;
};

struct AxiomCheckOptions {
  std::size_t random_moves = 32;  // (P0) samples; 0 disables (P0)
  std::uint64_t seed = 1;
};

// Checks (P1)-(P3) exhaustively against the values stored in `p` and (P0) on
// random forward moves T -> T' by recomputing the same kind of parity on T'.
// The hat functor is only move-checked when `p` uses the stable partition.
std::vector<Violation> verify_parity_axioms(const BasedMatrix& t, const ParityAssignment& p,
                                            const AxiomCheckOptions& options = {});

// The (P0) comparison for one forward move t -> move.result. `after` may
// carry the parity already computed on the moved matrix.
std::vector<Violation> check_move_functoriality(const BasedMatrix& t, const ParityAssignment& p,
                                                const AppliedMove& move,
                                                const ParityAssignment* after = nullptr);

std::string describe(const Violation& v);

}  // namespace bmparity
