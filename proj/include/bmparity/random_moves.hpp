#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bmparity/based_matrix.hpp"

namespace bmparity {

using Rng = std::mt19937_64;

// Uniform entries in {0,1} over Z2 or [-2,2] over Z above the diagonal,
// completed to a skew matrix. `elements` counts the labels besides s, which
// are named "1".."elements".
BasedMatrix random_based_matrix(Rng& rng, std::size_t elements, Ring ring);

struct AppliedMove {
  BasedMatrix result;
  MoveKind kind;
  bool inverse = false;
  std::vector<std::string> labels;  // added or removed
};

// One forward move M1, M2 or M3 (uniformly chosen) with fresh labels. The
// free M3 row is drawn like the entries of random_based_matrix.
AppliedMove apply_random_move(const BasedMatrix& t, Rng& rng);

// Removes a uniformly chosen annihilating or core element or complementary
// pair; nothing when t is primitive.
std::optional<AppliedMove> apply_random_inverse_move(const BasedMatrix& t, Rng& rng);

// Inverse moves in random order until the result is primitive.
BasedMatrix reduce_randomly(const BasedMatrix& t, Rng& rng);

// A walk of `steps` moves; each step is a forward move, or with probability
// 1/3 an inverse move when one exists.
BasedMatrix random_walk(const BasedMatrix& t, std::size_t steps, Rng& rng);

}  // namespace bmparity
