#pragma once

#include <cstddef>
#include <string>

#include "bmparity/integer.hpp"
#include "bmparity/linalg.hpp"

namespace bmparity {

// A quotient H^n / <relations> in canonical form: Z^free_rank followed by
// Z/d_1 + ... + Z/d_k with d_i >= 2 and d_i | d_{i+1}. Over Z the form comes
// from the Smith normal form of the relations; over Z2 every factor is 2.
//
// reduce() maps ambient vectors to canonical coordinates: free coordinates
// first (signed), then torsion coordinates as least non-negative residues.
class CanonicalAbelianGroup {
 public:
  CanonicalAbelianGroup(std::size_t ambient_dimension, Ring ring, IntMatrix relations);

  std::size_t ambient_dimension() const { return ambient_dimension_; }
  Ring ring() const { return ring_; }
  std::size_t free_rank() const { return free_rank_; }
  const IntVector& invariant_factors() const { return factors_; }
  const IntMatrix& relations() const { return relations_; }
  std::size_t coordinate_count() const { return free_rank_ + factors_.size(); }

  IntVector reduce(const IntVector& ambient) const;

  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector negate(const IntVector& a) const;
  bool is_zero(const IntVector& canonical) const;

  // Trivial group (order 1 with no free part)?
  bool is_trivial() const { return coordinate_count() == 0; }

  // "Z^4 + Z2", "Z2^3", "0".
  std::string signature() const;

  friend bool same_signature(const CanonicalAbelianGroup& a, const CanonicalAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
  }

 private:
  IntVector canonicalize(IntVector coords) const;

  std::size_t ambient_dimension_;
  Ring ring_;
  IntMatrix relations_;
  std::size_t free_rank_ = 0;
  IntVector factors_;
  // Over Z: column transform of the Smith form and, per kept coordinate, the
  // source column and its modulus (0 for free).
  IntMatrix transform_;
  std::vector<std::size_t> kept_columns_;
  IntVector moduli_;
  // Over Z2: echelon form of the relations.
  linalg::EchelonGf2 echelon_;
};

CanonicalAbelianGroup quotient_group(std::size_t ambient_dimension, Ring ring,
                                     const IntMatrix& relations);

}  // namespace bmparity
